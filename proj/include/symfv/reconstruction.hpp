#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>

#include "symfv/state.hpp"

namespace symfv {

inline constexpr double kBetaSmall = 1.1;
inline constexpr double kBetaLarge = 1.6;

/// Cell averages q_{i-2} .. q_{i+2} of one characteristic component.
using Stencil5 = std::array<double, 5>;

/// Reconstructed values of one cell: `plus` at its right face x_{i+1/2}
/// (the left-side state there), `minus` at its left face x_{i-1/2}.
struct BoundaryValues {
  double plus = 0.0;
  double minus = 0.0;

  friend bool operator==(const BoundaryValues&, const BoundaryValues&) = default;
};

enum class SelectionLabel : std::uint8_t { P4 = 0, Ts = 1, Tl = 2 };

struct CandidateValues {
  BoundaryValues p4;
  BoundaryValues ts;
  BoundaryValues tl;
};

BoundaryValues p4_boundary_values(const Stencil5& s, Variant variant);
BoundaryValues thinc_boundary_values_original(double qm, double qc, double qp, double beta);
BoundaryValues thinc_boundary_values_symmetric(double qm, double qc, double qp, double beta);
BoundaryValues thinc_boundary_values(double qm, double qc, double qp, double beta, Variant variant);
CandidateValues candidate_values(const Stencil5& s, Variant variant);

enum class SymmetryCondition { SF, SI };

/// A reconstruction of one cell from its stencil (any odd length).
using BoundaryFunction = std::function<BoundaryValues(std::span<const double>)>;

/// SF: f(s) and f(reverse(s)) exchange their face values exactly.
/// SI: f(-s) is exactly the negation of f(s).
bool sf_si_check(const BoundaryFunction& reconstruct, std::span<const double> s, SymmetryCondition mode);

/// Total boundary variation of a cell from the (left, right) state pairs at
/// its two faces.
double tbv(const BoundaryValues& face_minus_pair, const BoundaryValues& face_plus_pair);

/// Number of cells the 2-stage BVD needs around one interface (i-5 .. i+6).
inline constexpr int kReconWindow = 12;
using ReconWindow = std::array<double, kReconWindow>;

struct BvdSelection {
  double q_left = 0.0;   // left state at the target interface (from cell i)
  double q_right = 0.0;  // right state (from cell i+1)
  SelectionLabel label_left = SelectionLabel::P4;
  SelectionLabel label_right = SelectionLabel::P4;
};

/// Two-stage BVD for the interface between window cells 5 and 6.  Throws
/// WindowTooSmall for fewer than 12 cells and InvalidArgument for more.
BvdSelection bvd_select(std::span<const double> window, Variant variant);

}  // namespace symfv
