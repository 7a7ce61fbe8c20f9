#pragma once

#include <array>

#include "symfv/state.hpp"

namespace symfv {

// Row order of L (column order of R):
//   Natural            (u-c, u, u+c, u_perp)
//   SymmetryPreserving (u-c, u+c, u, u_perp)
enum class Ordering { Natural, SymmetryPreserving };

inline Ordering ordering_for(Variant v) {
  return v == Variant::Symmetric ? Ordering::SymmetryPreserving : Ordering::Natural;
}

using Matrix4 = std::array<std::array<double, 4>, 4>;

/// Roe-averaged eigen-system for one interface.  Matrix columns of L (rows of
/// R) refer to the physical components (rho, rho u, rho v, E).
struct InterfaceFrame {
  double u = 0.0;
  double v = 0.0;
  double h = 0.0;
  double c = 0.0;
  double b1 = 0.0;
  double b2 = 0.0;
  Axis axis = Axis::X;
  Ordering ordering = Ordering::SymmetryPreserving;
  Matrix4 left{};
  Matrix4 right{};
};

struct CharacteristicQuad {
  std::array<double, 4> w{};
};

/// (sqrt(rhoL) qL + sqrt(rhoR) qR) / (sqrt(rhoL) + sqrt(rhoR)).
double roe_average(double rhoL, double rhoR, double qL, double qR);

/// Frame from left/right states and their total enthalpies.
InterfaceFrame build_frame(const PrimitiveState& QL, double HL, const PrimitiveState& QR, double HR, Axis axis,
                           Ordering ordering, const GasModel& gas);

/// Frame from two adjacent cell averages (the solver's choice of Roe inputs).
InterfaceFrame build_frame(const ConservedState& UL, const ConservedState& UR, Axis axis, Ordering ordering,
                           const GasModel& gas);

/// W = l1 rho + (l2 rho u + l3 rho v) + l4 E.
CharacteristicQuad project_to_characteristic(const ConservedState& U, const InterfaceFrame& frame);

/// U = ((r1 w1 + r2 w2) + r3 w3) + r4 w4 in the frame's ordering; with the
/// SymmetryPreserving ordering the acoustic pair is therefore summed first.
ConservedState project_to_conservative(const CharacteristicQuad& W, const InterfaceFrame& frame);

}  // namespace symfv
