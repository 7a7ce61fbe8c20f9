#include "symfv/reconstruction.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "symfv/kernels/recon_impl.hpp"

namespace symfv {

namespace {

BoundaryValues to_bv(const kernels::FaceValues<double>& f) { return {f.plus, f.minus}; }

SelectionLabel to_label(double v) { return static_cast<SelectionLabel>(static_cast<int>(v)); }

}  // namespace

BoundaryValues p4_boundary_values(const Stencil5& s, Variant variant) {
  return to_bv(kernels::p4_faces(s[0], s[1], s[2], s[3], s[4], variant == Variant::Symmetric));
}

BoundaryValues thinc_boundary_values_original(double qm, double qc, double qp, double beta) {
  return to_bv(kernels::thinc_faces_original(qm, qc, qp, kernels::ThincConstants::make(beta)));
}

BoundaryValues thinc_boundary_values_symmetric(double qm, double qc, double qp, double beta) {
  return to_bv(kernels::thinc_faces_symmetric(qm, qc, qp, kernels::ThincConstants::make(beta)));
}

BoundaryValues thinc_boundary_values(double qm, double qc, double qp, double beta, Variant variant) {
  return variant == Variant::Symmetric ? thinc_boundary_values_symmetric(qm, qc, qp, beta)
                                       : thinc_boundary_values_original(qm, qc, qp, beta);
}

CandidateValues candidate_values(const Stencil5& s, Variant variant) {
  return {p4_boundary_values(s, variant), thinc_boundary_values(s[1], s[2], s[3], kBetaSmall, variant),
          thinc_boundary_values(s[1], s[2], s[3], kBetaLarge, variant)};
}

bool sf_si_check(const BoundaryFunction& reconstruct, std::span<const double> s, SymmetryCondition mode) {
  const BoundaryValues base = reconstruct(s);
  std::vector<double> t(s.begin(), s.end());
  if (mode == SymmetryCondition::SF) {
    std::vector<double> flipped(s.rbegin(), s.rend());
    const BoundaryValues f = reconstruct(flipped);
    return base.plus == f.minus && base.minus == f.plus;
  }
  for (double& x : t) x = -x;
  const BoundaryValues inv = reconstruct(t);
  return base.plus == -inv.plus && base.minus == -inv.minus;
}

double tbv(const BoundaryValues& face_minus_pair, const BoundaryValues& face_plus_pair) {
  // each pair is (left state, right state) at one face
  return std::fabs(face_minus_pair.plus - face_minus_pair.minus) +
         std::fabs(face_plus_pair.plus - face_plus_pair.minus);
}

BvdSelection bvd_select(std::span<const double> window, Variant variant) {
  if (window.size() < static_cast<std::size_t>(kReconWindow)) {
    throw SolverError(ErrorKind::WindowTooSmall, "BVD window needs 12 cells, got " + std::to_string(window.size()));
  }
  if (window.size() > static_cast<std::size_t>(kReconWindow)) {
    throw SolverError(ErrorKind::InvalidArgument, "BVD window must hold exactly 12 cells");
  }
  const auto k = kernels::BvdConstants::make(variant == Variant::Symmetric, kBetaSmall, kBetaLarge);
  const auto r = kernels::bvd_window(window.data(), k);
  return {r.q_left, r.q_right, to_label(r.label_left), to_label(r.label_right)};
}

}  // namespace symfv
