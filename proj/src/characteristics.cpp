#include "symfv/characteristics.hpp"

#include <cmath>

#include "symfv/kernels/euler_impl.hpp"

namespace symfv {

namespace {

void require_density(double rho) {
  if (!(rho > 0.0)) throw SolverError(ErrorKind::NonPositiveDensity, "Roe input rho = " + std::to_string(rho));
}

}  // namespace

double roe_average(double rhoL, double rhoR, double qL, double qR) {
  require_density(rhoL);
  require_density(rhoR);
  return kernels::roe_avg(std::sqrt(rhoL), std::sqrt(rhoR), qL, qR);
}

InterfaceFrame build_frame(const PrimitiveState& QL, double HL, const PrimitiveState& QR, double HR, Axis axis,
                           Ordering ordering, const GasModel& gas) {
  require_density(QL.rho);
  require_density(QR.rho);
  const bool x = axis == Axis::X;
  const double unl = x ? QL.u : QL.v;
  const double utl = x ? QL.v : QL.u;
  const double unr = x ? QR.u : QR.v;
  const double utr = x ? QR.v : QR.u;
  const auto f = kernels::build_frame(std::sqrt(QL.rho), unl, utl, HL, std::sqrt(QR.rho), unr, utr, HR, gas.gamma);
  if (!(f.c > 0.0)) throw SolverError(ErrorKind::ImaginarySoundSpeed, "Roe c^2 <= 0");

  InterfaceFrame out;
  out.u = x ? f.un : f.ut;
  out.v = x ? f.ut : f.un;
  out.h = f.h;
  out.c = f.c;
  out.b1 = f.b1;
  out.b2 = f.b2;
  out.axis = axis;
  out.ordering = ordering;

  // kernel index of each physical component, and of each wave in this ordering
  const int comp[4] = {0, x ? 1 : 2, x ? 2 : 1, 3};
  const int natural[4] = {0, 1, 2, 3};
  const int sym[4] = {0, 2, 1, 3};
  const int* wave = ordering == Ordering::SymmetryPreserving ? sym : natural;
  for (int r = 0; r < 4; ++r) {
    for (int k = 0; k < 4; ++k) {
      out.left[r][k] = f.L[wave[r]][comp[k]];
      out.right[k][r] = f.R[comp[k]][wave[r]];
    }
  }
  return out;
}

InterfaceFrame build_frame(const ConservedState& UL, const ConservedState& UR, Axis axis, Ordering ordering,
                           const GasModel& gas) {
  const PrimitiveState QL = primitive_from_conserved(UL, gas);
  const PrimitiveState QR = primitive_from_conserved(UR, gas);
  return build_frame(QL, enthalpy(UL, QL), QR, enthalpy(UR, QR), axis, ordering, gas);
}

CharacteristicQuad project_to_characteristic(const ConservedState& U, const InterfaceFrame& frame) {
  CharacteristicQuad W;
  for (int r = 0; r < 4; ++r) {
    const auto& l = frame.left[r];
    W.w[r] = (l[0] * U.rho + (l[1] * U.mx + l[2] * U.my)) + l[3] * U.energy;
  }
  return W;
}

ConservedState project_to_conservative(const CharacteristicQuad& W, const InterfaceFrame& frame) {
  std::array<double, 4> u{};
  for (int k = 0; k < 4; ++k) {
    const auto& r = frame.right[k];
    u[k] = ((r[0] * W.w[0] + r[1] * W.w[1]) + r[2] * W.w[2]) + r[3] * W.w[3];
  }
  return from_array(u);
}

}  // namespace symfv
