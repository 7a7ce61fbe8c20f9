#include "symfv/hllc.hpp"

#include "symfv/kernels/euler_impl.hpp"

namespace symfv {

namespace {

using kernels::Cons;
using kernels::Prim;

Cons<double> rotate(const ConservedState& U, Axis axis) {
  return axis == Axis::X ? Cons<double>{U.rho, U.mx, U.my, U.energy} : Cons<double>{U.rho, U.my, U.mx, U.energy};
}

Prim<double> rotate(const PrimitiveState& Q, Axis axis) {
  return axis == Axis::X ? Prim<double>{Q.rho, Q.u, Q.v, Q.p} : Prim<double>{Q.rho, Q.v, Q.u, Q.p};
}

ConservedState unrotate(const Cons<double>& c, Axis axis) {
  return axis == Axis::X ? ConservedState{c.rho, c.mn, c.mt, c.E} : ConservedState{c.rho, c.mt, c.mn, c.E};
}

}  // namespace

WaveSpeeds estimate_waves(const PrimitiveState& QL, const PrimitiveState& QR, const GasModel& gas, Variant variant,
                          Axis axis) {
  const double cl = sound_speed(QL, gas);
  const double cr = sound_speed(QR, gas);
  const auto w = kernels::hllc_waves(rotate(QL, axis), rotate(QR, axis), cl, cr, gas.gamma,
                                     variant == Variant::Symmetric);
  return {w.sl, w.sr, w.sstar, w.pstar};
}

ConservedState intermediate_state(const PrimitiveState& QK, const ConservedState& UK, double sK, double s_star,
                                  Axis axis) {
  if (sK - s_star == 0.0) throw SolverError(ErrorKind::DegenerateWaveFan, "sK == s*");
  return unrotate(kernels::hllc_star_state(rotate(UK, axis), rotate(QK, axis), sK, s_star), axis);
}

ConservedState hllc_flux(const ConservedState& UL, const ConservedState& UR, Axis axis, const GasModel& gas,
                         Variant variant) {
  // validates both states
  sound_speed(primitive_from_conserved(UL, gas), gas);
  sound_speed(primitive_from_conserved(UR, gas), gas);
  const auto F = kernels::hllc_normal_flux(rotate(UL, axis), rotate(UR, axis), gas.gamma,
                                           variant == Variant::Symmetric, axis == Axis::X);
  return unrotate(F, axis);
}

}  // namespace symfv
