#include "symfv/state.hpp"

#include <cmath>

namespace symfv {

namespace {

void require_density(double rho) {
  if (!(rho > 0.0)) throw SolverError(ErrorKind::NonPositiveDensity, "rho = " + std::to_string(rho));
}

void require_pressure(double p) {
  if (!(p > 0.0)) throw SolverError(ErrorKind::NonPositivePressure, "p = " + std::to_string(p));
}

}  // namespace

double kinetic_energy(double rho, double u, double v) { return 0.5 * rho * (u * u + v * v); }

PrimitiveState primitive_from_conserved(const ConservedState& U, const GasModel& gas) {
  require_density(U.rho);
  const double u = U.mx / U.rho;
  const double v = U.my / U.rho;
  const double p = (gas.gamma - 1.0) * (U.energy - kinetic_energy(U.rho, u, v));
  require_pressure(p);
  return {U.rho, u, v, p};
}

ConservedState conserved_from_primitive(const PrimitiveState& Q, const GasModel& gas) {
  require_density(Q.rho);
  require_pressure(Q.p);
  return {Q.rho, Q.rho * Q.u, Q.rho * Q.v, Q.p / (gas.gamma - 1.0) + kinetic_energy(Q.rho, Q.u, Q.v)};
}

double sound_speed(const PrimitiveState& Q, const GasModel& gas) {
  require_density(Q.rho);
  require_pressure(Q.p);
  return std::sqrt(gas.gamma * Q.p / Q.rho);
}

double enthalpy(const ConservedState& U, const PrimitiveState& Q) { return (U.energy + Q.p) / U.rho; }

ConservedState physical_flux(const PrimitiveState& Q, const ConservedState& U, Axis axis, Variant variant) {
  if (axis == Axis::X) {
    const double transverse = variant == Variant::Symmetric ? U.my * Q.u : U.mx * Q.v;
    return {U.mx, U.mx * Q.u + Q.p, transverse, (U.energy + Q.p) * Q.u};
  }
  return {U.my, U.mx * Q.v, U.my * Q.v + Q.p, (U.energy + Q.p) * Q.v};
}

}  // namespace symfv
