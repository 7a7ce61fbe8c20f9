#pragma once

#include <array>

#include "symfv/errors.hpp"

namespace symfv {

enum class Axis { X, Y };

// Selects between the plain formulation and the mirror-exact one everywhere a
// choice exists (reconstruction, eigenvector ordering, HLLC).
enum class Variant { Original, Symmetric };

struct ConservedState {
  double rho = 0.0;
  double mx = 0.0;
  double my = 0.0;
  double energy = 0.0;

  friend bool operator==(const ConservedState&, const ConservedState&) = default;
};

struct PrimitiveState {
  double rho = 0.0;
  double u = 0.0;
  double v = 0.0;
  double p = 0.0;

  friend bool operator==(const PrimitiveState&, const PrimitiveState&) = default;
};

struct GasModel {
  double gamma = 1.4;

  static GasModel air() { return {1.4}; }
  static GasModel monatomic() { return {5.0 / 3.0}; }
};

/// Throws NonPositiveDensity / NonPositivePressure for unphysical input.
PrimitiveState primitive_from_conserved(const ConservedState& U, const GasModel& gas);
ConservedState conserved_from_primitive(const PrimitiveState& Q, const GasModel& gas);
double sound_speed(const PrimitiveState& Q, const GasModel& gas);

/// Total enthalpy H = (E + p) / rho.
double enthalpy(const ConservedState& U, const PrimitiveState& Q);

/// Kinetic energy density 0.5*rho*(u*u + v*v); exchange of u and v is bit-safe.
double kinetic_energy(double rho, double u, double v);

/// Physical flux F(U) (axis X) or G(U) (axis Y).  The transverse momentum flux
/// is (rho v) u for X and (rho u) v for Y in the symmetric variant, so that the
/// diagonal mirror F(rho,u,v) == G(rho,v,u) holds bit-exactly.  The original
/// variant evaluates (rho u) v on both axes.
ConservedState physical_flux(const PrimitiveState& Q, const ConservedState& U, Axis axis,
                             Variant variant = Variant::Symmetric);

/// Component access in the order (rho, mx, my, energy).
inline std::array<double, 4> to_array(const ConservedState& U) {
  return {U.rho, U.mx, U.my, U.energy};
}
inline ConservedState from_array(const std::array<double, 4>& a) {
  return {a[0], a[1], a[2], a[3]};
}

}  // namespace symfv
