#pragma once

#include "symfv/state.hpp"

namespace symfv {

struct WaveSpeeds {
  double sL = 0.0;
  double sR = 0.0;
  double s_star = 0.0;
  double p_star = 0.0;
};

/// PVRS-based wave speeds for the Riemann problem normal to `axis`.
WaveSpeeds estimate_waves(const PrimitiveState& QL, const PrimitiveState& QR, const GasModel& gas, Variant variant,
                          Axis axis = Axis::X);

/// Star state U*K on side K.  Throws DegenerateWaveFan when sK == s_star.
ConservedState intermediate_state(const PrimitiveState& QK, const ConservedState& UK, double sK, double s_star,
                                  Axis axis = Axis::X);

/// HLLC flux across a face normal to `axis`.
ConservedState hllc_flux(const ConservedState& UL, const ConservedState& UR, Axis axis, const GasModel& gas,
                         Variant variant);

}  // namespace symfv
