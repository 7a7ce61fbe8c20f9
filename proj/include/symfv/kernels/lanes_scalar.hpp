#pragma once

// Scalar lane: the reference instantiation of every lane-generic kernel.
//
// Each helper here has an AVX2 twin in src/kernels/lanes_avx2.hpp with
// identical IEEE semantics, including the operand order of min/max (which
// decides the result for signed zeros and NaN).  Kernels written against this
// vocabulary therefore produce the same bits on both paths.

#include <bit>
#include <cmath>
#include <cstdint>

namespace symfv::kernels {

using ScalarMask = bool;

inline double vmin(double a, double b) { return a < b ? a : b; }
inline double vmax(double a, double b) { return a > b ? a : b; }
inline double vabs(double a) { return std::fabs(a); }
inline double vsqrt(double a) { return std::sqrt(a); }

inline double select(bool m, double a, double b) { return m ? a : b; }
inline bool land(bool a, bool b) { return a && b; }
inline bool lor(bool a, bool b) { return a || b; }

/// Round to nearest integer, ties to even (current rounding mode).
inline double vround(double a) { return std::nearbyint(a); }

/// 2^k for an integer-valued k with -1022 <= k <= 1023.  The biased exponent
/// is extracted through the 2^52 magic constant rather than an int conversion,
/// matching the AVX2 lane bit for bit (and never UB for discarded lanes).
inline double pow2i(double k) {
  const double y = (k + 1023.0) + 0x1p52;
  return std::bit_cast<double>(std::bit_cast<std::uint64_t>(y) << 52);
}

/// Magnitude of `mag` with the sign bit of `sgn`.
inline double with_sign_of(double mag, double sgn) { return std::copysign(mag, sgn); }

template <class V>
V load(const double* p);

template <>
inline double load<double>(const double* p) {
  return *p;
}

inline void store(double* p, double v) { *p = v; }

template <class V>
struct LaneTraits;

template <>
struct LaneTraits<double> {
  static constexpr int width = 1;
};

}  // namespace symfv::kernels
