#pragma once

// Four-lane AVX2 counterpart of lanes_scalar.hpp.  Only compiled into
// translation units built with -mavx2 (and without -mfma).

#include <immintrin.h>

#include "symfv/kernels/lanes_scalar.hpp"

namespace symfv::kernels {

struct Avx2Mask {
  __m256d m;
};

struct Avx2d {
  __m256d v;

  Avx2d() = default;
  Avx2d(__m256d x) : v(x) {}
  Avx2d(double x) : v(_mm256_set1_pd(x)) {}
};

inline Avx2d operator+(Avx2d a, Avx2d b) { return _mm256_add_pd(a.v, b.v); }
inline Avx2d operator-(Avx2d a, Avx2d b) { return _mm256_sub_pd(a.v, b.v); }
inline Avx2d operator*(Avx2d a, Avx2d b) { return _mm256_mul_pd(a.v, b.v); }
inline Avx2d operator/(Avx2d a, Avx2d b) { return _mm256_div_pd(a.v, b.v); }
inline Avx2d operator-(Avx2d a) { return _mm256_xor_pd(a.v, _mm256_set1_pd(-0.0)); }

inline Avx2Mask operator<(Avx2d a, Avx2d b) { return {_mm256_cmp_pd(a.v, b.v, _CMP_LT_OQ)}; }
inline Avx2Mask operator>(Avx2d a, Avx2d b) { return {_mm256_cmp_pd(a.v, b.v, _CMP_GT_OQ)}; }
inline Avx2Mask operator<=(Avx2d a, Avx2d b) { return {_mm256_cmp_pd(a.v, b.v, _CMP_LE_OQ)}; }

// minpd/maxpd return the second operand unless the comparison holds, the
// same as the scalar ternaries.
inline Avx2d vmin(Avx2d a, Avx2d b) { return _mm256_min_pd(a.v, b.v); }
inline Avx2d vmax(Avx2d a, Avx2d b) { return _mm256_max_pd(a.v, b.v); }
inline Avx2d vabs(Avx2d a) { return _mm256_andnot_pd(_mm256_set1_pd(-0.0), a.v); }
inline Avx2d vsqrt(Avx2d a) { return _mm256_sqrt_pd(a.v); }

inline Avx2d select(Avx2Mask m, Avx2d a, Avx2d b) { return _mm256_blendv_pd(b.v, a.v, m.m); }
inline Avx2Mask land(Avx2Mask a, Avx2Mask b) { return {_mm256_and_pd(a.m, b.m)}; }
inline Avx2Mask lor(Avx2Mask a, Avx2Mask b) { return {_mm256_or_pd(a.m, b.m)}; }

inline Avx2d vround(Avx2d a) { return _mm256_round_pd(a.v, _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC); }

inline Avx2d pow2i(Avx2d k) {
  const __m256d y = _mm256_add_pd(_mm256_add_pd(k.v, _mm256_set1_pd(1023.0)), _mm256_set1_pd(0x1p52));
  return _mm256_castsi256_pd(_mm256_slli_epi64(_mm256_castpd_si256(y), 52));
}

inline Avx2d with_sign_of(Avx2d mag, Avx2d sgn) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  return _mm256_or_pd(_mm256_andnot_pd(sign, mag.v), _mm256_and_pd(sign, sgn.v));
}

template <>
inline Avx2d load<Avx2d>(const double* p) {
  return _mm256_loadu_pd(p);
}

inline void store(double* p, Avx2d v) { _mm256_storeu_pd(p, v.v); }

template <>
struct LaneTraits<Avx2d> {
  static constexpr int width = 4;
};

}  // namespace symfv::kernels
