#pragma once

// expm1 / exp / tanh built from add, mul, div and exponent-field scaling only,
// so they evaluate identically in every lane width.
//
// Accuracy is a few ulp over the ranges the reconstruction needs.  tanh is odd
// to the last bit: the magnitude is computed from |x| and the sign transferred.

#include "symfv/kernels/lanes_scalar.hpp"

namespace symfv::kernels {

namespace fm {
inline constexpr double kInvLn2 = 1.44269504088896338700e+00;
// ln2 split so that k * kLn2Hi is exact for |k| < 2^11.
inline constexpr double kLn2Hi = 6.93147180369123816490e-01;
inline constexpr double kLn2Lo = 1.90821492927058770002e-10;
// 1/n! for n = 2..14
inline constexpr double kInvFact[] = {
    1.0 / 2.0,
    1.0 / 6.0,
    1.0 / 24.0,
    1.0 / 120.0,
    1.0 / 720.0,
    1.0 / 5040.0,
    1.0 / 40320.0,
    1.0 / 362880.0,
    1.0 / 3628800.0,
    1.0 / 39916800.0,
    1.0 / 479001600.0,
    1.0 / 6227020800.0,
    1.0 / 87178291200.0,
};
}  // namespace fm

/// expm1 of the reduced argument |r| <= ln2/2 by Taylor series (degree 14).
template <class V>
V expm1_reduced(V r) {
  V poly = V(fm::kInvFact[12]);
  for (int n = 11; n >= 0; --n) poly = V(fm::kInvFact[n]) + r * poly;
  return r + (r * r) * poly;
}

/// Argument reduction x = k ln2 + r, with x clamped to [-700, 700].
template <class V>
void reduce_ln2(V x, V& k, V& r) {
  x = vmax(vmin(x, V(700.0)), V(-700.0));
  k = vround(x * V(fm::kInvLn2));
  r = (x - k * V(fm::kLn2Hi)) - k * V(fm::kLn2Lo);
}

template <class V>
V fast_expm1(V x) {
  V k, r;
  reduce_ln2(x, k, r);
  const V p = expm1_reduced(r);
  const V scale = pow2i(k);
  return scale * p + (scale - V(1.0));
}

template <class V>
V fast_exp(V x) {
  V k, r;
  reduce_ln2(x, k, r);
  const V p = expm1_reduced(r);
  return pow2i(k) * (p + V(1.0));
}

/// tanh(x) = -expm1(-2|x|) / (2 + expm1(-2|x|)), sign restored from x.
template <class V>
V fast_tanh(V x) {
  const V a = vmin(vabs(x), V(40.0));
  const V em = fast_expm1(V(-2.0) * a);
  const V t = -em / (V(2.0) + em);
  return with_sign_of(t, x);
}

}  // namespace symfv::kernels
