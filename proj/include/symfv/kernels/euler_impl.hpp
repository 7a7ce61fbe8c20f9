#pragma once

// Lane-generic Euler building blocks in the interface-normal frame.
//
// A state is rotated so that `mn` is the momentum normal to the interface and
// `mt` the transverse one (X sweep: mn = mx, mt = my; Y sweep: mn = my,
// mt = mx).  Both sweeps then run the same instruction sequence, which is what
// makes diagonal mirror symmetry hold to the last bit.

#include "symfv/kernels/lanes_scalar.hpp"

namespace symfv::kernels {

template <class V>
struct Cons {
  V rho, mn, mt, E;
};

template <class V>
struct Prim {
  V rho, un, ut, p;
};

template <class V>
V kinetic(V rho, V un, V ut) {
  return V(0.5) * rho * (un * un + ut * ut);
}

template <class V>
Prim<V> to_prim(const Cons<V>& U, double gamma) {
  const V un = U.mn / U.rho;
  const V ut = U.mt / U.rho;
  const V p = V(gamma - 1.0) * (U.E - kinetic(U.rho, un, ut));
  return {U.rho, un, ut, p};
}

/// rho > 0 and p > 0, false for NaN.
template <class V>
auto physical(const Cons<V>& U, double gamma) {
  return land(V(0.0) < U.rho, V(0.0) < to_prim(U, gamma).p);
}

template <class V>
V sound(V rho, V p, double gamma) {
  return vsqrt(V(gamma) * p / rho);
}

/// Normal-frame physical flux.  The symmetric form transports the transverse
/// momentum as (rho v) u on every axis.  The original form evaluates (rho u) v
/// in physical components, which in the x sweep is mn * ut.
template <class V>
Cons<V> normal_flux(const Cons<V>& U, const Prim<V>& Q, bool symmetric, bool x_axis) {
  Cons<V> F;
  F.rho = U.mn;
  F.mn = U.mn * Q.un + Q.p;
  if (symmetric || !x_axis) {
    F.mt = U.mt * Q.un;
  } else {
    F.mt = U.mn * Q.ut;
  }
  F.E = (U.E + Q.p) * Q.un;
  return F;
}

/// Roe-averaged interface frame; rows of L and columns of R in natural order
/// (u-c, u, u+c, u_perp); state components in order (rho, mn, mt, E).
template <class V>
struct Frame {
  V un, ut, h, c, b1, b2, q;
  V L[4][4];
  V R[4][4];
};

template <class V>
V roe_avg(V sl, V sr, V ql, V qr) {
  return (sl * ql + sr * qr) / (sl + sr);
}

template <class V>
Frame<V> build_frame(V sqrt_l, V un_l, V ut_l, V h_l, V sqrt_r, V un_r, V ut_r, V h_r, double gamma) {
  Frame<V> f;
  const V gm1 = V(gamma - 1.0);
  f.un = roe_avg(sqrt_l, sqrt_r, un_l, un_r);
  f.ut = roe_avg(sqrt_l, sqrt_r, ut_l, ut_r);
  f.h = roe_avg(sqrt_l, sqrt_r, h_l, h_r);
  f.q = V(0.5) * (f.un * f.un + f.ut * f.ut);
  const V c2 = gm1 * (f.h - f.q);
  f.c = vsqrt(c2);
  f.b2 = gm1 / c2;
  f.b1 = f.q * f.b2;

  const V inv_c = V(1.0) / f.c;
  const V unc = f.un / f.c;
  const V half_b2 = V(0.5) * f.b2;
  const V b2un = f.b2 * f.un;
  const V b2ut = f.b2 * f.ut;

  f.L[0][0] = V(0.5) * (f.b1 + unc);
  f.L[0][1] = V(-0.5) * (inv_c + b2un);
  f.L[0][2] = V(-0.5) * b2ut;
  f.L[0][3] = half_b2;

  f.L[1][0] = V(1.0) - f.b1;
  f.L[1][1] = b2un;
  f.L[1][2] = b2ut;
  f.L[1][3] = -f.b2;

  f.L[2][0] = V(0.5) * (f.b1 - unc);
  f.L[2][1] = V(0.5) * (inv_c - b2un);
  f.L[2][2] = V(-0.5) * b2ut;
  f.L[2][3] = half_b2;

  f.L[3][0] = -f.ut;
  f.L[3][1] = V(0.0);
  f.L[3][2] = V(1.0);
  f.L[3][3] = V(0.0);

  const V unc_mul = f.un * f.c;
  f.R[0][0] = V(1.0);
  f.R[0][1] = V(1.0);
  f.R[0][2] = V(1.0);
  f.R[0][3] = V(0.0);

  f.R[1][0] = f.un - f.c;
  f.R[1][1] = f.un;
  f.R[1][2] = f.un + f.c;
  f.R[1][3] = V(0.0);

  f.R[2][0] = f.ut;
  f.R[2][1] = f.ut;
  f.R[2][2] = f.ut;
  f.R[2][3] = V(1.0);

  f.R[3][0] = f.h - unc_mul;
  f.R[3][1] = f.q;
  f.R[3][2] = f.h + unc_mul;
  f.R[3][3] = f.ut;
  return f;
}

/// W = l1 rho + (l2 mn + l3 mt) + l4 E, the momentum pair bracketed.
template <class V>
void project_to_char(const Frame<V>& f, V rho, V mn, V mt, V E, V w[4]) {
  for (int r = 0; r < 4; ++r) {
    w[r] = (f.L[r][0] * rho + (f.L[r][1] * mn + f.L[r][2] * mt)) + f.L[r][3] * E;
  }
}

/// U = R W.  With `acoustic_first` the (u-c, u+c) pair is summed before the
/// other two waves; otherwise plain natural order.
template <class V>
Cons<V> project_to_cons(const Frame<V>& f, const V w[4], bool acoustic_first) {
  V out[4];
  for (int r = 0; r < 4; ++r) {
    const V ta = f.R[r][0] * w[0];
    const V tb = f.R[r][1] * w[1];
    const V tc = f.R[r][2] * w[2];
    const V td = f.R[r][3] * w[3];
    out[r] = acoustic_first ? ((ta + tc) + tb) + td : ((ta + tb) + tc) + td;
  }
  return {out[0], out[1], out[2], out[3]};
}

// ---------------------------------------------------------------------------
// HLLC

template <class V>
struct Waves {
  V sl, sr, sstar, pstar;
};

template <class V>
Waves<V> hllc_waves(const Prim<V>& L, const Prim<V>& R, V cl, V cr, double gamma, bool symmetric) {
  const V rho_bar = V(0.5) * (L.rho + R.rho);
  const V c_bar = V(0.5) * (cl + cr);
  const V p_pvrs = V(0.5) * (L.p + R.p) - V(0.5) * (R.un - L.un) * rho_bar * c_bar;
  const V pstar = vmax(V(0.0), p_pvrs);

  const V g = V((gamma + 1.0) / (2.0 * gamma));
  const V ql = select(pstar <= L.p, V(1.0), vsqrt(V(1.0) + g * (pstar / L.p - V(1.0))));
  const V qr = select(pstar <= R.p, V(1.0), vsqrt(V(1.0) + g * (pstar / R.p - V(1.0))));

  const V sl = L.un - cl * ql;
  const V sr = R.un + cr * qr;
  const V dl = sl - L.un;
  const V dr = sr - R.un;
  const V ml = L.rho * L.un * dl;
  const V mr = R.rho * R.un * dr;
  const V dp = R.p - L.p;
  const V num = symmetric ? dp + (ml - mr) : (dp + ml) - mr;
  const V den = L.rho * dl - R.rho * dr;
  return {sl, sr, num / den, pstar};
}

template <class V>
Cons<V> hllc_star_state(const Cons<V>& U, const Prim<V>& Q, V sk, V sstar) {
  const V dk = sk - Q.un;
  const V fac = dk / (sk - sstar);
  Cons<V> s;
  s.rho = fac * Q.rho;
  s.mn = fac * (Q.rho * sstar);
  s.mt = fac * U.mt;
  s.E = fac * (U.E + (sstar - Q.un) * (Q.rho * sstar + Q.p / dk));
  return s;
}

template <class V>
Cons<V> star_flux(const Cons<V>& F, V s, const Cons<V>& Us, const Cons<V>& U) {
  return {F.rho + s * (Us.rho - U.rho), F.mn + s * (Us.mn - U.mn), F.mt + s * (Us.mt - U.mt),
          F.E + s * (Us.E - U.E)};
}

/// HLLC flux in the normal frame.
/// symmetric: bracketed s*, sign-blend flux choice (exact average at s* = 0)
/// and (rho v) u transverse flux.  Otherwise the four-branch textbook form.
/// `x_axis` only matters for the original transverse multiplication order.
template <class V>
Cons<V> hllc_normal_flux(const Cons<V>& UL, const Cons<V>& UR, double gamma, bool symmetric, bool x_axis) {
  const Prim<V> QL = to_prim(UL, gamma);
  const Prim<V> QR = to_prim(UR, gamma);
  const V cl = sound(QL.rho, QL.p, gamma);
  const V cr = sound(QR.rho, QR.p, gamma);
  const Waves<V> w = hllc_waves(QL, QR, cl, cr, gamma, symmetric);

  const Cons<V> FL = normal_flux(UL, QL, symmetric, x_axis);
  const Cons<V> FR = normal_flux(UR, QR, symmetric, x_axis);
  const Cons<V> UsL = hllc_star_state(UL, QL, w.sl, w.sstar);
  const Cons<V> UsR = hllc_star_state(UR, QR, w.sr, w.sstar);

  if (symmetric) {
    const V sg = select(w.sstar > V(0.0), V(1.0), select(w.sstar < V(0.0), V(-1.0), V(0.0)));
    const V wl = (V(1.0) + sg) * V(0.5);
    const V wr = (V(1.0) - sg) * V(0.5);
    const Cons<V> GL = star_flux(FL, vmin(w.sl, V(0.0)), UsL, UL);
    const Cons<V> GR = star_flux(FR, vmax(w.sr, V(0.0)), UsR, UR);
    return {wl * GL.rho + wr * GR.rho, wl * GL.mn + wr * GR.mn, wl * GL.mt + wr * GR.mt,
            wl * GL.E + wr * GR.E};
  }

  const Cons<V> FsL = star_flux(FL, w.sl, UsL, UL);
  const Cons<V> FsR = star_flux(FR, w.sr, UsR, UR);
  const auto pick = [&](V fl, V fsl, V fsr, V fr) {
    return select(V(0.0) <= w.sl, fl, select(V(0.0) <= w.sstar, fsl, select(V(0.0) <= w.sr, fsr, fr)));
  };
  return {pick(FL.rho, FsL.rho, FsR.rho, FR.rho), pick(FL.mn, FsL.mn, FsR.mn, FR.mn),
          pick(FL.mt, FsL.mt, FsR.mt, FR.mt), pick(FL.E, FsL.E, FsR.E, FR.E)};
}

}  // namespace symfv::kernels
