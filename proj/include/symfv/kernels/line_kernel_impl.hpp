#pragma once

#include "symfv/kernels/euler_impl.hpp"
#include "symfv/kernels/line_kernel.hpp"

namespace symfv::kernels {

/// Computes the interfaces m .. m + width(V) - 1.
template <class V>
void line_interfaces(const LineInput& in, const LineOutput& out, const KernelParams& p, int m) {
  const int l = m + kLeftSlot;
  const int r = m + kRightSlot;
  const Frame<V> f = build_frame(load<V>(in.sqrt_rho + l), load<V>(in.un + l), load<V>(in.ut + l),
                                 load<V>(in.h + l), load<V>(in.sqrt_rho + r), load<V>(in.un + r),
                                 load<V>(in.ut + r), load<V>(in.h + r), p.gamma);

  V w[4][kWindow];
  for (int k = 0; k < kWindow; ++k) {
    V wk[4];
    project_to_char(f, load<V>(in.rho + m + k), load<V>(in.mn + m + k), load<V>(in.mt + m + k),
                    load<V>(in.E + m + k), wk);
    for (int c = 0; c < 4; ++c) w[c][k] = wk[c];
  }

  V wl[4];
  V wr[4];
  for (int c = 0; c < 4; ++c) {
    const BvdResult<V> res = bvd_window(w[c], p.bvd);
    wl[c] = res.q_left;
    wr[c] = res.q_right;
    if (out.wants_labels()) {
      store(out.label_left[c] + m, res.label_left);
      store(out.label_right[c] + m, res.label_right);
    }
  }

  Cons<V> UL = project_to_cons(f, wl, p.symmetric);
  Cons<V> UR = project_to_cons(f, wr, p.symmetric);
  // Non-positive (or NaN) density or pressure on either side: first order at
  // this interface.  The test is symmetric in L and R.
  const auto ok = land(physical(UL, p.gamma), physical(UR, p.gamma));
  const Cons<V> CL{load<V>(in.rho + l), load<V>(in.mn + l), load<V>(in.mt + l), load<V>(in.E + l)};
  const Cons<V> CR{load<V>(in.rho + r), load<V>(in.mn + r), load<V>(in.mt + r), load<V>(in.E + r)};
  UL = {select(ok, UL.rho, CL.rho), select(ok, UL.mn, CL.mn), select(ok, UL.mt, CL.mt), select(ok, UL.E, CL.E)};
  UR = {select(ok, UR.rho, CR.rho), select(ok, UR.mn, CR.mn), select(ok, UR.mt, CR.mt), select(ok, UR.E, CR.E)};
  const Cons<V> F = hllc_normal_flux(UL, UR, p.gamma, p.symmetric, p.x_axis);
  store(out.f_rho + m, F.rho);
  store(out.f_mn + m, F.mn);
  store(out.f_mt + m, F.mt);
  store(out.f_E + m, F.E);
}

}  // namespace symfv::kernels
