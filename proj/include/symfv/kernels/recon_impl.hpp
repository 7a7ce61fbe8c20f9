#pragma once

// Lane-generic P4 / THINC candidates and the 2-stage BVD selector.
//
// Naming: for a cell, `plus` is the reconstructed value at its right face
// (q^L_{i+1/2}) and `minus` the value at its left face (q^R_{i-1/2}).

#include "symfv/kernels/fastmath.hpp"

namespace symfv::kernels {

template <class V>
struct FaceValues {
  V plus, minus;
};

/// Unlimited 4th-degree polynomial.  The symmetric form evaluates the left
/// face with the term order of the right face applied to the flipped stencil;
/// the original form sums both faces in ascending cell order.
template <class V>
FaceValues<V> p4_faces(V qm2, V qm1, V q0, V qp1, V qp2, bool symmetric) {
  const V plus = ((((V(2.0) * qm2 - V(13.0) * qm1) + V(47.0) * q0) + V(27.0) * qp1) - V(3.0) * qp2) / V(60.0);
  V minus;
  if (symmetric) {
    minus = ((((V(2.0) * qp2 - V(13.0) * qp1) + V(47.0) * q0) + V(27.0) * qm1) - V(3.0) * qm2) / V(60.0);
  } else {
    minus = ((((V(-3.0) * qm2 + V(27.0) * qm1) + V(47.0) * q0) - V(13.0) * qp1) + V(2.0) * qp2) / V(60.0);
  }
  return {plus, minus};
}

/// Per-steepness constants of the THINC candidates.
struct ThincConstants {
  double beta = 0.0;
  double half_beta = 0.0;  // symmetric form
  double t1 = 0.0;         // tanh(beta / 2)
  double tanh_beta = 0.0;  // original form
  double cosh_beta = 0.0;

  static ThincConstants make(double beta) {
    ThincConstants k;
    k.beta = beta;
    k.half_beta = beta / 2.0;
    k.t1 = fast_tanh(k.half_beta);
    k.tanh_beta = fast_tanh(beta);
    k.cosh_beta = 0.5 * (fast_exp(beta) + fast_exp(-beta));
    return k;
  }
};

inline constexpr double kThincEpsilon = 1e-20;

/// Symmetry-preserving THINC: baseline (q_{i+1}+q_{i-1})/2, jump variable
/// measured from the cell centre, no epsilon in alpha.  Closed-form face
/// values; the jump location itself is never formed.
template <class V>
FaceValues<V> thinc_faces_symmetric(V qm, V qc, V qp, const ThincConstants& k) {
  const auto monotone = (qc - qm) * (qp - qc) > V(kThincEpsilon);
  const V qa = (qp + qm) / V(2.0);
  const V qd = (qp - qm) / V(2.0);
  const V alpha = (qc - qa) / qd;
  const V t1 = V(k.t1);
  const V t2 = fast_tanh(alpha * V(k.half_beta));
  const V t2t1 = t2 / t1;
  const V plus = qa + qd * ((t1 + t2t1) / (V(1.0) + t2));
  const V minus = qa - qd * ((t1 - t2t1) / (V(1.0) - t2));
  return {select(monotone, plus, qc), select(monotone, minus, qc)};
}

/// Original THINC with q_min baseline and epsilon-regularised alpha.
template <class V>
FaceValues<V> thinc_faces_original(V qm, V qc, V qp, const ThincConstants& k) {
  const auto monotone = (qc - qm) * (qp - qc) > V(0.0);
  const V eps = V(kThincEpsilon);
  const V qmin = vmin(qm, qp);
  const V dq = vabs(qp - qm);
  const V theta = select(qp > qm, V(1.0), V(-1.0));
  const V alpha = theta * (V(2.0) * ((qc - qmin + eps) / (dq + eps)) - V(1.0));
  const V tb = V(k.tanh_beta);
  const V a = (fast_exp(alpha * V(k.beta)) / V(k.cosh_beta) - V(1.0)) / tb;
  const V half_dq = dq / V(2.0);
  const V plus = qmin + half_dq * (V(1.0) + theta * ((tb + a) / (V(1.0) + a * tb)));
  const V minus = qmin + half_dq * (V(1.0) + theta * a);
  return {select(monotone, plus, qc), select(monotone, minus, qc)};
}

template <class V>
FaceValues<V> thinc_faces(V qm, V qc, V qp, const ThincConstants& k, bool symmetric) {
  return symmetric ? thinc_faces_symmetric(qm, qc, qp, k) : thinc_faces_original(qm, qc, qp, k);
}

/// Total boundary variation of a cell from the face values of itself and its
/// two neighbours.
template <class V>
V total_bv(const FaceValues<V>& left, const FaceValues<V>& centre, const FaceValues<V>& right) {
  return vabs(left.plus - centre.minus) + vabs(centre.plus - right.minus);
}

// Window geometry for one interface: cells i-5 .. i+6 with the interface
// between window slots 5 and 6.
inline constexpr int kWindow = 12;
inline constexpr int kLeftSlot = 5;
inline constexpr int kRightSlot = 6;

struct BvdConstants {
  ThincConstants small;  // beta_s
  ThincConstants large;  // beta_l
  bool symmetric = true;

  static BvdConstants make(bool symmetric, double beta_s = 1.1, double beta_l = 1.6) {
    return {ThincConstants::make(beta_s), ThincConstants::make(beta_l), symmetric};
  }
};

template <class V>
struct BvdResult {
  V q_left;       // left state at the interface (cell i, right face)
  V q_right;      // right state at the interface (cell i+1, left face)
  V label_left;   // 0 = P4, 1 = THINC(beta_s), 2 = THINC(beta_l)
  V label_right;
};

/// Two-stage BVD selection for the interface in the middle of a 12-cell
/// window of one characteristic component.
///
/// Stage 1 starts from P4 everywhere and switches cells j-1, j, j+1 to
/// THINC(beta_s) whenever TBV_j(Ts) < TBV_j(P4); switches accumulate.  Stage 2
/// switches a cell to THINC(beta_l) when TBV(Tl) < TBV(stage-1 choice).  Ties
/// keep the incumbent.
template <class V>
BvdResult<V> bvd_window(const V q[kWindow], const BvdConstants& k) {
  FaceValues<V> p4[kWindow];
  FaceValues<V> ts[kWindow];
  FaceValues<V> tl[kWindow];

  for (int j = 2; j <= 9; ++j) {
    p4[j] = p4_faces(q[j - 2], q[j - 1], q[j], q[j + 1], q[j + 2], k.symmetric);
    ts[j] = thinc_faces(q[j - 1], q[j], q[j + 1], k.small, k.symmetric);
  }
  for (int j = 4; j <= 7; ++j) tl[j] = thinc_faces(q[j - 1], q[j], q[j + 1], k.large, k.symmetric);

  // stage 1: per-cell test for cells 3..8, marks spread to 4..7
  decltype(V(0.0) < V(0.0)) test[kWindow];
  for (int j = 3; j <= 8; ++j) {
    test[j] = total_bv(ts[j - 1], ts[j], ts[j + 1]) < total_bv(p4[j - 1], p4[j], p4[j + 1]);
  }
  decltype(V(0.0) < V(0.0)) use_ts[kWindow];
  FaceValues<V> stage1[kWindow];
  for (int j = 4; j <= 7; ++j) {
    use_ts[j] = lor(lor(test[j - 1], test[j]), test[j + 1]);
    stage1[j] = {select(use_ts[j], ts[j].plus, p4[j].plus), select(use_ts[j], ts[j].minus, p4[j].minus)};
  }

  // stage 2 for the two cells adjacent to the interface
  const auto finalize = [&](int j, V& plus, V& minus, V& label) {
    const auto use_tl = total_bv(tl[j - 1], tl[j], tl[j + 1]) < total_bv(stage1[j - 1], stage1[j], stage1[j + 1]);
    plus = select(use_tl, tl[j].plus, stage1[j].plus);
    minus = select(use_tl, tl[j].minus, stage1[j].minus);
    label = select(use_tl, V(2.0), select(use_ts[j], V(1.0), V(0.0)));
  };

  BvdResult<V> r;
  V unused;
  finalize(kLeftSlot, r.q_left, unused, r.label_left);
  finalize(kRightSlot, unused, r.q_right, r.label_right);
  return r;
}

}  // namespace symfv::kernels
