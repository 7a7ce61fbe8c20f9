#pragma once

#include <vector>

#include "symfv/kernels/line_kernel.hpp"
#include "symfv/state.hpp"

namespace symfv {

// 1D periodic smooth-wave harness (nx = N, ny = 1).  The time step shrinks
// like dx^(5/3) below the reference grid so the RK3 error stays under the
// spatial error.
struct ConvergenceOptions {
  std::vector<int> grids{32, 64, 128, 256};
  double t_end = 1.0;
  double cfl = 0.6;
  int reference_n = 32;
  Variant variant = Variant::Symmetric;
  kernels::Isa isa = kernels::Isa::Auto;
  int threads = 1;
};

struct ConvergenceRow {
  int n = 0;
  double l1 = 0.0;
  double order = 0.0;  // log2(E_prev / E); NaN for the first grid
  long steps = 0;
};

std::vector<ConvergenceRow> convergence_study(const ConvergenceOptions& opt);

}  // namespace symfv
