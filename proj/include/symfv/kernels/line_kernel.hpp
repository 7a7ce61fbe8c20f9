#pragma once

// One-dimensional flux sweep over a line of cells: per interface, Roe frame,
// characteristic projection of a 12-cell window, 2-stage BVD per component,
// back-projection and HLLC.  Two implementations (scalar, AVX2) share one
// lane-generic body and produce identical bits.

#include "symfv/kernels/recon_impl.hpp"

namespace symfv::kernels {

/// Cells of one line in structure-of-arrays form, in the sweep's normal frame.
/// All arrays hold n_interfaces + 11 cells; interface m lies between cells
/// m + 5 and m + 6.
struct LineInput {
  const double* rho = nullptr;
  const double* mn = nullptr;
  const double* mt = nullptr;
  const double* E = nullptr;
  const double* sqrt_rho = nullptr;
  const double* un = nullptr;
  const double* ut = nullptr;
  const double* h = nullptr;
};

struct LineOutput {
  double* f_rho = nullptr;
  double* f_mn = nullptr;
  double* f_mt = nullptr;
  double* f_E = nullptr;
  // Optional per-interface selection labels in natural component order
  // (u-c, u, u+c, u_perp): `left` for the cell left of the interface.
  double* label_left[4] = {nullptr, nullptr, nullptr, nullptr};
  double* label_right[4] = {nullptr, nullptr, nullptr, nullptr};

  bool wants_labels() const { return label_left[0] != nullptr; }
};

struct KernelParams {
  double gamma = 1.4;
  bool symmetric = true;
  bool x_axis = true;
  BvdConstants bvd = BvdConstants::make(true);

  static KernelParams make(double gamma, bool symmetric, bool x_axis) {
    return {gamma, symmetric, x_axis, BvdConstants::make(symmetric)};
  }
};

enum class Isa { Auto, Scalar, Avx2 };

using LineKernelFn = void (*)(const LineInput&, const LineOutput&, const KernelParams&, int n_interfaces);

void line_kernel_scalar(const LineInput& in, const LineOutput& out, const KernelParams& p, int n_interfaces);
void line_kernel_avx2(const LineInput& in, const LineOutput& out, const KernelParams& p, int n_interfaces);

bool cpu_has_avx2();

/// Resolves Auto to the best available ISA; requesting Avx2 on a CPU without
/// it throws SolverError(InvalidArgument).
Isa resolve_isa(Isa requested);
LineKernelFn select_line_kernel(Isa requested);
const char* isa_name(Isa isa);

}  // namespace symfv::kernels
