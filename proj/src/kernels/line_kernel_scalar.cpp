#include "symfv/kernels/line_kernel_impl.hpp"

namespace symfv::kernels {

void line_kernel_scalar(const LineInput& in, const LineOutput& out, const KernelParams& p, int n_interfaces) {
  for (int m = 0; m < n_interfaces; ++m) line_interfaces<double>(in, out, p, m);
}

}  // namespace symfv::kernels
