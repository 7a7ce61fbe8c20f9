#include "lanes_avx2.hpp"
#include "symfv/kernels/line_kernel_impl.hpp"

namespace symfv::kernels {

void line_kernel_avx2(const LineInput& in, const LineOutput& out, const KernelParams& p, int n_interfaces) {
  int m = 0;
  for (; m + 4 <= n_interfaces; m += 4) line_interfaces<Avx2d>(in, out, p, m);
  for (; m < n_interfaces; ++m) line_interfaces<double>(in, out, p, m);
}

}  // namespace symfv::kernels
