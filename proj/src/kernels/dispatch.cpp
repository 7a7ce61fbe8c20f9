#include "symfv/errors.hpp"
#include "symfv/kernels/line_kernel.hpp"

namespace symfv::kernels {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa resolve_isa(Isa requested) {
  switch (requested) {
    case Isa::Scalar:
      return Isa::Scalar;
    case Isa::Avx2:
      if (!cpu_has_avx2()) throw SolverError(ErrorKind::InvalidArgument, "AVX2 kernel requested but CPU lacks AVX2");
      return Isa::Avx2;
    case Isa::Auto:
      break;
  }
  return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
}

LineKernelFn select_line_kernel(Isa requested) {
  return resolve_isa(requested) == Isa::Avx2 ? &line_kernel_avx2 : &line_kernel_scalar;
}

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::Auto:
      return "auto";
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "?";
}

}  // namespace symfv::kernels
