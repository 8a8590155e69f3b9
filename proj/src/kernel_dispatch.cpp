#include "ncquot/kernels.hpp"

namespace ncquot {

#ifdef NCQUOT_HAVE_AVX2_KERNEL
const SpanKernel& avx2_span_kernel();
#endif

bool cpu_has_avx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

const std::vector<const SpanKernel*>& span_kernels() {
  static const std::vector<const SpanKernel*> kernels = [] {
    std::vector<const SpanKernel*> list{&scalar_span_kernel()};
#ifdef NCQUOT_HAVE_AVX2_KERNEL
    list.push_back(&avx2_span_kernel());
#endif
    return list;
  }();
  return kernels;
}

const SpanKernel& select_span_kernel(const EnumDesc& desc, KernelChoice choice) {
  switch (choice) {
    case KernelChoice::Scalar:
      return scalar_span_kernel();
    case KernelChoice::Avx2:
#ifdef NCQUOT_HAVE_AVX2_KERNEL
      if (cpu_has_avx2() && avx2_span_kernel().supports(desc)) return avx2_span_kernel();
#endif
      throw InvalidRange("avx2 kernel is not usable for this space on this machine");
    case KernelChoice::Auto:
    default:
#ifdef NCQUOT_HAVE_AVX2_KERNEL
      if (cpu_has_avx2() && avx2_span_kernel().supports(desc)) return avx2_span_kernel();
#endif
      return scalar_span_kernel();
  }
}

}  // namespace ncquot
