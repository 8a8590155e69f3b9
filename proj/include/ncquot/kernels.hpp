#pragma once

#include <cstdint>
#include <vector>

#include "ncquot/fq.hpp"

namespace ncquot {

enum class KernelChoice { Auto, Scalar, Avx2 };

// Enumeration geometry of the tuple space over F_p. Index digit t (base p) is
// entry t of the flat layout [T_1 row-major | ... | T_d | v_1 | ... | v_r],
// so matrix entries occupy the low digits and framing vectors the high ones.
struct EnumDesc {
  int n, r, d, p;
  int digits;          // dn^2 + rn
  std::uint64_t total; // p^digits
};

EnumDesc make_enum_desc(int n, int r, int d, int p);

void decode_digits(const EnumDesc& desc, std::uint64_t index, std::uint8_t* out);
// Advances to the next index; returns the highest digit position that changed.
// The current digits must not encode the final index.
int odometer_increment(const EnumDesc& desc, std::uint8_t* digits);

// A span kernel bins the indices [lo, hi) by span dimension, accumulating
// counts into strata[0..n]. All kernels are exact and must agree.
struct SpanKernel {
  const char* name;
  bool (*supports)(const EnumDesc& desc);
  void (*run)(const EnumDesc& desc, std::uint64_t lo, std::uint64_t hi, std::uint64_t* strata);
};

const SpanKernel& scalar_span_kernel();
// Every kernel compiled into this binary; the scalar reference comes first.
const std::vector<const SpanKernel*>& span_kernels();

bool cpu_has_avx2();

// Auto picks the fastest kernel usable for this space on this machine and
// falls back to scalar; an explicit choice throws InvalidRange when unusable.
const SpanKernel& select_span_kernel(const EnumDesc& desc, KernelChoice choice);

}  // namespace ncquot
