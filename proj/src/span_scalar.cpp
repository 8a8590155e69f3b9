#include <string>

#include "ncquot/kernels.hpp"
#include "span_core.hpp"

namespace ncquot {

namespace {

constexpr int kMaxDigits = 64;

}  // namespace

EnumDesc make_enum_desc(int n, int r, int d, int p) {
  if (n < 0 || n > detail::kMaxN || r < 1 || d < 1) {
    throw InvalidRange("tuple space needs 0 <= n <= 8, r >= 1, d >= 1");
  }
  PrimeField field(p);  // validates p
  (void)field;
  EnumDesc desc{n, r, d, p, d * n * n + r * n, 1};
  if (desc.digits > kMaxDigits) throw InvalidRange("tuple space has too many entries");
  for (int i = 0; i < desc.digits; ++i) {
    if (desc.total > (UINT64_C(1) << 62) / static_cast<std::uint64_t>(p)) {
      throw InvalidRange("enumeration size exceeds 2^62");
    }
    desc.total *= static_cast<std::uint64_t>(p);
  }
  return desc;
}

void decode_digits(const EnumDesc& desc, std::uint64_t index, std::uint8_t* out) {
  const auto p = static_cast<std::uint64_t>(desc.p);
  for (int t = 0; t < desc.digits; ++t) {
    out[t] = static_cast<std::uint8_t>(index % p);
    index /= p;
  }
}

int odometer_increment(const EnumDesc& desc, std::uint8_t* digits) {
  const auto top = static_cast<std::uint8_t>(desc.p - 1);
  int pos = 0;
  while (digits[pos] == top) digits[pos++] = 0;
  ++digits[pos];
  return pos;
}

namespace {

bool scalar_supports(const EnumDesc&) { return true; }

void scalar_run(const EnumDesc& desc, std::uint64_t lo, std::uint64_t hi, std::uint64_t* strata) {
  if (lo >= hi) return;
  if (desc.n == 0) {
    strata[0] += hi - lo;
    return;
  }
  const PrimeField field(desc.p);
  const int mat_digits = desc.d * desc.n * desc.n;

  std::uint8_t digits[kMaxDigits];
  decode_digits(desc, lo, digits);
  const std::uint8_t* mats = digits;
  const std::uint8_t* vecs = digits + mat_digits;

  // The framing vectors sit in the high digits, so the seeded echelon state
  // stays valid across a whole block of consecutive indices.
  detail::SeedState seed;
  detail::build_seed(field, desc.n, desc.r, vecs, seed);

  for (std::uint64_t index = lo;;) {
    ++strata[detail::span_from_seed(field, desc.n, desc.d, seed, mats)];
    if (++index == hi) break;
    if (odometer_increment(desc, digits) >= mat_digits) {
      detail::build_seed(field, desc.n, desc.r, vecs, seed);
    }
  }
}

const SpanKernel kScalarKernel{"scalar", &scalar_supports, &scalar_run};

}  // namespace

const SpanKernel& scalar_span_kernel() { return kScalarKernel; }

}  // namespace ncquot
