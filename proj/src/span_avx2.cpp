// AVX2 span kernel for p = 2: 32 tuples per vector, one byte lane each.
//
// With matrix entries in the low index bits, a 32-aligned block of consecutive
// indices shares its framing bits, so the seed basis is computed once per
// block; only the matrix rows differ per lane. The echelon basis lives in
// byte lanes (slot j = bit-packed vector with leading bit j), reductions and
// insertions are branchless mask blends, and a lane's matrix-vector product
// over F_2 is an AND plus a nibble parity lookup.

#include "ncquot/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

#include <bit>
#include <cstdint>

namespace ncquot {

namespace {

constexpr int kMaxAvxN = 4;  // row fits a nibble, so one parity shuffle suffices

bool avx2_supports(const EnumDesc& desc) {
  // A 32-lane block must vary only in matrix bits.
  return desc.p == 2 && desc.n >= 1 && desc.n <= kMaxAvxN && desc.d * desc.n * desc.n >= 5;
}

// Scalar F_2 echelon basis on bit-packed vectors, for the per-block seed.
struct BitEchelon {
  std::uint8_t slot[kMaxAvxN] = {};
  int rank = 0;

  void insert(int n, std::uint8_t w) {
    for (int j = n - 1; j >= 0; --j) {
      if (((w >> j) & 1u) == 0) continue;
      if (slot[j]) {
        w ^= slot[j];
      } else {
        slot[j] = w;
        ++rank;
        return;
      }
    }
  }
};

void avx2_run(const EnumDesc& desc, std::uint64_t lo, std::uint64_t hi, std::uint64_t* strata) {
  const std::uint64_t lo32 = (lo + 31) & ~UINT64_C(31);
  const std::uint64_t hi32 = hi & ~UINT64_C(31);
  if (lo32 >= hi32) {
    scalar_span_kernel().run(desc, lo, hi, strata);
    return;
  }
  // Ragged edges go through the scalar reference.
  scalar_span_kernel().run(desc, lo, lo32, strata);
  scalar_span_kernel().run(desc, hi32, hi, strata);

  const int n = desc.n;
  const int d = desc.d;
  const int mat_bits = d * n * n;
  const std::uint8_t mask = static_cast<std::uint8_t>((1u << n) - 1);

  const __m256i zero = _mm256_setzero_si256();
  const __m256i ones = _mm256_set1_epi8(-1);
  const __m256i parity = _mm256_setr_epi8(0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0,
                                          0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0);

  alignas(32) std::uint8_t lanebuf[32];
  __m256i rows[64];  // (i, c) -> rows[i*n + c]; bounded by the 64-digit cap

  for (std::uint64_t base = lo32; base < hi32; base += 32) {
    BitEchelon seed;
    for (int j = 0; j < desc.r && seed.rank < n; ++j) {
      seed.insert(n, static_cast<std::uint8_t>((base >> (mat_bits + j * n)) & mask));
    }
    if (seed.rank == n) {
      strata[n] += 32;
      continue;
    }
    if (seed.rank == 0) {
      strata[0] += 32;
      continue;
    }

    for (int row = 0; row < d * n; ++row) {
      const int shift = row * n;
      for (std::uint64_t lane = 0; lane < 32; ++lane) {
        lanebuf[lane] = static_cast<std::uint8_t>(((base | lane) >> shift) & mask);
      }
      rows[row] = _mm256_load_si256(reinterpret_cast<const __m256i*>(lanebuf));
    }

    __m256i slots[kMaxAvxN];
    for (int j = 0; j < n; ++j) {
      slots[j] = _mm256_set1_epi8(static_cast<char>(seed.slot[j]));
    }

    // Each productive pass grows every unsaturated lane's span by at least
    // one dimension, so n - seed.rank passes complete the closure everywhere.
    const int rounds = n - seed.rank;
    for (int round = 0; round < rounds; ++round) {
      for (int s = 0; s < n; ++s) {
        const __m256i w = slots[s];
        if (_mm256_testz_si256(w, w)) continue;
        for (int i = 0; i < d; ++i) {
          __m256i u = zero;
          for (int c = 0; c < n; ++c) {
            const __m256i x = _mm256_and_si256(rows[i * n + c], w);
            __m256i bit = _mm256_shuffle_epi8(parity, x);
            // Parity bytes are 0/1, so shifts by c < 4 stay inside the byte.
            if (c > 0) bit = _mm256_slli_epi16(bit, c);
            u = _mm256_or_si256(u, bit);
          }
          for (int j = n - 1; j >= 0; --j) {
            const __m256i bitj = _mm256_set1_epi8(static_cast<char>(1 << j));
            const __m256i hb = _mm256_cmpeq_epi8(_mm256_and_si256(u, bitj), bitj);
            const __m256i occ = _mm256_xor_si256(_mm256_cmpeq_epi8(slots[j], zero), ones);
            const __m256i red = _mm256_and_si256(hb, occ);
            const __m256i ins = _mm256_andnot_si256(occ, hb);
            u = _mm256_xor_si256(u, _mm256_and_si256(slots[j], red));
            slots[j] = _mm256_or_si256(slots[j], _mm256_and_si256(u, ins));
            u = _mm256_andnot_si256(ins, u);
          }
        }
      }
      __m256i all_full = ones;
      for (int j = 0; j < n; ++j) {
        all_full = _mm256_and_si256(all_full,
                                    _mm256_xor_si256(_mm256_cmpeq_epi8(slots[j], zero), ones));
      }
      if (_mm256_movemask_epi8(all_full) == -1) break;
    }

    __m256i rank8 = zero;
    for (int j = 0; j < n; ++j) {
      const __m256i occupied = _mm256_xor_si256(_mm256_cmpeq_epi8(slots[j], zero), ones);
      rank8 = _mm256_sub_epi8(rank8, occupied);
    }
    for (int k = 0; k <= n; ++k) {
      const int hits =
          _mm256_movemask_epi8(_mm256_cmpeq_epi8(rank8, _mm256_set1_epi8(static_cast<char>(k))));
      strata[k] += std::popcount(static_cast<unsigned>(hits));
    }
  }
}

const SpanKernel kAvx2Kernel{"avx2-p2", &avx2_supports, &avx2_run};

}  // namespace

const SpanKernel& avx2_span_kernel() { return kAvx2Kernel; }

}  // namespace ncquot

#endif  // __AVX2__
