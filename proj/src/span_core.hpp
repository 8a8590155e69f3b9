#pragma once

// Shared scalar span-dimension machinery: the reference path used by the
// public span_dim and by the scalar enumeration kernel.

#include <cstdint>
#include <cstring>

#include "ncquot/fq.hpp"

namespace ncquot::detail {

inline constexpr int kMaxN = 8;

// Row-echelon accumulator. An occupied slot j holds a vector whose highest
// nonzero coordinate is j, normalized to 1 there. Slots are write-once;
// reduction only rewrites the candidate vector.
struct EchelonState {
  std::uint8_t slot[kMaxN][kMaxN];
  std::uint8_t occ[kMaxN];
  int rank;

  void reset() {
    std::memset(slot, 0, sizeof slot);
    std::memset(occ, 0, sizeof occ);
    rank = 0;
  }

  // Reduces w (length n) in place; stores the normalized vector and returns
  // its slot index when independent, -1 when w lies in the current span.
  int insert(const PrimeField& field, int n, std::uint8_t* w) {
    for (int j = n - 1; j >= 0; --j) {
      const std::uint8_t a = w[j];
      if (a == 0) continue;
      if (occ[j]) {
        for (int c = 0; c <= j; ++c) w[c] = field.sub(w[c], field.mul(a, slot[j][c]));
      } else {
        const std::uint8_t ia = field.inv(a);
        for (int c = 0; c <= j; ++c) slot[j][c] = field.mul(w[c], ia);
        occ[j] = 1;
        ++rank;
        return j;
      }
    }
    return -1;
  }
};

// Echelon state seeded with the framing vectors, plus the queue of basis
// vectors still awaiting expansion by the matrices.
struct SeedState {
  EchelonState es;
  std::uint8_t queue[kMaxN][kMaxN];
  int pending;
};

inline void build_seed(const PrimeField& field, int n, int r, const std::uint8_t* vecs,
                       SeedState& seed) {
  seed.es.reset();
  seed.pending = 0;
  std::uint8_t w[kMaxN];
  for (int j = 0; j < r && seed.es.rank < n; ++j) {
    std::memcpy(w, vecs + static_cast<std::size_t>(j) * n, static_cast<std::size_t>(n));
    const int s = seed.es.insert(field, n, w);
    if (s >= 0) {
      std::memcpy(seed.queue[seed.pending++], seed.es.slot[s], kMaxN);
    }
  }
}

// Closure of the seed span under the d matrices of one tuple. Every basis
// vector is expanded by every matrix at most once.
inline int span_from_seed(const PrimeField& field, int n, int d, const SeedState& seed,
                          const std::uint8_t* mats) {
  if (seed.es.rank == n || seed.es.rank == 0) return seed.es.rank;

  EchelonState es = seed.es;
  std::uint8_t queue[kMaxN][kMaxN];
  int pending = seed.pending;
  std::memcpy(queue, seed.queue, static_cast<std::size_t>(pending) * kMaxN);

  std::uint8_t image[kMaxN];
  const int p = field.p();
  for (int qi = 0; qi < pending; ++qi) {
    const std::uint8_t* w = queue[qi];
    for (int i = 0; i < d; ++i) {
      const std::uint8_t* mat = mats + static_cast<std::size_t>(i) * n * n;
      for (int c = 0; c < n; ++c) {
        int acc = 0;
        const std::uint8_t* row = mat + static_cast<std::size_t>(c) * n;
        for (int j = 0; j < n; ++j) acc += row[j] * w[j];
        image[c] = static_cast<std::uint8_t>(acc % p);
      }
      const int s = es.insert(field, n, image);
      if (s >= 0) {
        if (es.rank == n) return n;
        std::memcpy(queue[pending++], es.slot[s], kMaxN);
      }
    }
  }
  return es.rank;
}

}  // namespace ncquot::detail
