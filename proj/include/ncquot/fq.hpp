#pragma once

#include <array>
#include <cstdint>

#include "ncquot/bigint.hpp"
#include "ncquot/errors.hpp"

namespace ncquot {

// Arithmetic in the prime field F_p, p in {2,3,5,7}, via dense lookup tables.
class PrimeField {
 public:
  static constexpr int kMaxP = 7;

  explicit PrimeField(int p);

  int p() const { return p_; }
  std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[a][b]; }
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return sub_[a][b]; }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[a][b]; }
  std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
  std::uint8_t inv(std::uint8_t a) const;  // requires a != 0

 private:
  int p_;
  std::array<std::array<std::uint8_t, kMaxP>, kMaxP> add_{}, sub_{}, mul_{};
  std::array<std::uint8_t, kMaxP> neg_{}, inv_{};
};

// |GL_n(F_p)| = prod_{0<=i<n} (p^n - p^i).
std::uint64_t gl_order_fq(int n, int p);

// Dimension of the smallest subspace of F_p^n containing v_1..v_r and closed
// under every T_i, computed by iterated closure with early exit at full rank.
// mats: d row-major n x n matrices concatenated; vecs: r length-n vectors.
int span_dim(const PrimeField& field, int n, int d, int r, const std::uint8_t* mats,
             const std::uint8_t* vecs);

// Gauss-Jordan inverse of a row-major n x n matrix; false when singular.
bool invert_matrix(const PrimeField& field, int n, const std::uint8_t* mat, std::uint8_t* out);

}  // namespace ncquot
