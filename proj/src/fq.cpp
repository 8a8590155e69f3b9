#include "ncquot/fq.hpp"

#include <string>

#include "span_core.hpp"

namespace ncquot {

PrimeField::PrimeField(int p) : p_(p) {
  if (p != 2 && p != 3 && p != 5 && p != 7) {
    throw InvalidRange("unsupported field characteristic " + std::to_string(p) +
                       " (primes up to 7 are supported)");
  }
  for (int a = 0; a < p; ++a) {
    neg_[a] = static_cast<std::uint8_t>((p - a) % p);
    for (int b = 0; b < p; ++b) {
      add_[a][b] = static_cast<std::uint8_t>((a + b) % p);
      sub_[a][b] = static_cast<std::uint8_t>((a - b + p) % p);
      mul_[a][b] = static_cast<std::uint8_t>((a * b) % p);
    }
  }
  inv_[0] = 0;
  for (int a = 1; a < p; ++a) {
    for (int b = 1; b < p; ++b) {
      if ((a * b) % p == 1) inv_[a] = static_cast<std::uint8_t>(b);
    }
  }
}

std::uint8_t PrimeField::inv(std::uint8_t a) const {
  if (a == 0) throw InvalidRange("inverse of zero in a prime field");
  return inv_[a];
}

std::uint64_t gl_order_fq(int n, int p) {
  if (n < 0) throw InvalidRange("gl_order_fq needs n >= 0");
  const BigInt pn = int_pow(BigInt(p), static_cast<unsigned>(n));
  BigInt order = 1;
  for (int i = 0; i < n; ++i) order *= pn - int_pow(BigInt(p), static_cast<unsigned>(i));
  if (order > BigInt(UINT64_MAX)) throw InvalidRange("group order exceeds 64 bits");
  return order.convert_to<std::uint64_t>();
}

int span_dim(const PrimeField& field, int n, int d, int r, const std::uint8_t* mats,
             const std::uint8_t* vecs) {
  if (n < 0 || n > detail::kMaxN || d < 0 || r < 0) {
    throw InvalidRange("span_dim supports 0 <= n <= 8 and nonnegative d, r");
  }
  if (n == 0) return 0;
  detail::SeedState seed;
  detail::build_seed(field, n, r, vecs, seed);
  return detail::span_from_seed(field, n, d, seed, mats);
}

bool invert_matrix(const PrimeField& field, int n, const std::uint8_t* mat, std::uint8_t* out) {
  if (n < 0 || n > detail::kMaxN) throw InvalidRange("invert_matrix supports 0 <= n <= 8");
  std::uint8_t work[detail::kMaxN][2 * detail::kMaxN] = {};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) work[i][j] = mat[i * n + j];
    work[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row) {
      if (work[row][col] != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) return false;
    if (pivot != col) {
      for (int j = 0; j < 2 * n; ++j) std::swap(work[pivot][j], work[col][j]);
    }
    const std::uint8_t scale = field.inv(work[col][col]);
    for (int j = 0; j < 2 * n; ++j) work[col][j] = field.mul(work[col][j], scale);
    for (int row = 0; row < n; ++row) {
      if (row == col || work[row][col] == 0) continue;
      const std::uint8_t factor = work[row][col];
      for (int j = 0; j < 2 * n; ++j) {
        work[row][j] = field.sub(work[row][j], field.mul(factor, work[col][j]));
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out[i * n + j] = work[i][n + j];
  }
  return true;
}

}  // namespace ncquot
