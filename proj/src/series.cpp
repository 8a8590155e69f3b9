#include "ncquot/series.hpp"

namespace ncquot {

namespace {

void check_rd(int r, int d) {
  if (r < 1 || d < 1) throw InvalidRange("need r >= 1 and d >= 1");
}

int vir_halfsteps(int n, int r, int d) {
  // L^{-N/2} together with the (L^{(r-1)/2})^n prefactor.
  return static_cast<int>(static_cast<long long>(n) * (r - 1) - ncquot_dim(n, r, d));
}

}  // namespace

TruncSeries z_series(int r, int d, int order, MotiveCache& cache) {
  check_rd(r, d);
  TruncSeries z(order);
  for (int n = 0; n <= order; ++n) {
    z.set_coeff(n, cache.get(n, r, d).shifted(vir_halfsteps(n, r, d)));
  }
  return z;
}

TruncSeries functional_residual_z1(int d, int order, MotiveCache& cache) {
  const TruncSeries z = z_series(1, d, order, cache);
  TruncSeries prod = TruncSeries::one(order);
  for (int i = 0; i < d; ++i) prod = prod * z.scaled_t(2 * i);
  return z - TruncSeries::one(order) - prod.shifted_t(1).times(LPoly::half_power(d));
}

TruncSeries factorization_residual(int r, int d, int order, MotiveCache& cache) {
  const TruncSeries z1 = z_series(1, d, order, cache);
  TruncSeries prod = TruncSeries::one(order);
  for (int i = 0; i < r; ++i) prod = prod * z1.scaled_t(2 * i);
  return z_series(r, d, order, cache) - prod;
}

TruncSeries solve_z1_functional(int d, int order) {
  if (d < 1) throw InvalidRange("need d >= 1");
  TruncSeries z = TruncSeries::one(order);
  for (int n = 1; n <= order; ++n) {
    // The t^{n-1} coefficient of prod_i z(L^i t) only involves z_0..z_{n-1},
    // all of which are already in place.
    TruncSeries prod = TruncSeries::one(order);
    for (int i = 0; i < d; ++i) prod = prod * z.scaled_t(2 * i);
    z.set_coeff(n, prod.coeff(n - 1).shifted(d));
  }
  return z;
}

TruncSeries reineke_zeta_bar(int r, int d, int order, MotiveCache& cache) {
  check_rd(r, d);
  TruncSeries zbar(order);
  for (int n = 0; n <= order; ++n) {
    const long long choose2 = static_cast<long long>(n) * (n - 1) / 2;
    const long long power =
        (d - 1) * choose2 + static_cast<long long>(r - 1) * n - ncquot_dim(n, r, d);
    zbar.set_coeff(n, cache.get(n, r, d).shifted(static_cast<int>(2 * power)));
  }
  return zbar;
}

TruncSeries reineke_relation_residual(int r, int d, int order, MotiveCache& cache) {
  return z_series(r, d, order, cache) - reineke_zeta_bar(r, d, order, cache).scaled_t(d);
}

std::vector<BigInt> fuss_catalan_series(int r, int d, int n_max) {
  check_rd(r, d);
  if (n_max < 0) throw InvalidRange("need n_max >= 0");
  const std::size_t len = static_cast<std::size_t>(n_max) + 1;

  const auto truncated_power = [len](const std::vector<BigInt>& base, int exp) {
    std::vector<BigInt> acc(len, BigInt(0));
    acc[0] = 1;
    for (int e = 0; e < exp; ++e) {
      std::vector<BigInt> next(len, BigInt(0));
      for (std::size_t i = 0; i < len; ++i) {
        if (acc[i] == 0) continue;
        for (std::size_t j = 0; i + j < len; ++j) next[i + j] += acc[i] * base[j];
      }
      acc = std::move(next);
    }
    return acc;
  };

  // w = 1 + t w^d; coefficient n depends only on coefficients below n.
  std::vector<BigInt> w(len, BigInt(0));
  w[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    const auto wd = truncated_power(w, d);
    w[static_cast<std::size_t>(n)] = wd[static_cast<std::size_t>(n - 1)];
  }
  return truncated_power(w, r);
}

bool fuss_catalan_check(int r, int d, int n_max, MotiveCache& cache) {
  const auto expected = fuss_catalan_series(r, d, n_max);
  for (int n = 0; n <= n_max; ++n) {
    if (euler_char(n, r, d, cache) != expected[static_cast<std::size_t>(n)]) return false;
  }
  return true;
}

}  // namespace ncquot
