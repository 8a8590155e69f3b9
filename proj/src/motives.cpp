#include "ncquot/motives.hpp"

#include <string>

#include "ncquot/truncseries.hpp"

namespace ncquot {

long long ncquot_dim(int n, int r, int d) {
  return static_cast<long long>(d - 1) * n * n + static_cast<long long>(r) * n;
}

LPoly quantum_integer(int n) {
  if (n < 0) throw InvalidRange("quantum integer needs n >= 0");
  LPoly acc = LPoly::one();
  for (int i = 1; i <= n; ++i) acc = acc * (LPoly::l_power(i) - LPoly::one());
  return acc;
}

LPoly gl_class(int n) {
  if (n < 0) throw InvalidRange("gl_class needs n >= 0");
  LPoly acc = LPoly::one();
  for (int i = 0; i < n; ++i) acc = acc * (LPoly::l_power(n) - LPoly::l_power(i));
  return acc;
}

LPoly gaussian_binomial(int k, int n) {
  if (k < 0 || n < 0 || k > n) {
    throw InvalidRange("gaussian_binomial needs 0 <= k <= n, got k=" + std::to_string(k) +
                       " n=" + std::to_string(n));
  }
  return quantum_integer(n).div_exact(quantum_integer(k) * quantum_integer(n - k));
}

namespace {

void check_motive_entry(const LPoly& value, int n, int r, int d) {
  const long long want_top = 2 * ncquot_dim(n, r, d);
  bool ok = !value.is_zero() && value.is_integer_polynomial() &&
            value.max_exponent2() == want_top && value.leading_coeff() == 1;
  if (ok) {
    for (const auto& [e2, c] : value.terms()) {
      (void)e2;
      if (c < 0) {
        ok = false;
        break;
      }
    }
  }
  if (n == 0 && value != LPoly::one()) ok = false;
  if (!ok) {
    throw InvariantViolation("computed class for (n,r,d)=(" + std::to_string(n) + "," +
                             std::to_string(r) + "," + std::to_string(d) +
                             ") violates its structural guarantees: " + value.to_string());
  }
}

void check_args(int n, int r, int d) {
  if (n < 0 || r < 1 || d < 1) {
    throw InvalidRange("need n >= 0, r >= 1, d >= 1; got n=" + std::to_string(n) +
                       " r=" + std::to_string(r) + " d=" + std::to_string(d));
  }
}

}  // namespace

const LPoly& MotiveCache::fill_locked(int n, int r, int d) {
  // The recursion at level m only consults levels k < m, so fill ascending.
  for (int m = 0; m <= n; ++m) {
    const Key key{m, r, d};
    if (entries_.count(key)) continue;
    LPoly value;
    if (m == 0) {
      value = LPoly::one();
    } else {
      LPoly bracket = LPoly::l_power(r * m);
      for (int k = 0; k < m; ++k) {
        const LPoly& lower = entries_.at(Key{k, r, d});
        bracket -= (lower * gl_class(k) * gaussian_binomial(k, m)).shifted(-2 * d * m * k);
      }
      value = bracket.shifted(2 * d * m * m).div_exact(gl_class(m));
    }
    check_motive_entry(value, m, r, d);
    entries_.emplace(Key{m, r, d}, std::move(value));
  }
  return entries_.at(Key{n, r, d});
}

LPoly MotiveCache::get(int n, int r, int d) {
  check_args(n, r, d);
  std::lock_guard<std::mutex> lock(mu_);
  return fill_locked(n, r, d);
}

std::size_t MotiveCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return entries_.size();
}

LPoly ncquot_motive(int n, int r, int d, MotiveCache& cache) { return cache.get(n, r, d); }

LPoly rearranged_rhs(int n, int r, int d, MotiveCache& cache) {
  check_args(n, r, d);
  LPoly sum;
  for (int k = 0; k <= n; ++k) {
    sum += (cache.get(k, r, d) * gl_class(k) * gaussian_binomial(k, n)).shifted(-2 * d * n * k);
  }
  return sum;
}

bool rearranged_identity_check(int n, int r, int d, MotiveCache& cache) {
  return rearranged_rhs(n, r, d, cache) == LPoly::l_power(r * n);
}

LPoly closed_form_d1(int n, int r) {
  if (n < 0 || r < 1) throw InvalidRange("closed_form_d1 needs n >= 0, r >= 1");
  TruncSeries prod = TruncSeries::one(n);
  for (int i = 0; i < r; ++i) {
    prod = prod * TruncSeries::geometric(LPoly::l_power(i + 1), n);
  }
  return prod.coeff(n);
}

std::vector<std::pair<int, BigInt>> betti_numbers(int n, int r, int d, MotiveCache& cache) {
  std::vector<std::pair<int, BigInt>> out;
  for (const auto& [e2, c] : cache.get(n, r, d).terms()) out.emplace_back(e2 / 2, c);
  return out;
}

BigInt euler_char(int n, int r, int d, MotiveCache& cache) {
  return cache.get(n, r, d).eval_one();
}

}  // namespace ncquot
