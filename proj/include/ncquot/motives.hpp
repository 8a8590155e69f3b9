#pragma once

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "ncquot/lpoly.hpp"

namespace ncquot {

// dim ncQuot^n_{r,d} = (d-1)n^2 + rn.
long long ncquot_dim(int n, int r, int d);

// [n]_L = prod_{1<=i<=n} (L^i - 1); the empty product is 1.
LPoly quantum_integer(int n);

// [GL_n] = prod_{0<=i<n} (L^n - L^i); monic of degree n^2.
LPoly gl_class(int n);

// Motive of the Grassmannian of k-planes in n-space,
// [n]_L / ([k]_L [n-k]_L); always a polynomial with nonnegative coefficients.
LPoly gaussian_binomial(int k, int n);

// Memo table (n,r,d) -> motive of the noncommutative Quot scheme. Entries are
// filled in n-ascending order; every insertion is checked eagerly against the
// structural guarantees (integer polynomial, monic, degree (d-1)n^2+rn,
// nonnegative coefficients) and throws InvariantViolation on failure.
//
// All fills happen under an internal mutex; completed entries never change.
class MotiveCache {
 public:
  LPoly get(int n, int r, int d);
  std::size_t size() const;

 private:
  using Key = std::tuple<int, int, int>;
  const LPoly& fill_locked(int n, int r, int d);

  mutable std::mutex mu_;
  std::map<Key, LPoly> entries_;
};

// The motive of ncQuot^n_{r,d}: the n=0 class is 1, and
//   [ncQuot^n] = (L^{dn^2} / [GL_n]) (L^{rn} - sum_{k<n} [ncQuot^k][GL_k][G(k,n)] L^{-dnk}).
LPoly ncquot_motive(int n, int r, int d, MotiveCache& cache);

// sum_{k=0}^{n} [ncQuot^k][GL_k][G(k,n)] L^{-dnk}; equals L^{rn} and, term for
// term as a computed object, does not depend on d.
LPoly rearranged_rhs(int n, int r, int d, MotiveCache& cache);
bool rearranged_identity_check(int n, int r, int d, MotiveCache& cache);

// Coefficient of t^n in prod_{0<=i<r} 1/(1 - L^{i+1} t), the d=1 closed form.
LPoly closed_form_d1(int n, int r);

// Coefficient list of the motive, ascending by degree in L. For these cellular
// varieties the entries are the Borel-Moore Betti numbers.
std::vector<std::pair<int, BigInt>> betti_numbers(int n, int r, int d, MotiveCache& cache);

// Specialization L -> 1 of the motive.
BigInt euler_char(int n, int r, int d, MotiveCache& cache);

}  // namespace ncquot
