#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ncquot/kernels.hpp"
#include "ncquot/lpoly.hpp"
#include "ncquot/motives.hpp"

namespace ncquot {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

// Description of one brute-force enumeration request.
struct FqTupleSpace {
  int n = 0;
  int r = 1;
  int d = 1;
  int p = 2;
  std::uint64_t budget = kDefaultBudget;
  int shards = 0;  // 0 = derive from hardware; counts are shard-independent
  KernelChoice kernel = KernelChoice::Auto;
};

struct PointCountChecks {
  std::optional<bool> sum_strata;     // sum_k strata[k] == p^{dn^2+rn}
  std::optional<bool> divisibility;   // gl_order divides u_count
  std::optional<bool> motive_match;   // u_count/gl_order == motive evaluated at p
  std::optional<bool> strata_match;   // per-stratum Grassmannian factorization
};

struct PointCountReport {
  int n = 0, r = 1, d = 1, p = 2;
  std::vector<std::uint64_t> strata;  // size n+1, indexed by span dimension
  std::uint64_t u_count = 0;          // strata[n]
  std::uint64_t gl_order = 0;
  std::uint64_t quotient = 0;         // u_count / gl_order
  PointCountChecks checks;

  bool all_checks_passed() const;
  Json to_json() const;
};

// Exhaustively bins all p^{dn^2+rn} tuples by span dimension and fills the
// two self-contained checks. Throws BudgetExceeded when the space is larger
// than the configured budget.
PointCountReport count_strata(const FqTupleSpace& space);

// count_strata plus the motive comparison at L -> p and the per-stratum
// factorization against recursively counted lower levels.
PointCountReport count_strata_checked(const FqTupleSpace& space, MotiveCache& cache);

bool verify_point_count(int n, int r, int d, int p, MotiveCache& cache,
                        std::uint64_t budget = kDefaultBudget);

}  // namespace ncquot
