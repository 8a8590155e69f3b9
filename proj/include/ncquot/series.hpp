#pragma once

#include <vector>

#include "ncquot/motives.hpp"
#include "ncquot/truncseries.hpp"

namespace ncquot {

// Z_{r,d}(t): coefficient of t^n is L^{-N/2} [ncQuot^n_{r,d}] L^{n(r-1)/2}
// with N = (d-1)n^2 + rn.
TruncSeries z_series(int r, int d, int order, MotiveCache& cache);

// Z_{1,d}(t) - 1 - L^{d/2} t prod_{0<=i<d} Z_{1,d}(L^i t); identically zero.
TruncSeries functional_residual_z1(int d, int order, MotiveCache& cache);

// Z_{r,d}(t) - prod_{0<=i<r} Z_{1,d}(L^i t); identically zero.
TruncSeries factorization_residual(int r, int d, int order, MotiveCache& cache);

// Solves z = 1 + L^{d/2} t prod_{0<=i<d} z(L^i t) for its unique solution with
// constant term 1, coefficient by coefficient. Built from series arithmetic
// alone -- no motive recursion -- so it reconstructs Z_{1,d} independently.
TruncSeries solve_z1_functional(int d, int order);

// The rank-r loop-quiver counting series at q = L: coefficient of t^n is
// L^{(d-1)n(n-1)/2 + (r-1)n - N} [ncQuot^n_{r,d}].
TruncSeries reineke_zeta_bar(int r, int d, int order, MotiveCache& cache);

// Z_{r,d}(t) - zeta_bar evaluated at t -> L^{d/2} t; identically zero.
TruncSeries reineke_relation_residual(int r, int d, int order, MotiveCache& cache);

// Coefficients 0..n_max of w^r where w = 1 + t w^d, by plain integer
// convolution. Independent of the polynomial engine by construction.
std::vector<BigInt> fuss_catalan_series(int r, int d, int n_max);

// True iff the L -> 1 specialization of every motive matches the integer
// recursion above for all n <= n_max.
bool fuss_catalan_check(int r, int d, int n_max, MotiveCache& cache);

}  // namespace ncquot
