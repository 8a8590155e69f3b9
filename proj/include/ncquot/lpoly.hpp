#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "json.hpp"

#include "ncquot/bigint.hpp"
#include "ncquot/errors.hpp"

namespace ncquot {

using Json = nlohmann::ordered_json;

// Exact Laurent polynomial in a formal square root of the Lefschetz class,
// i.e. an element of Z[L^{1/2}, L^{-1/2}].
//
// Exponents are stored doubled: key 2k encodes L^k, key 1 encodes L^{1/2}.
// Canonical form holds no zero coefficients, so equality is structural.
class LPoly {
 public:
  using TermMap = std::map<int, BigInt>;

  LPoly() = default;  // the zero polynomial

  static LPoly zero() { return LPoly{}; }
  static LPoly one() { return term(0, 1); }
  static LPoly lefschetz() { return term(2, 1); }
  // L^k for integer k (k may be negative).
  static LPoly l_power(int k) { return term(2 * k, 1); }
  // L^{halfsteps/2}.
  static LPoly half_power(int halfsteps) { return term(halfsteps, 1); }
  static LPoly constant(BigInt c);
  static LPoly term(int exponent2, BigInt coeff);
  // Convenience for literals: {{exponent2, coeff}, ...}.
  static LPoly from_terms(std::initializer_list<std::pair<int, long long>> terms);

  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // Lowest/highest doubled exponent; callers must check is_zero() first.
  int min_exponent2() const;
  int max_exponent2() const;
  BigInt coeff(int exponent2) const;
  BigInt leading_coeff() const;  // coefficient of max_exponent2

  // True iff all exponents are even and nonnegative (an honest polynomial in L).
  bool is_integer_polynomial() const;

  LPoly& operator+=(const LPoly& rhs);
  LPoly& operator-=(const LPoly& rhs);
  LPoly operator-() const;
  friend LPoly operator+(LPoly lhs, const LPoly& rhs) { lhs += rhs; return lhs; }
  friend LPoly operator-(LPoly lhs, const LPoly& rhs) { lhs -= rhs; return lhs; }
  friend LPoly operator*(const LPoly& lhs, const LPoly& rhs);
  friend bool operator==(const LPoly& lhs, const LPoly& rhs) { return lhs.terms_ == rhs.terms_; }
  friend bool operator!=(const LPoly& lhs, const LPoly& rhs) { return !(lhs == rhs); }

  // Multiply by L^{halfsteps/2}; exact for any sign of halfsteps.
  LPoly shifted(int halfsteps) const;
  // Multiply every term by coeff * L^{exponent2/2}.
  LPoly times_term(int exponent2, const BigInt& coeff) const;

  // Exact division. The divisor is normalized so its lowest exponent is 0 and
  // must carry a +/-1 coefficient there; a nonzero remainder throws.
  LPoly div_exact(const LPoly& den) const;

  // Specialization L -> q for a positive integer q. Requires integer exponents
  // (throws HalfIntegerExponent otherwise); negative exponents yield rationals.
  BigRational eval_at(long long q) const;
  // Specialization L -> 1: the coefficient sum. Half powers are fine (1^{1/2}=1).
  BigInt eval_one() const;

  enum class Style { Plain, Latex };
  // Plain: ascending powers, "L^(k/2)" for half exponents, e.g. "L^3+L^4".
  std::string to_string(Style style = Style::Plain) const;

  // JSON array of [exponent2, coefficient-as-decimal-string], ascending.
  Json to_json() const;
  static LPoly from_json(const Json& j);

 private:
  void prune(int exponent2);

  TermMap terms_;
};

}  // namespace ncquot
