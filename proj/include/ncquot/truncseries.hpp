#pragma once

#include <vector>

#include "ncquot/lpoly.hpp"

namespace ncquot {

// Power series in t truncated at a fixed order T, with LPoly coefficients.
// Arithmetic never consults coefficients beyond T; binary operations require
// equal orders and throw OrderMismatch otherwise.
class TruncSeries {
 public:
  explicit TruncSeries(int order);

  static TruncSeries one(int order);
  // sum_m ratio^m t^m, the expansion of 1/(1 - ratio*t).
  static TruncSeries geometric(const LPoly& ratio, int order);

  int order() const { return order_; }
  const LPoly& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  void set_coeff(int i, LPoly value) { coeffs_.at(static_cast<std::size_t>(i)) = std::move(value); }
  bool is_zero() const;

  TruncSeries& operator+=(const TruncSeries& rhs);
  TruncSeries& operator-=(const TruncSeries& rhs);
  friend TruncSeries operator+(TruncSeries lhs, const TruncSeries& rhs) { lhs += rhs; return lhs; }
  friend TruncSeries operator-(TruncSeries lhs, const TruncSeries& rhs) { lhs -= rhs; return lhs; }
  // Cauchy product truncated at the common order.
  friend TruncSeries operator*(const TruncSeries& lhs, const TruncSeries& rhs);
  friend bool operator==(const TruncSeries& lhs, const TruncSeries& rhs);
  friend bool operator!=(const TruncSeries& lhs, const TruncSeries& rhs) { return !(lhs == rhs); }

  // Substitution t -> L^{halfsteps/2} * t: coefficient n picks up L^{n*halfsteps/2}.
  TruncSeries scaled_t(int halfsteps) const;
  // Multiplication by t^k; top coefficients fall off the truncation.
  TruncSeries shifted_t(int k) const;
  // Coefficientwise multiplication by a fixed polynomial.
  TruncSeries times(const LPoly& scalar) const;

  Json to_json() const;

 private:
  void check_order(const TruncSeries& other) const;

  int order_;
  std::vector<LPoly> coeffs_;  // indices 0..order_
};

}  // namespace ncquot
