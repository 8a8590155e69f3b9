#include "ncquot/truncseries.hpp"

namespace ncquot {

TruncSeries::TruncSeries(int order) : order_(order) {
  if (order < 0) throw InvalidRange("series order must be nonnegative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncSeries TruncSeries::one(int order) {
  TruncSeries s(order);
  s.coeffs_[0] = LPoly::one();
  return s;
}

TruncSeries TruncSeries::geometric(const LPoly& ratio, int order) {
  TruncSeries s(order);
  LPoly acc = LPoly::one();
  s.coeffs_[0] = acc;
  for (int m = 1; m <= order; ++m) {
    acc = acc * ratio;
    s.coeffs_[static_cast<std::size_t>(m)] = acc;
  }
  return s;
}

bool TruncSeries::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

void TruncSeries::check_order(const TruncSeries& other) const {
  if (order_ != other.order_) {
    throw OrderMismatch("series orders differ: " + std::to_string(order_) + " vs " +
                        std::to_string(other.order_));
  }
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& rhs) {
  check_order(rhs);
  for (int i = 0; i <= order_; ++i) coeffs_[static_cast<std::size_t>(i)] += rhs.coeff(i);
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& rhs) {
  check_order(rhs);
  for (int i = 0; i <= order_; ++i) coeffs_[static_cast<std::size_t>(i)] -= rhs.coeff(i);
  return *this;
}

TruncSeries operator*(const TruncSeries& lhs, const TruncSeries& rhs) {
  lhs.check_order(rhs);
  TruncSeries out(lhs.order_);
  for (int i = 0; i <= lhs.order_; ++i) {
    if (lhs.coeff(i).is_zero()) continue;
    for (int j = 0; i + j <= lhs.order_; ++j) {
      if (rhs.coeff(j).is_zero()) continue;
      out.coeffs_[static_cast<std::size_t>(i + j)] += lhs.coeff(i) * rhs.coeff(j);
    }
  }
  return out;
}

bool operator==(const TruncSeries& lhs, const TruncSeries& rhs) {
  return lhs.order_ == rhs.order_ && lhs.coeffs_ == rhs.coeffs_;
}

TruncSeries TruncSeries::scaled_t(int halfsteps) const {
  TruncSeries out(order_);
  for (int n = 0; n <= order_; ++n) {
    out.coeffs_[static_cast<std::size_t>(n)] = coeff(n).shifted(n * halfsteps);
  }
  return out;
}

TruncSeries TruncSeries::shifted_t(int k) const {
  if (k < 0) throw InvalidRange("t-shift must be nonnegative");
  TruncSeries out(order_);
  for (int n = 0; n + k <= order_; ++n) {
    out.coeffs_[static_cast<std::size_t>(n + k)] = coeff(n);
  }
  return out;
}

TruncSeries TruncSeries::times(const LPoly& scalar) const {
  TruncSeries out(order_);
  for (int n = 0; n <= order_; ++n) {
    out.coeffs_[static_cast<std::size_t>(n)] = coeff(n) * scalar;
  }
  return out;
}

Json TruncSeries::to_json() const {
  Json j;
  j["order"] = order_;
  Json arr = Json::array();
  for (const auto& c : coeffs_) arr.push_back(c.to_json());
  j["coeffs"] = arr;
  return j;
}

}  // namespace ncquot
