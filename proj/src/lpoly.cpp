#include "ncquot/lpoly.hpp"

#include <sstream>

namespace ncquot {

LPoly LPoly::constant(BigInt c) {
  LPoly p;
  if (c != 0) p.terms_.emplace(0, std::move(c));
  return p;
}

LPoly LPoly::term(int exponent2, BigInt coeff) {
  LPoly p;
  if (coeff != 0) p.terms_.emplace(exponent2, std::move(coeff));
  return p;
}

LPoly LPoly::from_terms(std::initializer_list<std::pair<int, long long>> terms) {
  LPoly p;
  for (const auto& [e2, c] : terms) {
    if (c == 0) continue;
    p.terms_[e2] += c;
    p.prune(e2);
  }
  return p;
}

int LPoly::min_exponent2() const {
  if (is_zero()) throw InvalidRange("min_exponent2 of the zero polynomial");
  return terms_.begin()->first;
}

int LPoly::max_exponent2() const {
  if (is_zero()) throw InvalidRange("max_exponent2 of the zero polynomial");
  return terms_.rbegin()->first;
}

BigInt LPoly::coeff(int exponent2) const {
  auto it = terms_.find(exponent2);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt LPoly::leading_coeff() const {
  if (is_zero()) throw InvalidRange("leading_coeff of the zero polynomial");
  return terms_.rbegin()->second;
}

bool LPoly::is_integer_polynomial() const {
  for (const auto& [e2, c] : terms_) {
    (void)c;
    if (e2 < 0 || e2 % 2 != 0) return false;
  }
  return true;
}

void LPoly::prune(int exponent2) {
  auto it = terms_.find(exponent2);
  if (it != terms_.end() && it->second == 0) terms_.erase(it);
}

LPoly& LPoly::operator+=(const LPoly& rhs) {
  for (const auto& [e2, c] : rhs.terms_) {
    terms_[e2] += c;
    prune(e2);
  }
  return *this;
}

LPoly& LPoly::operator-=(const LPoly& rhs) {
  for (const auto& [e2, c] : rhs.terms_) {
    terms_[e2] -= c;
    prune(e2);
  }
  return *this;
}

LPoly LPoly::operator-() const {
  LPoly out;
  for (const auto& [e2, c] : terms_) out.terms_.emplace(e2, -c);
  return out;
}

LPoly operator*(const LPoly& lhs, const LPoly& rhs) {
  LPoly out;
  if (lhs.is_zero() || rhs.is_zero()) return out;
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      const int e = ea + eb;
      out.terms_[e] += ca * cb;
      out.prune(e);
    }
  }
  return out;
}

LPoly LPoly::shifted(int halfsteps) const {
  LPoly out;
  for (const auto& [e2, c] : terms_) out.terms_.emplace(e2 + halfsteps, c);
  return out;
}

LPoly LPoly::times_term(int exponent2, const BigInt& coeff) const {
  LPoly out;
  if (coeff == 0) return out;
  for (const auto& [e2, c] : terms_) out.terms_.emplace(e2 + exponent2, c * coeff);
  return out;
}

LPoly LPoly::div_exact(const LPoly& den) const {
  if (den.is_zero()) throw NonMonicDivisor("division by the zero polynomial");
  if (is_zero()) return {};

  const int den_low = den.min_exponent2();
  const LPoly d0 = den.shifted(-den_low);
  const BigInt& unit = d0.terms_.begin()->second;  // coefficient at exponent 0
  if (unit != 1 && unit != -1) {
    throw NonMonicDivisor("divisor's lowest coefficient is " + unit.str() + ", expected +/-1");
  }

  LPoly rem = shifted(-den_low);
  // For an exact quotient the produced exponents never exceed this bound;
  // crossing it proves a nonzero remainder and stops the ascent.
  const int q_max = rem.max_exponent2() - d0.max_exponent2();
  LPoly q;
  while (!rem.is_zero()) {
    const auto lowest = rem.terms_.begin();
    const int e = lowest->first;
    if (e > q_max) {
      throw NonExactDivision("nonzero remainder " + rem.to_string() + " in exact division");
    }
    const BigInt c = lowest->second * unit;  // unit is +/-1, so this is division
    q.terms_.emplace(e, c);
    rem -= d0.times_term(e, c);
  }
  return q;
}

BigRational LPoly::eval_at(long long q) const {
  if (q < 1) throw InvalidRange("evaluation point must be a positive integer");
  const BigInt base(q);
  BigRational acc(0);
  for (const auto& [e2, c] : terms_) {
    if (e2 % 2 != 0) {
      throw HalfIntegerExponent("cannot evaluate half power L^(" + std::to_string(e2) +
                                "/2) at an integer");
    }
    const int k = e2 / 2;
    if (k >= 0) {
      acc += BigRational(c * int_pow(base, static_cast<unsigned>(k)));
    } else {
      acc += BigRational(c, int_pow(base, static_cast<unsigned>(-k)));
    }
  }
  return acc;
}

BigInt LPoly::eval_one() const {
  BigInt acc = 0;
  for (const auto& [e2, c] : terms_) {
    (void)e2;
    acc += c;
  }
  return acc;
}

namespace {

std::string plain_power(int e2) {
  if (e2 == 0) return "";
  if (e2 == 2) return "L";
  if (e2 % 2 == 0) return "L^" + std::to_string(e2 / 2);
  return "L^(" + std::to_string(e2) + "/2)";
}

std::string latex_power(int e2) {
  if (e2 == 0) return "";
  if (e2 == 2) return "\\mathbb{L}";
  if (e2 % 2 == 0) return "\\mathbb{L}^{" + std::to_string(e2 / 2) + "}";
  return "\\mathbb{L}^{" + std::to_string(e2) + "/2}";
}

}  // namespace

std::string LPoly::to_string(Style style) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e2, c] : terms_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out << '-';
      first = false;
    } else {
      out << (negative ? '-' : '+');
    }
    const BigInt mag = negative ? BigInt(-c) : c;
    const std::string pw = style == Style::Plain ? plain_power(e2) : latex_power(e2);
    if (pw.empty()) {
      out << mag.str();
    } else {
      if (mag != 1) out << mag.str();
      out << pw;
    }
  }
  return out.str();
}

Json LPoly::to_json() const {
  Json arr = Json::array();
  for (const auto& [e2, c] : terms_) arr.push_back(Json::array({e2, c.str()}));
  return arr;
}

LPoly LPoly::from_json(const Json& j) {
  if (!j.is_array()) throw InvalidRange("polynomial JSON must be an array of pairs");
  LPoly p;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
        !entry[1].is_string()) {
      throw InvalidRange("polynomial JSON entries must be [exponent2, \"coeff\"]");
    }
    const int e2 = entry[0].get<int>();
    const BigInt c(entry[1].get<std::string>());
    if (c == 0) continue;
    p.terms_[e2] += c;
    p.prune(e2);
  }
  return p;
}

}  // namespace ncquot
