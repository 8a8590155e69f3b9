#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ncquot {

// Exact integer/rational scalars. Betti numbers and point counts grow without
// a practical bound, so fixed-width arithmetic is never used for coefficients.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt int_pow(const BigInt& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

}  // namespace ncquot
