#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace tevelev {

// All counts and coefficients are exact; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;

Int factorial(long n);

// Vanishes outside 0 <= k <= n.
Int binomial(long n, long k);

Int int_pow(long base, long exp);

// Quotient of an exact division; throws internal_mismatch on a remainder.
Int exact_div(const Int& numerator, const Int& denominator);

inline std::string to_decimal(const Int& value) { return value.str(); }

}  // namespace tevelev
