#include "tevelev/numeric.hpp"

#include "tevelev/error.hpp"

namespace tevelev {

Int factorial(long n) {
  if (n < 0) fail(Errc::bad_input, "factorial of a negative number");
  Int result = 1;
  for (long i = 2; i <= n; ++i) result *= i;
  return result;
}

Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact at every step
  }
  return result;
}

Int int_pow(long base, long exp) {
  if (exp < 0) fail(Errc::bad_input, "negative exponent");
  Int result = 1;
  Int b = base;
  for (; exp > 0; exp >>= 1) {
    if (exp & 1) result *= b;
    if (exp > 1) b *= b;
  }
  return result;
}

Int exact_div(const Int& numerator, const Int& denominator) {
  if (denominator == 0) fail(Errc::internal_mismatch, "division by zero");
  Int quotient, remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0)
    fail(Errc::internal_mismatch,
         "expected exact division: " + numerator.str() + " / " +
             denominator.str());
  return quotient;
}

}  // namespace tevelev
