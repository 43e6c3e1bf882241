#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace swr {

/// Thrown when a caller violates a documented precondition (bad ring mix,
/// malformed input, horizon too short, ...).  CLI maps this to exit code 2.
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Arbitrary-precision rational, always stored in canonical form
/// (gcd(|num|, den) = 1, den >= 1).  GMP maintains the invariant for us.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// Parses "p/q" or "p" (optional sign, arbitrary precision).
Rational parse_rational(const std::string& text);

/// "p/q", or just "p" when the denominator is 1.
std::string rational_str(const Rational& r);

bool is_integer(const Rational& r);

/// base^e with the convention 0^0 = 1.
Rational rational_pow(const Rational& base, unsigned long e);

Rational binomial(unsigned long n, unsigned long k);
Rational factorial(unsigned long n);

/// acc += x * y with a fast path for integer operands (den = 1 everywhere).
/// The polynomial multiplication kernels live on this.
inline void rational_addmul(Rational& acc, const Rational& x, const Rational& y) {
  if (mpz_cmp_ui(x.get_den().get_mpz_t(), 1) == 0 &&
      mpz_cmp_ui(y.get_den().get_mpz_t(), 1) == 0 &&
      mpz_cmp_ui(acc.get_den().get_mpz_t(), 1) == 0) {
    mpz_addmul(acc.get_num().get_mpz_t(), x.get_num().get_mpz_t(),
               y.get_num().get_mpz_t());
  } else {
    acc += x * y;
  }
}

inline int sign(const Rational& r) { return mpq_sgn(r.get_mpq_t()); }

}  // namespace swr
