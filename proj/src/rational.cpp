#include "swr/rational.hpp"

namespace swr {

Rational make_rational(long num, long den) {
  if (den == 0) throw usage_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw usage_error("empty rational literal");
  mpq_class r;
  if (r.set_str(text, 10) != 0)
    throw usage_error("malformed rational literal: '" + text + "'");
  if (mpz_sgn(r.get_den().get_mpz_t()) == 0)
    throw usage_error("rational with zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

bool is_integer(const Rational& r) {
  return mpz_cmp_ui(r.get_den().get_mpz_t(), 1) == 0;
}

Rational rational_pow(const Rational& base, unsigned long e) {
  if (e == 0) return Rational(1);  // 0^0 = 1 by convention
  Rational out;
  mpz_pow_ui(out.get_num().get_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(out.get_den().get_mpz_t(), base.get_den().get_mpz_t(), e);
  return out;  // canonical: base was canonical, powers share no new factors
}

Rational binomial(unsigned long n, unsigned long k) {
  if (k > n) return Rational(0);
  Rational out;
  mpz_bin_uiui(out.get_num().get_mpz_t(), n, k);
  return out;
}

Rational factorial(unsigned long n) {
  Rational out;
  mpz_fac_ui(out.get_num().get_mpz_t(), n);
  return out;
}

}  // namespace swr
