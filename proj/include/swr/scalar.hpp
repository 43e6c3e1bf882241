#pragma once

#include <map>
#include <string>
#include <variant>

#include "swr/multipoly.hpp"
#include "swr/rational.hpp"

namespace swr {

/// Element of the working ring: an exact rational or a sparse multivariate
/// polynomial.  Rationals combine freely with polynomials (they embed as
/// constants); combining polynomials from different rings is a usage_error.
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(Rational r) : value_(std::move(r)) {}
  Scalar(MultiPoly p) : value_(std::move(p)) {}
  Scalar(int n) : value_(Rational(n)) {}
  Scalar(long n) : value_(Rational(n)) {}

  static Scalar variable(Ring ring, Var v) {
    return Scalar(MultiPoly::variable(ring, v));
  }

  bool is_rational() const {
    return std::holds_alternative<Rational>(value_);
  }
  bool is_poly() const { return !is_rational(); }
  const Rational& rational() const;
  const MultiPoly& poly() const;

  /// Ring of a polynomial value; the empty ring for rationals.
  Ring ring() const;

  bool is_zero() const;
  bool is_one() const;

  /// Rational value of a rational or constant-polynomial scalar;
  /// usage_error for a non-constant polynomial.
  Rational as_rational() const;

  /// True when every stored coefficient is >= 0 (rational: the value itself).
  bool nonnegative_coefficients() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar pow(unsigned e) const;

  /// Exact division (usage_error when not exactly divisible).
  static Scalar divide_exact(const Scalar& a, const Scalar& b);

  /// Substitutes rational values for indeterminates; collapses to a Rational
  /// when every ring variable is bound.  Binding a variable the ring does
  /// not carry is a usage_error.
  Scalar bind(const std::map<Var, Rational>& bindings) const;

  /// Like bind, but silently ignores bindings for variables the ring does
  /// not carry (handy when a value degenerated to a rational).
  Scalar bind_present(const std::map<Var, Rational>& bindings) const;

  Scalar substitute(Var v, const MultiPoly& replacement) const;
  Scalar derivative(Var v) const;
  Scalar embed(Ring bigger) const;

  std::string str() const;

 private:
  std::variant<Rational, MultiPoly> value_;
};

}  // namespace swr
