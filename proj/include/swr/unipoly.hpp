#pragma once

#include <optional>
#include <string>
#include <vector>

#include "swr/scalar.hpp"

namespace swr {

/// Dense univariate polynomial over Q, used by the root-location machinery.
/// Coefficient i multiplies x^i; the representation never stores a zero
/// leading coefficient.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly constant(Rational c);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 if 0
  const Rational& lead() const;
  const Rational& coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const;
  UniPoly derivative() const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  UniPoly scaled(const Rational& k) const;
  UniPoly monic() const;

  /// Quotient and remainder over Q; divisor must be nonzero.
  static std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);

  /// Monic gcd (constant 1 for coprime inputs).
  static UniPoly gcd(const UniPoly& a, const UniPoly& b);

  /// p / gcd(p, p'), same leading sign as p.
  UniPoly squarefree_part() const;

  /// Yun decomposition: returns f_1, f_2, ... with p ~ prod f_i^i (up to a
  /// constant); the f_i are squarefree and pairwise coprime.
  std::vector<UniPoly> squarefree_decomposition() const;

  /// Strict bound B with every complex root inside |z| < B.
  Rational cauchy_root_bound() const;

  /// Extracts a univariate polynomial from a Scalar whose ring involves at
  /// most the single indeterminate v.
  static UniPoly from_scalar(const Scalar& s, Var v);

  std::string str() const;

 private:
  std::vector<Rational> c_;
  void trim();
};

}  // namespace swr
