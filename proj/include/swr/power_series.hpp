#pragma once

#include <vector>

#include "swr/scalar.hpp"

namespace swr {

/// Truncated formal power series in t: coefficients of t^0..t^order are
/// exact, nothing is stored or reported beyond the truncation order.
class PowerSeries {
 public:
  explicit PowerSeries(int order) : coeffs_(order + 1) {}
  static PowerSeries from_coeffs(std::vector<Scalar> coeffs);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Scalar& coeff(int n) const { return coeffs_.at(n); }
  void set_coeff(int n, Scalar value) { coeffs_.at(n) = std::move(value); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  PowerSeries truncated(int new_order) const;
  PowerSeries scaled(const Scalar& c) const;

  bool operator==(const PowerSeries& o) const { return coeffs_ == o.coeffs_; }

 private:
  std::vector<Scalar> coeffs_;
};

/// t itself, at the given truncation order.
PowerSeries ps_identity(int order);
PowerSeries ps_constant(int order, Scalar c);

/// Sum / product; the result order is min(order(f), order(g)).
PowerSeries ps_add(const PowerSeries& f, const PowerSeries& g);
PowerSeries ps_sub(const PowerSeries& f, const PowerSeries& g);
PowerSeries ps_mul(const PowerSeries& f, const PowerSeries& g);

/// exp(f); requires constant term 0.
PowerSeries ps_exp(const PowerSeries& f);
/// log(g); requires constant term 1.
PowerSeries ps_log(const PowerSeries& g);
/// g^alpha = exp(alpha*log(g)); requires constant term 1.
PowerSeries ps_pow(const PowerSeries& g, const Rational& alpha);

}  // namespace swr
