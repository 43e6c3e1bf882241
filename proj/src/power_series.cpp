#include "swr/power_series.hpp"

namespace swr {

PowerSeries PowerSeries::from_coeffs(std::vector<Scalar> coeffs) {
  if (coeffs.empty()) throw usage_error("power series needs a constant term");
  PowerSeries f(static_cast<int>(coeffs.size()) - 1);
  f.coeffs_ = std::move(coeffs);
  return f;
}

PowerSeries PowerSeries::truncated(int new_order) const {
  if (new_order > order())
    throw usage_error("cannot extend a truncated power series");
  PowerSeries f(new_order);
  for (int i = 0; i <= new_order; ++i) f.coeffs_[i] = coeffs_[i];
  return f;
}

PowerSeries PowerSeries::scaled(const Scalar& c) const {
  PowerSeries f(order());
  for (int i = 0; i <= order(); ++i) f.coeffs_[i] = coeffs_[i] * c;
  return f;
}

PowerSeries ps_identity(int order) {
  PowerSeries f(order);
  if (order >= 1) f.set_coeff(1, Scalar(1));
  return f;
}

PowerSeries ps_constant(int order, Scalar c) {
  PowerSeries f(order);
  f.set_coeff(0, std::move(c));
  return f;
}

PowerSeries ps_add(const PowerSeries& f, const PowerSeries& g) {
  int n = std::min(f.order(), g.order());
  PowerSeries out(n);
  for (int i = 0; i <= n; ++i) out.set_coeff(i, f.coeff(i) + g.coeff(i));
  return out;
}

PowerSeries ps_sub(const PowerSeries& f, const PowerSeries& g) {
  int n = std::min(f.order(), g.order());
  PowerSeries out(n);
  for (int i = 0; i <= n; ++i) out.set_coeff(i, f.coeff(i) - g.coeff(i));
  return out;
}

PowerSeries ps_mul(const PowerSeries& f, const PowerSeries& g) {
  int n = std::min(f.order(), g.order());
  PowerSeries out(n);
  for (int i = 0; i <= n; ++i) {
    Scalar acc;
    for (int j = 0; j <= i; ++j) acc += f.coeff(j) * g.coeff(i - j);
    out.set_coeff(i, std::move(acc));
  }
  return out;
}

PowerSeries ps_exp(const PowerSeries& f) {
  if (!f.coeff(0).is_zero())
    throw usage_error("ps_exp requires constant term 0");
  const int n = f.order();
  PowerSeries g(n);
  g.set_coeff(0, Scalar(1));
  // g' = f' g  =>  n*g_n = sum_{k=1..n} k f_k g_{n-k}
  for (int m = 1; m <= n; ++m) {
    Scalar acc;
    for (int k = 1; k <= m; ++k)
      acc += f.coeff(k) * g.coeff(m - k) * Scalar(Rational(k));
    g.set_coeff(m, acc * Scalar(make_rational(1, m)));
  }
  return g;
}

PowerSeries ps_log(const PowerSeries& g) {
  if (!g.coeff(0).is_one())
    throw usage_error("ps_log requires constant term 1");
  const int n = g.order();
  PowerSeries l(n);
  // (log g)' = g'/g  =>  n*g_0*l_n = n*g_n - sum_{k=1..n-1} k l_k g_{n-k}
  for (int m = 1; m <= n; ++m) {
    Scalar acc = g.coeff(m) * Scalar(Rational(m));
    for (int k = 1; k < m; ++k)
      acc -= l.coeff(k) * g.coeff(m - k) * Scalar(Rational(k));
    l.set_coeff(m, acc * Scalar(make_rational(1, m)));
  }
  return l;
}

PowerSeries ps_pow(const PowerSeries& g, const Rational& alpha) {
  if (!g.coeff(0).is_one())
    throw usage_error("ps_pow requires constant term 1");
  return ps_exp(ps_log(g).scaled(Scalar(alpha)));
}

}  // namespace swr
