#include "swr/jacobi.hpp"

namespace swr {

JacobiCF jacobi_coeffs_rows(const Params& p, int horizon) {
  Ring rq = p.ring().with(Var::q);
  auto lift = [&](const Scalar& x) { return x.is_poly() ? x.embed(rq) : x; };
  const Scalar a1 = lift(p.a1), a2 = lift(p.a2);
  const Scalar b1 = lift(p.b1), b2 = lift(p.b2);
  Scalar shift = Scalar::variable(rq, Var::q) + lift(p.lam);  // q + lam
  JacobiCF cf;
  for (int n = 0; n < horizon; ++n) {
    cf.s.push_back(a2 + a1 * Scalar(Rational(n)) +
                   (b1 * Scalar(Rational(2 * n + 1)) + b2) * shift);
    cf.r.push_back((b1 * Scalar(Rational(n + 1)) + b2) * shift *
                   (b1 * shift + a1) * Scalar(Rational(n + 1)));
  }
  return cf;
}

JacobiCF jacobi_coeffs_col0(const Params& p, int horizon) {
  JacobiCF rows = jacobi_coeffs_rows(p, horizon);
  JacobiCF cf;
  std::map<Var, Rational> q0{{Var::q, Rational(0)}};
  auto drop_q = [&](const Scalar& x) {
    return x.is_poly() && x.ring().contains(Var::q) ? x.bind(q0) : x;
  };
  for (const auto& x : rows.s) cf.s.push_back(drop_q(x));
  for (const auto& x : rows.r) cf.r.push_back(drop_q(x));
  return cf;
}

std::vector<Scalar> cf_to_series(const JacobiCF& cf, int order) {
  if (cf.horizon() < order)
    throw usage_error("continued-fraction horizon shorter than order");
  // Paths that return to height 0 within `order` steps never climb above
  // order/2, so capped state vectors lose nothing.
  const int hmax = order / 2;
  std::vector<Scalar> state(hmax + 1), next(hmax + 1);
  state[0] = Scalar(1);
  std::vector<Scalar> out;
  out.push_back(state[0]);
  for (int t = 1; t <= order; ++t) {
    for (int h = 0; h <= hmax; ++h) {
      Scalar acc;
      if (h >= 1) acc += state[h - 1];  // up step, weight 1
      acc += state[h] * cf.s_at(h);     // level step at height h
      if (h + 1 <= hmax) acc += state[h + 1] * cf.r_at(h + 1);  // down step
      next[h] = std::move(acc);
    }
    state.swap(next);
    out.push_back(state[0]);
  }
  return out;
}

std::vector<Scalar> q_sequence(const JacobiCF& cf, int n) {
  std::vector<Scalar> q;
  q.push_back(Scalar(1));
  if (n >= 1) q.push_back(cf.s_at(0));
  for (int m = 1; m < n; ++m)
    q.push_back(cf.s_at(m) * q[m] - cf.r_at(m) * q[m - 1]);
  return q;
}

namespace {

Scalar bareiss_det(std::vector<std::vector<Scalar>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return Scalar(1);
  bool negate = false;
  Scalar prev(1);
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m[i][k].is_zero()) {
          pivot = i;
          break;
        }
      if (pivot < 0) return Scalar(0);
      std::swap(m[k], m[pivot]);
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Scalar num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = Scalar::divide_exact(num, prev);
      }
      m[i][k] = Scalar(0);
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace

Scalar hankel_det_direct(std::span<const Scalar> seq, int n, int shift) {
  if (n <= 0) return Scalar(1);
  if (static_cast<int>(seq.size()) < 2 * n - 1 + shift)
    throw usage_error("sequence too short for Hankel determinant");
  std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = seq[i + j + shift];
  return bareiss_det(std::move(m));
}

Scalar hankel_det_via_cf(const JacobiCF& cf, int n, int shift) {
  if (n <= 0) return Scalar(1);
  if (cf.horizon() < n)
    throw usage_error("continued-fraction horizon shorter than n");
  Scalar prod(1);
  for (int k = 1; k <= n - 1; ++k) prod *= cf.r_at(k).pow(n - k);
  if (shift == 0) return prod;
  if (shift != 1) throw usage_error("shift must be 0 or 1");
  return prod * q_sequence(cf, n).at(n);
}

PowerSeries egf_closed_form(const Params& p, const Rational& q_binding,
                            int order) {
  if (!p.all_rational())
    throw usage_error("egf_closed_form requires numeric parameters");
  const Rational a1 = p.a1.rational(), a2 = p.a2.rational();
  const Rational b1 = p.b1.rational(), b2 = p.b2.rational();
  const Rational shifted = q_binding + p.lam.rational();  // q + lam

  PowerSeries t = ps_identity(order);
  PowerSeries exp_a2t = ps_exp(t.scaled(Scalar(a2)));

  if (a1 != 0 && b1 != 0) {
    // e^{a2 t} [1 + b1(q+lam)(1-e^{a1 t})/a1]^{-(1+b2/b1)}
    PowerSeries one_minus_exp =
        ps_sub(ps_constant(order, Scalar(1)), ps_exp(t.scaled(Scalar(a1))));
    PowerSeries base = ps_add(ps_constant(order, Scalar(1)),
                              one_minus_exp.scaled(Scalar(b1 * shifted / a1)));
    Rational expo = -(1 + b2 / b1);
    return ps_mul(exp_a2t, ps_pow(base, expo));
  }
  if (a1 == 0 && b1 != 0) {
    // e^{a2 t} [1 - b1(q+lam) t]^{-(1+b2/b1)}
    PowerSeries base = ps_sub(ps_constant(order, Scalar(1)),
                              t.scaled(Scalar(b1 * shifted)));
    Rational expo = -(1 + b2 / b1);
    return ps_mul(exp_a2t, ps_pow(base, expo));
  }
  if (a1 != 0 && b1 == 0) {
    // e^{a2 t + b2(q+lam)(e^{a1 t} - 1)/a1}
    PowerSeries expm1 =
        ps_sub(ps_exp(t.scaled(Scalar(a1))), ps_constant(order, Scalar(1)));
    PowerSeries arg =
        ps_add(t.scaled(Scalar(a2)), expm1.scaled(Scalar(b2 * shifted / a1)));
    return ps_exp(arg);
  }
  // a1 = b1 = 0: limit of either footnote form, e^{(a2 + b2(q+lam)) t}
  return ps_exp(t.scaled(Scalar(a2 + b2 * shifted)));
}

std::optional<EgfWitness> egf_check(const Triangle& tri,
                                    const Rational& q_binding) {
  const int order = tri.max_row();
  PowerSeries egf = egf_closed_form(tri.params(), q_binding, order);
  for (int n = 0; n <= order; ++n) {
    Rational row_value(0);
    Rational qpow(1);
    for (int k = 0; k <= n; ++k) {
      row_value += tri.at(n, k).rational() * qpow;
      qpow *= q_binding;
    }
    Rational got = egf.coeff(n).as_rational() * factorial(n);
    if (got != row_value) return EgfWitness{n, row_value, got};
  }
  return std::nullopt;
}

std::optional<ShiftWitness> first_column_shift_check(const Params& params,
                                                     int max_row) {
  if (!(params.lam.is_poly() && params.lam.ring().contains(Var::lam)))
    throw usage_error("first_column_shift_check needs symbolic lam");
  Triangle tri = Triangle::build(params, max_row);
  Ring rq = params.ring().with(Var::q);
  MultiPoly lam_plus_q = MultiPoly::variable(rq, Var::lam) +
                         MultiPoly::variable(rq, Var::q);
  for (int n = 0; n <= max_row; ++n) {
    Scalar lhs = tri.at(n, 0).substitute(Var::lam, lam_plus_q).embed(rq);
    Scalar rhs = row_polynomial(tri, n);
    if (lhs != rhs) return ShiftWitness{n, lhs, rhs};
  }
  return std::nullopt;
}

}  // namespace swr
