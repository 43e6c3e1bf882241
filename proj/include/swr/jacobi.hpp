#pragma once

#include <optional>
#include <span>
#include <vector>

#include "swr/power_series.hpp"
#include "swr/triangle.hpp"

namespace swr {

/// Coefficient pair of a Jacobi continued fraction
///   1 / (1 - s_0 t - r_1 t^2 / (1 - s_1 t - r_2 t^2 / (1 - ...))).
/// s is indexed from 0, r from 1; horizon() is the number of stored s.
struct JacobiCF {
  std::vector<Scalar> s;
  std::vector<Scalar> r;  // r[i] holds r_{i+1}

  int horizon() const { return static_cast<int>(s.size()); }
  const Scalar& s_at(int n) const { return s.at(n); }
  const Scalar& r_at(int n) const { return r.at(n - 1); }  // n >= 1
};

/// J-fraction of the row polynomials:
///   s_n = a2 + a1 n + [b1(2n+1) + b2](q + lam),
///   r_{n+1} = [b1(n+1) + b2](q + lam)[b1(q + lam) + a1](n+1).
/// Entries live in ring(params) + q.
JacobiCF jacobi_coeffs_rows(const Params& params, int horizon);

/// J-fraction of the first column: the row coefficients with q bound to 0,
/// i.e. (q + lam) replaced by lam throughout.
JacobiCF jacobi_coeffs_col0(const Params& params, int horizon);

/// Power-series coefficients of the J-fraction through t^N, computed by the
/// weighted-Motzkin dynamic program (up weight 1, level weight s_i, down
/// weight r_{i+1}).  Requires horizon >= N.
std::vector<Scalar> cf_to_series(const JacobiCF& cf, int order);

/// Q_0..Q_n with Q_0 = 1, Q_1 = s_0, Q_{n+1} = s_n Q_n - r_n Q_{n-1}.
std::vector<Scalar> q_sequence(const JacobiCF& cf, int n);

/// Exact Hankel determinant det[seq_{i+j+shift}] of order n via fraction-free
/// (Bareiss) elimination; works over the rationals and polynomial rings.
Scalar hankel_det_direct(std::span<const Scalar> seq, int n, int shift);

/// The closed forms: shift 0 -> prod_{k=1}^{n-1} r_k^{n-k};
/// shift 1 -> the same product times Q_n.
Scalar hankel_det_via_cf(const JacobiCF& cf, int n, int shift);

/// Truncated exponential generating function of (T_n(q)) at a bound q:
/// the a1 b1 != 0 closed form, the two limit forms for a1 = 0 or b1 = 0,
/// and exp((a2 + b2(q+lam)) t) when both vanish.
PowerSeries egf_closed_form(const Params& params, const Rational& q_binding,
                            int order);

struct EgfWitness {
  int n = 0;
  Rational expected, got;  // both are T_n(q)/n!-style coefficients
};

/// Checks n! * [t^n] egf == T_n(q_binding) for every stored row.
std::optional<EgfWitness> egf_check(const Triangle& tri,
                                    const Rational& q_binding);

struct ShiftWitness {
  int n = 0;
  Scalar lhs, rhs;
};

/// With lam symbolic, writes the first column as polynomials S_n(lam) and
/// verifies S_n(lam + q) = T_n(q) as a polynomial identity for n <= max_row.
std::optional<ShiftWitness> first_column_shift_check(const Params& params,
                                                     int max_row);

}  // namespace swr
