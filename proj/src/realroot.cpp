#include "swr/realroot.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <sstream>

namespace swr {

UniPoly unipoly_row(const Triangle& tri, int n) {
  std::vector<Rational> coeffs;
  for (const auto& x : tri.row(n)) coeffs.push_back(x.rational());
  return UniPoly(std::move(coeffs));
}

std::optional<CheckFailure> real_rooted_in_interval_check(const Params& p,
                                                          int n) {
  if (!p.positivity_regime())
    throw usage_error("regime check needs nonnegative rational parameters");
  const Rational a1 = p.a1.rational(), a2 = p.a2.rational();
  const Rational b1 = p.b1.rational(), b2 = p.b2.rational();
  const Rational lam = p.lam.rational();
  if (b1 + b2 == 0)
    throw usage_error("regime check needs b1 + b2 > 0");
  if (a1 + b1 == 0)
    throw usage_error(
        "regime check needs a1 + b1 > 0 (with a1 = b1 = 0 the rows are "
        "powers of T_1 and the roots are not simple)");
  if (a1 * (b1 + b2) < b1 * a2)
    throw usage_error("hypothesis a1(b1+b2) >= b1*a2 violated");
  if (n == 0) return std::nullopt;

  Triangle tri = Triangle::build(p, n);
  UniPoly tn = unipoly_row(tri, n);
  if (tn.degree() != n)
    return CheckFailure{"T_n has degree " + std::to_string(tn.degree()) +
                        " < n"};
  if (UniPoly::gcd(tn, tn.derivative()).degree() != 0)
    return CheckFailure{"T_n has a repeated root"};

  const bool strict = a2 > 0;  // a2 = 0 puts the root -lam on the boundary
  Endpoint hi = strict ? Endpoint::open(-lam) : Endpoint::closed_at(-lam);
  Endpoint lo = Endpoint::neg_inf();
  if (b1 != 0) {
    Rational left = -lam - a1 / b1;
    lo = strict ? Endpoint::open(left) : Endpoint::closed_at(left);
  }
  int count = count_roots_in(tn, lo, hi);
  if (count != n) {
    std::ostringstream os;
    os << "only " << count << " of " << n << " roots in the "
       << (strict ? "open" : "closed") << " interval";
    return CheckFailure{os.str()};
  }
  return std::nullopt;
}

namespace {

/// Multiplicity-weighted number of roots of p strictly greater than t.
int roots_above(const std::vector<UniPoly>& yun_factors, const Rational& t) {
  int total = 0;
  for (size_t i = 0; i < yun_factors.size(); ++i) {
    if (yun_factors[i].degree() == 0) continue;
    total += static_cast<int>(i + 1) *
             count_roots_in(yun_factors[i], Endpoint::open(t),
                            Endpoint::pos_inf());
  }
  return total;
}

}  // namespace

std::optional<CheckFailure> interlacing_check(const UniPoly& g,
                                              const UniPoly& f) {
  if (f.is_zero() || g.is_zero())
    throw usage_error("interlacing_check needs nonzero polynomials");
  if (f.degree() != g.degree() + 1)
    throw usage_error("interlacing_check needs deg f = deg g + 1");
  if (sign(f.lead()) <= 0 || sign(g.lead()) <= 0)
    throw usage_error("interlacing_check needs standard polynomials");
  if (!is_real_rooted(f) || !is_real_rooted(g))
    throw usage_error("interlacing_check needs real-rooted polynomials");

  // Roots listed descending r_1 >= r_2 >= ... interlace weakly iff for every
  // real t the counts N(t) = #{roots > t} satisfy
  //   N_g(t) <= N_f(t) <= N_g(t) + 1.
  // The counts only change at roots, so rational separators between the
  // distinct roots of f*g decide the matter.
  UniPoly fs = f.squarefree_part(), gs = g.squarefree_part();
  UniPoly common = UniPoly::gcd(fs, gs);
  UniPoly merged = fs * UniPoly::divrem(gs, common).first;  // squarefree union

  auto boxes = isolate_roots(merged);
  auto yun_f = f.squarefree_decomposition();
  auto yun_g = g.squarefree_decomposition();

  std::vector<Rational> separators;
  separators.push_back(-merged.cauchy_root_bound());
  for (size_t j = 0; j + 1 < boxes.size(); ++j) {
    // A non-root point strictly between root j and root j+1.
    if (!boxes[j].exact) {
      separators.push_back(boxes[j].hi);  // open box: hi is past the root
      continue;
    }
    const Rational v = boxes[j].hi;  // root j known exactly
    if (boxes[j + 1].exact) {
      separators.push_back((v + boxes[j + 1].hi) / 2);
      continue;
    }
    // Shrink the next box from below until its lower end clears v.
    Rational lo = boxes[j + 1].lo, hi = boxes[j + 1].hi;
    bool landed = false;
    while (!(lo > v)) {
      Rational mid = (lo + hi) / 2;
      if (merged.eval(mid) == 0) {  // landed exactly on root j+1
        separators.push_back((v + mid) / 2);
        landed = true;
        break;
      }
      if (count_roots_in(merged, Endpoint::open(mid),
                         Endpoint::closed_at(hi)) == 1)
        lo = mid;
      else
        hi = mid;
    }
    if (!landed) separators.push_back(lo);
  }
  if (!boxes.empty())
    separators.push_back(boxes.back().exact ? boxes.back().hi + 1
                                            : boxes.back().hi);

  for (const auto& t : separators) {
    int nf = roots_above(yun_f, t);
    int ng = roots_above(yun_g, t);
    if (ng > nf || nf > ng + 1) {
      std::ostringstream os;
      os << "alternation fails at t = " << rational_str(t) << " (f has " << nf
         << " roots above, g has " << ng << ")";
      return CheckFailure{os.str()};
    }
  }
  return std::nullopt;
}

UniPoly turan_polynomial(const Triangle& tri, int n) {
  if (n < 1 || n + 1 > tri.max_row())
    throw usage_error("turan_polynomial needs rows n-1..n+1");
  UniPoly tm = unipoly_row(tri, n - 1);
  UniPoly tn = unipoly_row(tri, n);
  UniPoly tp = unipoly_row(tri, n + 1);
  return tp * tm - tn * tn;
}

namespace {

/// Exact Routh table on a polynomial with all-positive coefficients.
/// Returns +1 for a strict stability certificate, -1 for a certified root in
/// the open right half plane, 0 for an inconclusive zero pivot.
int routh_verdict(const UniPoly& p) {
  const int n = p.degree();
  std::vector<Rational> row0, row1;
  for (int i = n; i >= 0; i -= 2) row0.push_back(p.coeff(i));
  for (int i = n - 1; i >= 0; i -= 2) row1.push_back(p.coeff(i));
  if (row1.empty()) return n <= 0 ? +1 : 0;
  bool all_positive = sign(row0[0]) > 0;
  for (int step = 0; step < n - 1; ++step) {
    if (row1[0] == 0) return 0;
    if (sign(row1[0]) < 0) all_positive = false;
    std::vector<Rational> next;
    for (size_t i = 0; i + 1 <= row0.size(); ++i) {
      Rational a = i + 1 < row0.size() ? row0[i + 1] : Rational(0);
      Rational b = i + 1 < row1.size() ? row1[i + 1] : Rational(0);
      next.push_back((row1[0] * a - row0[0] * b) / row1[0]);
    }
    while (!next.empty() && next.back() == 0) next.pop_back();
    if (next.empty()) return 0;  // premature zero row: boundary roots
    row0 = std::move(row1);
    row1 = std::move(next);
  }
  if (row1[0] == 0) return 0;
  if (sign(row1[0]) < 0) all_positive = false;
  return all_positive ? +1 : -1;
}

double max_real_part_numeric(const UniPoly& p) {
  const int n = p.degree();
  if (n <= 0) return 0;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    Rational ratio = p.coeff(i) / p.lead();
    companion(i, n - 1) = -ratio.get_d();
  }
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  double max_re = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i)
    max_re = std::max(max_re, solver.eigenvalues()[i].real());
  return max_re;
}

}  // namespace

StabilityReport stability_check(const UniPoly& p) {
  StabilityReport report;
  if (p.is_zero()) {
    report.verdict = StabilityReport::Verdict::vacuous_zero;
    return report;
  }
  UniPoly work = sign(p.lead()) > 0 ? p : -p;
  // Strip roots at the origin; they sit on the boundary of the closed left
  // half plane and are fine for weak stability.
  size_t first_nonzero = 0;
  while (work.coeff(static_cast<int>(first_nonzero)) == 0) ++first_nonzero;
  std::vector<Rational> shifted(work.coeffs().begin() + first_nonzero,
                                work.coeffs().end());
  UniPoly core = UniPoly(std::move(shifted)).squarefree_part();

  if (core.degree() == 0) {
    report.verdict = StabilityReport::Verdict::stable_exact;
    return report;
  }

  bool coeffs_positive = true;
  for (int i = 0; i <= core.degree(); ++i)
    if (sign(core.coeff(i)) <= 0) coeffs_positive = false;

  if (coeffs_positive) {
    int verdict = routh_verdict(core);
    if (verdict == +1) {
      report.verdict = StabilityReport::Verdict::stable_exact;
      return report;
    }
    if (verdict == -1) {
      report.verdict = StabilityReport::Verdict::unstable;
      report.numeric = true;
      report.max_real_part = max_real_part_numeric(core);
      return report;
    }
  } else {
    // A weakly stable polynomial with positive leading coefficient has no
    // negative coefficient; a negative one is an exact rejection.
    bool has_negative = false;
    for (int i = 0; i <= core.degree(); ++i)
      if (sign(core.coeff(i)) < 0) has_negative = true;
    if (has_negative) {
      report.verdict = StabilityReport::Verdict::unstable;
      report.numeric = true;
      report.max_real_part = max_real_part_numeric(core);
      return report;
    }
  }

  report.numeric = true;
  report.max_real_part = max_real_part_numeric(core);
  report.verdict = report.max_real_part <= 1e-9
                       ? StabilityReport::Verdict::stable_numeric
                       : StabilityReport::Verdict::unstable;
  return report;
}

}  // namespace swr
