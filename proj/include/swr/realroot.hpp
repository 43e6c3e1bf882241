#pragma once

#include <optional>
#include <string>

#include "swr/sturm.hpp"
#include "swr/triangle.hpp"

namespace swr {

struct CheckFailure {
  std::string reason;
};

/// For bound nonnegative parameters with a2 > 0, b1 + b2 > 0 and
/// a1(b1+b2) >= b1 a2: T_n(q) must have exactly n simple real roots, all
/// strictly inside (-lam - a1/b1, -lam) (left end -infinity when b1 = 0).
/// With a2 = 0 the closed-interval variant is checked instead, since the
/// boundary -lam is then a genuine root.  Violated hypotheses raise
/// usage_error; a mathematical violation returns a failure description.
std::optional<CheckFailure> real_rooted_in_interval_check(const Params& params,
                                                          int n);

/// Weak interlacing of g between the roots of f (deg f = deg g + 1, both
/// standard and real-rooted; ties allowed).  Root multisets are compared via
/// multiplicity-aware Sturm counts at rational separators obtained from
/// isolating boxes of the combined root set, with common roots detected by
/// gcd.  Precondition violations raise usage_error.
std::optional<CheckFailure> interlacing_check(const UniPoly& g,
                                              const UniPoly& f);

/// T_{n+1}(q) T_{n-1}(q) - T_n(q)^2 from a numeric triangle.
UniPoly turan_polynomial(const Triangle& tri, int n);

struct StabilityReport {
  enum class Verdict {
    stable_exact,    // strict Routh-Hurwitz certificate (plus origin roots)
    stable_numeric,  // numeric roots with max Re <= tolerance
    unstable,        // a root with positive real part
    vacuous_zero,    // the zero polynomial
  } verdict = Verdict::vacuous_zero;
  bool numeric = false;       // true when the verdict used floating point
  double max_real_part = 0;   // meaningful for numeric verdicts
  bool passed() const {
    return verdict != Verdict::unstable;
  }
};

/// Weak Hurwitz stability: exact Routh-Hurwitz on the squarefree part where
/// a strict certificate or an exact rejection is available, otherwise a
/// double-precision companion-matrix root check with tolerance 1e-9.
StabilityReport stability_check(const UniPoly& p);

/// Coefficient row of T_n(x) as exact rationals (numeric triangle).
UniPoly unipoly_row(const Triangle& tri, int n);

}  // namespace swr
