#pragma once

#include <optional>
#include <vector>

#include "swr/unipoly.hpp"

namespace swr {

/// Sturm chain: p, p', then each element the negated remainder of the two
/// before it, ending at a nonzero constant when p is squarefree.
struct SturmChain {
  std::vector<UniPoly> seq;

  static SturmChain build(const UniPoly& p);

  int variations_at(const Rational& x) const;
  int variations_at_neg_inf() const;
  int variations_at_pos_inf() const;
};

/// One endpoint of a root-counting interval: a rational or +/- infinity.
struct Endpoint {
  enum Kind { NegInf, Finite, PosInf } kind = Finite;
  Rational value;  // meaningful for Finite
  bool closed = false;

  static Endpoint neg_inf() { return {NegInf, Rational(0), false}; }
  static Endpoint pos_inf() { return {PosInf, Rational(0), false}; }
  static Endpoint open(Rational v) { return {Finite, std::move(v), false}; }
  static Endpoint closed_at(Rational v) { return {Finite, std::move(v), true}; }
};

/// Number of distinct real roots of p in the interval (multiplicities are
/// ignored; use count_real_roots_with_multiplicity for the weighted count).
int count_roots_in(const UniPoly& p, const Endpoint& lo, const Endpoint& hi);

/// Total number of real roots counted with multiplicity.
int count_real_roots_with_multiplicity(const UniPoly& p);

/// True when every complex root of p is real (counted with multiplicity).
bool is_real_rooted(const UniPoly& p);

/// Isolating interval for one real root.  The root lies in (lo, hi] when
/// exact is false; when exact is true the root equals hi (and lo = hi).
struct RootBox {
  Rational lo, hi;
  bool exact = false;
  int multiplicity = 1;
};

/// Disjoint, ascending isolating boxes for the distinct real roots of p,
/// with multiplicities read off the squarefree decomposition.  Boxes are
/// refined until open boxes have non-root endpoints.
std::vector<RootBox> isolate_roots(const UniPoly& p);

/// Bisects an isolating box of the squarefree polynomial sf down to the
/// requested width (or an exact hit); exact boxes pass through unchanged.
RootBox refine_root_box(const UniPoly& sf, RootBox box,
                        const Rational& max_width);

}  // namespace swr
