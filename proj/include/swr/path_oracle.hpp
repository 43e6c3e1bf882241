#pragma once

#include "swr/triangle.hpp"

namespace swr {

/// Step weights of the lattice-path model behind the triangle: an up step
/// leaving height h carries u_h = b1 h + b2 + b1, a level step at height h
/// carries v_h = (2 lam b1 + a1) h + a2 + lam(b1 + b2), and a down step
/// leaving height h carries w_h = lam(a1 + lam b1) h.
struct PathWeights {
  std::vector<Scalar> up, level, down;
  static PathWeights from_params(const Params& params, int max_height);
};

inline constexpr int kDefaultPathGuard = 10;

/// T_{n,k} by literal depth-first enumeration of all step sequences from
/// (0,0) to (n,k) staying at nonnegative height; exponential in n, guarded.
/// Deliberately shares no algorithmic structure with the recurrence or the
/// continued-fraction dynamic program.
Scalar enumerate_entry(const Params& params, int n, int k,
                       int guard = kDefaultPathGuard);

/// T_n(q) by literal enumeration of the closed paths (up weight 1, level
/// weight s_i, down weight r_{i+1} off the row continued fraction) with q
/// bound to the given scalar (a rational, or the indeterminate q itself).
Scalar enumerate_row_polynomial(const Params& params, int n,
                                const Scalar& q_binding,
                                int guard = kDefaultPathGuard);

}  // namespace swr
