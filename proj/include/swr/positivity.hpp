#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "swr/triangle.hpp"

namespace swr {

using Matrix = std::vector<std::vector<Scalar>>;

/// Witness of a total-positivity violation: a minor that is negative
/// (numeric) or has a negative coefficient (symbolic).
struct MinorWitness {
  std::vector<int> rows, cols;
  Scalar minor;
};

/// Lower-triangular truncation of a triangle as a square matrix (zeros
/// above the diagonal).
Matrix triangle_matrix(const Triangle& tri, int size);

Matrix hankel_matrix(std::span<const Scalar> seq, int m, int shift = 0);

/// Enumerates every minor of order <= max_order (orders ascending, index
/// subsets in lexicographic order) and requires each to be nonnegative
/// numerically or coefficientwise.  Minors are built by expansion along the
/// last row with all smaller minors memoized, and each order's batch is
/// evaluated in parallel; the first violation in enumeration order wins.
std::optional<MinorWitness> tp_check(const Matrix& m, int max_order);

/// Stieltjes-moment check: tp_check of the m x m Hankel matrix at full
/// order.  Needs 2m-1 sequence terms.
std::optional<MinorWitness> sm_check(std::span<const Scalar> seq, int m);

/// One application of the log-convexity operator:
/// out[i] = seq[i] * seq[i+2] - seq[i+1]^2.
std::vector<Scalar> lcx_operator(std::span<const Scalar> seq);

struct LcxWitness {
  int depth = 0;
  int index = 0;
  Scalar value;
};

/// Applies the operator up to `depth` times; every intermediate sequence
/// must be coefficientwise nonnegative.  Needs 2*depth+1 terms.
std::optional<LcxWitness> three_x_lcx_check(std::span<const Scalar> seq,
                                            int depth);

/// Index of the first internal violation of a[i-1] a[i+1] <= a[i]^2, if any.
std::optional<int> log_concavity_check(std::span<const Rational> coeffs);

/// Registry of known Stieltjes moment sequences for convolution tests:
/// "ones", "factorial", "pow2", "catalan".
std::vector<Rational> sm_registry_sequence(const std::string& id, int count);
std::vector<std::string> sm_registry_names();

/// z_n = sum_k T_{n,k} x_k y_{n-k} over the stored rows.
std::vector<Rational> convolution(const Triangle& tri,
                                  std::span<const Rational> x,
                                  std::span<const Rational> y);

/// Convolves two registry sequences through the triangle and runs sm_check
/// at order m.
std::optional<MinorWitness> convolution_sm_check(const Triangle& tri,
                                                 const std::string& x_id,
                                                 const std::string& y_id,
                                                 int m);

}  // namespace swr
