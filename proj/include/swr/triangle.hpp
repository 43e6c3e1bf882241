#pragma once

#include <optional>
#include <string>
#include <vector>

#include "swr/scalar.hpp"

namespace swr {

/// The five parameters of the Stirling-Whitney-Riordan recurrence.  Each is
/// either a bound rational constant or the matching free indeterminate.
struct Params {
  Scalar a1, a2, b1, b2, lam;

  /// Union of the parameter rings (rationals contribute nothing).
  Ring ring() const;

  /// True when all five parameters are rationals >= 0.
  bool positivity_regime() const;

  bool all_rational() const;

  /// Fully symbolic parameters (a1,a2,b1,b2,lam free).
  static Params symbolic();
  static Params rationals(Rational a1, Rational a2, Rational b1, Rational b2,
                          Rational lam);
};

enum class Family {
  stirling2,
  tanny_geometric,
  whitney,
  assoc_whitney,
  riordan_a049020,
  falling_factorial_a008279,
  a154602,
};

/// A named specialization of the five-parameter family; whitney and
/// assoc_whitney carry the exact rational parameter m.
struct SpecializationId {
  Family family;
  Rational m = Rational(0);
};

Params specialization_params(const SpecializationId& id);
/// Parses "stirling2", "whitney(2)", "assoc_whitney(3/2)", ...
std::optional<SpecializationId> specialization_from_name(const std::string&);
std::string specialization_name(const SpecializationId& id);
std::vector<std::string> specialization_names();

/// Lower-triangular array T_{n,k} built from the defining recurrence
///   T_{n,k} = (b1 k + b2) T_{n-1,k-1}
///           + [(2 lam b1 + a1) k + a2 + lam (b1 + b2)] T_{n-1,k}
///           + lam (a1 + lam b1)(k+1) T_{n-1,k+1},
/// with T_{0,0} = 1 and T_{n,k} = 0 unless 0 <= k <= n.
class Triangle {
 public:
  static Triangle build(const Params& params, int max_row);

  const Params& params() const { return params_; }
  int max_row() const { return static_cast<int>(rows_.size()) - 1; }
  const std::vector<Scalar>& row(int n) const { return rows_.at(n); }
  const Scalar& at(int n, int k) const { return rows_.at(n).at(k); }
  const std::vector<std::vector<Scalar>>& rows() const { return rows_; }

 private:
  Params params_;
  std::vector<std::vector<Scalar>> rows_;
};

/// Row-generating polynomial T_n(q) as a Scalar over ring(params) + q.
Scalar row_polynomial(const Triangle& tri, int n);

/// Closed-form entry (numeric parameters only; the a1 != 0 / a1 = 0 branch
/// split is not decidable for a free indeterminate).  The outer sum is
/// truncated at i = n: for i > n the inner alternating sum is the i-th
/// finite difference of a degree-n polynomial and vanishes.
Scalar explicit_entry(const Params& params, int n, int k);

/// Tridiagonal production matrix J with T-bar = T J: superdiagonal r_n,
/// diagonal s_n, subdiagonal t_n.
struct ProductionMatrix {
  std::vector<Scalar> super;  // r_n = b1 n + b1 + b2
  std::vector<Scalar> diag;   // s_n = (2 lam b1 + a1) n + a2 + lam(b1+b2)
  std::vector<Scalar> sub;    // t_n = lam (a1 + lam b1) n
};

ProductionMatrix production_matrix(const Params& params, int horizon);

struct CellWitness {
  int n = 0, k = 0;
  Scalar expected, got;
  std::string context;
};

/// Checks row n+1 = (row n) x J exactly on the stored truncation; returns
/// the first failing cell.
std::optional<CellWitness> verify_production(const Triangle& tri);

/// The two factor triangles: A from the two-term recurrence
/// A_{n,k} = (a1 k + a2) A_{n-1,k} + (b1 k + b2) A_{n-1,k-1}, and
/// B_{n,k} = C(n,k) lam^{n-k}.
struct FactorPair {
  std::vector<std::vector<Scalar>> a;
  std::vector<std::vector<Scalar>> b;
};

FactorPair factor_triangles(const Params& params, int max_row);

/// Checks T = A * B exactly on the stored truncation.
std::optional<CellWitness> verify_factorization(const Triangle& tri);

}  // namespace swr
