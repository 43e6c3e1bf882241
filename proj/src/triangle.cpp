#include "swr/triangle.hpp"

#include <sstream>

namespace swr {

Ring Params::ring() const {
  Ring r = a1.ring().united(a2.ring());
  r = r.united(b1.ring()).united(b2.ring()).united(lam.ring());
  return r;
}

bool Params::all_rational() const {
  return a1.is_rational() && a2.is_rational() && b1.is_rational() &&
         b2.is_rational() && lam.is_rational();
}

bool Params::positivity_regime() const {
  if (!all_rational()) return false;
  return sign(a1.rational()) >= 0 && sign(a2.rational()) >= 0 &&
         sign(b1.rational()) >= 0 && sign(b2.rational()) >= 0 &&
         sign(lam.rational()) >= 0;
}

Params Params::symbolic() {
  Ring r = Ring::of({Var::a1, Var::a2, Var::b1, Var::b2, Var::lam});
  return Params{Scalar::variable(r, Var::a1), Scalar::variable(r, Var::a2),
                Scalar::variable(r, Var::b1), Scalar::variable(r, Var::b2),
                Scalar::variable(r, Var::lam)};
}

Params Params::rationals(Rational a1, Rational a2, Rational b1, Rational b2,
                         Rational lam) {
  return Params{Scalar(std::move(a1)), Scalar(std::move(a2)),
                Scalar(std::move(b1)), Scalar(std::move(b2)),
                Scalar(std::move(lam))};
}

Params specialization_params(const SpecializationId& id) {
  switch (id.family) {
    case Family::stirling2:
      return Params::rationals(1, 0, 0, 1, 0);
    case Family::tanny_geometric:
      return Params::rationals(1, 0, 1, 0, 0);
    case Family::whitney:
      return Params::rationals(id.m, 1, 0, 1, 0);
    case Family::assoc_whitney:
      return Params::rationals(id.m, 1, 1, 0, 0);
    case Family::riordan_a049020:
      return Params::rationals(1, 0, 0, 1, 1);
    case Family::falling_factorial_a008279:
      return Params::rationals(0, 1, 1, 0, 0);
    case Family::a154602:
      return Params::rationals(2, 0, 0, 1, 1);
  }
  throw usage_error("unknown specialization");
}

std::optional<SpecializationId> specialization_from_name(
    const std::string& name) {
  auto parametric = [&](const std::string& prefix,
                        Family fam) -> std::optional<SpecializationId> {
    if (name.rfind(prefix + "(", 0) == 0 && name.back() == ')') {
      std::string arg = name.substr(prefix.size() + 1,
                                    name.size() - prefix.size() - 2);
      return SpecializationId{fam, parse_rational(arg)};
    }
    return std::nullopt;
  };
  if (name == "stirling2") return SpecializationId{Family::stirling2};
  if (name == "tanny_geometric")
    return SpecializationId{Family::tanny_geometric};
  if (auto id = parametric("whitney", Family::whitney)) return id;
  if (auto id = parametric("assoc_whitney", Family::assoc_whitney)) return id;
  if (name == "riordan_a049020")
    return SpecializationId{Family::riordan_a049020};
  if (name == "falling_factorial_a008279")
    return SpecializationId{Family::falling_factorial_a008279};
  if (name == "a154602") return SpecializationId{Family::a154602};
  return std::nullopt;
}

std::string specialization_name(const SpecializationId& id) {
  switch (id.family) {
    case Family::stirling2: return "stirling2";
    case Family::tanny_geometric: return "tanny_geometric";
    case Family::whitney: return "whitney(" + rational_str(id.m) + ")";
    case Family::assoc_whitney:
      return "assoc_whitney(" + rational_str(id.m) + ")";
    case Family::riordan_a049020: return "riordan_a049020";
    case Family::falling_factorial_a008279:
      return "falling_factorial_a008279";
    case Family::a154602: return "a154602";
  }
  return "?";
}

std::vector<std::string> specialization_names() {
  return {"stirling2",       "tanny_geometric",
          "whitney(m)",      "assoc_whitney(m)",
          "riordan_a049020", "falling_factorial_a008279",
          "a154602"};
}

namespace {

/// The three k-indexed recurrence coefficients.
struct RecurrenceBands {
  std::vector<Scalar> up;     // multiplies T_{n-1,k-1}: b1 k + b2
  std::vector<Scalar> level;  // multiplies T_{n-1,k}
  std::vector<Scalar> down;   // multiplies T_{n-1,k+1}: lam(a1+lam b1)(k+1)

  RecurrenceBands(const Params& p, int kmax) {
    Scalar level0 = p.a2 + p.lam * (p.b1 + p.b2);
    Scalar level_slope = p.lam * p.b1 * Scalar(2) + p.a1;
    Scalar down_base = p.lam * (p.a1 + p.lam * p.b1);
    for (int k = 0; k <= kmax; ++k) {
      up.push_back(p.b1 * Scalar(Rational(k)) + p.b2);
      level.push_back(level_slope * Scalar(Rational(k)) + level0);
      down.push_back(down_base * Scalar(Rational(k + 1)));
    }
  }
};

}  // namespace

Triangle Triangle::build(const Params& params, int max_row) {
  if (max_row < 0) throw usage_error("triangle needs at least row 0");
  Triangle tri;
  tri.params_ = params;
  tri.rows_.resize(max_row + 1);
  tri.rows_[0] = {Scalar(1)};
  RecurrenceBands bands(params, max_row);
  for (int n = 1; n <= max_row; ++n) {
    const auto& prev = tri.rows_[n - 1];
    auto& row = tri.rows_[n];
    row.resize(n + 1);
    for (int k = 0; k <= n; ++k) {
      Scalar acc;
      if (k >= 1) acc += bands.up[k] * prev[k - 1];
      if (k <= n - 1) acc += bands.level[k] * prev[k];
      if (k + 1 <= n - 1) acc += bands.down[k] * prev[k + 1];
      row[k] = std::move(acc);
    }
  }
  return tri;
}

Scalar row_polynomial(const Triangle& tri, int n) {
  if (n > tri.max_row()) throw usage_error("row index beyond triangle");
  Ring rq = tri.params().ring().with(Var::q);
  Scalar q = Scalar::variable(rq, Var::q);
  Scalar acc = Scalar(0).embed(rq);
  for (int k = n; k >= 0; --k) acc = acc * q + tri.at(n, k).embed(rq);
  return acc;
}

Scalar explicit_entry(const Params& params, int n, int k) {
  if (!params.all_rational())
    throw usage_error("explicit_entry requires numeric parameters");
  const Rational a1 = params.a1.rational(), a2 = params.a2.rational();
  const Rational b1 = params.b1.rational(), b2 = params.b2.rational();
  const Rational lam = params.lam.rational();

  Rational total(0);
  if (a1 != 0) {
    // sum_{i=k}^{n} prod_{j=1}^{i}(b2+b1 j)/a1^i * C(i,k) lam^{i-k}
    //              * (1/i!) sum_{j=0}^{i} C(i,j)(-1)^{i-j}(a2+a1 j)^n
    Rational prod_b(1);
    for (int i = 0; i <= n; ++i) {
      if (i >= 1) prod_b *= b2 + b1 * i;
      if (i < k) continue;
      Rational inner(0);
      for (int j = 0; j <= i; ++j) {
        Rational term = binomial(i, j) * rational_pow(a2 + a1 * j, n);
        if ((i - j) % 2) term = -term;
        inner += term;
      }
      total += prod_b / rational_pow(a1, i) * binomial(i, k) *
               rational_pow(lam, i - k) / factorial(i) * inner;
    }
  } else {
    // sum_{i=k}^{n} prod_{j=1}^{i}(b2+b1 j) * C(n,i) C(i,k) lam^{i-k} a2^{n-i}
    Rational prod_b(1);
    for (int i = 0; i <= n; ++i) {
      if (i >= 1) prod_b *= b2 + b1 * i;
      if (i < k) continue;
      total += prod_b * binomial(n, i) * binomial(i, k) *
               rational_pow(lam, i - k) * rational_pow(a2, n - i);
    }
  }
  return Scalar(total);
}

ProductionMatrix production_matrix(const Params& p, int horizon) {
  ProductionMatrix j;
  Scalar diag0 = p.a2 + p.lam * (p.b1 + p.b2);
  Scalar diag_slope = p.lam * p.b1 * Scalar(2) + p.a1;
  Scalar sub_base = p.lam * (p.a1 + p.lam * p.b1);
  for (int n = 0; n <= horizon; ++n) {
    j.super.push_back(p.b1 * Scalar(Rational(n)) + p.b1 + p.b2);
    j.diag.push_back(diag_slope * Scalar(Rational(n)) + diag0);
    j.sub.push_back(sub_base * Scalar(Rational(n)));
  }
  return j;
}

std::optional<CellWitness> verify_production(const Triangle& tri) {
  if (tri.max_row() < 1) throw usage_error("need at least 2 rows");
  ProductionMatrix j = production_matrix(tri.params(), tri.max_row() + 1);
  for (int n = 0; n < tri.max_row(); ++n) {
    for (int k = 0; k <= n + 1; ++k) {
      // (T J)_{n,k} = T_{n,k-1} r_{k-1} + T_{n,k} s_k + T_{n,k+1} t_{k+1}
      Scalar acc;
      if (k >= 1 && k - 1 <= n) acc += tri.at(n, k - 1) * j.super[k - 1];
      if (k <= n) acc += tri.at(n, k) * j.diag[k];
      if (k + 1 <= n) acc += tri.at(n, k + 1) * j.sub[k + 1];
      if (acc != tri.at(n + 1, k))
        return CellWitness{n + 1, k, tri.at(n + 1, k), acc, "production"};
    }
  }
  return std::nullopt;
}

FactorPair factor_triangles(const Params& p, int max_row) {
  FactorPair f;
  f.a.resize(max_row + 1);
  f.b.resize(max_row + 1);
  f.a[0] = {Scalar(1)};
  for (int n = 1; n <= max_row; ++n) {
    f.a[n].resize(n + 1);
    for (int k = 0; k <= n; ++k) {
      Scalar acc;
      if (k <= n - 1)
        acc += (p.a1 * Scalar(Rational(k)) + p.a2) * f.a[n - 1][k];
      if (k >= 1)
        acc += (p.b1 * Scalar(Rational(k)) + p.b2) * f.a[n - 1][k - 1];
      f.a[n][k] = std::move(acc);
    }
  }
  for (int n = 0; n <= max_row; ++n) {
    f.b[n].resize(n + 1);
    for (int k = 0; k <= n; ++k)
      f.b[n][k] = Scalar(binomial(n, k)) * p.lam.pow(n - k);
  }
  return f;
}

std::optional<CellWitness> verify_factorization(const Triangle& tri) {
  FactorPair f = factor_triangles(tri.params(), tri.max_row());
  for (int n = 0; n <= tri.max_row(); ++n) {
    for (int k = 0; k <= n; ++k) {
      Scalar acc;
      for (int j = k; j <= n; ++j) acc += f.a[n][j] * f.b[j][k];
      if (acc != tri.at(n, k))
        return CellWitness{n, k, tri.at(n, k), acc, "factorization"};
    }
  }
  return std::nullopt;
}

}  // namespace swr
