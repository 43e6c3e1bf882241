#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "swr/suites.hpp"
#include "swr/triangle.hpp"

using namespace swr;

namespace {

Params family(Family f, Rational m = Rational(0)) {
  return specialization_params({f, m});
}

std::vector<Rational> numeric_row(const Triangle& tri, int n) {
  std::vector<Rational> out;
  for (const auto& x : tri.row(n)) out.push_back(x.rational());
  return out;
}

}  // namespace

TEST_CASE("specialization parameter bindings") {
  auto check = [](Family f, Rational m, std::vector<Rational> expect) {
    Params p = specialization_params({f, m});
    CHECK(p.a1.rational() == expect[0]);
    CHECK(p.a2.rational() == expect[1]);
    CHECK(p.b1.rational() == expect[2]);
    CHECK(p.b2.rational() == expect[3]);
    CHECK(p.lam.rational() == expect[4]);
  };
  check(Family::stirling2, 0, {1, 0, 0, 1, 0});
  check(Family::tanny_geometric, 0, {1, 0, 1, 0, 0});
  check(Family::whitney, 3, {3, 1, 0, 1, 0});
  check(Family::assoc_whitney, 3, {3, 1, 1, 0, 0});
  check(Family::riordan_a049020, 0, {1, 0, 0, 1, 1});
  check(Family::falling_factorial_a008279, 0, {0, 1, 1, 0, 0});
  check(Family::a154602, 0, {2, 0, 0, 1, 1});

  CHECK(specialization_from_name("whitney(3/2)")->m == make_rational(3, 2));
  CHECK(!specialization_from_name("nope"));
}

TEST_CASE("triangle rows match the independent classical formulas") {
  Triangle s2 = Triangle::build(family(Family::stirling2), 8);
  CHECK(numeric_row(s2, 0) == std::vector<Rational>{1});
  CHECK(numeric_row(s2, 4) == std::vector<Rational>{0, 1, 7, 6, 1});
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(s2.at(n, k).rational() == oracle::stirling2(n, k));

  Triangle ff = Triangle::build(family(Family::falling_factorial_a008279), 8);
  CHECK(numeric_row(ff, 3) == std::vector<Rational>{1, 3, 6, 6});
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(ff.at(n, k).rational() == oracle::falling_factorial(n, k));

  Triangle rd = Triangle::build(family(Family::riordan_a049020), 8);
  CHECK(numeric_row(rd, 3) == std::vector<Rational>{5, 10, 6, 1});
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(rd.at(n, k).rational() == oracle::riordan_entry(n, k));

  Triangle a15 = Triangle::build(family(Family::a154602), 8);
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(a15.at(n, k).rational() == oracle::a154602_entry(n, k));

  // Whitney and associated Whitney against their own two-term recurrences
  Triangle wh = Triangle::build(family(Family::whitney, 2), 7);
  std::vector<std::vector<Rational>> w{{1}};
  for (int n = 1; n <= 7; ++n) {
    std::vector<Rational> row(n + 1, Rational(0));
    for (int k = 0; k <= n; ++k) {
      Rational prev_k = k <= n - 1 ? w[n - 1][k] : Rational(0);
      Rational prev_km = k >= 1 ? w[n - 1][k - 1] : Rational(0);
      row[k] = (Rational(2) * k + 1) * prev_k + prev_km;
    }
    w.push_back(row);
    CHECK(numeric_row(wh, n) == row);
  }
}

TEST_CASE("row polynomials") {
  Triangle s2 = Triangle::build(family(Family::stirling2), 4);
  Ring rq = Ring::of({Var::q});
  Scalar q = Scalar::variable(rq, Var::q);
  CHECK(row_polynomial(s2, 2) == q + q.pow(2));
  CHECK(row_polynomial(s2, 0) == Scalar(1).embed(rq));

  Triangle rd = Triangle::build(family(Family::riordan_a049020), 4);
  CHECK(row_polynomial(rd, 2) == Scalar(2).embed(rq) + Scalar(3) * q + q.pow(2));
}

TEST_CASE("explicit entry worked examples") {
  CHECK(explicit_entry(family(Family::stirling2), 4, 2) == Scalar(7));
  CHECK(explicit_entry(family(Family::falling_factorial_a008279), 3, 2) ==
        Scalar(6));
  CHECK(explicit_entry(family(Family::stirling2), 0, 0) == Scalar(1));
  CHECK(explicit_entry(Params::rationals(0, 0, 0, 0, 0), 0, 0) == Scalar(1));
  CHECK_THROWS_AS(explicit_entry(Params::symbolic(), 1, 0), usage_error);
}

TEST_CASE("explicit entry equals the recurrence on random points") {
  auto points = random_rational_params(16, 99);
  for (const auto& p : points) {
    Triangle tri = Triangle::build(p, 9);
    for (int n = 0; n <= 9; ++n)
      for (int k = 0; k <= n; ++k)
        CHECK(explicit_entry(p, n, k) == tri.at(n, k));
  }
}

TEST_CASE("the truncated tail of the explicit formula vanishes") {
  // For i > n the inner alternating sum is the i-th finite difference of a
  // degree-n polynomial; spot-check that the i = n+1 term is zero.
  auto points = random_rational_params(8, 5);
  for (const auto& p : points) {
    const Rational a1 = p.a1.rational(), a2 = p.a2.rational();
    if (a1 == 0) continue;
    for (int n = 0; n <= 5; ++n) {
      int i = n + 1;
      Rational inner(0);
      for (int j = 0; j <= i; ++j) {
        Rational term = binomial(i, j) * rational_pow(a2 + a1 * j, n);
        if ((i - j) % 2) term = -term;
        inner += term;
      }
      CHECK(inner == 0);
    }
  }
}

TEST_CASE("production matrix bands and verification") {
  // Stirling: r_n = 1, s_n = n, t_n = 0
  ProductionMatrix j = production_matrix(family(Family::stirling2), 5);
  for (int n = 0; n <= 5; ++n) {
    CHECK(j.super[n] == Scalar(1));
    CHECK(j.diag[n] == Scalar(Rational(n)));
    CHECK(j.sub[n] == Scalar(0));
  }

  // lam = 0 kills the subdiagonal for any a1, b1
  ProductionMatrix j2 =
      production_matrix(Params::rationals(3, 1, 2, 1, 0), 5);
  for (int n = 0; n <= 5; ++n) CHECK(j2.sub[n] == Scalar(0));

  CHECK(!verify_production(Triangle::build(family(Family::stirling2), 8)));
  CHECK(!verify_production(Triangle::build(Params::symbolic(), 5)));
}

TEST_CASE("factorization T = A * B") {
  // lam = 0: B is the identity and T = A
  Params p0 = Params::rationals(2, 1, 1, 3, 0);
  FactorPair f0 = factor_triangles(p0, 5);
  Triangle t0 = Triangle::build(p0, 5);
  for (int n = 0; n <= 5; ++n)
    for (int k = 0; k <= n; ++k) {
      CHECK(f0.b[n][k] == (n == k ? Scalar(1) : Scalar(0)));
      CHECK(f0.a[n][k] == t0.at(n, k));
    }

  CHECK(!verify_factorization(Triangle::build(family(Family::stirling2), 6)));
  CHECK(!verify_factorization(Triangle::build(Params::symbolic(), 4)));

  // B_{n,k} = C(n,k) lam^{n-k} with symbolic lam
  Ring rl = Ring::of({Var::lam});
  Params pl = family(Family::riordan_a049020);
  pl.lam = Scalar::variable(rl, Var::lam);
  FactorPair fl = factor_triangles(pl, 4);
  Scalar lam = Scalar::variable(rl, Var::lam);
  CHECK(fl.b[4][1] == Scalar(4) * lam.pow(3));
  CHECK(!verify_factorization(Triangle::build(pl, 4)));
}

TEST_CASE("positivity of entries") {
  // positivity regime: nonnegative rational entries
  Params p = Params::rationals(make_rational(1, 2), 2, 1, make_rational(3, 2),
                               make_rational(1, 3));
  CHECK(p.positivity_regime());
  Triangle tri = Triangle::build(p, 8);
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(sign(tri.at(n, k).rational()) >= 0);

  // fully symbolic entries are coefficientwise nonnegative
  Triangle sym = Triangle::build(Params::symbolic(), 7);
  for (int n = 0; n <= 7; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(sym.at(n, k).nonnegative_coefficients());
  CHECK_FALSE(Params::symbolic().positivity_regime());
}

TEST_CASE("recurrence suite passes") {
  SuiteOptions opts;
  opts.rows = 6;
  CHECK(run_suite("recurrence", opts).pass);
}
