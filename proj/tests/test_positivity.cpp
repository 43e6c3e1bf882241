#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "swr/positivity.hpp"
#include "swr/realroot.hpp"
#include "swr/suites.hpp"

using namespace swr;

namespace {

Params family(Family f, Rational m = Rational(0)) {
  return specialization_params({f, m});
}

Matrix from_ints(const std::vector<std::vector<int>>& rows) {
  Matrix m;
  for (const auto& r : rows) {
    std::vector<Scalar> row;
    for (int v : r) row.push_back(Scalar(Rational(v)));
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace

TEST_CASE("tp_check finds the constructed counterexample") {
  auto w = tp_check(from_ints({{1, 2}, {3, 1}}), 2);
  REQUIRE(w);
  CHECK(w->rows == std::vector<int>{0, 1});
  CHECK(w->cols == std::vector<int>{0, 1});
  CHECK(w->minor == Scalar(-5));
}

TEST_CASE("tp_check passes on triangle truncations") {
  Triangle s2 = Triangle::build(family(Family::stirling2), 6);
  CHECK(!tp_check(triangle_matrix(s2, 7), 3));

  Triangle sym = Triangle::build(Params::symbolic(), 5);
  CHECK(!tp_check(triangle_matrix(sym, 6), 3));

  // order monotonicity on a sample: passing at order 3 implies the lower
  // orders pass on the same matrix
  CHECK(!tp_check(triangle_matrix(s2, 7), 2));
  CHECK(!tp_check(triangle_matrix(s2, 7), 1));
}

TEST_CASE("sm_check") {
  std::vector<Scalar> bell;
  for (int n = 0; n <= 6; ++n) bell.push_back(Scalar(oracle::bell(n)));
  CHECK(!sm_check(bell, 3));

  std::vector<Scalar> bad{Scalar(1), Scalar(2), Scalar(1)};
  auto w = sm_check(bad, 2);
  REQUIRE(w);
  CHECK(w->minor == Scalar(-3));

  // symbolic Bell polynomials, full order 4
  Triangle tri = Triangle::build(family(Family::stirling2), 8);
  std::vector<Scalar> polys;
  for (int n = 0; n <= 8; ++n) polys.push_back(row_polynomial(tri, n));
  CHECK(!sm_check(std::span<const Scalar>(polys).first(7), 4));
}

TEST_CASE("log-convexity operator and the depth-3 check") {
  std::vector<Scalar> bell;
  for (int n = 0; n <= 8; ++n) bell.push_back(Scalar(oracle::bell(n)));
  auto l1 = lcx_operator(bell);
  CHECK(l1[0] == Scalar(1));   // B0 B2 - B1^2
  CHECK(l1[1] == Scalar(1));   // B1 B3 - B2^2
  CHECK(l1[2] == Scalar(5));   // B2 B4 - B3^2
  CHECK(!three_x_lcx_check(bell, 3));

  std::vector<Scalar> ones(9, Scalar(1));
  auto lz = lcx_operator(ones);
  for (const auto& x : lz) CHECK(x.is_zero());
  CHECK(!three_x_lcx_check(ones, 3));

  std::vector<Scalar> concave{Scalar(1), Scalar(3), Scalar(1)};
  auto w = three_x_lcx_check(concave, 1);
  REQUIRE(w);
  CHECK(w->value == Scalar(-8));

  CHECK_THROWS_AS(three_x_lcx_check(std::vector<Scalar>{Scalar(1)}, 1),
                  usage_error);

  // symbolic Bell polynomials at depth 3 (desk-scale slice)
  Triangle tri = Triangle::build(family(Family::stirling2), 7);
  std::vector<Scalar> polys;
  for (int n = 0; n <= 7; ++n) polys.push_back(row_polynomial(tri, n));
  CHECK(!three_x_lcx_check(polys, 3));
}

TEST_CASE("log-concavity of coefficient rows") {
  std::vector<Rational> row{0, 1, 7, 6, 1};
  CHECK(!log_concavity_check(row));
  std::vector<Rational> bad{1, 1, 2};
  auto idx = log_concavity_check(bad);
  REQUIRE(idx);
  CHECK(*idx == 1);
  std::vector<Rational> tiny{5, 2};
  CHECK(!log_concavity_check(tiny));
}

TEST_CASE("convolution preserves the moment property") {
  Triangle s2 = Triangle::build(family(Family::stirling2), 8);

  // x = n!, y = 1: ordered set partitions 1, 1, 3, 13, 75, ...
  auto z = convolution(s2, sm_registry_sequence("factorial", 9),
                       sm_registry_sequence("ones", 9));
  for (int n = 0; n <= 8; ++n) CHECK(z[n] == oracle::fubini(n));
  std::vector<std::vector<Scalar>> h(3, std::vector<Scalar>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h[i][j] = Scalar(z[i + j]);
  CHECK(oracle::cofactor_det(h) == Scalar(32));

  // x = y = 1: Bell numbers
  auto zb = convolution(s2, sm_registry_sequence("ones", 9),
                        sm_registry_sequence("ones", 9));
  for (int n = 0; n <= 8; ++n) CHECK(zb[n] == oracle::bell(n));

  // delta triangle: z_n = x_n * y_0
  Params delta = Params::rationals(0, 0, 0, 1, 0);
  Triangle dt = Triangle::build(delta, 6);
  auto x = sm_registry_sequence("pow2", 7);
  auto zc = convolution(dt, x, sm_registry_sequence("catalan", 7));
  for (int n = 0; n <= 6; ++n) CHECK(zc[n] == x[n]);

  CHECK(!convolution_sm_check(s2, "factorial", "ones", 5));
  CHECK(!convolution_sm_check(s2, "catalan", "pow2", 4));
  CHECK_THROWS_AS(sm_registry_sequence("nope", 3), usage_error);
}

TEST_CASE("sturm counting worked examples") {
  // q^2 + q: roots -1 and 0
  UniPoly p({Rational(0), Rational(1), Rational(1)});
  CHECK(count_roots_in(p, Endpoint::closed_at(Rational(-2)),
                       Endpoint::closed_at(Rational(0))) == 2);
  CHECK(count_roots_in(p, Endpoint::open(Rational(-1)),
                       Endpoint::open(Rational(0))) == 0);
  CHECK(count_roots_in(p, Endpoint::neg_inf(), Endpoint::pos_inf()) == 2);

  // q^2 + 1: no real roots
  UniPoly c({Rational(1), Rational(0), Rational(1)});
  CHECK(count_roots_in(c, Endpoint::neg_inf(), Endpoint::pos_inf()) == 0);
  CHECK_FALSE(is_real_rooted(c));

  // multiplicity-aware count: (x-1)^2 (x+2)
  UniPoly dbl = UniPoly({Rational(-1), Rational(1)}) *
                UniPoly({Rational(-1), Rational(1)}) *
                UniPoly({Rational(2), Rational(1)});
  CHECK(count_roots_in(dbl, Endpoint::neg_inf(), Endpoint::pos_inf()) == 2);
  CHECK(count_real_roots_with_multiplicity(dbl) == 3);
  CHECK(is_real_rooted(dbl));
}

TEST_CASE("root isolation") {
  // roots at -1, 0, and 1/2 exactly
  UniPoly p = UniPoly({Rational(1), Rational(1)}) *
              UniPoly({Rational(0), Rational(1)}) *
              UniPoly({make_rational(-1, 2), Rational(1)});
  auto boxes = isolate_roots(p);
  REQUIRE(boxes.size() == 3);
  for (size_t i = 1; i < boxes.size(); ++i) CHECK(boxes[i - 1].hi <= boxes[i].lo);
  // each box isolates exactly one root
  for (const auto& b : boxes) {
    if (b.exact)
      CHECK(p.eval(b.hi) == 0);
    else
      CHECK(count_roots_in(p, Endpoint::open(b.lo),
                           Endpoint::closed_at(b.hi)) == 1);
    CHECK(b.multiplicity == 1);
  }

  // T_5 for the riordan family (b1 = 0, a2 = 0): 5 simple roots in the
  // closed interval (-inf, -1], with -lam = -1 itself a root since a2 = 0
  Triangle rd = Triangle::build(family(Family::riordan_a049020), 5);
  UniPoly t5 = unipoly_row(rd, 5);
  CHECK(t5.eval(Rational(-1)) == 0);
  CHECK(count_roots_in(t5, Endpoint::neg_inf(),
                       Endpoint::closed_at(Rational(-1))) == 5);
  CHECK(count_roots_in(t5, Endpoint::neg_inf(), Endpoint::open(Rational(-1))) ==
        4);
  CHECK(isolate_roots(t5).size() == 5);
}

TEST_CASE("real roots in the theorem interval") {
  // whitney(2): b1 = 0, roots in (-inf, 0)
  CHECK(!real_rooted_in_interval_check(family(Family::whitney, 2), 4));

  // all-ones parameters: 5 roots in (-2, -1)
  Params ones = Params::rationals(1, 1, 1, 1, 1);
  CHECK(!real_rooted_in_interval_check(ones, 5));
  Triangle tri = Triangle::build(ones, 5);
  UniPoly t5 = unipoly_row(tri, 5);
  CHECK(count_roots_in(t5, Endpoint::open(Rational(-2)),
                       Endpoint::open(Rational(-1))) == 5);

  // n = 0 passes vacuously
  CHECK(!real_rooted_in_interval_check(ones, 0));

  // hypothesis violation is a precondition error: a1(b1+b2) < b1 a2
  CHECK_THROWS_AS(real_rooted_in_interval_check(
                      Params::rationals(0, 5, 1, 0, 0), 3),
                  usage_error);

  // a2 = 0 runs the closed-interval variant (stirling2 has a root at 0)
  CHECK(!real_rooted_in_interval_check(family(Family::stirling2), 6));
}

TEST_CASE("interlacing") {
  UniPoly g({Rational(0), Rational(1)});               // q
  UniPoly f({Rational(0), Rational(1), Rational(1)});  // q^2 + q
  CHECK(!interlacing_check(g, f));  // -1 <= 0 <= 0 with ties allowed

  UniPoly g2({Rational(-1), Rational(1)});  // q - 1, root outside
  CHECK(interlacing_check(g2, f));

  Params ones = Params::rationals(1, 1, 1, 1, 1);
  Triangle tri = Triangle::build(ones, 5);
  CHECK(!interlacing_check(unipoly_row(tri, 4), unipoly_row(tri, 5)));

  CHECK_THROWS_AS(interlacing_check(f, g), usage_error);  // degree order
  UniPoly pos({Rational(1), Rational(0), Rational(1)});   // q^2 + 1
  CHECK_THROWS_AS(interlacing_check(g, pos), usage_error);
}

TEST_CASE("Turan-type stability") {
  // stirling2, n = 1: p = q, weakly stable with a boundary root
  Triangle s2 = Triangle::build(family(Family::stirling2), 3);
  UniPoly p = turan_polynomial(s2, 1);
  CHECK(p == UniPoly({Rational(0), Rational(1)}));
  StabilityReport r = stability_check(p);
  CHECK(r.passed());

  // whitney(1) parameters (1,1,0,1,0), n = 2
  Triangle wh = Triangle::build(family(Family::whitney, 1), 4);
  CHECK(stability_check(turan_polynomial(wh, 2)).passed());

  // constructed failure: q - 1 has a root at +1
  StabilityReport bad = stability_check(UniPoly({Rational(-1), Rational(1)}));
  CHECK_FALSE(bad.passed());
  CHECK(bad.max_real_part == doctest::Approx(1.0));

  // pure imaginary pair: weakly stable only via the numeric fallback
  StabilityReport imag =
      stability_check(UniPoly({Rational(1), Rational(0), Rational(1)}));
  CHECK(imag.passed());
  CHECK(imag.numeric);

  // exact certificate: (x+1)(x+2) = x^2 + 3x + 2
  StabilityReport exact =
      stability_check(UniPoly({Rational(2), Rational(3), Rational(1)}));
  CHECK(exact.passed());
  CHECK_FALSE(exact.numeric);

  CHECK(stability_check(UniPoly()).passed());
}

TEST_CASE("regime suites on a reduced sample") {
  SuiteOptions opts;
  opts.points = 4;
  opts.rows = 8;
  CHECK(run_suite("roots", opts).pass);
  CHECK(run_suite("interlace", opts).pass);
  CHECK(run_suite("logconcave", opts).pass);
  opts.rows = 5;
  CHECK(run_suite("turan", opts).pass);
}
