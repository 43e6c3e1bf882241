#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "swr/power_series.hpp"
#include "swr/scalar.hpp"

using namespace swr;

namespace {

Scalar qv(Ring r) { return Scalar::variable(r, Var::q); }
Scalar lv(Ring r) { return Scalar::variable(r, Var::lam); }

/// Random scalar in the given ring: rationals and small polynomials.
Scalar random_scalar(std::mt19937& rng, Ring ring) {
  std::uniform_int_distribution<int> coin(0, 2);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  if (coin(rng) == 0 || ring.is_empty())
    return Scalar(make_rational(num(rng), den(rng)));
  auto vars = ring.vars();
  std::uniform_int_distribution<int> pick(0, int(vars.size()) - 1);
  std::uniform_int_distribution<int> expo(0, 2);
  Scalar acc(MultiPoly::zero(ring));
  for (int t = 0; t < 3; ++t) {
    Scalar term(MultiPoly::constant(ring, make_rational(num(rng), den(rng))));
    for (int j = 0; j < 2; ++j)
      term *= Scalar::variable(ring, vars[pick(rng)]).pow(expo(rng));
    acc += term;
  }
  return acc;
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(rational_str(parse_rational("3/6")) == "1/2");
  CHECK(rational_str(parse_rational("-4/2")) == "-2");
  CHECK(rational_str(make_rational(0, 7)) == "0");
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(parse_rational("1/0"), usage_error);
  CHECK_THROWS_AS(parse_rational("x"), usage_error);
  CHECK_THROWS_AS(parse_rational(""), usage_error);
}

TEST_CASE("scalar arithmetic matches the worked examples") {
  CHECK(Scalar(make_rational(1, 2)) + Scalar(make_rational(1, 3)) ==
        Scalar(make_rational(5, 6)));

  Ring r = Ring::of({Var::lam, Var::q});
  Scalar p = qv(r) + lv(r);
  Scalar sq = p * p;
  // q^2 + 2 q lam + lam^2
  Scalar expect = qv(r).pow(2) + Scalar(2) * qv(r) * lv(r) + lv(r).pow(2);
  CHECK(sq == expect);
  CHECK(sq.str() == "lam^2 + 2*lam*q + q^2");

  CHECK((sq * Scalar(0)).is_zero());
  CHECK((Scalar(0) * sq).is_zero());
}

TEST_CASE("ring mixing is rejected, rationals embed freely") {
  Ring rq = Ring::of({Var::q});
  Ring rl = Ring::of({Var::lam});
  Scalar q = qv(rq);
  Scalar l = lv(rl);
  CHECK_THROWS_AS(q + l, usage_error);
  CHECK(q + Scalar(make_rational(1, 2)) ==
        qv(rq) + Scalar(make_rational(1, 2)));
  CHECK(q.embed(Ring::of({Var::lam, Var::q})) + l.embed(Ring::of(
            {Var::lam, Var::q})) == (qv(Ring::of({Var::lam, Var::q})) +
                                     lv(Ring::of({Var::lam, Var::q}))));
}

TEST_CASE("poly_bind worked examples") {
  Ring r = Ring::of({Var::lam, Var::q});
  Scalar p = qv(r) + lv(r);
  CHECK(p.bind({{Var::lam, Rational(0)}}) == Scalar(qv(Ring::of({Var::q}))));

  Ring ra = Ring::of({Var::a1, Var::a2, Var::q});
  Scalar f = Scalar::variable(ra, Var::a1) * qv(ra) +
             Scalar::variable(ra, Var::a2);
  CHECK(f.bind({{Var::a1, Rational(1)}, {Var::a2, Rational(0)}}) ==
        Scalar(qv(Ring::of({Var::q}))));

  Scalar sq = (qv(r) + lv(r)).pow(2);
  Scalar bound = sq.bind({{Var::q, Rational(1)}, {Var::lam, Rational(1)}});
  CHECK(bound.is_rational());
  CHECK(bound == Scalar(4));

  CHECK_THROWS_AS(p.bind({{Var::a1, Rational(1)}}), usage_error);
}

TEST_CASE("coefficientwise nonnegativity") {
  Ring r = Ring::of({Var::lam, Var::q});
  Scalar sq = (qv(r) + lv(r)).pow(2);
  CHECK(sq.nonnegative_coefficients());
  CHECK_FALSE((qv(r) - lv(r)).nonnegative_coefficients());
  CHECK(Scalar(MultiPoly::zero(r)).nonnegative_coefficients());
}

TEST_CASE("canonical graded-lex order and serialization round trip") {
  Ring r = Ring::of({Var::a1, Var::q});
  Scalar a = Scalar::variable(r, Var::a1);
  Scalar q = qv(r);
  Scalar p = q.pow(2) + a * q + a + Scalar(3);
  const auto& terms = p.poly().terms();
  for (size_t i = 1; i < terms.size(); ++i) CHECK(terms[i - 1].key > terms[i].key);
  MultiPoly rebuilt = MultiPoly::from_records(r, p.poly().to_records());
  CHECK(Scalar(rebuilt) == p);
}

TEST_CASE("ring axioms on random scalars") {
  std::mt19937 rng(7);
  Ring ring = Ring::of({Var::a1, Var::b1, Var::lam, Var::q});
  for (int iter = 0; iter < 60; ++iter) {
    Scalar x = random_scalar(rng, ring).embed(ring);
    Scalar y = random_scalar(rng, ring).embed(ring);
    Scalar z = random_scalar(rng, ring).embed(ring);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x - x == Scalar(0).embed(ring));
  }
}

TEST_CASE("bind commutes with arithmetic") {
  std::mt19937 rng(11);
  Ring ring = Ring::of({Var::a1, Var::q});
  std::map<Var, Rational> bind{{Var::a1, make_rational(2, 3)},
                               {Var::q, make_rational(-1, 2)}};
  for (int iter = 0; iter < 40; ++iter) {
    Scalar x = random_scalar(rng, ring).embed(ring);
    Scalar y = random_scalar(rng, ring).embed(ring);
    CHECK((x + y).bind(bind) == x.bind(bind) + y.bind(bind));
    CHECK((x * y).bind(bind) == x.bind(bind) * y.bind(bind));
  }
}

TEST_CASE("exact division inverts multiplication") {
  std::mt19937 rng(13);
  Ring ring = Ring::of({Var::b1, Var::q});
  for (int iter = 0; iter < 40; ++iter) {
    Scalar a = random_scalar(rng, ring).embed(ring);
    Scalar b = random_scalar(rng, ring).embed(ring);
    if (b.is_zero()) continue;
    CHECK(Scalar::divide_exact(a * b, b) == a);
  }
  Ring rq = Ring::of({Var::q});
  Scalar q = qv(rq);
  CHECK_THROWS_AS(Scalar::divide_exact(q + Scalar(1), q), usage_error);
}

TEST_CASE("power series basics") {
  // (1+t)(1-t) = 1-t^2
  PowerSeries one_plus(4), one_minus(4);
  one_plus.set_coeff(0, Scalar(1));
  one_plus.set_coeff(1, Scalar(1));
  one_minus.set_coeff(0, Scalar(1));
  one_minus.set_coeff(1, Scalar(-1));
  PowerSeries prod = ps_mul(one_plus, one_minus);
  CHECK(prod.coeff(0) == Scalar(1));
  CHECK(prod.coeff(1) == Scalar(0));
  CHECK(prod.coeff(2) == Scalar(-1));
  CHECK(prod.coeff(3) == Scalar(0));

  // f * 1 = f
  PowerSeries one = ps_constant(4, Scalar(1));
  CHECK(ps_mul(one_plus, one) == one_plus);

  // order mismatch truncates to the smaller order
  PowerSeries low(2);
  low.set_coeff(0, Scalar(1));
  CHECK(ps_mul(one_plus, low).order() == 2);
}

TEST_CASE("exp, log, pow worked examples") {
  PowerSeries t = ps_identity(6);
  PowerSeries e = ps_exp(t);
  CHECK(e.coeff(0) == Scalar(1));
  CHECK(e.coeff(1) == Scalar(1));
  CHECK(e.coeff(2) == Scalar(make_rational(1, 2)));
  CHECK(e.coeff(3) == Scalar(make_rational(1, 6)));

  // (1-t)^{-1} = 1 + t + t^2 + ...
  PowerSeries one_minus(6);
  one_minus.set_coeff(0, Scalar(1));
  one_minus.set_coeff(1, Scalar(-1));
  PowerSeries geo = ps_pow(one_minus, Rational(-1));
  for (int i = 0; i <= 6; ++i) CHECK(geo.coeff(i) == Scalar(1));

  // sqrt(1-t)^2 = 1-t, and the first coefficients are 1, -1/2, -1/8
  PowerSeries root = ps_pow(one_minus, make_rational(1, 2));
  CHECK(root.coeff(1) == Scalar(make_rational(-1, 2)));
  CHECK(root.coeff(2) == Scalar(make_rational(-1, 8)));
  CHECK(ps_mul(root, root) == one_minus);

  CHECK_THROWS_AS(ps_exp(one_minus), usage_error);
  CHECK_THROWS_AS(ps_log(t), usage_error);
  CHECK_THROWS_AS(ps_pow(t, Rational(2)), usage_error);
}

TEST_CASE("exp/log round trip and integer powers") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  for (int iter = 0; iter < 10; ++iter) {
    PowerSeries f(8);
    for (int i = 1; i <= 8; ++i)
      f.set_coeff(i, Scalar(make_rational(num(rng), den(rng))));
    CHECK(ps_log(ps_exp(f)) == f);

    PowerSeries g(8);
    g.set_coeff(0, Scalar(1));
    for (int i = 1; i <= 8; ++i)
      g.set_coeff(i, Scalar(make_rational(num(rng), den(rng))));
    CHECK(ps_exp(ps_log(g)) == g);

    PowerSeries cube = ps_pow(g, Rational(3));
    CHECK(cube == ps_mul(g, ps_mul(g, g)));
    CHECK(ps_pow(g, Rational(0)) == ps_constant(8, Scalar(1)));
  }
}

TEST_CASE("power series over a polynomial ring") {
  Ring rq = Ring::of({Var::q});
  PowerSeries f(5);
  for (int i = 1; i <= 5; ++i) f.set_coeff(i, qv(rq));
  PowerSeries e = ps_exp(f);
  CHECK(e.coeff(2) == qv(rq) + Scalar(make_rational(1, 2)) * qv(rq).pow(2));
  CHECK(ps_log(e) == f);
}
