#include "swr/suites.hpp"

#include <atomic>
#include <chrono>
#include <future>
#include <random>

#include "swr/jacobi.hpp"
#include "swr/path_oracle.hpp"
#include "swr/positivity.hpp"
#include "swr/realroot.hpp"

namespace swr {

namespace {

Rational random_rational(std::mt19937& rng, int lo, int hi) {
  std::uniform_int_distribution<int> num(lo, hi);
  std::uniform_int_distribution<int> den(1, 3);
  return make_rational(num(rng), den(rng));
}

json cell_witness_json(const CellWitness& w) {
  return json{{"n", w.n},
              {"k", w.k},
              {"expected", scalar_to_json(w.expected)},
              {"got", scalar_to_json(w.got)},
              {"context", w.context}};
}

json params_json(const Params& p) {
  return json{{"a1", scalar_to_json(p.a1)},
              {"a2", scalar_to_json(p.a2)},
              {"b1", scalar_to_json(p.b1)},
              {"b2", scalar_to_json(p.b2)},
              {"lam", scalar_to_json(p.lam)}};
}

int defaulted(int value, int fallback) { return value < 0 ? fallback : value; }

}  // namespace

std::vector<Params> random_rational_params(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Params> out;
  for (int i = 0; i < count; ++i) {
    bool a1_zero = (i % 4) == 1 || (i % 4) == 3;
    bool b1_zero = (i % 4) == 2 || (i % 4) == 3;
    Rational a1 = a1_zero ? Rational(0) : random_rational(rng, -4, 4);
    Rational b1 = b1_zero ? Rational(0) : random_rational(rng, -4, 4);
    out.push_back(Params::rationals(a1, random_rational(rng, -4, 4), b1,
                                    random_rational(rng, -4, 4),
                                    random_rational(rng, -3, 3)));
  }
  return out;
}

std::vector<Params> random_regime_points(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Params> out;
  while (static_cast<int>(out.size()) < count) {
    int i = static_cast<int>(out.size());
    bool b1_zero = (i % 3) == 1;
    bool lam_zero = (i % 3) == 2 || (i % 6) == 1;
    Rational a1 = random_rational(rng, 0, 4);
    Rational a2 = random_rational(rng, 1, 4);
    Rational b1 = b1_zero ? Rational(0) : random_rational(rng, 1, 4);
    Rational b2 = random_rational(rng, 0, 4);
    Rational lam = lam_zero ? Rational(0) : random_rational(rng, 0, 3);
    if (b1 + b2 == 0 || a1 + b1 == 0) continue;  // degenerate rows
    if (a1 * (b1 + b2) < b1 * a2) continue;  // hypothesis of the root theorem
    out.push_back(Params::rationals(a1, a2, b1, b2, lam));
  }
  return out;
}

std::vector<Params> random_positive_params(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Params> out;
  for (int i = 0; i < count; ++i)
    out.push_back(Params::rationals(
        random_rational(rng, 1, 4), random_rational(rng, 1, 4),
        random_rational(rng, 1, 4), random_rational(rng, 1, 4),
        random_rational(rng, 1, 3)));
  return out;
}

namespace {

// ---------------------------------------------------------------------------
// individual suites
// ---------------------------------------------------------------------------

SuiteResult suite_recurrence(const SuiteOptions& opts) {
  SuiteResult res{"recurrence"};
  const int rows = defaulted(opts.rows, 8);
  std::vector<Params> points =
      opts.params ? std::vector<Params>{*opts.params}
                  : std::vector<Params>{Params::symbolic(),
                                        specialization_params(
                                            {Family::riordan_a049020})};
  for (const auto& p : points) {
    Triangle tri = Triangle::build(p, rows);
    if (tri.row(0) != std::vector<Scalar>{Scalar(1)}) {
      res.pass = false;
      res.detail = json{{"reason", "row 0 is not [1]"}};
      return res;
    }
    // every entry against the three-term recurrence, out-of-range terms zero
    for (int n = 1; n <= rows; ++n) {
      for (int k = 0; k <= n; ++k) {
        auto prev = [&](int kk) {
          return kk >= 0 && kk <= n - 1 ? tri.at(n - 1, kk) : Scalar(0);
        };
        Scalar expect =
            (p.b1 * Scalar(Rational(k)) + p.b2) * prev(k - 1) +
            ((p.lam * p.b1 * Scalar(2) + p.a1) * Scalar(Rational(k)) + p.a2 +
             p.lam * (p.b1 + p.b2)) *
                prev(k) +
            p.lam * (p.a1 + p.lam * p.b1) * Scalar(Rational(k + 1)) *
                prev(k + 1);
        if (expect != tri.at(n, k)) {
          res.pass = false;
          res.detail = cell_witness_json(
              CellWitness{n, k, tri.at(n, k), expect, "recurrence"});
          return res;
        }
      }
    }
    // row-polynomial recurrence
    // T_n(q) = [a2+(b1+b2)(q+lam)] T_{n-1}(q)
    //        + (q+lam)[a1+b1(q+lam)] T'_{n-1}(q)
    Ring rq = p.ring().with(Var::q);
    auto lift = [&](const Scalar& x) {
      return x.is_poly() ? x.embed(rq) : x;
    };
    Scalar shift = Scalar::variable(rq, Var::q) + lift(p.lam);
    for (int n = 1; n <= rows; ++n) {
      Scalar tn = row_polynomial(tri, n);
      Scalar tm = row_polynomial(tri, n - 1);
      Scalar expect = (lift(p.a2) + (lift(p.b1) + lift(p.b2)) * shift) * tm +
                      shift * (lift(p.a1) + lift(p.b1) * shift) *
                          tm.derivative(Var::q);
      if (expect != tn) {
        res.pass = false;
        res.detail = json{{"reason", "row-polynomial recurrence fails"},
                          {"n", n}};
        return res;
      }
    }
  }
  res.detail = json{{"points", points.size()}, {"rows", rows}};
  return res;
}

SuiteResult suite_explicit(const SuiteOptions& opts) {
  SuiteResult res{"explicit"};
  const int rows = defaulted(opts.rows, 12);
  const int points = defaulted(opts.points, 50);
  std::vector<Params> sample =
      opts.params ? std::vector<Params>{*opts.params}
                  : random_rational_params(points, opts.seed);
  for (const auto& p : sample) {
    Triangle tri = Triangle::build(p, rows);
    for (int n = 0; n <= rows; ++n)
      for (int k = 0; k <= n; ++k) {
        Scalar closed = explicit_entry(p, n, k);
        if (closed != tri.at(n, k)) {
          res.pass = false;
          res.detail = cell_witness_json(
              CellWitness{n, k, tri.at(n, k), closed, "explicit"});
          res.detail["params"] = params_json(p);
          return res;
        }
      }
  }
  res.detail = json{{"points", sample.size()}, {"rows", rows}};
  return res;
}

SuiteResult suite_production(const SuiteOptions& opts) {
  SuiteResult res{"production"};
  const int rows = defaulted(opts.rows, 6);
  std::vector<Params> points =
      opts.params ? std::vector<Params>{*opts.params}
                  : std::vector<Params>{Params::symbolic()};
  if (!opts.params) {
    auto numeric = random_rational_params(8, opts.seed);
    points.insert(points.end(), numeric.begin(), numeric.end());
  }
  for (const auto& p : points) {
    if (auto w = verify_production(Triangle::build(p, rows))) {
      res.pass = false;
      res.detail = cell_witness_json(*w);
      res.detail["params"] = params_json(p);
      return res;
    }
  }
  res.detail = json{{"points", points.size()}, {"rows", rows}};
  return res;
}

SuiteResult suite_factorization(const SuiteOptions& opts) {
  SuiteResult res{"factorization"};
  const int rows = defaulted(opts.rows, 6);
  std::vector<Params> points =
      opts.params ? std::vector<Params>{*opts.params}
                  : std::vector<Params>{Params::symbolic()};
  if (!opts.params) {
    auto numeric = random_rational_params(8, opts.seed + 1);
    points.insert(points.end(), numeric.begin(), numeric.end());
  }
  for (const auto& p : points) {
    if (auto w = verify_factorization(Triangle::build(p, rows))) {
      res.pass = false;
      res.detail = cell_witness_json(*w);
      res.detail["params"] = params_json(p);
      return res;
    }
  }
  res.detail = json{{"points", points.size()}, {"rows", rows}};
  return res;
}

SuiteResult suite_cf(const SuiteOptions& opts) {
  SuiteResult res{"cf"};
  const int rows = defaulted(opts.rows, 10);
  std::vector<Params> points =
      opts.params ? std::vector<Params>{*opts.params}
                  : std::vector<Params>{
                        Params::symbolic(),
                        specialization_params({Family::stirling2}),
                        specialization_params({Family::riordan_a049020})};
  for (const auto& p : points) {
    Triangle tri = Triangle::build(p, rows);
    auto series = cf_to_series(jacobi_coeffs_rows(p, rows), rows);
    for (int n = 0; n <= rows; ++n) {
      if (series[n] != row_polynomial(tri, n)) {
        res.pass = false;
        res.detail = json{{"reason", "cf series differs from row polynomial"},
                          {"n", n},
                          {"params", params_json(p)}};
        return res;
      }
    }
  }
  res.detail = json{{"points", points.size()}, {"rows", rows}};
  return res;
}

SuiteResult suite_hankel(const SuiteOptions& opts) {
  SuiteResult res{"hankel"};
  const int nmax = defaulted(opts.rows, 6);
  const int points = defaulted(opts.points, 20);
  std::vector<Params> sample =
      opts.params ? std::vector<Params>{*opts.params}
                  : std::vector<Params>{
                        specialization_params({Family::stirling2}),
                        specialization_params({Family::riordan_a049020})};
  if (!opts.params) {
    auto numeric = random_positive_params(points, opts.seed);
    sample.insert(sample.end(), numeric.begin(), numeric.end());
  }
  bool symbolic_q = !opts.params;
  int idx = 0;
  for (const auto& p : sample) {
    // first two sample points run with symbolic q, the rest with q bound
    JacobiCF cf = jacobi_coeffs_rows(p, 2 * nmax + 1);
    std::vector<Scalar> series;
    if (symbolic_q && idx < 2) {
      series = cf_to_series(cf, 2 * nmax);
    } else {
      std::map<Var, Rational> qbind{{Var::q, make_rational(1, 2)}};
      for (auto& x : cf.s) x = x.bind_present(qbind);
      for (auto& x : cf.r) x = x.bind_present(qbind);
      series = cf_to_series(cf, 2 * nmax);
    }
    for (int n = 1; n <= nmax; ++n) {
      for (int shift = 0; shift <= 1; ++shift) {
        if (opts.shift >= 0 && shift != opts.shift) continue;
        Scalar direct = hankel_det_direct(series, n, shift);
        Scalar closed = hankel_det_via_cf(cf, n, shift);
        if (direct != closed) {
          res.pass = false;
          res.detail = json{{"reason", "hankel determinant mismatch"},
                            {"n", n},
                            {"shift", shift},
                            {"params", params_json(p)},
                            {"direct", scalar_to_json(direct)},
                            {"via_cf", scalar_to_json(closed)}};
          return res;
        }
      }
    }
    ++idx;
  }
  res.detail = json{{"points", sample.size()}, {"n", nmax}};
  return res;
}

SuiteResult suite_egf(const SuiteOptions& opts) {
  SuiteResult res{"egf"};
  const int order = defaulted(opts.rows, 10);
  const int per_branch = defaulted(opts.points, 20);
  std::mt19937 rng(opts.seed);
  std::vector<Params> sample;
  std::vector<Rational> qs;
  if (opts.params) {
    sample.push_back(*opts.params);
    qs.push_back(Rational(1));
  } else {
    for (int branch = 0; branch < 4; ++branch) {
      bool a1_zero = branch & 1, b1_zero = branch & 2;
      for (int i = 0; i < per_branch; ++i) {
        Rational a1 = a1_zero ? Rational(0) : random_rational(rng, -3, 3);
        Rational b1 = b1_zero ? Rational(0) : random_rational(rng, -3, 3);
        sample.push_back(Params::rationals(a1, random_rational(rng, -3, 3),
                                           b1, random_rational(rng, -3, 3),
                                           random_rational(rng, -2, 2)));
        qs.push_back(random_rational(rng, -3, 3));
      }
    }
    // the Stirling limit e^{q(e^t - 1)}
    sample.push_back(specialization_params({Family::stirling2}));
    qs.push_back(Rational(1));
  }
  for (size_t i = 0; i < sample.size(); ++i) {
    Triangle tri = Triangle::build(sample[i], order);
    if (auto w = egf_check(tri, qs[i])) {
      res.pass = false;
      res.detail = json{{"reason", "egf coefficient mismatch"},
                        {"n", w->n},
                        {"expected", rational_str(w->expected)},
                        {"got", rational_str(w->got)},
                        {"q", rational_str(qs[i])},
                        {"params", params_json(sample[i])}};
      return res;
    }
  }
  res.detail = json{{"points", sample.size()}, {"order", order}};
  return res;
}

SuiteResult suite_oracle(const SuiteOptions& opts) {
  SuiteResult res{"oracle"};
  const int nmax = std::min(defaulted(opts.rows, 8), opts.guard);
  std::vector<Params> points =
      opts.params ? std::vector<Params>{*opts.params}
                  : std::vector<Params>{Params::symbolic()};
  if (!opts.params) {
    auto numeric = random_rational_params(6, opts.seed);
    points.insert(points.end(), numeric.begin(), numeric.end());
  }
  for (const auto& p : points) {
    Triangle tri = Triangle::build(p, nmax);
    for (int n = 0; n <= nmax; ++n)
      for (int k = 0; k <= n; ++k) {
        Scalar counted = enumerate_entry(p, n, k, opts.guard);
        if (counted != tri.at(n, k)) {
          res.pass = false;
          res.detail = cell_witness_json(
              CellWitness{n, k, tri.at(n, k), counted, "path oracle"});
          res.detail["params"] = params_json(p);
          return res;
        }
      }
    // closed paths against row polynomials and the cf series
    Ring rq = p.ring().with(Var::q);
    Scalar qvar = Scalar::variable(rq, Var::q);
    auto series = cf_to_series(jacobi_coeffs_rows(p, nmax), nmax);
    for (int n = 0; n <= nmax; ++n) {
      Scalar counted = enumerate_row_polynomial(p, n, qvar, opts.guard);
      Scalar expect = row_polynomial(tri, n);
      if (counted != expect || counted != series[n]) {
        res.pass = false;
        res.detail = json{{"reason", "closed-path enumeration mismatch"},
                          {"n", n},
                          {"params", params_json(p)}};
        return res;
      }
    }
  }
  res.detail = json{{"points", points.size()}, {"n", nmax}};
  return res;
}

SuiteResult suite_roots(const SuiteOptions& opts) {
  SuiteResult res{"roots"};
  const int nmax = defaulted(opts.rows, 12);
  const int points = defaulted(opts.points, 20);
  std::vector<Params> sample =
      opts.params ? std::vector<Params>{*opts.params}
                  : random_regime_points(points, opts.seed);
  for (const auto& p : sample) {
    for (int n = 0; n <= nmax; ++n) {
      if (auto fail = real_rooted_in_interval_check(p, n)) {
        res.pass = false;
        res.detail = json{{"reason", fail->reason},
                          {"n", n},
                          {"params", params_json(p)}};
        return res;
      }
    }
  }
  res.detail = json{{"points", sample.size()}, {"n", nmax}};
  return res;
}

SuiteResult suite_interlace(const SuiteOptions& opts) {
  SuiteResult res{"interlace"};
  const int nmax = defaulted(opts.rows, 12);
  const int points = defaulted(opts.points, 20);
  std::vector<Params> sample =
      opts.params ? std::vector<Params>{*opts.params}
                  : random_regime_points(points, opts.seed);
  for (const auto& p : sample) {
    Triangle tri = Triangle::build(p, nmax);
    for (int n = 1; n <= nmax; ++n) {
      UniPoly f = unipoly_row(tri, n);
      UniPoly g = unipoly_row(tri, n - 1);
      if (auto fail = interlacing_check(g, f)) {
        res.pass = false;
        res.detail = json{{"reason", fail->reason},
                          {"n", n},
                          {"params", params_json(p)}};
        return res;
      }
    }
  }
  res.detail = json{{"points", sample.size()}, {"n", nmax}};
  return res;
}

SuiteResult suite_logconcave(const SuiteOptions& opts) {
  SuiteResult res{"logconcave"};
  const int nmax = defaulted(opts.rows, 12);
  const int points = defaulted(opts.points, 20);
  std::vector<Params> sample =
      opts.params ? std::vector<Params>{*opts.params}
                  : random_regime_points(points, opts.seed);
  for (const auto& p : sample) {
    Triangle tri = Triangle::build(p, nmax);
    for (int n = 0; n <= nmax; ++n) {
      std::vector<Rational> row;
      for (const auto& x : tri.row(n)) row.push_back(x.rational());
      if (auto idx = log_concavity_check(row)) {
        res.pass = false;
        res.detail = json{{"reason", "log-concavity fails"},
                          {"n", n},
                          {"index", *idx},
                          {"params", params_json(p)}};
        return res;
      }
    }
  }
  res.detail = json{{"points", sample.size()}, {"n", nmax}};
  return res;
}

SuiteResult suite_turan(const SuiteOptions& opts) {
  SuiteResult res{"turan"};
  const int nmax = defaulted(opts.rows, 8);
  const int points = defaulted(opts.points, 20);
  std::vector<Params> sample =
      opts.params ? std::vector<Params>{*opts.params}
                  : random_regime_points(points, opts.seed);
  for (const auto& p : sample) {
    Triangle tri = Triangle::build(p, nmax + 1);
    for (int n = 1; n <= nmax; ++n) {
      StabilityReport report = stability_check(turan_polynomial(tri, n));
      if (!report.passed()) {
        res.pass = false;
        res.detail = json{{"reason", "Turan polynomial unstable"},
                          {"n", n},
                          {"max_real_part", report.max_real_part},
                          {"params", params_json(p)}};
        return res;
      }
    }
  }
  res.detail = json{{"points", sample.size()}, {"n", nmax}};
  return res;
}

SuiteResult suite_tp(const SuiteOptions& opts) {
  SuiteResult res{"tp"};
  struct Case {
    int size, order;
  };
  std::vector<Case> cases;
  if (opts.matrix_size > 0) {
    cases.push_back({opts.matrix_size, defaulted(opts.order, 3)});
  } else {
    cases.push_back({7, 3});
    cases.push_back({6, 4});
  }
  Params p = opts.params ? *opts.params : Params::symbolic();
  for (const auto& c : cases) {
    Triangle tri = Triangle::build(p, c.size - 1);
    if (auto w = tp_check(triangle_matrix(tri, c.size), c.order)) {
      res.pass = false;
      res.detail = minor_witness_to_json(*w);
      res.detail["size"] = c.size;
      res.detail["order"] = c.order;
      return res;
    }
  }
  json sizes = json::array();
  for (const auto& c : cases)
    sizes.push_back(json{{"size", c.size}, {"order", c.order}});
  res.detail = json{{"cases", sizes}};
  return res;
}

std::vector<Params> sm_lcx_families(const SuiteOptions& opts) {
  if (opts.params) return {*opts.params};
  return {specialization_params({Family::stirling2}),
          specialization_params({Family::riordan_a049020}),
          Params::symbolic()};
}

SuiteResult suite_sm(const SuiteOptions& opts) {
  SuiteResult res{"sm"};
  const int matrix = defaulted(opts.matrix_size, 5);  // i+j <= 8
  const int order = defaulted(opts.order, 4);
  const int rows = 2 * (matrix - 1);
  for (const auto& p : sm_lcx_families(opts)) {
    Triangle tri = Triangle::build(p, rows);
    std::vector<Scalar> polys;
    for (int n = 0; n <= rows; ++n) polys.push_back(row_polynomial(tri, n));
    if (auto w = tp_check(hankel_matrix(polys, matrix), order)) {
      res.pass = false;
      res.detail = minor_witness_to_json(*w);
      res.detail["params"] = params_json(p);
      return res;
    }
    // full-order variant on the square Hankel of side `order`
    if (auto w = sm_check(std::span<const Scalar>(polys).first(2 * order - 1),
                          order)) {
      res.pass = false;
      res.detail = minor_witness_to_json(*w);
      res.detail["params"] = params_json(p);
      return res;
    }
  }
  res.detail = json{{"matrix", matrix}, {"order", order}};
  return res;
}

SuiteResult suite_lcx3(const SuiteOptions& opts) {
  SuiteResult res{"lcx3"};
  const int nmax = defaulted(opts.rows, 9);
  const int depth = defaulted(opts.order, 3);
  for (const auto& p : sm_lcx_families(opts)) {
    Triangle tri = Triangle::build(p, nmax);
    std::vector<Scalar> polys;
    for (int n = 0; n <= nmax; ++n) polys.push_back(row_polynomial(tri, n));
    if (auto w = three_x_lcx_check(polys, depth)) {
      res.pass = false;
      res.detail = json{{"depth", w->depth},
                        {"index", w->index},
                        {"value", scalar_to_json(w->value)},
                        {"params", params_json(p)}};
      return res;
    }
  }
  res.detail = json{{"n", nmax}, {"depth", depth}};
  return res;
}

SuiteResult suite_convolution(const SuiteOptions& opts) {
  SuiteResult res{"convolution"};
  const int m = defaulted(opts.order, 5);
  std::vector<Params> regimes =
      opts.params
          ? std::vector<Params>{*opts.params}
          : std::vector<Params>{
                specialization_params({Family::stirling2}),
                specialization_params({Family::riordan_a049020}),
                specialization_params({Family::whitney, Rational(2)}),
                specialization_params({Family::a154602}),
                specialization_params({Family::tanny_geometric}),
                Params::rationals(1, 1, 1, 1, 1)};
  for (const auto& p : regimes) {
    Triangle tri = Triangle::build(p, 2 * m - 2);
    for (const auto& x : sm_registry_names())
      for (const auto& y : sm_registry_names()) {
        if (auto w = convolution_sm_check(tri, x, y, m)) {
          res.pass = false;
          res.detail = minor_witness_to_json(*w);
          res.detail["x"] = x;
          res.detail["y"] = y;
          res.detail["params"] = params_json(p);
          return res;
        }
      }
  }
  res.detail = json{{"regimes", regimes.size()}, {"order", m}};
  return res;
}

SuiteResult suite_col0(const SuiteOptions& opts) {
  SuiteResult res{"col0"};
  const int series_rows = defaulted(opts.rows, 10);
  const int shift_rows = 8;
  const int analogue_rows = 8;

  // (a) continued fraction of the first column reproduces column 0
  std::vector<Params> cf_points =
      opts.params ? std::vector<Params>{*opts.params}
                  : std::vector<Params>{
                        Params::symbolic(),
                        specialization_params({Family::riordan_a049020}),
                        specialization_params({Family::a154602})};
  for (const auto& p : cf_points) {
    Triangle tri = Triangle::build(p, series_rows);
    auto series =
        cf_to_series(jacobi_coeffs_col0(p, series_rows), series_rows);
    for (int n = 0; n <= series_rows; ++n) {
      if (series[n] != tri.at(n, 0)) {
        res.pass = false;
        res.detail = json{{"reason", "col0 cf series differs from column"},
                          {"n", n},
                          {"params", params_json(p)}};
        return res;
      }
    }
  }

  // (b) S_n(lam + q) = T_n(q) with symbolic lam
  std::vector<Params> shift_points;
  if (opts.params) {
    shift_points.push_back(*opts.params);
  } else {
    Ring rl = Ring::of({Var::lam});
    for (Family fam : {Family::stirling2, Family::riordan_a049020}) {
      Params p = specialization_params({fam});
      p.lam = Scalar::variable(rl, Var::lam);
      shift_points.push_back(p);
    }
    shift_points.push_back(Params::symbolic());
  }
  for (const auto& p : shift_points) {
    if (!p.lam.is_poly()) continue;  // a bound lam cannot run this identity
    if (auto w = first_column_shift_check(p, shift_rows)) {
      res.pass = false;
      res.detail = json{{"reason", "first-column shift identity fails"},
                        {"n", w->n},
                        {"lhs", scalar_to_json(w->lhs)},
                        {"rhs", scalar_to_json(w->rhs)},
                        {"params", params_json(p)}};
      return res;
    }
  }

  // (c) real-rootedness and Turan stability of the column polynomials in lam
  std::vector<Params> regime =
      opts.params ? std::vector<Params>{}
                  : random_regime_points(defaulted(opts.points, 10),
                                         opts.seed + 7);
  Ring rl = Ring::of({Var::lam});
  for (const auto& base : regime) {
    Params p = base;
    p.lam = Scalar::variable(rl, Var::lam);
    Triangle tri = Triangle::build(p, analogue_rows + 1);
    std::vector<UniPoly> cols;
    for (int n = 0; n <= analogue_rows + 1; ++n)
      cols.push_back(UniPoly::from_scalar(tri.at(n, 0), Var::lam));
    for (int n = 1; n <= analogue_rows; ++n) {
      if (!is_real_rooted(cols[n])) {
        res.pass = false;
        res.detail = json{{"reason", "column polynomial not real-rooted"},
                          {"n", n},
                          {"params", params_json(base)}};
        return res;
      }
      StabilityReport report =
          stability_check(cols[n + 1] * cols[n - 1] - cols[n] * cols[n]);
      if (!report.passed()) {
        res.pass = false;
        res.detail = json{{"reason", "column Turan polynomial unstable"},
                          {"n", n},
                          {"max_real_part", report.max_real_part},
                          {"params", params_json(base)}};
        return res;
      }
    }
  }
  res.detail = json{{"series_rows", series_rows},
                    {"shift_rows", shift_rows},
                    {"analogue_points", regime.size()}};
  return res;
}

using SuiteFn = SuiteResult (*)(const SuiteOptions&);

struct SuiteEntry {
  const char* name;
  SuiteFn fn;
};

constexpr SuiteEntry kSuites[] = {
    {"recurrence", suite_recurrence},
    {"explicit", suite_explicit},
    {"production", suite_production},
    {"factorization", suite_factorization},
    {"cf", suite_cf},
    {"hankel", suite_hankel},
    {"egf", suite_egf},
    {"oracle", suite_oracle},
    {"roots", suite_roots},
    {"interlace", suite_interlace},
    {"logconcave", suite_logconcave},
    {"turan", suite_turan},
    {"tp", suite_tp},
    {"sm", suite_sm},
    {"lcx3", suite_lcx3},
    {"convolution", suite_convolution},
    {"col0", suite_col0},
};

}  // namespace

std::vector<std::string> all_suite_names() {
  std::vector<std::string> out;
  for (const auto& s : kSuites) out.push_back(s.name);
  return out;
}

bool is_suite_name(const std::string& name) {
  for (const auto& s : kSuites)
    if (name == s.name) return true;
  return false;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
  for (const auto& s : kSuites) {
    if (name != s.name) continue;
    auto start = std::chrono::steady_clock::now();
    SuiteResult res = s.fn(opts);
    res.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return res;
  }
  throw usage_error("unknown suite: " + name);
}

std::vector<SuiteResult> run_all_suites(const SuiteOptions& opts) {
  const auto names = all_suite_names();
  std::vector<SuiteResult> results(names.size());
  const unsigned workers =
      std::min<unsigned>(max_worker_threads(), names.size());
  if (workers <= 1) {
    for (size_t i = 0; i < names.size(); ++i)
      results[i] = run_suite(names[i], opts);
    return results;
  }
  std::atomic<size_t> next{0};
  auto worker = [&] {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= names.size()) break;
      results[i] = run_suite(names[i], opts);
    }
  };
  std::vector<std::future<void>> futs;
  for (unsigned t = 0; t < workers; ++t)
    futs.push_back(std::async(std::launch::async, worker));
  for (auto& f : futs) f.get();
  return results;
}

}  // namespace swr
