#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>

#include "swr/io.hpp"
#include "swr/jacobi.hpp"
#include "swr/realroot.hpp"
#include "swr/suites.hpp"

namespace {

using namespace swr;

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

struct ParamSpec {
  Params params = Params::rationals(1, 0, 0, 1, 0);
  std::optional<Rational> q_binding;
  bool q_symbolic = false;
};

/// "--params" accepts a registered family name ("stirling2", "whitney(2)",
/// ...) or comma-separated bindings "a1=1,a2=0,b1=0,b2=1,lam=0[,q=1]" where
/// each value is a rational "p/q" or "sym" for the free indeterminate.
ParamSpec parse_param_spec(const std::string& text) {
  ParamSpec spec;
  if (auto id = specialization_from_name(text)) {
    spec.params = specialization_params(*id);
    return spec;
  }
  std::map<std::string, std::string> fields;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw usage_error("bad parameter binding '" + item +
                        "' (want name=value)");
    fields[item.substr(0, eq)] = item.substr(eq + 1);
  }
  Ring ring;
  for (const auto& [name, value] : fields) {
    if (value != "sym") continue;
    auto v = var_from_name(name);
    if (!v) throw usage_error("unknown parameter '" + name + "'");
    ring = ring.with(*v);
  }
  auto take = [&](const char* name, Var v) -> Scalar {
    auto it = fields.find(name);
    if (it == fields.end())
      throw usage_error(std::string("missing parameter ") + name);
    std::string value = it->second;
    fields.erase(it);
    if (value == "sym") return Scalar::variable(ring, v);
    return Scalar(parse_rational(value));
  };
  spec.params = Params{take("a1", Var::a1), take("a2", Var::a2),
                       take("b1", Var::b1), take("b2", Var::b2),
                       take("lam", Var::lam)};
  if (auto it = fields.find("q"); it != fields.end()) {
    if (it->second == "sym")
      spec.q_symbolic = true;
    else
      spec.q_binding = parse_rational(it->second);
    fields.erase(it);
  }
  if (!fields.empty())
    throw usage_error("unknown parameter '" + fields.begin()->first + "'");
  return spec;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw usage_error("cannot open output file: " + out_path);
  out << text;
}

int cmd_gen(const std::string& params_text, int rows,
            const std::string& format, const std::string& out_path) {
  ParamSpec spec = parse_param_spec(params_text);
  Triangle tri = Triangle::build(spec.params, rows);
  if (format == "json")
    write_output(triangle_to_json(tri).dump(2) + "\n", out_path);
  else if (format == "csv")
    write_output(triangle_to_csv(tri), out_path);
  else
    throw usage_error("unknown format: " + format);
  return kExitPass;
}

int cmd_verify(const std::string& suite, const SuiteOptions& opts) {
  std::vector<SuiteResult> results;
  if (suite == "all") {
    results = run_all_suites(opts);
  } else {
    if (!is_suite_name(suite)) throw usage_error("unknown suite: " + suite);
    results.push_back(run_suite(suite, opts));
  }
  bool all_pass = true;
  for (const auto& r : results) {
    std::cout << r.suite << ": " << (r.pass ? "PASS" : "FAIL") << " ("
              << std::fixed << std::setprecision(2) << r.seconds << "s)\n";
    if (!r.pass) {
      all_pass = false;
      std::cout << r.detail.dump(2) << "\n";
    }
  }
  return all_pass ? kExitPass : kExitCounterexample;
}

int cmd_cf(const std::string& params_text, int horizon, bool col0) {
  ParamSpec spec = parse_param_spec(params_text);
  JacobiCF cf = col0 ? jacobi_coeffs_col0(spec.params, horizon)
                     : jacobi_coeffs_rows(spec.params, horizon);
  if (spec.q_binding) {
    std::map<Var, Rational> bind{{Var::q, *spec.q_binding}};
    for (auto& x : cf.s) x = x.bind_present(bind);
    for (auto& x : cf.r) x = x.bind_present(bind);
  }
  std::cout << cf_to_json(cf).dump(2) << "\n";
  return kExitPass;
}

int cmd_roots(const std::string& params_text, int n) {
  ParamSpec spec = parse_param_spec(params_text);
  const Params& p = spec.params;
  if (!p.all_rational())
    throw usage_error("roots command needs numeric parameters");
  Triangle tri = Triangle::build(p, n);
  UniPoly tn = unipoly_row(tri, n);
  if (tn.is_zero()) throw usage_error("T_n is the zero polynomial");
  auto boxes = isolate_roots(tn);
  UniPoly sf = tn.squarefree_part();
  for (auto& b : boxes) {
    b = refine_root_box(sf, b, make_rational(1, 1024));
    // tighten further so boxes of interior roots sit inside the root interval
    for (int step = 0; step < 60 && !b.exact; ++step) {
      bool inside_hi = b.hi < -p.lam.rational();
      bool inside_lo =
          p.b1.rational() == 0 ||
          b.lo > -p.lam.rational() - p.a1.rational() / p.b1.rational();
      if (inside_hi && inside_lo) break;
      b = refine_root_box(sf, b, (b.hi - b.lo) / 2);
    }
  }
  json out;
  out["n"] = n;
  out["degree"] = tn.degree();
  out["distinct_real_roots"] = boxes.size();
  out["boxes"] = root_boxes_to_json(boxes);
  const Rational lam = p.lam.rational();
  out["interval"] = json{{"hi", rational_str(-lam)}};
  if (p.b1.rational() != 0)
    out["interval"]["lo"] =
        rational_str(-lam - p.a1.rational() / p.b1.rational());
  std::cout << out.dump(2) << "\n";
  return kExitPass;
}

int cmd_stability(const std::string& params_text, int n) {
  ParamSpec spec = parse_param_spec(params_text);
  if (!spec.params.all_rational())
    throw usage_error("stability command needs numeric parameters");
  Triangle tri = Triangle::build(spec.params, n + 1);
  StabilityReport report = stability_check(turan_polynomial(tri, n));
  json out;
  out["n"] = n;
  switch (report.verdict) {
    case StabilityReport::Verdict::stable_exact:
      out["verdict"] = "weakly_stable";
      out["certificate"] = "exact";
      break;
    case StabilityReport::Verdict::stable_numeric:
      out["verdict"] = "weakly_stable";
      out["certificate"] = "numeric";
      out["max_real_part"] = report.max_real_part;
      break;
    case StabilityReport::Verdict::unstable:
      out["verdict"] = "unstable";
      out["certificate"] = "numeric";
      out["max_real_part"] = report.max_real_part;
      break;
    case StabilityReport::Verdict::vacuous_zero:
      out["verdict"] = "weakly_stable";
      out["certificate"] = "vacuous_zero_polynomial";
      break;
  }
  std::cout << out.dump(2) << "\n";
  return report.passed() ? kExitPass : kExitCounterexample;
}

int cmd_oeis(const std::string& id, const std::string& bfile_path, int rows) {
  static const std::map<std::string, std::string> kFamilies = {
      {"A048993", "stirling2"},
      {"A008279", "falling_factorial_a008279"},
      {"A049020", "riordan_a049020"},
      {"A154602", "a154602"},
  };
  auto it = kFamilies.find(id);
  if (it == kFamilies.end())
    throw usage_error("no registered triangle reading for " + id);
  Params params = specialization_params(*specialization_from_name(it->second));
  BFile bfile = load_bfile(bfile_path, id);

  const long need = static_cast<long>(rows) * (rows + 1) / 2;
  if (static_cast<long>(bfile.records.size()) < need)
    throw usage_error("insufficient terms in " + bfile_path + " (" +
                      std::to_string(bfile.records.size()) + " < " +
                      std::to_string(need) + ")");
  const long offset = bfile.records.front().first;

  Triangle tri = Triangle::build(params, rows - 1);
  for (int n = 0; n < rows; ++n) {
    for (int k = 0; k <= n; ++k) {
      long linear = static_cast<long>(n) * (n + 1) / 2 + k;
      const auto& rec = bfile.records.at(linear);
      if (rec.first != offset + linear)
        throw usage_error("b-file index gap at " + std::to_string(rec.first));
      Rational expected(rec.second);
      if (tri.at(n, k) != Scalar(expected)) {
        json witness{{"n", n},
                     {"k", k},
                     {"expected", rec.second.get_str()},
                     {"got", tri.at(n, k).str()}};
        std::cout << witness.dump(2) << "\n";
        return kExitCounterexample;
      }
    }
  }
  std::cout << id << ": " << rows << " rows match\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stirling-Whitney-Riordan triangle laboratory"};
  app.require_subcommand(1);

  std::string params_text = "stirling2";
  std::string format = "json";
  std::string out_path;
  std::string suite;
  std::string oeis_id;
  std::string bfile_path;
  int rows = -1, n = -1, order = -1, shift = -1, points = -1, matrix_size = -1;
  unsigned seed = 20260810;
  bool symbolic = false, col0 = false;
  int guard = 10;
  bool guard_override = false;

  auto* gen = app.add_subcommand("gen", "emit a triangle");
  gen->add_option("--params", params_text, "family name or a1=..,..,lam=..");
  gen->add_option("--rows", rows, "number of rows beyond row 0")->required();
  gen->add_option("--format", format, "json|csv");
  gen->add_option("--out", out_path, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "suite name or 'all'")->required();
  verify->add_option("--params", params_text, "restrict to one point");
  verify->add_option("--rows", rows, "row bound");
  verify->add_option("--n", n, "alias for --rows");
  verify->add_option("--order", order, "minor order / depth");
  verify->add_option("--shift", shift, "Hankel shift (0 or 1)");
  verify->add_option("--points", points, "number of random points");
  verify->add_option("--matrix-size", matrix_size, "truncation size");
  verify->add_option("--seed", seed, "random seed");
  verify->add_flag("--symbolic", symbolic, "symbolic variant only");
  verify->add_option("--guard", guard, "path-enumeration guard");
  verify->add_flag("--guard-override", guard_override,
                   "lift the n<=10 enumeration guard");

  auto* cf = app.add_subcommand("cf", "emit continued-fraction coefficients");
  cf->add_option("--params", params_text, "family name or bindings");
  cf->add_option("--n", n, "horizon")->required();
  cf->add_flag("--col0", col0, "first-column coefficients");

  auto* roots = app.add_subcommand("roots", "isolate the roots of T_n(q)");
  roots->add_option("--params", params_text, "numeric parameters");
  roots->add_option("--n", n, "row index")->required();

  auto* stability =
      app.add_subcommand("stability", "Turan-type stability report");
  stability->add_option("--params", params_text, "numeric parameters");
  stability->add_option("--n", n, "index of the middle row")->required();

  auto* oeis = app.add_subcommand("oeis", "compare a family to a b-file");
  oeis->add_option("--id", oeis_id, "sequence id, e.g. A049020")->required();
  oeis->add_option("--bfile", bfile_path, "path to the b-file")->required();
  oeis->add_option("--rows", rows, "rows to compare");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(params_text, rows, format, out_path);
    if (verify->parsed()) {
      SuiteOptions opts;
      if (verify->count("--params")) {
        ParamSpec spec = parse_param_spec(params_text);
        opts.params = spec.params;
      }
      opts.rows = rows >= 0 ? rows : n;
      opts.order = order;
      opts.shift = shift;
      opts.points = points;
      opts.matrix_size = matrix_size;
      opts.seed = seed;
      opts.symbolic = symbolic;
      opts.guard = guard_override ? 1 << 20 : guard;
      return cmd_verify(suite, opts);
    }
    if (cf->parsed()) return cmd_cf(params_text, n, col0);
    if (roots->parsed()) return cmd_roots(params_text, n);
    if (stability->parsed()) return cmd_stability(params_text, n);
    if (oeis->parsed()) return cmd_oeis(oeis_id, bfile_path,
                                        rows >= 0 ? rows : 12);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
