#pragma once

#include <optional>
#include <string>
#include <vector>

#include "swr/io.hpp"
#include "swr/triangle.hpp"

namespace swr {

/// Knobs shared by the verification suites.  A value of -1 keeps the
/// suite's desk-scale default (which matches the documented bound for that
/// check).
struct SuiteOptions {
  std::optional<Params> params;  // restrict a suite to one parameter point
  int rows = -1;
  int order = -1;
  int shift = -1;
  int points = -1;
  int matrix_size = -1;
  unsigned seed = 20260810;
  bool symbolic = false;
  int guard = 10;
};

struct SuiteResult {
  std::string suite;
  bool pass = true;
  json detail;  // summary counts on pass, first witness on failure
  double seconds = 0;
};

/// Deterministic sample of rational parameter points covering all four
/// (a1, b1) zero patterns; values may be negative.
std::vector<Params> random_rational_params(int count, unsigned seed);

/// Deterministic sample of nonnegative points with a2 > 0, b1 + b2 > 0 and
/// a1(b1+b2) >= b1 a2, mixing in b1 = 0 and lam = 0 cases.
std::vector<Params> random_regime_points(int count, unsigned seed);

/// Positive rational points (every parameter > 0).
std::vector<Params> random_positive_params(int count, unsigned seed);

std::vector<std::string> all_suite_names();
bool is_suite_name(const std::string& name);

/// Runs one named suite ("recurrence", "explicit", ..., per
/// all_suite_names).  Unknown names raise usage_error.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts);

/// Runs every suite (worker count capped by SWR_MAX_THREADS), results in
/// canonical suite order.
std::vector<SuiteResult> run_all_suites(const SuiteOptions& opts);

}  // namespace swr
