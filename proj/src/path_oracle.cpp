#include "swr/path_oracle.hpp"

#include "swr/jacobi.hpp"

namespace swr {

PathWeights PathWeights::from_params(const Params& p, int max_height) {
  PathWeights w;
  Scalar level0 = p.a2 + p.lam * (p.b1 + p.b2);
  Scalar level_slope = p.lam * p.b1 * Scalar(2) + p.a1;
  Scalar down_base = p.lam * (p.a1 + p.lam * p.b1);
  for (int h = 0; h <= max_height; ++h) {
    w.up.push_back(p.b1 * Scalar(Rational(h)) + p.b2 + p.b1);
    w.level.push_back(level_slope * Scalar(Rational(h)) + level0);
    w.down.push_back(down_base * Scalar(Rational(h)));
  }
  return w;
}

namespace {

void dfs_entry(const PathWeights& w, int steps_left, int height, int target,
               const Scalar& weight, Scalar& total) {
  if (steps_left == 0) {
    if (height == target) total += weight;
    return;
  }
  if (height + steps_left < target) return;  // cannot climb there anymore
  dfs_entry(w, steps_left - 1, height + 1, target, weight * w.up[height],
            total);
  dfs_entry(w, steps_left - 1, height, target, weight * w.level[height],
            total);
  if (height > 0)
    dfs_entry(w, steps_left - 1, height - 1, target,
              weight * w.down[height], total);
}

void dfs_closed(const JacobiCF& cf, int steps_left, int height,
                const Scalar& weight, Scalar& total) {
  if (steps_left == 0) {
    if (height == 0) total += weight;
    return;
  }
  if (height > steps_left) return;  // cannot come back down in time
  dfs_closed(cf, steps_left - 1, height + 1, weight, total);  // up, weight 1
  dfs_closed(cf, steps_left - 1, height, weight * cf.s_at(height), total);
  if (height > 0)
    dfs_closed(cf, steps_left - 1, height - 1, weight * cf.r_at(height),
               total);
}

}  // namespace

Scalar enumerate_entry(const Params& params, int n, int k, int guard) {
  if (n > guard)
    throw usage_error("path enumeration guard exceeded (n = " +
                      std::to_string(n) + ", guard = " +
                      std::to_string(guard) + ")");
  if (k < 0 || k > n) return Scalar(0);
  PathWeights w = PathWeights::from_params(params, n + 1);
  Scalar total;
  dfs_entry(w, n, 0, k, Scalar(1), total);
  return total;
}

Scalar enumerate_row_polynomial(const Params& params, int n,
                                const Scalar& q_binding, int guard) {
  if (n > guard)
    throw usage_error("path enumeration guard exceeded (n = " +
                      std::to_string(n) + ", guard = " +
                      std::to_string(guard) + ")");
  JacobiCF cf = jacobi_coeffs_rows(params, n + 1);
  if (q_binding.is_rational()) {
    std::map<Var, Rational> bind{{Var::q, q_binding.rational()}};
    for (auto& x : cf.s) x = x.bind_present(bind);
    for (auto& x : cf.r) x = x.bind_present(bind);
  }
  Scalar total;
  dfs_closed(cf, n, 0, Scalar(1), total);
  return total;
}

}  // namespace swr
