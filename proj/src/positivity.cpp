#include "swr/positivity.hpp"

#include <algorithm>
#include <future>
#include <unordered_map>

namespace swr {

Matrix triangle_matrix(const Triangle& tri, int size) {
  if (size - 1 > tri.max_row())
    throw usage_error("triangle too small for requested truncation");
  Matrix m(size, std::vector<Scalar>(size, Scalar(0)));
  for (int n = 0; n < size; ++n)
    for (int k = 0; k <= n; ++k) m[n][k] = tri.at(n, k);
  return m;
}

Matrix hankel_matrix(std::span<const Scalar> seq, int m, int shift) {
  if (static_cast<int>(seq.size()) < 2 * m - 1 + shift)
    throw usage_error("sequence too short for Hankel matrix");
  Matrix h(m, std::vector<Scalar>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) h[i][j] = seq[i + j + shift];
  return h;
}

namespace {

/// Index subsets of {0..n-1} of the given size, lexicographic.
std::vector<std::vector<int>> subsets(int n, int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(size);
  for (int i = 0; i < size; ++i) cur[i] = i;
  if (size > n) return out;
  while (true) {
    out.push_back(cur);
    int i = size - 1;
    while (i >= 0 && cur[i] == n - size + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < size; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::uint64_t subset_key(const std::vector<int>& rows,
                         const std::vector<int>& cols) {
  std::uint64_t r = 0, c = 0;
  for (int i : rows) r |= std::uint64_t(1) << i;
  for (int j : cols) c |= std::uint64_t(1) << j;
  return (r << 32) | c;
}

}  // namespace

std::optional<MinorWitness> tp_check(const Matrix& m, int max_order) {
  const int nrows = static_cast<int>(m.size());
  const int ncols = nrows ? static_cast<int>(m[0].size()) : 0;
  if (max_order > std::min(nrows, ncols))
    throw usage_error("minor order exceeds matrix dimensions");

  // memo[(rows,cols)] = the corresponding minor, filled order by order
  std::unordered_map<std::uint64_t, Scalar> memo;
  memo.reserve(1 << 12);

  for (int order = 1; order <= max_order; ++order) {
    auto row_sets = subsets(nrows, order);
    auto col_sets = subsets(ncols, order);
    std::vector<std::pair<std::vector<int>, std::vector<int>>> batch;
    batch.reserve(row_sets.size() * col_sets.size());
    for (const auto& r : row_sets)
      for (const auto& c : col_sets) batch.emplace_back(r, c);

    std::vector<Scalar> values(batch.size());
    auto worker = [&](size_t lo, size_t hi) {
      for (size_t idx = lo; idx < hi; ++idx) {
        const auto& [rows, cols] = batch[idx];
        if (rows.size() == 1) {
          values[idx] = m[rows[0]][cols[0]];
          continue;
        }
        std::vector<int> sub_rows(rows.begin(), rows.end() - 1);
        std::vector<int> sub_cols;
        sub_cols.reserve(cols.size() - 1);
        Scalar acc;
        for (size_t drop = 0; drop < cols.size(); ++drop) {
          const Scalar& entry = m[rows.back()][cols[drop]];
          if (entry.is_zero()) continue;
          sub_cols.clear();
          for (size_t j = 0; j < cols.size(); ++j)
            if (j != drop) sub_cols.push_back(cols[j]);
          const Scalar& minor = memo.at(subset_key(sub_rows, sub_cols));
          Scalar term = entry * minor;
          // sign: entry sits in the last row, column position `drop`
          if ((cols.size() - 1 + drop) % 2) term = -term;
          acc += term;
        }
        values[idx] = std::move(acc);
      }
    };

    const unsigned threads =
        batch.size() >= 8 && order >= 2 ? max_worker_threads() : 1;
    if (threads <= 1) {
      worker(0, batch.size());
    } else {
      std::vector<std::future<void>> futs;
      size_t chunk = (batch.size() + threads - 1) / threads;
      for (unsigned t = 0; t < threads; ++t) {
        size_t lo = t * chunk, hi = std::min(batch.size(), lo + chunk);
        if (lo >= hi) break;
        futs.push_back(std::async(std::launch::async, worker, lo, hi));
      }
      for (auto& f : futs) f.get();
    }

    for (size_t idx = 0; idx < batch.size(); ++idx) {
      if (!values[idx].nonnegative_coefficients())
        return MinorWitness{batch[idx].first, batch[idx].second, values[idx]};
      memo.emplace(subset_key(batch[idx].first, batch[idx].second),
                   std::move(values[idx]));
    }
  }
  return std::nullopt;
}

std::optional<MinorWitness> sm_check(std::span<const Scalar> seq, int m) {
  return tp_check(hankel_matrix(seq, m), m);
}

std::vector<Scalar> lcx_operator(std::span<const Scalar> seq) {
  if (seq.size() < 3)
    throw usage_error("lcx_operator needs at least three terms");
  std::vector<Scalar> out;
  out.reserve(seq.size() - 2);
  for (size_t i = 0; i + 2 < seq.size(); ++i)
    out.push_back(seq[i] * seq[i + 2] - seq[i + 1] * seq[i + 1]);
  return out;
}

std::optional<LcxWitness> three_x_lcx_check(std::span<const Scalar> seq,
                                            int depth) {
  if (static_cast<int>(seq.size()) < 2 * depth + 1)
    throw usage_error("sequence too short for the requested lcx depth");
  std::vector<Scalar> cur(seq.begin(), seq.end());
  for (int d = 1; d <= depth; ++d) {
    cur = lcx_operator(cur);
    for (size_t i = 0; i < cur.size(); ++i)
      if (!cur[i].nonnegative_coefficients())
        return LcxWitness{d, static_cast<int>(i), cur[i]};
  }
  return std::nullopt;
}

std::optional<int> log_concavity_check(std::span<const Rational> coeffs) {
  for (size_t i = 1; i + 1 < coeffs.size(); ++i)
    if (coeffs[i - 1] * coeffs[i + 1] > coeffs[i] * coeffs[i])
      return static_cast<int>(i);
  return std::nullopt;
}

std::vector<Rational> sm_registry_sequence(const std::string& id, int count) {
  std::vector<Rational> out;
  if (id == "ones" || id == "1") {
    out.assign(count, Rational(1));
  } else if (id == "factorial" || id == "n!") {
    for (int n = 0; n < count; ++n) out.push_back(factorial(n));
  } else if (id == "pow2" || id == "2^n") {
    Rational p(1);
    for (int n = 0; n < count; ++n, p *= 2) out.push_back(p);
  } else if (id == "catalan") {
    for (int n = 0; n < count; ++n)
      out.push_back(binomial(2 * n, n) / Rational(n + 1));
  } else {
    throw usage_error("unknown moment-sequence id: " + id);
  }
  return out;
}

std::vector<std::string> sm_registry_names() {
  return {"ones", "factorial", "pow2", "catalan"};
}

std::vector<Rational> convolution(const Triangle& tri,
                                  std::span<const Rational> x,
                                  std::span<const Rational> y) {
  size_t len = std::min({x.size(), y.size(),
                         static_cast<size_t>(tri.max_row() + 1)});
  std::vector<Rational> z;
  for (size_t n = 0; n < len; ++n) {
    Rational acc(0);
    for (size_t k = 0; k <= n; ++k)
      acc += tri.at(static_cast<int>(n), static_cast<int>(k)).rational() *
             x[k] * y[n - k];
    z.push_back(std::move(acc));
  }
  return z;
}

std::optional<MinorWitness> convolution_sm_check(const Triangle& tri,
                                                 const std::string& x_id,
                                                 const std::string& y_id,
                                                 int m) {
  const int need = 2 * m - 1;
  if (tri.max_row() + 1 < need)
    throw usage_error("triangle too small for convolution sm_check");
  auto x = sm_registry_sequence(x_id, need);
  auto y = sm_registry_sequence(y_id, need);
  auto z = convolution(tri, x, y);
  std::vector<Scalar> zs(z.begin(), z.end());
  return sm_check(zs, m);
}

}  // namespace swr
