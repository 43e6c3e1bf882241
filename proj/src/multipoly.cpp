#include "swr/multipoly.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <sstream>
#include <thread>

namespace swr {

namespace {

constexpr const char* kVarNames[kVarCount] = {"a1", "a2", "b1",
                                              "b2", "lam", "q"};

constexpr std::uint64_t kEmptySlot = ~std::uint64_t{0};

inline std::uint64_t hash_key(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

const char* var_name(Var v) { return kVarNames[static_cast<int>(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
  for (int i = 0; i < kVarCount; ++i)
    if (name == kVarNames[i]) return static_cast<Var>(i);
  return std::nullopt;
}

Ring Ring::of(std::initializer_list<Var> vars) {
  Ring r;
  for (Var v : vars) r.mask_ |= std::uint8_t(1u << static_cast<int>(v));
  return r;
}

Ring Ring::all() {
  Ring r;
  r.mask_ = (1u << kVarCount) - 1;
  return r;
}

Ring Ring::with(Var v) const {
  Ring r = *this;
  r.mask_ |= std::uint8_t(1u << static_cast<int>(v));
  return r;
}

Ring Ring::without(Var v) const {
  Ring r = *this;
  r.mask_ &= std::uint8_t(~(1u << static_cast<int>(v)));
  return r;
}

Ring Ring::united(const Ring& other) const {
  Ring r = *this;
  r.mask_ |= other.mask_;
  return r;
}

int Ring::size() const { return __builtin_popcount(mask_); }

std::vector<Var> Ring::vars() const {
  std::vector<Var> out;
  for (int i = 0; i < kVarCount; ++i)
    if (contains(static_cast<Var>(i))) out.push_back(static_cast<Var>(i));
  return out;
}

std::string Ring::str() const {
  std::string out = "Q";
  auto vs = vars();
  if (vs.empty()) return out;
  out += "[";
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += var_name(vs[i]);
  }
  out += "]";
  return out;
}

namespace detail {

MonoKey pack_key(const std::array<unsigned, kVarCount>& exps) {
  unsigned total = 0;
  MonoKey key = 0;
  for (int i = 0; i < kVarCount; ++i) {
    if (exps[i] > 254) throw usage_error("monomial exponent exceeds 254");
    total += exps[i];
    key |= MonoKey(exps[i]) << key_shift(i);
  }
  if (total > 254) throw usage_error("monomial total degree exceeds 254");
  key |= MonoKey(total) << kDegreeShift;
  return key;
}

std::array<unsigned, kVarCount> unpack_key(MonoKey key) {
  std::array<unsigned, kVarCount> exps{};
  for (int i = 0; i < kVarCount; ++i) exps[i] = key_exponent(key, i);
  return exps;
}

}  // namespace detail

unsigned max_worker_threads() {
  static const unsigned value = [] {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("SWR_MAX_THREADS")) {
      long cap = std::atol(env);
      if (cap >= 1 && static_cast<unsigned>(cap) < hw)
        hw = static_cast<unsigned>(cap);
    }
    return hw;
  }();
  return value;
}

/// Open-addressing accumulator keyed by packed monomials.  Terms are stored
/// in a stable vector so rehashing never moves a Rational.
class TermAccumulator {
 public:
  explicit TermAccumulator(size_t expected) { rehash(table_size(expected)); }

  Rational& slot(detail::MonoKey key) {
    if (terms_.size() * 2 >= table_.size()) rehash(table_.size() * 2);
    size_t mask = table_.size() - 1;
    size_t i = hash_key(key) & mask;
    while (true) {
      std::uint32_t idx = table_[i];
      if (idx == UINT32_MAX) {
        table_[i] = static_cast<std::uint32_t>(terms_.size());
        terms_.push_back(MultiPoly::Term{key, Rational(0)});
        return terms_.back().coeff;
      }
      if (terms_[idx].key == key) return terms_[idx].coeff;
      i = (i + 1) & mask;
    }
  }

  /// Sorted (leading-first), zero-free term vector; consumes the buffer.
  std::vector<MultiPoly::Term> finish() {
    std::vector<MultiPoly::Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_)
      if (t.coeff != 0) out.push_back(std::move(t));
    std::sort(out.begin(), out.end(),
              [](const MultiPoly::Term& a, const MultiPoly::Term& b) {
                return a.key > b.key;
              });
    terms_.clear();
    return out;
  }

  std::vector<MultiPoly::Term>& raw_terms() { return terms_; }

 private:
  static size_t table_size(size_t expected) {
    size_t n = 16;
    while (n < expected * 2) n <<= 1;
    return n;
  }

  void rehash(size_t n) {
    table_.assign(n, UINT32_MAX);
    size_t mask = n - 1;
    for (std::uint32_t idx = 0; idx < terms_.size(); ++idx) {
      size_t i = hash_key(terms_[idx].key) & mask;
      while (table_[i] != UINT32_MAX) i = (i + 1) & mask;
      table_[i] = idx;
    }
  }

  std::vector<MultiPoly::Term> terms_;
  std::vector<std::uint32_t> table_;
};

MultiPoly MultiPoly::zero(Ring ring) {
  MultiPoly p;
  p.ring_ = ring;
  return p;
}

MultiPoly MultiPoly::constant(Ring ring, Rational value) {
  MultiPoly p;
  p.ring_ = ring;
  if (value != 0) p.terms_.push_back(Term{0, std::move(value)});
  return p;
}

MultiPoly MultiPoly::variable(Ring ring, Var v) {
  if (!ring.contains(v))
    throw usage_error(std::string("variable ") + var_name(v) +
                      " not in ring " + ring.str());
  std::array<unsigned, kVarCount> exps{};
  exps[static_cast<int>(v)] = 1;
  MultiPoly p;
  p.ring_ = ring;
  p.terms_.push_back(Term{detail::pack_key(exps), Rational(1)});
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].key == 0);
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_[0].key == 0) return terms_[0].coeff;
  throw usage_error("polynomial is not constant: " + str());
}

unsigned MultiPoly::total_degree() const {
  return terms_.empty() ? 0u : detail::key_degree(terms_[0].key);
}

unsigned MultiPoly::degree_in(Var v) const {
  unsigned d = 0;
  for (const auto& t : terms_)
    d = std::max(d, detail::key_exponent(t.key, static_cast<int>(v)));
  return d;
}

bool MultiPoly::nonnegative_coefficients() const {
  for (const auto& t : terms_)
    if (sign(t.coeff) < 0) return false;
  return true;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

namespace {

Ring merged_ring(const MultiPoly& a, const MultiPoly& b, const char* op) {
  if (a.ring() != b.ring())
    throw usage_error(std::string("ring mismatch in ") + op + ": " +
                      a.ring().str() + " vs " + b.ring().str());
  return a.ring();
}

std::vector<MultiPoly::Term> merge_terms(const std::vector<MultiPoly::Term>& a,
                                         const std::vector<MultiPoly::Term>& b,
                                         bool subtract) {
  std::vector<MultiPoly::Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].key > b[j].key)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].key > a[i].key) {
      out.push_back(b[j]);
      if (subtract) out.back().coeff = -out.back().coeff;
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].coeff - b[j].coeff)
                            : Rational(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back(MultiPoly::Term{a[i].key, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  out.ring_ = merged_ring(a, b, "+");
  out.terms_ = merge_terms(a.terms_, b.terms_, false);
  return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  out.ring_ = merged_ring(a, b, "-");
  out.terms_ = merge_terms(a.terms_, b.terms_, true);
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  out.ring_ = merged_ring(a, b, "*");
  if (a.is_zero() || b.is_zero()) return out;

  // Guard the packed-key addition against byte overflow using per-variable
  // maxima; desk-scale computations stay far below 255.
  for (int v = 0; v < kVarCount; ++v) {
    if (a.degree_in(static_cast<Var>(v)) + b.degree_in(static_cast<Var>(v)) >
        254)
      throw usage_error("product exponent exceeds 254");
  }
  if (a.total_degree() + b.total_degree() > 254)
    throw usage_error("product total degree exceeds 254");

  const auto& big = a.terms_.size() >= b.terms_.size() ? a.terms_ : b.terms_;
  const auto& small = a.terms_.size() >= b.terms_.size() ? b.terms_ : a.terms_;

  const size_t work = big.size() * small.size();
  const unsigned threads =
      work >= (size_t{1} << 23) ? max_worker_threads() : 1u;

  auto run_block = [&](size_t lo, size_t hi) {
    TermAccumulator acc(std::min(work, size_t{1} << 16));
    for (size_t i = lo; i < hi; ++i) {
      const auto& ta = big[i];
      for (const auto& tb : small)
        rational_addmul(acc.slot(ta.key + tb.key), ta.coeff, tb.coeff);
    }
    return acc.finish();
  };

  if (threads <= 1) {
    out.terms_ = run_block(0, big.size());
    return out;
  }

  std::vector<std::future<std::vector<MultiPoly::Term>>> parts;
  size_t chunk = (big.size() + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    size_t lo = t * chunk, hi = std::min(big.size(), lo + chunk);
    if (lo >= hi) break;
    parts.push_back(std::async(std::launch::async, run_block, lo, hi));
  }
  std::vector<MultiPoly::Term> acc;
  for (auto& f : parts) acc = merge_terms(acc, f.get(), false);
  out.terms_ = std::move(acc);
  return out;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  if (c == 0) return zero(ring_);
  MultiPoly out = *this;
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

void MultiPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.key > b.key; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().key == t.key)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
  }
  terms_.clear();
  for (auto& t : out)
    if (t.coeff != 0) terms_.push_back(std::move(t));
}

MultiPoly MultiPoly::derivative(Var v) const {
  const int vi = static_cast<int>(v);
  MultiPoly out;
  out.ring_ = ring_;
  for (const auto& t : terms_) {
    unsigned e = detail::key_exponent(t.key, vi);
    if (e == 0) continue;
    Term nt;
    nt.key = t.key - (detail::MonoKey(1) << detail::key_shift(vi)) -
             (detail::MonoKey(1) << detail::kDegreeShift);
    nt.coeff = t.coeff * static_cast<long>(e);
    out.terms_.push_back(std::move(nt));
  }
  out.normalize();
  return out;
}

MultiPoly MultiPoly::bind(const std::map<Var, Rational>& bindings) const {
  Ring target = ring_;
  for (const auto& [v, val] : bindings) {
    if (!ring_.contains(v))
      throw usage_error(std::string("bind of unknown variable ") +
                        var_name(v) + " in ring " + ring_.str());
    target = target.without(v);
    (void)val;
  }
  MultiPoly out;
  out.ring_ = target;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    detail::MonoKey key = t.key;
    for (const auto& [v, val] : bindings) {
      const int vi = static_cast<int>(v);
      unsigned e = detail::key_exponent(t.key, vi);
      if (e == 0) continue;
      c *= rational_pow(val, e);
      key -= (detail::MonoKey(e) << detail::key_shift(vi)) +
             (detail::MonoKey(e) << detail::kDegreeShift);
    }
    if (c != 0) out.terms_.push_back(Term{key, std::move(c)});
  }
  out.normalize();
  return out;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& replacement) const {
  const int vi = static_cast<int>(v);
  Ring target = replacement.ring().united(ring_.without(v));
  // Horner in v: collect coefficient polynomials of v^d, then fold.
  unsigned dmax = degree_in(v);
  std::vector<MultiPoly> coeff_polys(dmax + 1, MultiPoly::zero(target));
  for (const auto& t : terms_) {
    unsigned e = detail::key_exponent(t.key, vi);
    Term nt;
    nt.key = t.key - (detail::MonoKey(e) << detail::key_shift(vi)) -
             (detail::MonoKey(e) << detail::kDegreeShift);
    nt.coeff = t.coeff;
    coeff_polys[e].terms_.push_back(std::move(nt));
  }
  for (auto& p : coeff_polys) p.normalize();
  MultiPoly repl = replacement.embed(target);
  MultiPoly result = coeff_polys[dmax];
  for (int d = static_cast<int>(dmax) - 1; d >= 0; --d)
    result = result * repl + coeff_polys[d];
  return result;
}

MultiPoly MultiPoly::embed(Ring bigger) const {
  if (!bigger.contains_all(ring_))
    throw usage_error("embed target ring " + bigger.str() +
                      " does not contain " + ring_.str());
  MultiPoly out = *this;
  out.ring_ = bigger;
  return out;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& a,
                                  const MultiPoly& divisor) {
  Ring ring = merged_ring(a, divisor, "divide_exact");
  if (divisor.is_zero()) throw usage_error("division by zero polynomial");
  MultiPoly rem = a;
  MultiPoly quot;
  quot.ring_ = ring;
  const Term& dlead = divisor.terms_[0];
  while (!rem.is_zero()) {
    const Term& rlead = rem.terms_[0];
    // Monomial divisibility: every exponent of the divisor's leading term
    // must fit under the remainder's leading term.
    for (int i = 0; i < kVarCount; ++i) {
      if (detail::key_exponent(rlead.key, i) <
          detail::key_exponent(dlead.key, i))
        throw usage_error("polynomials do not divide exactly");
    }
    Term qt;
    qt.key = rlead.key - dlead.key;
    qt.coeff = rlead.coeff / dlead.coeff;
    MultiPoly qmono;
    qmono.ring_ = ring;
    qmono.terms_.push_back(qt);
    rem = rem - qmono * divisor;
    quot.terms_.push_back(std::move(qt));
  }
  // Terms were produced in strictly decreasing key order already.
  return quot;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (sign(c) < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (sign(c) < 0 ? " - " : " + ");
      if (sign(c) < 0) c = -c;
    }
    first = false;
    bool has_vars = t.key != 0;
    if (!has_vars || c != 1) os << rational_str(c);
    bool printed = !has_vars || c != 1;
    for (int i = 0; i < kVarCount; ++i) {
      unsigned e = detail::key_exponent(t.key, i);
      if (e == 0) continue;
      if (printed) os << "*";
      os << kVarNames[i];
      if (e > 1) os << "^" << e;
      printed = true;
    }
  }
  return os.str();
}

MultiPoly MultiPoly::from_records(
    Ring ring,
    const std::vector<std::pair<std::vector<unsigned>, Rational>>& records) {
  auto ring_vars = ring.vars();
  MultiPoly out;
  out.ring_ = ring;
  for (const auto& [exps, coeff] : records) {
    if (exps.size() != ring_vars.size())
      throw usage_error("exponent vector length does not match ring");
    std::array<unsigned, kVarCount> full{};
    for (size_t i = 0; i < exps.size(); ++i)
      full[static_cast<int>(ring_vars[i])] = exps[i];
    if (coeff != 0) out.terms_.push_back(Term{detail::pack_key(full), coeff});
  }
  out.normalize();
  return out;
}

std::vector<std::pair<std::vector<unsigned>, Rational>> MultiPoly::to_records()
    const {
  auto ring_vars = ring_.vars();
  std::vector<std::pair<std::vector<unsigned>, Rational>> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<unsigned> exps(ring_vars.size());
    for (size_t i = 0; i < ring_vars.size(); ++i)
      exps[i] = detail::key_exponent(t.key, static_cast<int>(ring_vars[i]));
    out.emplace_back(std::move(exps), t.coeff);
  }
  return out;
}

}  // namespace swr
