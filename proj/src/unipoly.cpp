#include "swr/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace swr {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  trim();
}

UniPoly UniPoly::constant(Rational c) {
  UniPoly p;
  if (c != 0) p.c_.push_back(std::move(c));
  return p;
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& UniPoly::lead() const {
  if (is_zero()) throw usage_error("zero polynomial has no leading coeff");
  return c_.back();
}

const Rational& UniPoly::coeff(int i) const {
  static const Rational zero(0);
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
  return c_[i];
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
  return acc;
}

UniPoly UniPoly::derivative() const {
  UniPoly d;
  for (int i = 1; i <= degree(); ++i) d.c_.push_back(c_[i] * i);
  d.trim();
  return d;
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  UniPoly out;
  out.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) out.c_[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) out.c_[i] += b.c_[i];
  out.trim();
  return out;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  UniPoly out;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j)
      rational_addmul(out.c_[i + j], a.c_[i], b.c_[j]);
  out.trim();
  return out;
}

UniPoly UniPoly::scaled(const Rational& k) const {
  if (k == 0) return UniPoly();
  UniPoly out = *this;
  for (auto& c : out.c_) c *= k;
  return out;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(Rational(1) / lead());
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& a,
                                            const UniPoly& b) {
  if (b.is_zero()) throw usage_error("univariate division by zero");
  UniPoly rem = a;
  UniPoly quot;
  if (a.degree() >= b.degree())
    quot.c_.assign(a.degree() - b.degree() + 1, Rational(0));
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int shift = rem.degree() - b.degree();
    Rational factor = rem.lead() / b.lead();
    quot.c_[shift] = factor;
    for (int i = 0; i <= b.degree(); ++i)
      rem.c_[i + shift] -= factor * b.c_[i];
    rem.trim();
  }
  quot.trim();
  return {std::move(quot), std::move(rem)};
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divrem(x, y).second;
    x = std::move(y);
    y = r.is_zero() ? r : r.monic();  // normalize to tame coefficient growth
  }
  return x.is_zero() ? x : x.monic();
}

UniPoly UniPoly::squarefree_part() const {
  if (is_zero()) throw usage_error("squarefree part of zero polynomial");
  if (degree() == 0) return constant(Rational(1));
  UniPoly g = gcd(*this, derivative());
  return divrem(*this, g).first;
}

std::vector<UniPoly> UniPoly::squarefree_decomposition() const {
  // Yun's algorithm over characteristic 0.
  if (is_zero())
    throw usage_error("squarefree decomposition of zero polynomial");
  std::vector<UniPoly> out;
  if (degree() == 0) return out;
  UniPoly p = monic();
  UniPoly dp = p.derivative();
  UniPoly a = gcd(p, dp);
  UniPoly b = divrem(p, a).first;
  UniPoly c = divrem(dp, a).first;
  UniPoly d = c - b.derivative();
  while (!(b.degree() == 0)) {
    UniPoly f = gcd(b, d);
    out.push_back(f);
    b = divrem(b, f).first;
    c = divrem(d, f).first;
    d = c - b.derivative();
  }
  return out;
}

Rational UniPoly::cauchy_root_bound() const {
  if (is_zero()) throw usage_error("root bound of zero polynomial");
  Rational m(0);
  for (int i = 0; i < degree(); ++i) {
    Rational a = abs(c_[i] / lead());
    if (a > m) m = a;
  }
  return m + 1;
}

UniPoly UniPoly::from_scalar(const Scalar& s, Var v) {
  if (s.is_rational()) return constant(s.rational());
  const MultiPoly& p = s.poly();
  // The ring may nominally carry more names as long as only v is used.
  for (const auto& t : p.terms()) {
    for (int i = 0; i < kVarCount; ++i)
      if (static_cast<Var>(i) != v && detail::key_exponent(t.key, i) != 0)
        throw usage_error("scalar is not univariate in " +
                          std::string(var_name(v)));
  }
  std::vector<Rational> coeffs(p.degree_in(v) + 1, Rational(0));
  for (const auto& t : p.terms())
    coeffs[detail::key_exponent(t.key, static_cast<int>(v))] = t.coeff;
  return UniPoly(std::move(coeffs));
}

std::string UniPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    Rational c = c_[i];
    if (!first) {
      os << (sign(c) < 0 ? " - " : " + ");
      if (sign(c) < 0) c = -c;
    } else if (sign(c) < 0) {
      os << "-";
      c = -c;
    }
    first = false;
    if (i == 0 || c != 1) os << rational_str(c);
    if (i > 0) {
      if (c != 1) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace swr
