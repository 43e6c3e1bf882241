#include "swr/scalar.hpp"

namespace swr {

namespace {

MultiPoly promote(const Rational& r, const Ring& ring) {
  return MultiPoly::constant(ring, r);
}

}  // namespace

const Rational& Scalar::rational() const {
  if (!is_rational()) throw usage_error("scalar is not rational: " + str());
  return std::get<Rational>(value_);
}

const MultiPoly& Scalar::poly() const {
  if (!is_poly()) throw usage_error("scalar is not a polynomial");
  return std::get<MultiPoly>(value_);
}

Ring Scalar::ring() const {
  return is_rational() ? Ring::empty() : poly().ring();
}

bool Scalar::is_zero() const {
  return is_rational() ? rational() == 0 : poly().is_zero();
}

bool Scalar::is_one() const {
  if (is_rational()) return rational() == 1;
  return poly().is_constant() && poly().constant_value() == 1;
}

Rational Scalar::as_rational() const {
  return is_rational() ? rational() : poly().constant_value();
}

bool Scalar::nonnegative_coefficients() const {
  return is_rational() ? sign(rational()) >= 0
                       : poly().nonnegative_coefficients();
}

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(Rational(-rational()));
  return Scalar(-poly());
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    std::get<Rational>(value_) += o.rational();
  } else if (is_poly() && o.is_poly()) {
    value_ = poly() + o.poly();
  } else if (is_poly()) {
    value_ = poly() + promote(o.rational(), poly().ring());
  } else {
    value_ = promote(rational(), o.poly().ring()) + o.poly();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  *this += -o;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    std::get<Rational>(value_) *= o.rational();
  } else if (is_poly() && o.is_poly()) {
    value_ = poly() * o.poly();
  } else if (is_poly()) {
    value_ = poly().scaled(o.rational());
  } else {
    value_ = o.poly().scaled(rational());
  }
  return *this;
}

bool Scalar::operator==(const Scalar& o) const {
  if (is_rational() && o.is_rational()) return rational() == o.rational();
  if (is_poly() && o.is_poly()) return poly() == o.poly();
  const Scalar& p = is_poly() ? *this : o;
  const Scalar& r = is_poly() ? o : *this;
  return p.poly().is_constant() && p.poly().constant_value() == r.rational();
}

Scalar Scalar::pow(unsigned e) const {
  if (is_rational()) return Scalar(rational_pow(rational(), e));
  Scalar acc(MultiPoly::constant(ring(), Rational(1)));
  for (unsigned i = 0; i < e; ++i) acc *= *this;
  return acc;
}

Scalar Scalar::divide_exact(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw usage_error("exact division by zero");
  if (a.is_rational() && b.is_rational())
    return Scalar(Rational(a.rational() / b.rational()));
  if (a.is_poly() && b.is_rational())
    return Scalar(a.poly().scaled(Rational(1) / b.rational()));
  if (a.is_rational()) {
    // rational / polynomial: only a constant divisor works
    return Scalar(Rational(a.rational() / b.poly().constant_value()));
  }
  return Scalar(MultiPoly::divide_exact(a.poly(), b.poly()));
}

Scalar Scalar::bind(const std::map<Var, Rational>& bindings) const {
  if (is_rational()) {
    if (!bindings.empty())
      throw usage_error("bind of unknown variable on a rational scalar");
    return *this;
  }
  MultiPoly bound = poly().bind(bindings);
  if (bound.ring().is_empty()) return Scalar(bound.constant_value());
  return Scalar(std::move(bound));
}

Scalar Scalar::bind_present(const std::map<Var, Rational>& bindings) const {
  if (is_rational()) return *this;
  std::map<Var, Rational> present;
  for (const auto& [v, val] : bindings)
    if (ring().contains(v)) present.emplace(v, val);
  return bind(present);
}

Scalar Scalar::substitute(Var v, const MultiPoly& replacement) const {
  if (is_rational()) return *this;
  return Scalar(poly().substitute(v, replacement));
}

Scalar Scalar::derivative(Var v) const {
  if (is_rational()) return Scalar(Rational(0));
  return Scalar(poly().derivative(v));
}

Scalar Scalar::embed(Ring bigger) const {
  if (is_rational()) return Scalar(MultiPoly::constant(bigger, rational()));
  return Scalar(poly().embed(bigger));
}

std::string Scalar::str() const {
  return is_rational() ? rational_str(rational()) : poly().str();
}

}  // namespace swr
