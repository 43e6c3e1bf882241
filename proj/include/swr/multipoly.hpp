#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "swr/rational.hpp"

namespace swr {

/// The indeterminate universe, in canonical order.  Every polynomial ring in
/// this library is a subset of these six names.
enum class Var : int { a1 = 0, a2 = 1, b1 = 2, b2 = 3, lam = 4, q = 5 };

inline constexpr int kVarCount = 6;

const char* var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

/// A ring is identified by the subset of indeterminates it carries.  The
/// empty ring is plain Q.  Vars always appear in canonical order.
class Ring {
 public:
  Ring() = default;
  static Ring empty() { return Ring{}; }
  static Ring of(std::initializer_list<Var> vars);
  static Ring all();

  Ring with(Var v) const;
  Ring without(Var v) const;
  Ring united(const Ring& other) const;

  bool contains(Var v) const { return (mask_ >> static_cast<int>(v)) & 1u; }
  bool contains_all(const Ring& other) const {
    return (mask_ & other.mask_) == other.mask_;
  }
  int size() const;
  bool is_empty() const { return mask_ == 0; }
  std::vector<Var> vars() const;

  bool operator==(const Ring& other) const { return mask_ == other.mask_; }
  bool operator!=(const Ring& other) const { return mask_ != other.mask_; }

  std::string str() const;

 private:
  std::uint8_t mask_ = 0;
};

namespace detail {

/// Monomials are packed into one 64-bit key: the total degree in the top
/// byte, then one byte per indeterminate in canonical order.  Integer
/// comparison of keys is exactly graded-lexicographic comparison, and
/// multiplying monomials is integer addition of keys (no byte overflows as
/// long as every exponent and total degree stays below 255, which the
/// multiplication kernel checks up front).
using MonoKey = std::uint64_t;

inline constexpr int kDegreeShift = 56;

inline int key_shift(int var_index) { return 8 * (5 - var_index); }

MonoKey pack_key(const std::array<unsigned, kVarCount>& exps);
std::array<unsigned, kVarCount> unpack_key(MonoKey key);
inline unsigned key_exponent(MonoKey key, int var_index) {
  return static_cast<unsigned>((key >> key_shift(var_index)) & 0xffu);
}
inline unsigned key_degree(MonoKey key) {
  return static_cast<unsigned>(key >> kDegreeShift);
}

}  // namespace detail

/// Sparse multivariate polynomial over Q with a canonical graded-lex term
/// order.  Terms are stored leading-first; no zero coefficients are kept, so
/// two polynomials over the same ring are equal iff their term vectors are.
class MultiPoly {
 public:
  struct Term {
    detail::MonoKey key = 0;
    Rational coeff;
    bool operator==(const Term& o) const {
      return key == o.key && coeff == o.coeff;
    }
  };

  MultiPoly() = default;  // zero polynomial over the empty ring

  static MultiPoly zero(Ring ring);
  static MultiPoly constant(Ring ring, Rational value);
  static MultiPoly variable(Ring ring, Var v);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant (or zero) polynomial; usage_error otherwise.
  Rational constant_value() const;

  unsigned total_degree() const;  // 0 for the zero polynomial
  unsigned degree_in(Var v) const;

  bool nonnegative_coefficients() const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  bool operator==(const MultiPoly& o) const {
    return ring_ == o.ring_ && terms_ == o.terms_;
  }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly scaled(const Rational& c) const;

  /// Formal derivative with respect to v.
  MultiPoly derivative(Var v) const;

  /// Substitutes rational values for a subset of the ring's indeterminates;
  /// the result lives in the ring without the bound vars.  Binding a name
  /// not present in the ring is a usage_error.
  MultiPoly bind(const std::map<Var, Rational>& bindings) const;

  /// Substitutes a polynomial for one indeterminate.  The result ring is
  /// replacement.ring() united with this ring minus v.
  MultiPoly substitute(Var v, const MultiPoly& replacement) const;

  /// Reinterprets the polynomial in a larger ring (exponents are unchanged).
  MultiPoly embed(Ring bigger) const;

  /// Exact division: returns q with a = q * divisor, usage_error if no such
  /// polynomial exists.  This is what makes fraction-free elimination work
  /// over the polynomial ring.
  static MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& divisor);

  /// Human-readable form, terms in canonical (leading-first) order.
  std::string str() const;

  /// Builds from (exponent vector over ring vars, coefficient) records.
  static MultiPoly from_records(
      Ring ring,
      const std::vector<std::pair<std::vector<unsigned>, Rational>>& records);
  std::vector<std::pair<std::vector<unsigned>, Rational>> to_records() const;

 private:
  friend class TermAccumulator;
  Ring ring_;
  std::vector<Term> terms_;  // descending by key, coeffs nonzero

  void normalize();  // sort + combine + drop zeros
};

/// Number of worker threads the heavy kernels may use: hardware concurrency
/// capped by the SWR_MAX_THREADS environment variable (minimum 1).
unsigned max_worker_threads();

}  // namespace swr
