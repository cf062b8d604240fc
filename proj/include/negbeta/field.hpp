#pragma once

// Exact arithmetic in Q(beta) for a real algebraic beta > 1.
//
// beta is pinned down by an integer polynomial together with a rational
// bracket isolating exactly one of its real roots. Elements are coefficient
// vectors in the power basis 1, beta, ..., beta^(d-1), reduced modulo the
// squarefree part of the polynomial. Signs are decided by rational interval
// evaluation over the bracket, with an algebraic zero test (gcd against the
// modulus) when the enclosure straddles zero.

#include "negbeta/poly.hpp"

#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace negbeta {

class Element;

/// Thrown for any failure to set up a usable base.
class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {
struct FieldData;
}

class FieldContext {
 public:
  /// Validates the bracket and builds the context. `coeffs` is constant term
  /// first, e.g. {-1, -1, 1} for x^2 - x - 1.
  static FieldContext from_poly(std::span<const Integer> coeffs, const Rational& lo,
                                const Rational& hi, std::string name = {});
  static FieldContext from_poly(std::initializer_list<long> coeffs, const Rational& lo,
                                const Rational& hi, std::string name = {});

  /// A non-integer rational base > 1, as a degree-one field.
  static FieldContext rational(const Rational& beta);

  static FieldContext golden();      // root of x^2 - x - 1 in (1, 2)
  static FieldContext tribonacci();  // root of x^3 - x^2 - x - 1 in (1, 2)

  const std::string& name() const;
  int degree() const;
  const std::vector<Integer>& input_poly() const;
  const Poly& modulus() const;
  bool certified_irreducible() const;

  /// Current tightest isolating bracket (lo, hi).
  std::pair<Rational, Rational> bracket() const;
  /// Refines (and caches) until hi - lo <= width.
  std::pair<Rational, Rational> bracket(const Rational& width) const;

  Element zero() const;
  Element one() const;
  Element beta() const;
  Element from_rational(const Rational& q) const;
  Element from_coeffs(std::vector<Rational> coeffs) const;

  /// floor(beta), cached.
  long floor_beta() const;

  bool operator==(const FieldContext& other) const { return data_ == other.data_; }

 private:
  friend class Element;
  explicit FieldContext(std::shared_ptr<const detail::FieldData> d) : data_(std::move(d)) {}
  std::shared_ptr<const detail::FieldData> data_;
};

/// An element of Q(beta). Immutable value type.
class Element {
 public:
  Element() = default;

  const FieldContext& context() const { return ctx_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Element operator-() const;
  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator/(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Rational& s);
  friend Element operator*(const Rational& s, const Element& a) { return a * s; }
  friend Element operator+(const Element& a, const Rational& s);
  friend Element operator-(const Element& a, const Rational& s);
  friend Element operator+(const Rational& s, const Element& a) { return a + s; }
  friend Element operator-(const Rational& s, const Element& a) { return -a + s; }

  Element& operator+=(const Element& o) { return *this = *this + o; }
  Element& operator-=(const Element& o) { return *this = *this - o; }
  Element& operator*=(const Element& o) { return *this = *this * o; }

  Element inverse() const;
  Element pow(unsigned n) const;

  /// Exact sign of the real value: -1, 0 or +1.
  int sign() const;
  bool is_zero() const;

  Integer floor() const;
  Integer ceil() const;

  /// Rational enclosure [lo, hi] of the value over the current bracket.
  std::pair<Rational, Rational> enclosure() const;
  /// Decimal approximation with `digits` fractional digits, for display only.
  std::string approx(int digits = 12) const;

  /// Polynomial in `b`, e.g. "1/2*b - 1".
  std::string to_string() const;

  bool operator==(const Element& o) const;
  std::strong_ordering operator<=>(const Element& o) const;
  bool operator==(const Rational& q) const;
  std::strong_ordering operator<=>(const Rational& q) const;

 private:
  friend class FieldContext;
  Element(FieldContext ctx, std::vector<Rational> c) : ctx_(std::move(ctx)), coeffs_(std::move(c)) {}
  void check_same(const Element& o) const;
  bool vanishes() const;

  FieldContext ctx_{nullptr};
  std::vector<Rational> coeffs_;
};

}  // namespace negbeta
