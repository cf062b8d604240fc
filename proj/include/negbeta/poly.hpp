#pragma once

// Dense univariate polynomials over Q, constant term first.
//
// The zero polynomial is the empty vector; every other polynomial is kept
// trimmed so that back() is nonzero.

#include <gmpxx.h>

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace negbeta {

using Integer = mpz_class;
using Rational = mpq_class;
using Poly = std::vector<Rational>;

namespace poly {

void trim(Poly& p);

/// Degree of p, or -1 for the zero polynomial.
int degree(const Poly& p);

Poly from_integers(std::span<const Integer> coeffs);

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Rational& s);

/// Quotient and remainder of a by b; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly rem(const Poly& a, const Poly& b);

Poly monic(const Poly& p);

/// Monic gcd (zero if both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

Poly derivative(const Poly& p);

/// p / gcd(p, p'), made monic.
Poly squarefree_part(const Poly& p);

Rational eval(const Poly& p, const Rational& x);
int sign_at(const Poly& p, const Rational& x);

/// Number of distinct real roots in the half-open interval (lo, hi].
int sturm_root_count(const Poly& p, const Rational& lo, const Rational& hi);

/// Multiplies through by the lcm of the denominators and divides by the content.
std::vector<Integer> primitive_integer(const Poly& p);

/// Renders p with variable name `var`, e.g. "x^2 - x - 1".
std::string to_string(const Poly& p, char var);

}  // namespace poly
}  // namespace negbeta
