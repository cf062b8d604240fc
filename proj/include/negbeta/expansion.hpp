#pragma once

// Extremal (-beta)-representations over A = {0, ..., floor(beta)}.
//
// Two independent routes are provided: the alternating single-digit maps
// (D_v then D_m for greedy, D_m then D_v for lazy) in base -beta, and the
// base beta^2 schemes over the pair alphabet B = {-b*beta + a}. The Ito-Sadahiro
// and Renyi schemes are built on the same engine.

#include "negbeta/scheme.hpp"

#include <span>

namespace negbeta {

/// Base -beta with alphabet {0..m}, m = floor(beta), and its representable
/// interval I = [l, r].
class NegBetaSystem {
 public:
  explicit NegBetaSystem(FieldContext ctx);

  const FieldContext& context() const { return ctx_; }
  int m() const { return m_; }
  const Element& beta() const { return beta_; }
  const Element& l() const { return l_; }
  const Element& r() const { return r_; }

  /// I = [l, r] with l = -beta*m/(beta^2-1), r = m/(beta^2-1).
  Interval interval() const;
  /// I_a = [l + (m-a)/beta, r - a/beta]: numbers whose representation may start with a.
  Interval digit_interval(int a) const;
  bool in_interval(const Element& x) const;

  /// Value -b*beta + a of a pair digit code.
  const Element& pair_value(int code) const { return pair_values_[static_cast<std::size_t>(code)]; }
  const std::vector<Element>& pair_values() const { return pair_values_; }
  int pair_count() const { return (m_ + 1) * (m_ + 1); }

 private:
  FieldContext ctx_;
  int m_;
  Element beta_, inv_beta_, l_, r_;
  std::vector<Element> pair_values_;
};

struct Step {
  int digit;
  Element rest;
};

/// (D_m(x), T_m(x)): the largest feasible digit, i.e. the alternate-order smallest.
Step step_m(const NegBetaSystem& sys, const Element& x);
/// (D_v(x), T_v(x)): the smallest feasible digit, i.e. the alternate-order largest.
Step step_v(const NegBetaSystem& sys, const Element& x);

/// Greedy (alternate-order maximal) representation: D_v, D_m, D_v, ...
Expansion greedy_neg_beta(const NegBetaSystem& sys, const Element& x, const ExpandOptions& opts = {});
/// Lazy (alternate-order minimal) representation: D_m, D_v, D_m, ...
Expansion lazy_neg_beta(const NegBetaSystem& sys, const Element& x, const ExpandOptions& opts = {});

enum class Extremal { Greedy, Lazy };

/// T_G / T_L in base beta^2 over B, with digit codes ordered by value.
Scheme build_beta2_scheme(const NegBetaSystem& sys, Extremal kind);

/// Ito-Sadahiro: J = [-beta/(beta+1), 1/(beta+1)), D(x) = floor(-beta*x + beta/(beta+1)).
Scheme build_ito_sadahiro_scheme(const NegBetaSystem& sys);

/// Renyi: base beta on [0, 1), D(x) = floor(beta*x).
Scheme build_renyi_scheme(const FieldContext& ctx);

/// Sum of w_i * base^(-i); closed form for eventually periodic w.
Element eval_digits(const DigitString& w, const Element& base, std::span<const Element> digit_values);

/// Value of a word over A in base -beta.
Element eval_neg_beta(const NegBetaSystem& sys, const DigitString& w);
/// Value of a pair word in base beta^2.
Element eval_pairs(const NegBetaSystem& sys, const DigitString& pair_codes);

}  // namespace negbeta
