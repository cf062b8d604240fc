#include "negbeta/expansion.hpp"

#include "negbeta/orbit.hpp"

#include <algorithm>

namespace negbeta {

NegBetaSystem::NegBetaSystem(FieldContext ctx) : ctx_(std::move(ctx)) {
  m_ = static_cast<int>(ctx_.floor_beta());
  beta_ = ctx_.beta();
  inv_beta_ = beta_.inverse();
  Element denom_inv = (beta_ * beta_ - Rational(1)).inverse();
  r_ = denom_inv * Rational(m_);
  l_ = -(beta_ * r_);
  pair_values_.reserve(static_cast<std::size_t>(pair_count()));
  for (int c = 0; c < pair_count(); ++c) {
    PairDigit p = PairDigit::from_code(c, m_);
    pair_values_.push_back(beta_ * Rational(-p.b) + Rational(p.a));
  }
}

Interval NegBetaSystem::interval() const { return {l_, r_, true, true}; }

Interval NegBetaSystem::digit_interval(int a) const {
  return {l_ + inv_beta_ * Rational(m_ - a), r_ - inv_beta_ * Rational(a), true, true};
}

bool NegBetaSystem::in_interval(const Element& x) const { return x >= l_ && x <= r_; }

namespace {

void require_in_I(const NegBetaSystem& sys, const Element& x) {
  if (!sys.in_interval(x))
    throw DomainError(x.to_string() + " is outside the representable interval " +
                      sys.interval().to_string());
}

Step apply_digit(const NegBetaSystem& sys, const Element& x, long d) {
  return {static_cast<int>(d), -(sys.beta() * x) - Rational(d)};
}

Expansion alternating(const NegBetaSystem& sys, const Element& x, const ExpandOptions& opts,
                      bool greedy) {
  require_in_I(sys, x);
  auto pair_step = [&sys, greedy](const Element& y) {
    Step s1 = greedy ? step_v(sys, y) : step_m(sys, y);
    Step s2 = greedy ? step_m(sys, s1.rest) : step_v(sys, s1.rest);
    return std::pair{std::vector<int>{s1.digit, s2.digit}, std::move(s2.rest)};
  };
  Expansion e = detail::expand_orbit(x, pair_step, opts);
  e.endpoint = x == sys.l() || x == sys.r();
  return e;
}

}  // namespace

Step step_m(const NegBetaSystem& sys, const Element& x) {
  require_in_I(sys, x);
  // x in I_a  <=>  m - beta(x - l) <= a <= beta(r - x)
  Integer top = (sys.beta() * (sys.r() - x)).floor();
  long d = std::min<long>(sys.m(), top.get_si());
  return apply_digit(sys, x, d);
}

Step step_v(const NegBetaSystem& sys, const Element& x) {
  require_in_I(sys, x);
  Integer bottom = (sys.beta() * (x - sys.l()) * Rational(-1) + Rational(sys.m())).ceil();
  long d = std::max<long>(0, bottom.get_si());
  return apply_digit(sys, x, d);
}

Expansion greedy_neg_beta(const NegBetaSystem& sys, const Element& x, const ExpandOptions& opts) {
  return alternating(sys, x, opts, true);
}

Expansion lazy_neg_beta(const NegBetaSystem& sys, const Element& x, const ExpandOptions& opts) {
  return alternating(sys, x, opts, false);
}

Scheme build_beta2_scheme(const NegBetaSystem& sys, Extremal kind) {
  const Element beta2 = sys.beta() * sys.beta();
  const Element inv_beta2 = beta2.inverse();
  const int n = sys.pair_count();
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(n));
  if (kind == Extremal::Greedy) {
    // gamma_ba = (-b*beta + a + l) / beta^2; cells [gamma_c, gamma_{c+1}), top cell closed at r
    std::vector<Element> gamma;
    for (int c = 0; c < n; ++c) gamma.push_back((sys.pair_value(c) + sys.l()) * inv_beta2);
    for (int c = 0; c < n; ++c) {
      bool top = c + 1 == n;
      cells.push_back({{gamma[c], top ? sys.r() : gamma[c + 1], true, top}, c});
    }
  } else {
    // delta_ba = (-b*beta + a + r) / beta^2; cells (delta_{c-1}, delta_c], bottom cell closed at l
    std::vector<Element> delta;
    for (int c = 0; c < n; ++c) delta.push_back((sys.pair_value(c) + sys.r()) * inv_beta2);
    for (int c = 0; c < n; ++c) {
      bool bottom = c == 0;
      cells.push_back({{bottom ? sys.l() : delta[c - 1], delta[c], bottom, true}, c});
    }
  }
  return Scheme(kind == Extremal::Greedy ? "beta2-greedy" : "beta2-lazy", beta2, sys.interval(),
                sys.pair_values(), std::move(cells), DigitKind::Pair, sys.m());
}

Scheme build_ito_sadahiro_scheme(const NegBetaSystem& sys) {
  const FieldContext& ctx = sys.context();
  const Element& beta = sys.beta();
  const int m = sys.m();
  Element inv_b1 = (beta + Rational(1)).inverse();
  Element shift = beta * inv_b1;  // beta/(beta+1)
  Interval domain{-shift, inv_b1, true, false};
  Element inv_beta = beta.inverse();

  std::vector<Element> values;
  for (int a = 0; a <= m; ++a) values.push_back(ctx.from_rational(Rational(a)));

  // D(x) = a  <=>  (shift - a - 1)/beta < x <= (shift - a)/beta
  std::vector<Cell> cells;
  for (int a = m; a >= 0; --a) {
    Interval c{(shift - Rational(a + 1)) * inv_beta, (shift - Rational(a)) * inv_beta, false, true};
    if (c.lo <= domain.lo) {
      c.lo = domain.lo;
      c.lo_closed = domain.lo_closed;
    }
    if (c.hi >= domain.hi) {
      c.hi = domain.hi;
      c.hi_closed = domain.hi_closed;
    }
    if (!c.empty()) cells.push_back({c, a});
  }
  return Scheme("is", -beta, domain, std::move(values), std::move(cells), DigitKind::Single, m);
}

Scheme build_renyi_scheme(const FieldContext& ctx) {
  const Element beta = ctx.beta();
  const int m = static_cast<int>(ctx.floor_beta());
  Element inv_beta = beta.inverse();
  Interval domain{ctx.zero(), ctx.one(), true, false};
  std::vector<Element> values;
  std::vector<Cell> cells;
  for (int a = 0; a <= m; ++a) {
    values.push_back(ctx.from_rational(Rational(a)));
    bool top = a == m;
    cells.push_back({{inv_beta * Rational(a), top ? ctx.one() : inv_beta * Rational(a + 1), true, false}, a});
  }
  return Scheme("renyi", beta, domain, std::move(values), std::move(cells), DigitKind::Single, m);
}

Element eval_digits(const DigitString& w, const Element& base, std::span<const Element> digit_values) {
  const FieldContext& ctx = base.context();
  auto horner = [&](const std::vector<int>& word) {
    Element acc = ctx.zero();
    for (int d : word) acc = acc * base + digit_values[static_cast<std::size_t>(d)];
    return acc;
  };
  Element head = horner(w.preperiod());
  if (!w.is_finite()) {
    Element cycle = base.pow(static_cast<unsigned>(w.period().size())) - Rational(1);
    head += horner(w.period()) / cycle;
  }
  return head / base.pow(static_cast<unsigned>(w.preperiod().size()));
}

Element eval_neg_beta(const NegBetaSystem& sys, const DigitString& w) {
  std::vector<Element> values;
  for (int a = 0; a <= sys.m(); ++a) values.push_back(sys.context().from_rational(Rational(a)));
  return eval_digits(w, -sys.beta(), values);
}

Element eval_pairs(const NegBetaSystem& sys, const DigitString& pair_codes) {
  return eval_digits(pair_codes, sys.beta() * sys.beta(), sys.pair_values());
}

}  // namespace negbeta
