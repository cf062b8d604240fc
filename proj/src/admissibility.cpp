#include "negbeta/admissibility.hpp"

#include <algorithm>
#include <stdexcept>

namespace negbeta {

AlphabetInfo minimal_alphabet(const NegBetaSystem& sys) {
  const int m = sys.m();
  const int n = sys.pair_count();
  const Element frac_times_beta = sys.beta() * (sys.beta() - Rational(m));
  AlphabetInfo info;
  for (int c = 0; c < n; ++c) {
    PairDigit p = PairDigit::from_code(c, m);
    // every pair with b >= 1, and (0, a) with a < beta*{beta}
    if (p.b >= 1 || frac_times_beta > Rational(p.a)) info.greedy.push_back(c);
  }
  info.max_greedy = info.greedy.back();
  info.full = static_cast<int>(info.greedy.size()) == n;
  const int top = n - 1;
  for (int c : info.greedy) info.lazy.push_back(top - c);
  std::sort(info.lazy.begin(), info.lazy.end());
  return info;
}

Scheme build_left_continuous_scheme(const NegBetaSystem& sys, const AlphabetInfo& alphabet) {
  const Element inv_beta2 = (sys.beta() * sys.beta()).inverse();
  const Element upper = sys.l() + Rational(1);
  std::vector<Cell> cells;
  const auto& codes = alphabet.greedy;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    Element lo = (sys.pair_value(codes[i]) + sys.l()) * inv_beta2;
    Element hi = i + 1 < codes.size() ? (sys.pair_value(codes[i + 1]) + sys.l()) * inv_beta2 : upper;
    cells.push_back({{std::move(lo), std::move(hi), false, true}, codes[i]});
  }
  return Scheme("beta2-greedy-left", sys.beta() * sys.beta(), Interval{sys.l(), upper, false, true},
                sys.pair_values(), std::move(cells), DigitKind::Pair, sys.m());
}

AdmissibilityBound reference_bounds(const NegBetaSystem& sys, const ExpandOptions& opts) {
  AlphabetInfo alphabet = minimal_alphabet(sys);
  Scheme s = build_left_continuous_scheme(sys, alphabet);
  Element top_point = s.transform(sys.l() + Rational(1), alphabet.max_greedy);
  Element mid_point = sys.l() + (sys.beta() - Rational(sys.m()));
  return {run_scheme(s, top_point, opts), run_scheme(s, mid_point, opts)};
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Accept: return "ACCEPT";
    case Verdict::Reject: return "REJECT";
    case Verdict::NoViolation: return "NO_VIOLATION";
    case Verdict::Undecided: return "UNDECIDED";
  }
  return "UNDECIDED";
}

namespace {

enum class BoundCmp { Below, Violates, Inconclusive, Undecided };

struct BoundOutcome {
  BoundCmp cmp;
  std::size_t length = 0;  // tail digits up to and including the first difference
};

// Is `tail` strictly lexicographically below `bound`?
BoundOutcome compare_to_bound(const DigitString& tail, const Expansion& bound) {
  const bool bound_exact = bound.status == ExpansionStatus::Periodic;
  const std::size_t bound_len = bound_exact ? 0 : bound.digits.size();
  if (!tail.is_finite() && bound_exact) {
    auto c = lex_compare(tail, bound.digits);
    if (c < 0) {
      std::size_t i = 0;
      while (tail.at(i) == bound.digits.at(i)) ++i;
      return {BoundCmp::Below, i + 1};
    }
    if (c > 0) {
      std::size_t i = 0;
      while (tail.at(i) == bound.digits.at(i)) ++i;
      return {BoundCmp::Violates, i + 1};
    }
    return {BoundCmp::Violates, 0};  // equal: the whole tail
  }
  std::size_t limit = tail.is_finite() ? tail.size() : bound_len;
  if (!bound_exact) limit = std::min(limit, bound_len);
  for (std::size_t i = 0; i < limit; ++i) {
    int t = tail.at(i), b = bound.digits.at(i);
    if (t < b) return {BoundCmp::Below, i + 1};
    if (t > b) return {BoundCmp::Violates, i + 1};
  }
  if (tail.is_finite() && (bound_exact || tail.size() <= bound_len)) return {BoundCmp::Inconclusive, 0};
  return {BoundCmp::Undecided, 0};
}

std::string factor_text(const DigitString& w, std::size_t start, std::size_t length, int m) {
  if (length == 0) return format_pairs(w.tail(start), m);
  return format_pairs(DigitString::finite(w.tail(start).prefix(length)), m);
}

std::size_t positions_to_check(const DigitString& w) {
  return w.is_finite() ? w.size() : w.preperiod().size() + w.period().size();
}

void require_alphabet(const DigitString& w, const std::vector<int>& alphabet, const char* name) {
  auto ok = [&](int d) { return std::binary_search(alphabet.begin(), alphabet.end(), d); };
  for (int d : w.preperiod())
    if (!ok(d)) throw std::invalid_argument(std::string("digit outside ") + name);
  for (int d : w.period())
    if (!ok(d)) throw std::invalid_argument(std::string("digit outside ") + name);
}

// Greedy check on `w`; offending factors are rendered from `shown`, which has
// the same length structure (the lazy check passes the uncomplemented word).
AdmissibilityResult greedy_check(const NegBetaSystem& sys, const AlphabetInfo& alphabet,
                                 const AdmissibilityBound& bounds, const DigitString& w,
                                 const DigitString& shown) {
  const int m = sys.m();
  bool undecided = false;
  const std::size_t n = positions_to_check(w);
  for (std::size_t k = 1; k <= n; ++k) {
    const int x = w.at(k - 1);
    const Expansion* bound = nullptr;
    const char* rule = nullptr;
    if (x == alphabet.max_greedy) {
      bound = &bounds.top;
      rule = "top-digit";
    } else if (PairDigit::from_code(x, m).a == m) {
      bound = &bounds.mid;
      rule = "mid-digit";
    } else {
      continue;
    }
    if (w.is_finite() && k == w.size()) continue;
    BoundOutcome o = compare_to_bound(w.tail(k), *bound);
    if (o.cmp == BoundCmp::Violates) {
      std::size_t len = o.length == 0 ? 0 : o.length + 1;
      return {Verdict::Reject, Violation{rule, k, factor_text(shown, k - 1, len, m)}};
    }
    if (o.cmp == BoundCmp::Undecided) undecided = true;
  }
  if (undecided) return {Verdict::Undecided, std::nullopt};
  return {w.is_finite() ? Verdict::NoViolation : Verdict::Accept, std::nullopt};
}

void require_binary(const DigitString& w) {
  for (int d : w.preperiod())
    if (d != 0 && d != 1) throw DigitFormatError("expected a binary word");
  for (int d : w.period())
    if (d != 0 && d != 1) throw DigitFormatError("expected a binary word");
}

std::string binary_text(const DigitString& w, std::size_t start, std::size_t length) {
  return format_digits(DigitString::finite(w.tail(start).prefix(length)), 1);
}

}  // namespace

GreedyAdmissibility::GreedyAdmissibility(const NegBetaSystem& sys, const ExpandOptions& opts)
    : sys_(sys), alphabet_(minimal_alphabet(sys)), bounds_(reference_bounds(sys, opts)) {}

AdmissibilityResult GreedyAdmissibility::check_greedy(const DigitString& pair_codes) const {
  require_alphabet(pair_codes, alphabet_.greedy, "A_G");
  return greedy_check(sys_, alphabet_, bounds_, pair_codes, pair_codes);
}

AdmissibilityResult GreedyAdmissibility::check_lazy(const DigitString& pair_codes) const {
  require_alphabet(pair_codes, alphabet_.lazy, "A_L");
  return greedy_check(sys_, alphabet_, bounds_, complement_pairs(pair_codes, sys_.m()), pair_codes);
}

AdmissibilityResult golden_forbidden_factor_check(const DigitString& w) {
  require_binary(w);
  // for u v^omega every run pattern shows up among runs starting before |u| + 2|v|
  const std::size_t core = w.is_finite() ? w.size() : w.preperiod().size() + 2 * w.period().size();
  const std::size_t len = w.is_finite() ? w.size() : core + w.period().size() + 2;
  std::vector<int> s = w.is_finite() ? w.preperiod() : w.prefix(len);

  // maximal runs; a run is complete when another digit follows it within s
  std::size_t start = 0;
  bool first = true;
  while (start < s.size() && (w.is_finite() || start < core)) {
    std::size_t end = start;
    while (end < s.size() && s[end] == s[start]) ++end;
    if (end == s.size()) break;
    const std::size_t run = end - start;
    const int d = s[start];
    if (first) {
      bool bad = d == 0 ? run % 2 == 1 : run % 2 == 0;
      if (bad)
        return {Verdict::Reject, Violation{d == 0 ? "prefix-0odd-1" : "prefix-1even-0", 1,
                                           binary_text(w, 0, run + 1)}};
    } else if (run % 2 == 0) {
      return {Verdict::Reject, Violation{d == 0 ? "factor-1-0even-1" : "factor-0-1even-0", start,
                                         binary_text(w, start - 1, run + 2)}};
    }
    first = false;
    start = end;
  }
  if (w.is_finite()) return {Verdict::NoViolation, std::nullopt};
  if (w.period().size() == 1) {
    const std::size_t k = w.preperiod().size() + 1;
    return {Verdict::Reject, Violation{w.period()[0] == 0 ? "suffix-0omega" : "suffix-1omega", k,
                                       format_digits(w.tail(k - 1), 1)}};
  }
  return {Verdict::Accept, std::nullopt};
}

AdmissibilityResult ito_sadahiro_admissible(const DigitString& w) {
  require_binary(w);
  const DigitString lower = DigitString::periodic({1}, {0});
  const DigitString upper = DigitString::periodic({0, 1}, {0});
  const std::size_t n = positions_to_check(w);
  for (std::size_t k = 1; k <= n; ++k) {
    DigitString t = w.tail(k - 1);
    // first differing index against a reference, or npos
    auto diff = [&](const DigitString& ref, std::size_t limit) {
      for (std::size_t i = 0; i < limit; ++i)
        if (t.at(i) != ref.at(i)) return i;
      return std::string::npos;
    };
    if (t.is_finite()) {
      std::vector<int> tv = t.preperiod();
      std::size_t i = diff(lower, tv.size());
      if (i != std::string::npos && alt_compare(tv, lower.prefix(tv.size())) < 0)
        return {Verdict::Reject, Violation{"below-10omega", k, binary_text(w, k - 1, i + 1)}};
      i = diff(upper, tv.size());
      if (i != std::string::npos && alt_compare(tv, upper.prefix(tv.size())) > 0)
        return {Verdict::Reject, Violation{"above-010omega", k, binary_text(w, k - 1, i + 1)}};
      continue;
    }
    if (alt_compare(t, lower) < 0) {
      std::size_t i = 0;
      while (t.at(i) == lower.at(i)) ++i;
      return {Verdict::Reject, Violation{"below-10omega", k, binary_text(w, k - 1, i + 1)}};
    }
    auto c = alt_compare(t, upper);
    if (c >= 0) {
      std::string text;
      if (c == 0) {
        text = format_digits(t, 1);
      } else {
        std::size_t i = 0;
        while (t.at(i) == upper.at(i)) ++i;
        text = binary_text(w, k - 1, i + 1);
      }
      return {Verdict::Reject, Violation{"above-010omega", k, text}};
    }
  }
  return {w.is_finite() ? Verdict::NoViolation : Verdict::Accept, std::nullopt};
}

}  // namespace negbeta
