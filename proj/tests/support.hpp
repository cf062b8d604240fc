#pragma once

// Independent reference predicates and samplers shared by the unit and
// acceptance tests. Nothing here calls the admissibility module.

#include "negbeta/expansion.hpp"

#include <functional>
#include <random>
#include <regex>
#include <string>
#include <vector>

namespace negbeta::testing {

/// lo + (hi - lo) * k/n with k uniform in [0, n) (or [0, n] when closed).
inline Element random_between(const Element& lo, const Element& hi, std::mt19937_64& rng, bool closed = true,
                              long n = 1'000'003) {
  std::uniform_int_distribution<long> pick(0, closed ? n : n - 1);
  return lo + (hi - lo) * Rational(pick(rng), n);
}

inline Element random_in_I(const NegBetaSystem& sys, std::mt19937_64& rng) {
  return random_between(sys.l(), sys.r(), rng);
}

/// The first n letters of w.
inline std::vector<int> unroll(const DigitString& w, std::size_t n) {
  if (w.is_finite()) n = std::min(n, w.size());
  return w.prefix(n);
}

inline bool has_factor(const std::vector<int>& s, const std::vector<int>& f) {
  return std::search(s.begin(), s.end(), f.begin(), f.end()) != s.end();
}

/// Every word of length n over `letters`.
inline void for_each_word(const std::vector<int>& letters, std::size_t n,
                          const std::function<void(const std::vector<int>&)>& f) {
  std::vector<std::size_t> idx(n, 0);
  std::vector<int> w(n);
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) w[i] = letters[idx[i]];
    f(w);
    std::size_t i = n;
    while (i > 0 && ++idx[i - 1] == letters.size()) idx[--i] = 0;
    if (i == 0) return;
  }
}

/// Every u v^omega with |u| + |v| <= max_total, |v| >= 1 (not deduplicated).
inline void for_each_periodic(const std::vector<int>& letters, std::size_t max_total,
                              const std::function<void(const DigitString&)>& f) {
  for (std::size_t total = 1; total <= max_total; ++total)
    for (std::size_t per = 1; per <= total; ++per)
      for_each_word(letters, total, [&](const std::vector<int>& w) {
        f(DigitString::periodic({w.begin(), w.end() - static_cast<long>(per)},
                                {w.end() - static_cast<long>(per), w.end()}));
      });
}

/// Contains one of the finite factors, or has one of the periods as a
/// suffix (period given as one rotation; any rotation matches).
inline bool forbidden_by(const DigitString& w, const std::vector<std::vector<int>>& factors,
                         const std::vector<std::vector<int>>& periods) {
  std::size_t span = 0;
  for (const auto& f : factors) span = std::max(span, f.size());
  std::vector<int> s = unroll(w, w.preperiod().size() + 2 * w.period().size() + span);
  for (const auto& f : factors)
    if (has_factor(s, f)) return true;
  if (w.is_finite()) return false;
  for (const auto& p : periods) {
    if (p.size() != w.period().size()) continue;
    for (std::size_t r = 0; r < p.size(); ++r) {
      std::vector<int> rot(p.begin() + static_cast<long>(r), p.end());
      rot.insert(rot.end(), p.begin(), p.begin() + static_cast<long>(r));
      if (rot == w.period()) return true;
    }
  }
  return false;
}

// Pair codes for floor(beta) = 1: A = -beta, B = -beta+1, C = 0, D = 1.
enum : int { A = 0, B = 1, C = 2, D = 3 };

/// Golden ratio, greedy over {A,B,C}: no BC, B^omega, C^omega. Lazy over
/// {B,C,D}: no CB, B^omega, C^omega.
inline bool golden_pairs_forbidden(const DigitString& w, bool lazy) {
  return forbidden_by(w, {lazy ? std::vector<int>{C, B} : std::vector<int>{B, C}}, {{B}, {C}});
}

/// Tribonacci, greedy: no BD, DC, DD, (BCD)^omega. Lazy: no CA, AB, AA, (CBA)^omega.
inline bool tribonacci_pairs_forbidden(const DigitString& w, bool lazy) {
  if (lazy) return forbidden_by(w, {{C, A}, {A, B}, {A, A}}, {{C, B, A}});
  return forbidden_by(w, {{B, D}, {D, C}, {D, D}}, {{B, C, D}});
}

inline std::string binary_string(const std::vector<int>& w) {
  std::string s;
  for (int d : w) s += static_cast<char>('0' + d);
  return s;
}

/// Finite binary words that are prefixes of 0^{2k1} 1^{2k2+1} 0^{2k3+1} 1^{2k4+1} ...
inline bool golden_shape_prefix(const std::vector<int>& w) {
  static const std::regex shape("^(0*|(00)*(1(11)*0(00)*)*(1*|1(11)*0*))$");
  return std::regex_match(binary_string(w), shape);
}

/// Ito-Sadahiro (-phi) words: no factor 1 0^(odd) 1 and no suffix 0 1 0^omega.
inline bool golden_is_forbidden(const DigitString& w) {
  std::vector<int> s = unroll(w, 2 * (w.preperiod().size() + w.period().size()) + 4);
  static const std::regex odd_gap("10(00)*1");
  if (std::regex_search(binary_string(s), odd_gap)) return true;
  if (w.is_finite() || w.period() != std::vector<int>{0}) return false;
  const auto& u = w.preperiod();
  return u.size() >= 2 && u[u.size() - 2] == 0 && u.back() == 1;
}

}  // namespace negbeta::testing
