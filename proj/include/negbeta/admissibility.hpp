#pragma once

// Which pair strings occur as greedy (or lazy) beta^2-expansions on the
// attractor [l, l+1) (resp. (r-1, r]).
//
// A string X1 X2 ... over A_G is a greedy expansion iff for every k the tail
// after X_k is lexicographically below
//   d*(T*(l+1))   when X_k is the largest digit of A_G,
//   d*(l+{beta})  when X_k = -b*beta + floor(beta) is not,
// where d*, T* are the left-continuous versions of the greedy maps on
// (l, l+1]. Lazy admissibility follows by digitwise complement.

#include "negbeta/expansion.hpp"

#include <optional>
#include <string>
#include <vector>

namespace negbeta {

struct AlphabetInfo {
  std::vector<int> greedy;  // A_G as pair codes, ascending
  std::vector<int> lazy;    // A_L = floor(beta) - A_G, ascending
  int max_greedy = 0;       // code of max A_G = ceil({beta} beta) - 1
  bool full = false;        // A_G == B, i.e. beta^2 - m*beta - m > 0
};

AlphabetInfo minimal_alphabet(const NegBetaSystem& sys);

/// D*, T* on (l, l+1]: cells (l_X, r_X] for X in A_G.
Scheme build_left_continuous_scheme(const NegBetaSystem& sys, const AlphabetInfo& alphabet);

struct AdmissibilityBound {
  Expansion top;  // d*(T*(l+1)), bound after the maximal digit
  Expansion mid;  // d*(l + {beta}), bound after -b*beta + floor(beta)
};

AdmissibilityBound reference_bounds(const NegBetaSystem& sys, const ExpandOptions& opts = {});

enum class Verdict {
  Accept,       // infinite word, admissible
  Reject,       // a violation was found
  NoViolation,  // finite word, no violation within it
  Undecided,    // a reference bound was not resolved far enough
};

std::string verdict_name(Verdict v);

struct Violation {
  std::string rule;    // "top-digit", "mid-digit", or a forbidden-factor rule id
  std::size_t position = 0;  // 1-based index where the offending factor starts
  std::string factor;  // offending factor as text
};

struct AdmissibilityResult {
  Verdict verdict = Verdict::Accept;
  std::optional<Violation> violation;
};

/// Theorem-style checker for one base; bounds are computed once at construction.
class GreedyAdmissibility {
 public:
  explicit GreedyAdmissibility(const NegBetaSystem& sys, const ExpandOptions& opts = {});

  const NegBetaSystem& system() const { return sys_; }
  const AlphabetInfo& alphabet() const { return alphabet_; }
  const AdmissibilityBound& bounds() const { return bounds_; }

  /// Throws std::invalid_argument for digits outside A_G.
  AdmissibilityResult check_greedy(const DigitString& pair_codes) const;
  /// Throws std::invalid_argument for digits outside A_L.
  AdmissibilityResult check_lazy(const DigitString& pair_codes) const;

 private:
  NegBetaSystem sys_;
  AlphabetInfo alphabet_;
  AdmissibilityBound bounds_;
};

inline AdmissibilityResult is_admissible_greedy(const GreedyAdmissibility& checker, const DigitString& w) {
  return checker.check_greedy(w);
}

inline AdmissibilityResult is_admissible_lazy(const GreedyAdmissibility& checker, const DigitString& w) {
  return checker.check_lazy(w);
}

/// Binary words that are greedy (-phi)-expansions of x in [-1, 0): no prefix
/// 1^{2k}0 or 0^{2k-1}1, no suffix 0^omega or 1^omega, no factor 10^{2k}1 or
/// 01^{2k}0.
AdmissibilityResult golden_forbidden_factor_check(const DigitString& w);

/// Ito-Sadahiro (-phi)-expansions: every tail t has 10^omega <=_alt t <_alt 010^omega.
AdmissibilityResult ito_sadahiro_admissible(const DigitString& w);

}  // namespace negbeta
