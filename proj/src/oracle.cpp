#include "negbeta/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace negbeta {

std::vector<Branch> enumerate_prefixes(const NegBetaSystem& sys, const Element& x, std::size_t n,
                                       std::size_t branch_budget) {
  if (!sys.in_interval(x))
    throw DomainError(x.to_string() + " is outside the representable interval " + sys.interval().to_string());
  std::vector<Branch> frontier{{{}, x}};
  for (std::size_t depth = 0; depth < n; ++depth) {
    std::vector<Branch> next;
    for (const Branch& br : frontier) {
      Element shifted = -(sys.beta() * br.remainder);
      for (int a = 0; a <= sys.m(); ++a) {
        Element rest = shifted - Rational(a);
        if (!sys.in_interval(rest)) continue;
        Branch child{br.prefix, std::move(rest)};
        child.prefix.push_back(a);
        next.push_back(std::move(child));
        if (next.size() > branch_budget)
          throw BudgetExceeded("more than " + std::to_string(branch_budget) + " branches at depth " +
                               std::to_string(depth + 1));
      }
    }
    frontier = std::move(next);
  }
  std::sort(frontier.begin(), frontier.end(),
            [](const Branch& p, const Branch& q) { return alt_compare(p.prefix, q.prefix) < 0; });
  return frontier;
}

std::vector<int> extremal_prefix(const NegBetaSystem& sys, const Element& x, std::size_t n, Extremal which,
                                 std::size_t branch_budget) {
  auto all = enumerate_prefixes(sys, x, n, branch_budget);
  return which == Extremal::Greedy ? all.back().prefix : all.front().prefix;
}

std::size_t count_representation_branches(const NegBetaSystem& sys, const Element& x, std::size_t n,
                                          std::size_t branch_budget) {
  return enumerate_prefixes(sys, x, n, branch_budget).size();
}

std::vector<UniqueSample> sample_unique_numbers(const NegBetaSystem& sys, std::size_t word_length,
                                                std::size_t samples, std::size_t depth, std::uint64_t seed,
                                                std::size_t branch_budget) {
  const int m = sys.m();
  if (word_length == 0) throw std::invalid_argument("word length must be positive");
  std::vector<int> letters;
  bool pairs = false;
  if (m == 2) {
    const Element& b = sys.beta();
    if (!((b * b - b * Rational(2) - Rational(2)).sign() > 0))
      throw DomainError("floor(beta) = 2 needs beta^2 - 2*beta - 2 > 0 for this family");
    pairs = true;
    for (int a = 0; a <= 2; ++a) letters.push_back(PairDigit{1, a}.code(m));
  } else if (m >= 3) {
    for (int a = 1; a < m; ++a) letters.push_back(a);
  } else {
    throw DomainError("no family of uniquely representable numbers is known for floor(beta) = 1");
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  std::set<DigitString, bool (*)(const DigitString&, const DigitString&)> seen(
      [](const DigitString& p, const DigitString& q) {
        if (p.period().size() != q.period().size()) return p.period().size() < q.period().size();
        return p.period() < q.period();
      });
  std::vector<UniqueSample> out;
  const std::size_t attempts = samples * 50 + 50;
  for (std::size_t t = 0; t < attempts && out.size() < samples; ++t) {
    std::vector<int> w(word_length);
    for (int& d : w) d = letters[pick(rng)];
    DigitString word = DigitString::periodic({}, std::move(w));
    if (!seen.insert(word).second) continue;
    UniqueSample s;
    s.word = word;
    s.pairs = pairs;
    s.digits = pairs ? psi_expand(word, m) : word;
    s.value = eval_neg_beta(sys, s.digits);
    s.branches = count_representation_branches(sys, s.value, depth, branch_budget);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace negbeta
