#pragma once

// Brute-force enumeration of all (-beta)-representations of x over
// A = {0..m}, digit by digit. Digit a is feasible after remainder e iff
// -beta*e - a stays in I, so every branch extends and the number of branches
// never decreases with depth.

#include "negbeta/expansion.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace negbeta {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Branch {
  std::vector<int> prefix;
  Element remainder;  // (-beta)^n (x - sum x_i (-beta)^-i), always in I
};

/// Every feasible length-n prefix, sorted in the alternate order. Throws
/// BudgetExceeded when more than `branch_budget` branches are alive.
std::vector<Branch> enumerate_prefixes(const NegBetaSystem& sys, const Element& x, std::size_t n,
                                       std::size_t branch_budget = 2'000'000);

/// Alternate-order maximal (greedy) or minimal (lazy) length-n prefix.
std::vector<int> extremal_prefix(const NegBetaSystem& sys, const Element& x, std::size_t n, Extremal which,
                                 std::size_t branch_budget = 2'000'000);

std::size_t count_representation_branches(const NegBetaSystem& sys, const Element& x, std::size_t n,
                                          std::size_t branch_budget = 2'000'000);

struct UniqueSample {
  DigitString word;    // sampled word: pair codes when `pairs`, else digits of A
  bool pairs = false;
  DigitString digits;  // the same representation over A
  Element value;
  std::size_t branches = 0;  // representations of `value` up to the probe depth
};

/// Numbers whose greedy and lazy representations coincide: purely periodic
/// words over {(1,0), (1,1), (1,2)} when floor(beta) = 2 (needs
/// beta^2 - 2beta - 2 > 0), over {1..m-1} when floor(beta) >= 3. Throws
/// DomainError when no such family exists.
std::vector<UniqueSample> sample_unique_numbers(const NegBetaSystem& sys, std::size_t word_length,
                                                std::size_t samples, std::size_t depth, std::uint64_t seed,
                                                std::size_t branch_budget = 2'000'000);

}  // namespace negbeta
