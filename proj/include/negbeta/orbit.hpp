#pragma once

// Orbit iteration with exact cycle detection.
//
// States are compared for exact equality only, so cycle detection uses
// Brent's algorithm over the stored orbit rather than hashing.

#include "negbeta/scheme.hpp"

#include <utility>
#include <vector>

namespace negbeta::detail {

/// `step(state)` returns {digits emitted, next state}. Every step emits the
/// same number of digits.
template <class Step>
Expansion expand_orbit(const Element& x0, Step&& step, const ExpandOptions& opts) {
  std::vector<Element> states{x0};
  std::vector<std::vector<int>> emitted;
  auto ensure = [&](std::size_t i) {
    while (states.size() <= i) {
      auto [digits, next] = step(states.back());
      emitted.push_back(std::move(digits));
      states.push_back(std::move(next));
    }
  };
  auto flatten = [&](std::size_t from, std::size_t to) {
    std::vector<int> out;
    for (std::size_t i = from; i < to; ++i) out.insert(out.end(), emitted[i].begin(), emitted[i].end());
    return out;
  };
  auto prefix_of = [&](std::size_t ndigits) {
    std::vector<int> out;
    std::size_t steps = 0;
    while (out.size() < ndigits) {
      ensure(steps + 1);
      out.insert(out.end(), emitted[steps].begin(), emitted[steps].end());
      ++steps;
    }
    out.resize(ndigits);
    return out;
  };

  if (opts.depth > 0) return {DigitString::finite(prefix_of(opts.depth)), ExpansionStatus::Prefix};

  std::size_t power = 1, lam = 1, tortoise = 0, hare = 1;
  ensure(1);
  bool found = true;
  while (!(states[tortoise] == states[hare])) {
    if (power == lam) {
      tortoise = hare;
      power *= 2;
      lam = 0;
    }
    ++hare;
    ++lam;
    if (hare > opts.orbit_budget) {
      found = false;
      break;
    }
    ensure(hare);
  }
  if (!found)
    return {DigitString::finite(prefix_of(opts.fallback_depth)), ExpansionStatus::PeriodNotFound};

  std::size_t mu = 0;
  ensure(lam);
  while (!(states[mu] == states[mu + lam])) {
    ++mu;
    ensure(mu + lam);
  }
  return {DigitString::periodic(flatten(0, mu), flatten(mu, mu + lam)), ExpansionStatus::Periodic};
}

}  // namespace negbeta::detail
