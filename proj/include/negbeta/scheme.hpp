#pragma once

// Generic representation schemes: a base, a domain interval J and a
// piecewise-constant digit map D, iterated through T(x) = base*x - D(x).

#include "negbeta/digits.hpp"
#include "negbeta/field.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace negbeta {

/// x lies outside the interval an operation is defined on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Interval {
  Element lo, hi;
  bool lo_closed = true;
  bool hi_closed = true;

  bool contains(const Element& x) const;
  bool empty() const;
  /// "[lo, hi)" with exact endpoints.
  std::string to_string() const;
};

struct Cell {
  Interval range;
  int digit = 0;  // index into Scheme::digit_values()
};

enum class DigitKind { Single, Pair };

class Scheme {
 public:
  /// Cells must be listed left to right and tile `domain`; every cell must be
  /// mapped into `domain` by T. Throws std::invalid_argument otherwise.
  Scheme(std::string kind, Element base, Interval domain, std::vector<Element> digit_values,
         std::vector<Cell> cells, DigitKind digit_kind, int floor_beta);

  const std::string& kind() const { return kind_; }
  const Element& base() const { return base_; }
  const Interval& domain() const { return domain_; }
  const std::vector<Element>& digit_values() const { return values_; }
  const std::vector<Cell>& cells() const { return cells_; }
  DigitKind digit_kind() const { return digit_kind_; }
  int floor_beta() const { return m_; }

  /// D(x); throws DomainError outside the domain.
  int digit_at(const Element& x) const;
  /// base*x - value(digit).
  Element transform(const Element& x, int digit) const;

 private:
  std::string kind_;
  Element base_;
  Interval domain_;
  std::vector<Element> values_;
  std::vector<Cell> cells_;
  DigitKind digit_kind_;
  int m_;
};

enum class ExpansionStatus {
  Periodic,        // exact eventually periodic expansion
  Prefix,          // finite prefix of the requested depth
  PeriodNotFound,  // orbit budget exhausted; prefix returned
};

std::string status_name(ExpansionStatus s);

struct ExpandOptions {
  /// 0 requests period detection; otherwise the number of digits to produce.
  std::size_t depth = 0;
  /// Maximum number of orbit states visited while looking for a repeat.
  std::size_t orbit_budget = 10000;
  /// Prefix length returned when no period is found.
  std::size_t fallback_depth = 60;
};

struct Expansion {
  DigitString digits;
  ExpansionStatus status = ExpansionStatus::Prefix;
  bool endpoint = false;  // x was an endpoint of the domain
};

/// d(x) = x1 x2 ... with x_k = D(T^(k-1) x).
Expansion run_scheme(const Scheme& s, const Element& x, const ExpandOptions& opts = {});

}  // namespace negbeta
