#include "negbeta/scheme.hpp"

#include "negbeta/orbit.hpp"

namespace negbeta {

bool Interval::contains(const Element& x) const {
  auto c1 = x <=> lo;
  if (c1 < 0 || (c1 == 0 && !lo_closed)) return false;
  auto c2 = x <=> hi;
  return c2 < 0 || (c2 == 0 && hi_closed);
}

bool Interval::empty() const {
  auto c = lo <=> hi;
  return c > 0 || (c == 0 && !(lo_closed && hi_closed));
}

std::string Interval::to_string() const {
  return std::string(lo_closed ? "[" : "(") + lo.to_string() + ", " + hi.to_string() +
         (hi_closed ? "]" : ")");
}

namespace {

// Is the endpoint (e, e_closed) of an image interval inside the domain side
// (E, E_closed)? `left` selects which side is being compared.
bool endpoint_inside(const Element& e, bool e_closed, const Element& E, bool E_closed, bool left) {
  auto c = e <=> E;
  if (left ? c > 0 : c < 0) return true;
  if (c != 0) return false;
  return E_closed || !e_closed;
}

}  // namespace

Scheme::Scheme(std::string kind, Element base, Interval domain, std::vector<Element> digit_values,
               std::vector<Cell> cells, DigitKind digit_kind, int floor_beta)
    : kind_(std::move(kind)),
      base_(std::move(base)),
      domain_(std::move(domain)),
      values_(std::move(digit_values)),
      cells_(std::move(cells)),
      digit_kind_(digit_kind),
      m_(floor_beta) {
  if (cells_.empty()) throw std::invalid_argument("scheme needs at least one cell");
  int bs = base_.sign();
  if (bs == 0) throw std::invalid_argument("scheme base must be nonzero");
  {
    Element one = base_.context().one();
    Element mag = bs > 0 ? base_ : -base_;
    if (!(mag > one)) throw std::invalid_argument("scheme base must satisfy |base| > 1");
  }

  const Cell& first = cells_.front();
  const Cell& last = cells_.back();
  if (!(first.range.lo == domain_.lo) || first.range.lo_closed != domain_.lo_closed ||
      !(last.range.hi == domain_.hi) || last.range.hi_closed != domain_.hi_closed)
    throw std::invalid_argument("scheme cells do not reach the ends of the domain");

  for (std::size_t i = 0; i < cells_.size(); ++i) {
    const Cell& c = cells_[i];
    if (c.digit < 0 || static_cast<std::size_t>(c.digit) >= values_.size())
      throw std::invalid_argument("scheme cell refers to an unknown digit");
    if (c.range.empty()) throw std::invalid_argument("scheme has an empty cell");
    if (i + 1 < cells_.size()) {
      const Cell& n = cells_[i + 1];
      if (!(c.range.hi == n.range.lo) || c.range.hi_closed == n.range.lo_closed)
        throw std::invalid_argument("scheme cells do not tile the domain");
    }
    // image of the cell under the affine branch of T
    Element a = transform(c.range.lo, c.digit);
    Element b = transform(c.range.hi, c.digit);
    bool a_closed = c.range.lo_closed, b_closed = c.range.hi_closed;
    if (bs < 0) {
      std::swap(a, b);
      std::swap(a_closed, b_closed);
    }
    if (!endpoint_inside(a, a_closed, domain_.lo, domain_.lo_closed, true) ||
        !endpoint_inside(b, b_closed, domain_.hi, domain_.hi_closed, false))
      throw std::invalid_argument("transformation does not map cell " + c.range.to_string() +
                                  " into the domain");
  }
}

int Scheme::digit_at(const Element& x) const {
  if (!domain_.contains(x))
    throw DomainError(x.to_string() + " is outside the domain " + domain_.to_string() + " of the " +
                      kind_ + " scheme");
  std::size_t lo = 0, hi = cells_.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    const Interval& r = cells_[mid].range;
    auto c = x <=> r.hi;
    if (c < 0 || (c == 0 && r.hi_closed))
      hi = mid;
    else
      lo = mid + 1;
  }
  return cells_[lo].digit;
}

Element Scheme::transform(const Element& x, int digit) const {
  return base_ * x - values_[static_cast<std::size_t>(digit)];
}

std::string status_name(ExpansionStatus s) {
  switch (s) {
    case ExpansionStatus::Periodic: return "OK";
    case ExpansionStatus::Prefix: return "OK";
    case ExpansionStatus::PeriodNotFound: return "PERIOD_NOT_FOUND";
  }
  return "ERROR";
}

Expansion run_scheme(const Scheme& s, const Element& x, const ExpandOptions& opts) {
  s.digit_at(x);  // domain check before iterating
  Expansion e = detail::expand_orbit(
      x,
      [&s](const Element& y) {
        int d = s.digit_at(y);
        return std::pair{std::vector<int>{d}, s.transform(y, d)};
      },
      opts);
  e.endpoint = x == s.domain().lo || x == s.domain().hi;
  return e;
}

}  // namespace negbeta
