#include "negbeta/poly.hpp"

#include <stdexcept>

namespace negbeta::poly {

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly from_integers(std::span<const Integer> coeffs) {
  Poly p;
  p.reserve(coeffs.size());
  for (const Integer& c : coeffs) p.emplace_back(c);
  trim(p);
  return p;
}

Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Poly scale(const Poly& a, const Rational& s) {
  if (sgn(s) == 0) return {};
  Poly r(a);
  for (Rational& c : r) c *= s;
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  Poly r(a);
  trim(r);
  if (r.size() < b.size()) return {Poly{}, r};
  Poly q(r.size() - b.size() + 1);
  const Rational& lead = b.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational f = r[k + b.size() - 1] / lead;
    q[k] = f;
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] -= f * b[j];
  }
  r.resize(b.size() - 1);
  trim(r);
  trim(q);
  return {q, r};
}

Poly rem(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly monic(const Poly& p) {
  if (p.empty()) return p;
  Rational inv = 1 / p.back();
  return scale(p, inv);
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x(a), y(b);
  trim(x);
  trim(y);
  while (!y.empty()) {
    Poly r = rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

Poly derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  Poly d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long>(i);
  trim(d);
  return d;
}

Poly squarefree_part(const Poly& p) {
  Poly g = gcd(p, derivative(p));
  return monic(divmod(p, g).first);
}

Rational eval(const Poly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) {
    acc *= x;
    acc += p[i];
  }
  return acc;
}

int sign_at(const Poly& p, const Rational& x) { return sgn(eval(p, x)); }

namespace {

int sign_variations(const std::vector<Poly>& chain, const Rational& x) {
  int count = 0;
  int prev = 0;
  for (const Poly& q : chain) {
    int s = sign_at(q, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

int sturm_root_count(const Poly& p, const Rational& lo, const Rational& hi) {
  Poly sf = squarefree_part(p);
  std::vector<Poly> chain{sf, derivative(sf)};
  while (!chain.back().empty()) {
    Poly r = rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    chain.push_back(scale(r, Rational(-1)));
  }
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

std::vector<Integer> primitive_integer(const Poly& p) {
  Integer l = 1;
  for (const Rational& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  Integer content = 0;
  for (const Rational& c : p) {
    Integer v = c.get_num() * (l / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (content > 1)
    for (Integer& v : out) v /= content;
  return out;
}

std::string to_string(const Poly& p, char var) {
  if (p.empty()) return "0";
  std::string out;
  for (std::size_t k = p.size(); k-- > 0;) {
    const Rational& c = p[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    bool unit = (mag == 1);
    if (k == 0 || !unit) {
      out += mag.get_str();
      if (k > 0) out += "*";
    }
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace negbeta::poly
