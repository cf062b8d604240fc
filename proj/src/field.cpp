#include "negbeta/field.hpp"

#include <mutex>

namespace negbeta {
namespace detail {

struct Bracket {
  Rational lo, hi;
  std::vector<Rational> lo_pows, hi_pows;  // lo^i, hi^i for i < degree
  unsigned level = 0;
};

struct FieldData {
  std::string name;
  std::vector<Integer> input;
  Poly modulus;  // monic, squarefree
  int degree = 0;
  bool irreducible = false;
  long floor_beta = 0;
  // Bracket validated at construction; the zero test checks sign changes here.
  Rational base_lo, base_hi;

  mutable std::mutex mu;
  mutable std::shared_ptr<const Bracket> current;

  std::shared_ptr<const Bracket> snapshot() const {
    std::lock_guard lock(mu);
    return current;
  }

  // Bisects past `seen` unless another caller already did.
  std::shared_ptr<const Bracket> refine(const Bracket& seen) const {
    std::lock_guard lock(mu);
    if (current->level > seen.level) return current;
    current = std::make_shared<const Bracket>(bisect(*current));
    return current;
  }

  Bracket make_bracket(Rational lo, Rational hi, unsigned level) const {
    Bracket b{std::move(lo), std::move(hi), {}, {}, level};
    b.lo_pows.resize(degree);
    b.hi_pows.resize(degree);
    Rational pl = 1, ph = 1;
    for (int i = 0; i < degree; ++i) {
      b.lo_pows[i] = pl;
      b.hi_pows[i] = ph;
      pl *= b.lo;
      ph *= b.hi;
    }
    return b;
  }

  Bracket bisect(const Bracket& b) const {
    if (b.lo == b.hi) return b;
    Rational mid = (b.lo + b.hi) / 2;
    int sm = poly::sign_at(modulus, mid);
    if (sm == 0) return make_bracket(mid, mid, b.level + 1);
    int slo = poly::sign_at(modulus, b.lo);
    if (sm == slo) return make_bracket(mid, b.hi, b.level + 1);
    return make_bracket(b.lo, mid, b.level + 1);
  }
};

}  // namespace detail

namespace {

// GMP arithmetic assumes canonical operands; mpq_class(n, d) is not reduced.
Rational canonical(const Rational& q) {
  Rational r = q;
  r.canonicalize();
  return r;
}

using detail::FieldData;

// Rational roots of an integer polynomial of small height, by the rational
// root theorem. Returns true if one was found; `decided` is false when the
// coefficients are too large to enumerate divisors.
bool has_rational_root(const std::vector<Integer>& c, bool& decided) {
  decided = true;
  if (c.empty()) return false;
  if (c.front() == 0) return true;
  const Integer limit = 1000000;
  Integer a0 = abs(c.front()), an = abs(c.back());
  if (a0 > limit || an > limit) {
    decided = false;
    return false;
  }
  auto divisors = [](const Integer& n) {
    std::vector<Integer> ds;
    for (Integer k = 1; k * k <= n; ++k) {
      if (n % k == 0) {
        ds.push_back(k);
        if (k * k != n) ds.push_back(n / k);
      }
    }
    return ds;
  };
  Poly p = poly::from_integers(c);
  for (const Integer& s : divisors(a0))
    for (const Integer& t : divisors(an))
      for (int sg : {1, -1}) {
        Rational r(s * sg, t);
        r.canonicalize();
        if (poly::sign_at(p, r) == 0) return true;
      }
  return false;
}

bool certify_irreducible(const Poly& sf) {
  int d = poly::degree(sf);
  if (d <= 1) return true;
  if (d == 2) {
    Rational disc = sf[1] * sf[1] - 4 * sf[0] * sf[2];
    if (sgn(disc) < 0) return true;
    Integer num = disc.get_num(), den = disc.get_den();
    return !(mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t()));
  }
  if (d == 3) {
    bool decided = false;
    bool root = has_rational_root(poly::primitive_integer(sf), decided);
    return decided && !root;
  }
  return false;
}

Poly element_poly(const std::vector<Rational>& c) {
  Poly p(c);
  poly::trim(p);
  return p;
}

// s with s*a == gcd(a, m) (mod m), together with that gcd (not normalised).
std::pair<Poly, Poly> half_ext_gcd(const Poly& a, const Poly& m) {
  Poly r0 = m, r1 = a;
  Poly s0{}, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = poly::divmod(r0, r1);
    Poly s = poly::sub(s0, poly::mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  return {s0, r0};
}

std::vector<Rational> padded(Poly p, int d) {
  p.resize(static_cast<std::size_t>(d));
  return p;
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldContext

FieldContext FieldContext::from_poly(std::span<const Integer> coeffs, const Rational& lo_in,
                                     const Rational& hi_in, std::string name) {
  Poly p = poly::from_integers(coeffs);
  if (poly::degree(p) < 1) throw FieldError("polynomial must be nonconstant");
  Rational lo = canonical(lo_in), hi = canonical(hi_in);
  if (!(lo < hi)) throw FieldError("isolating interval needs lo < hi");
  if (hi <= 1) throw FieldError("the bracketed root must be > 1");
  // repeated factors are dropped first, so an even-multiplicity root still changes sign
  Poly sf = poly::squarefree_part(p);
  int slo = poly::sign_at(sf, lo), shi = poly::sign_at(sf, hi);
  if (slo == 0 || shi == 0 || slo == shi)
    throw FieldError("polynomial has no sign change on the isolating interval");

  int roots = poly::sturm_root_count(sf, lo, hi);
  if (roots != 1) throw FieldError("isolating interval contains more than one root");

  if (lo < 1) {
    int s1 = poly::sign_at(sf, Rational(1));
    if (s1 == 0 || poly::sturm_root_count(sf, lo, Rational(1)) == 1)
      throw FieldError("the bracketed root must be > 1");
    lo = 1;
  }

  auto data = std::make_shared<FieldData>();
  data->name = std::move(name);
  data->input.assign(coeffs.begin(), coeffs.end());
  data->modulus = sf;
  data->degree = poly::degree(sf);
  data->irreducible = certify_irreducible(sf);
  data->base_lo = lo;
  data->base_hi = hi;

  if (data->degree == 1) {
    Rational root = -sf[0];
    if (root.get_den() == 1) throw FieldError("integer bases are not supported");
    data->current = std::make_shared<const detail::Bracket>(data->make_bracket(root, root, 0));
  } else {
    // Tighten below width 1 to rule out an integer root, then a bit further so
    // that most sign queries settle on the first enclosure.
    detail::Bracket b = data->make_bracket(lo, hi, 0);
    const Rational fine(1, Integer(1) << 48);
    while (b.hi - b.lo > fine) {
      b = data->bisect(b);
      if (b.lo == b.hi) break;
    }
    Integer n;
    mpz_cdiv_q(n.get_mpz_t(), b.lo.get_num_mpz_t(), b.lo.get_den_mpz_t());
    if (Rational(n) <= b.hi && poly::sign_at(sf, Rational(n)) == 0)
      throw FieldError("integer bases are not supported");
    b.level = 0;
    data->current = std::make_shared<const detail::Bracket>(std::move(b));
  }

  FieldContext ctx(data);
  data->floor_beta = ctx.beta().floor().get_si();
  return ctx;
}

FieldContext FieldContext::from_poly(std::initializer_list<long> coeffs, const Rational& lo,
                                     const Rational& hi, std::string name) {
  std::vector<Integer> c;
  for (long v : coeffs) c.emplace_back(v);
  return from_poly(c, lo, hi, std::move(name));
}

FieldContext FieldContext::rational(const Rational& beta_in) {
  Rational beta = beta_in;
  beta.canonicalize();
  if (beta <= 1) throw FieldError("base must be > 1");
  if (beta.get_den() == 1) throw FieldError("integer bases are not supported");
  std::vector<Integer> c{-beta.get_num(), beta.get_den()};
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), beta.get_num_mpz_t(), beta.get_den_mpz_t());
  return from_poly(c, Rational(fl), Rational(fl + 1), beta.get_str());
}

FieldContext FieldContext::golden() {
  static const FieldContext ctx = from_poly({-1, -1, 1}, Rational(1), Rational(2), "phi");
  return ctx;
}

FieldContext FieldContext::tribonacci() {
  static const FieldContext ctx =
      from_poly({-1, -1, -1, 1}, Rational(1), Rational(2), "tribonacci");
  return ctx;
}

const std::string& FieldContext::name() const { return data_->name; }
int FieldContext::degree() const { return data_->degree; }
const std::vector<Integer>& FieldContext::input_poly() const { return data_->input; }
const Poly& FieldContext::modulus() const { return data_->modulus; }
bool FieldContext::certified_irreducible() const { return data_->irreducible; }
long FieldContext::floor_beta() const { return data_->floor_beta; }

std::pair<Rational, Rational> FieldContext::bracket() const {
  auto b = data_->snapshot();
  return {b->lo, b->hi};
}

std::pair<Rational, Rational> FieldContext::bracket(const Rational& width) const {
  auto b = data_->snapshot();
  while (b->hi - b->lo > width) b = data_->refine(*b);
  return {b->lo, b->hi};
}

Element FieldContext::zero() const { return Element(*this, std::vector<Rational>(data_->degree)); }

Element FieldContext::one() const { return from_rational(Rational(1)); }

Element FieldContext::from_rational(const Rational& q) const {
  std::vector<Rational> c(data_->degree);
  c[0] = canonical(q);
  return Element(*this, std::move(c));
}

Element FieldContext::beta() const {
  if (data_->degree == 1) return from_rational(-data_->modulus[0]);
  std::vector<Rational> c(data_->degree);
  c[1] = 1;
  return Element(*this, std::move(c));
}

Element FieldContext::from_coeffs(std::vector<Rational> coeffs) const {
  for (Rational& q : coeffs) q.canonicalize();
  Poly p = element_poly(coeffs);
  if (poly::degree(p) >= data_->degree) p = poly::rem(p, data_->modulus);
  return Element(*this, padded(std::move(p), data_->degree));
}

// ---------------------------------------------------------------------------
// Element

void Element::check_same(const Element& o) const {
  if (!(ctx_ == o.ctx_)) throw std::invalid_argument("elements belong to different fields");
}

Element Element::operator-() const {
  std::vector<Rational> c(coeffs_);
  for (Rational& v : c) v = -v;
  return Element(ctx_, std::move(c));
}

Element operator+(const Element& a, const Element& b) {
  a.check_same(b);
  std::vector<Rational> c(a.coeffs_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
  return Element(a.ctx_, std::move(c));
}

Element operator-(const Element& a, const Element& b) {
  a.check_same(b);
  std::vector<Rational> c(a.coeffs_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs_[i];
  return Element(a.ctx_, std::move(c));
}

Element operator*(const Element& a, const Element& b) {
  a.check_same(b);
  const int d = a.ctx_.degree();
  if (d == 1) return Element(a.ctx_, {a.coeffs_[0] * b.coeffs_[0]});
  Poly prod = poly::mul(element_poly(a.coeffs_), element_poly(b.coeffs_));
  if (poly::degree(prod) >= d) prod = poly::rem(prod, a.ctx_.modulus());
  return Element(a.ctx_, padded(std::move(prod), d));
}

Element operator*(const Element& a, const Rational& s) {
  std::vector<Rational> c(a.coeffs_);
  const Rational t = canonical(s);
  for (Rational& v : c) v *= t;
  return Element(a.ctx_, std::move(c));
}

Element operator+(const Element& a, const Rational& s) {
  std::vector<Rational> c(a.coeffs_);
  c[0] += canonical(s);
  return Element(a.ctx_, std::move(c));
}

Element operator-(const Element& a, const Rational& s) {
  std::vector<Rational> c(a.coeffs_);
  c[0] -= canonical(s);
  return Element(a.ctx_, std::move(c));
}

Element operator/(const Element& a, const Element& b) { return a * b.inverse(); }

Element Element::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(beta)");
  const int d = ctx_.degree();
  if (d == 1) return Element(ctx_, {1 / coeffs_[0]});
  Poly e = element_poly(coeffs_);
  Poly m = ctx_.modulus();
  auto [s, g] = half_ext_gcd(e, m);
  if (poly::degree(g) > 0) {
    // The modulus is reducible and shares a factor with e that does not
    // vanish at beta; invert modulo the cofactor instead.
    m = poly::divmod(m, poly::monic(g)).first;
    std::tie(s, g) = half_ext_gcd(poly::rem(e, m), m);
  }
  Poly inv = poly::scale(s, 1 / g[0]);
  inv = poly::rem(inv, m);
  return Element(ctx_, padded(std::move(inv), d));
}

Element Element::pow(unsigned n) const {
  Element result = ctx_.one();
  Element base = *this;
  while (n) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n) base = base * base;
  }
  return result;
}

std::pair<Rational, Rational> Element::enclosure() const {
  const auto& data = *ctx_.data_;
  if (data.degree == 1) return {coeffs_[0], coeffs_[0]};
  auto b = data.snapshot();
  Rational lo = 0, hi = 0;
  for (int i = 0; i < data.degree; ++i) {
    const Rational& c = coeffs_[i];
    int s = sgn(c);
    if (s == 0) continue;
    if (s > 0) {
      lo += c * b->lo_pows[i];
      hi += c * b->hi_pows[i];
    } else {
      lo += c * b->hi_pows[i];
      hi += c * b->lo_pows[i];
    }
  }
  return {lo, hi};
}

bool Element::vanishes() const {
  const auto& data = *ctx_.data_;
  Poly e = element_poly(coeffs_);
  if (e.empty()) return true;
  if (data.irreducible) return false;
  Poly g = poly::gcd(e, data.modulus);
  if (poly::degree(g) <= 0) return false;
  // g divides a squarefree modulus with exactly one root in the bracket and
  // no root at its ends, so g vanishes at beta iff it changes sign there.
  return poly::sign_at(g, data.base_lo) != poly::sign_at(g, data.base_hi);
}

int Element::sign() const {
  const auto& data = *ctx_.data_;
  if (data.degree == 1) return sgn(coeffs_[0]);
  bool all_zero = true;
  for (const Rational& c : coeffs_)
    if (sgn(c) != 0) {
      all_zero = false;
      break;
    }
  if (all_zero) return 0;
  bool zero_checked = false;
  auto b = data.snapshot();
  for (;;) {
    auto [lo, hi] = enclosure();
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
    if (!zero_checked) {
      if (vanishes()) return 0;
      zero_checked = true;
    }
    b = data.refine(*b);
  }
}

bool Element::is_zero() const { return sign() == 0; }

Integer Element::floor() const {
  const auto& data = *ctx_.data_;
  auto b = data.snapshot();
  auto enc = enclosure();
  while (enc.second - enc.first >= 1) {
    b = data.refine(*b);
    enc = enclosure();
  }
  Integer n;
  mpz_fdiv_q(n.get_mpz_t(), enc.first.get_num_mpz_t(), enc.first.get_den_mpz_t());
  // value lies in [n, n + 2); decide which side of n + 1 exactly.
  if ((*this - Rational(n + 1)).sign() >= 0) n += 1;
  return n;
}

Integer Element::ceil() const { return -((-*this).floor()); }

std::string Element::approx(int digits) const {
  const auto& data = *ctx_.data_;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational eps(1, scale * 10);
  auto b = data.snapshot();
  auto enc = enclosure();
  while (enc.second - enc.first > eps) {
    b = data.refine(*b);
    enc = enclosure();
  }
  Rational mid = (enc.first + enc.second) / 2 * scale;
  Integer n;
  Rational shifted = mid + Rational(1, 2);
  mpz_fdiv_q(n.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  bool neg = n < 0;
  Integer mag = abs(n);
  std::string s = mag.get_str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  return neg ? "-" + s : s;
}

std::string Element::to_string() const { return poly::to_string(element_poly(coeffs_), 'b'); }

bool Element::operator==(const Element& o) const {
  check_same(o);
  if (coeffs_ == o.coeffs_) return true;
  if (ctx_.data_->irreducible) return false;
  return (*this - o).sign() == 0;
}

std::strong_ordering Element::operator<=>(const Element& o) const {
  check_same(o);
  if (coeffs_ == o.coeffs_) return std::strong_ordering::equal;
  int s = (*this - o).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

bool Element::operator==(const Rational& q) const { return (*this - q).sign() == 0; }

std::strong_ordering Element::operator<=>(const Rational& q) const {
  int s = (*this - q).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace negbeta
