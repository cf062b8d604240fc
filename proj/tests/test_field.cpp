#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "negbeta/field.hpp"
#include "negbeta/poly.hpp"

#include <random>

using namespace negbeta;

TEST_CASE("polynomial helpers") {
  Poly p = poly::from_integers(std::vector<Integer>{-1, -1, 1});  // x^2 - x - 1
  CHECK(poly::degree(p) == 2);
  CHECK(poly::to_string(p, 'x') == "x^2 - x - 1");
  CHECK(poly::sturm_root_count(p, Rational(1), Rational(2)) == 1);
  CHECK(poly::sturm_root_count(p, Rational(-1), Rational(2)) == 2);
  CHECK(poly::sign_at(p, Rational(2)) == 1);

  Poly sq = poly::mul(p, p);
  CHECK(poly::squarefree_part(sq) == poly::monic(p));
  auto [q, r] = poly::divmod(sq, p);
  CHECK(q == p);
  CHECK(r.empty());
  CHECK(poly::gcd(sq, poly::derivative(sq)) == poly::monic(p));
}

TEST_CASE("golden ratio identities") {
  FieldContext ctx = FieldContext::golden();
  Element b = ctx.beta();
  CHECK(b * b == b + Rational(1));
  CHECK(b.inverse() == b - Rational(1));
  CHECK(b.floor() == 1);
  CHECK(b.ceil() == 2);
  CHECK((b * b).floor() == 2);
  CHECK((-b).floor() == -2);
  CHECK(b.sign() == 1);
  CHECK((b - Rational(8, 5)).sign() == 1);
  CHECK((b - Rational(13, 8)).sign() == -1);
  CHECK(b.approx(6) == "1.618034");
  CHECK((b - Rational(1)).to_string() == "b - 1");
  CHECK(ctx.certified_irreducible());
}

TEST_CASE("tribonacci identities") {
  FieldContext ctx = FieldContext::tribonacci();
  Element m = ctx.beta();
  CHECK(m.pow(3) == m * m + m + Rational(1));
  CHECK((m * m).floor() == 3);
  CHECK(ctx.floor_beta() == 1);
  CHECK(m > Rational(183, 100));
  CHECK(m < Rational(184, 100));
}

TEST_CASE("field axioms on random elements") {
  for (FieldContext ctx : {FieldContext::golden(), FieldContext::tribonacci(), FieldContext::rational(Rational(7, 4))}) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> coef(-20, 20), den(1, 9);
    auto rnd = [&] {
      std::vector<Rational> c;
      for (int i = 0; i < ctx.degree(); ++i) c.emplace_back(coef(rng), den(rng));
      return ctx.from_coeffs(c);
    };
    for (int t = 0; t < 50; ++t) {
      Element x = rnd(), y = rnd(), z = rnd();
      CHECK((x + y) * z == x * z + y * z);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x - x == ctx.zero());
      if (!x.is_zero()) CHECK(x * x.inverse() == ctx.one());
      CHECK(((x < y) == ((y - x).sign() > 0)));
      auto [lo, hi] = x.enclosure();
      CHECK(lo <= hi);
      CHECK(x.floor() <= lo);
    }
  }
}

TEST_CASE("reducible defining polynomial") {
  // (x^2 - x - 1)(x - 3): only the squarefree root in (1, 2) is bracketed
  FieldContext ctx = FieldContext::from_poly({3, 2, -4, 1}, Rational(1), Rational(2));
  Element b = ctx.beta();
  CHECK(b * b == b + Rational(1));
  CHECK((b - Rational(1)).inverse() == b);
  CHECK(b.floor() == 1);

  // repeated factor: (x^2 - 2)^2 around sqrt 2
  FieldContext sq = FieldContext::from_poly({4, 0, -4, 0, 1}, Rational(1), Rational(2));
  CHECK(sq.beta() * sq.beta() == Rational(2));
}

TEST_CASE("invalid bases") {
  CHECK_THROWS_AS(FieldContext::from_poly({-1, -1, 1}, Rational(2), Rational(3)), FieldError);  // no root
  CHECK_THROWS_AS(FieldContext::from_poly({-2, 1}, Rational(1), Rational(3)), FieldError);      // integer 2
  CHECK_THROWS_AS(FieldContext::from_poly({-1, -1, 1}, Rational(-1), Rational(2)), FieldError);  // two roots
  CHECK_THROWS_AS(FieldContext::from_poly({-1, -1, 1}, Rational(2), Rational(1)), FieldError);
  CHECK_THROWS_AS(FieldContext::rational(Rational(3)), FieldError);
  CHECK_THROWS_AS(FieldContext::rational(Rational(1, 2)), FieldError);
  CHECK_THROWS_AS(FieldContext::from_poly({7}, Rational(1), Rational(2)), FieldError);
}

TEST_CASE("elements of different fields do not mix") {
  Element a = FieldContext::golden().beta();
  Element b = FieldContext::tribonacci().beta();
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(FieldContext::golden().zero().inverse(), std::domain_error);
}

TEST_CASE("rational base") {
  FieldContext ctx = FieldContext::rational(Rational(14, 5));
  CHECK(ctx.degree() == 1);
  CHECK(ctx.beta() == Rational(14, 5));
  CHECK(ctx.floor_beta() == 2);
  CHECK((ctx.beta() * ctx.beta()).floor() == 7);
}
