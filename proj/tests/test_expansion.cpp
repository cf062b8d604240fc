#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "negbeta/expansion.hpp"
#include "support.hpp"

using namespace negbeta;
using negbeta::testing::random_in_I;

namespace {

DigitString digits(const char* s) { return parse_digits(s); }

}  // namespace

TEST_CASE("representable interval") {
  NegBetaSystem phi(FieldContext::golden());
  CHECK(phi.l() == Rational(-1));
  CHECK(phi.r() == phi.beta() - Rational(1));
  CHECK(phi.m() == 1);
  CHECK(phi.pair_count() == 4);
  CHECK(phi.pair_value(0) == -phi.beta());
  CHECK(phi.pair_value(3) == Rational(1));

  NegBetaSystem mu(FieldContext::tribonacci());
  const Element& b = mu.beta();
  CHECK(mu.r() * (b * b - Rational(1)) == Rational(1));
  CHECK(mu.l() == -(b * mu.r()));
  CHECK(mu.l() + mu.r() == -(b + Rational(1)).inverse());
}

TEST_CASE("golden ratio examples") {
  NegBetaSystem sys(FieldContext::golden());
  Element half = sys.context().from_rational(Rational(-1, 2));
  CHECK(greedy_neg_beta(sys, half).digits == digits("(111000)"));
  CHECK(lazy_neg_beta(sys, half).digits == digits("1(001110)"));
  CHECK(run_scheme(build_ito_sadahiro_scheme(sys), half).digits == digits("(100)"));

  Element zero = sys.context().zero();
  CHECK(greedy_neg_beta(sys, zero).digits == digits("01(10)"));
  CHECK(lazy_neg_beta(sys, zero).digits == digits("11(01)"));
  Expansion e = greedy_neg_beta(sys, sys.l());
  CHECK(e.digits == digits("(10)"));
  CHECK(e.endpoint);
  CHECK(lazy_neg_beta(sys, sys.r()).digits == digits("(01)"));
}

TEST_CASE("greedy cells for the golden ratio") {
  NegBetaSystem sys(FieldContext::golden());
  Scheme s = build_beta2_scheme(sys, Extremal::Greedy);
  const Element& b = sys.beta();
  REQUIRE(s.cells().size() == 4);
  CHECK(s.cells()[0].range.lo == Rational(-1));
  CHECK(s.cells()[1].range.lo == Rational(1) - b);
  CHECK(s.cells()[2].range.lo == b - Rational(2));
  CHECK(s.cells()[3].range.lo == Rational(0));
  CHECK(s.cells()[3].range.hi == b - Rational(1));
  CHECK(s.cells()[3].range.hi_closed);

  Scheme lazy = build_beta2_scheme(sys, Extremal::Lazy);
  CHECK(lazy.cells()[0].range.lo_closed);
  CHECK_FALSE(lazy.cells()[1].range.lo_closed);
}

TEST_CASE("schemes map their domain into itself") {
  std::mt19937_64 rng(11);
  for (FieldContext ctx : {FieldContext::golden(), FieldContext::tribonacci(), FieldContext::rational(Rational(7, 4)),
                           FieldContext::rational(Rational(14, 5))}) {
    NegBetaSystem sys(ctx);
    for (const Scheme& s : {build_beta2_scheme(sys, Extremal::Greedy), build_beta2_scheme(sys, Extremal::Lazy),
                            build_ito_sadahiro_scheme(sys), build_renyi_scheme(ctx)}) {
      for (int t = 0; t < 30; ++t) {
        Element x = negbeta::testing::random_between(s.domain().lo, s.domain().hi, rng, false);
        if (!s.domain().contains(x)) continue;
        int d = s.digit_at(x);
        CHECK(s.domain().contains(s.transform(x, d)));
      }
    }
  }
}

TEST_CASE("periodic expansions evaluate back to x") {
  std::mt19937_64 rng(5);
  NegBetaSystem sys(FieldContext::golden());
  Scheme is = build_ito_sadahiro_scheme(sys);
  for (int t = 0; t < 25; ++t) {
    Element x = sys.context().from_rational(Rational(static_cast<long>(rng() % 2001) - 1000, 997));
    if (!sys.in_interval(x)) continue;
    Expansion g = greedy_neg_beta(sys, x), l = lazy_neg_beta(sys, x);
    REQUIRE(g.status == ExpansionStatus::Periodic);
    CHECK(eval_neg_beta(sys, g.digits) == x);
    CHECK(eval_neg_beta(sys, l.digits) == x);
    CHECK(alt_compare(l.digits, g.digits) <= 0);
    Expansion p = run_scheme(build_beta2_scheme(sys, Extremal::Greedy), x);
    CHECK(eval_pairs(sys, p.digits) == x);
    if (is.domain().contains(x)) CHECK(eval_digits(run_scheme(is, x).digits, is.base(), is.digit_values()) == x);
  }
}

TEST_CASE("pair map and beta^2 scheme agree") {
  std::mt19937_64 rng(3);
  for (FieldContext ctx : {FieldContext::tribonacci(), FieldContext::rational(Rational(14, 5))}) {
    NegBetaSystem sys(ctx);
    Scheme g = build_beta2_scheme(sys, Extremal::Greedy), l = build_beta2_scheme(sys, Extremal::Lazy);
    for (int t = 0; t < 10; ++t) {
      Element x = random_in_I(sys, rng);
      CHECK(psi_expand(run_scheme(g, x, {.depth = 15}).digits, sys.m()) ==
            greedy_neg_beta(sys, x, {.depth = 30}).digits);
      CHECK(psi_expand(run_scheme(l, x, {.depth = 15}).digits, sys.m()) ==
            lazy_neg_beta(sys, x, {.depth = 30}).digits);
    }
  }
}

TEST_CASE("greedy and lazy are mirror images") {
  std::mt19937_64 rng(9);
  NegBetaSystem sys(FieldContext::rational(Rational(7, 2)));
  for (int t = 0; t < 10; ++t) {
    Element x = random_in_I(sys, rng);
    Element y = sys.l() + sys.r() - x;
    auto g = greedy_neg_beta(sys, x, {.depth = 20}).digits;
    auto l = lazy_neg_beta(sys, y, {.depth = 20}).digits;
    CHECK(complement_digits(g, sys.m()) == l);
  }
}

TEST_CASE("prefix mode and budgets") {
  NegBetaSystem sys(FieldContext::rational(Rational(7, 4)));
  Element x = sys.context().from_rational(Rational(1, 3));
  Expansion e = greedy_neg_beta(sys, x, {.depth = 12});
  CHECK(e.status == ExpansionStatus::Prefix);
  CHECK(e.digits.size() == 12);

  Expansion f = greedy_neg_beta(sys, x, {.depth = 0, .orbit_budget = 50, .fallback_depth = 20});
  CHECK(f.status == ExpansionStatus::PeriodNotFound);
  CHECK(f.digits.prefix(12) == e.digits.prefix(12));
}

TEST_CASE("domain errors") {
  NegBetaSystem sys(FieldContext::golden());
  CHECK_THROWS_AS(greedy_neg_beta(sys, sys.context().from_rational(Rational(1))), DomainError);
  CHECK_THROWS_AS(run_scheme(build_ito_sadahiro_scheme(sys), sys.context().from_rational(Rational(-1))),
                  DomainError);
  Scheme is = build_ito_sadahiro_scheme(sys);
  CHECK(is.domain().lo == Rational(1) - sys.beta());
  CHECK(is.domain().hi == Rational(2) - sys.beta());
  CHECK_FALSE(is.domain().hi_closed);
}

TEST_CASE("Renyi expansions") {
  FieldContext ctx = FieldContext::golden();
  Scheme s = build_renyi_scheme(ctx);
  Expansion e = run_scheme(s, ctx.from_rational(Rational(1, 2)));
  REQUIRE(e.status == ExpansionStatus::Periodic);
  CHECK(eval_digits(e.digits, s.base(), s.digit_values()) == Rational(1, 2));
  CHECK(run_scheme(s, ctx.beta() - Rational(1)).digits == parse_digits("1(0)"));
}
