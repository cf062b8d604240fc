#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "negbeta/digits.hpp"

using namespace negbeta;

TEST_CASE("canonical form") {
  // 11(01)^omega = 1(10)^omega
  CHECK(DigitString::periodic({1, 1}, {0, 1}) == DigitString::periodic({1}, {1, 0}));
  CHECK(DigitString::periodic({}, {1, 0, 1, 0}).period() == std::vector<int>{1, 0});
  CHECK(DigitString::periodic({0, 0}, {0}) == DigitString::periodic({}, {0}));
  auto w = DigitString::periodic({2, 1, 0, 0}, {1, 0, 0});
  CHECK(w.preperiod() == std::vector<int>{2});
  CHECK(w.period() == std::vector<int>{1, 0, 0});
  CHECK_THROWS_AS(DigitString::periodic({1}, {}), DigitFormatError);
}

TEST_CASE("access and tails") {
  auto w = DigitString::periodic({0}, {1, 2});
  CHECK(w.prefix(5) == std::vector<int>{0, 1, 2, 1, 2});
  CHECK(w.at(100) == 2);
  CHECK(w.tail(1) == DigitString::periodic({}, {1, 2}));
  CHECK(w.tail(2) == DigitString::periodic({}, {2, 1}));
  auto f = DigitString::finite({3, 4, 5});
  CHECK(f.size() == 3);
  CHECK(f.tail(3).size() == 0);
  CHECK_THROWS(f.at(3));
}

TEST_CASE("orders") {
  auto p = [](std::vector<int> u, std::vector<int> v) { return DigitString::periodic(std::move(u), std::move(v)); };
  // lazy < IS < greedy for -1/2 in base -phi
  CHECK(alt_compare(p({1}, {0, 0, 1, 1, 1, 0}), p({}, {1, 0, 0})) < 0);
  CHECK(alt_compare(p({}, {1, 0, 0}), p({}, {1, 1, 1, 0, 0, 0})) < 0);
  CHECK(alt_compare(p({1}, {1, 0}), p({1, 1}, {0, 1})) == 0);
  CHECK(lex_compare(p({}, {1, 0}), p({}, {0, 1})) > 0);
  // comparison must look past max preperiod + lcm of periods
  CHECK(lex_compare(p({}, {0, 0, 1}), p({}, {0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0})) > 0);
  CHECK(alt_compare(std::vector<int>{1, 0}, std::vector<int>{1, 1}) < 0);
  CHECK(alt_compare(std::vector<int>{0}, std::vector<int>{1}) > 0);
  CHECK_THROWS(lex_compare(DigitString::finite({1}), p({}, {1})));
  CHECK(order_name(std::strong_ordering::less) == "LT");
}

TEST_CASE("text formats round trip") {
  for (const char* s : {"(111000)", "1(001110)", "01(10)", "0110", "(0)", "1(12)", "2(10)"}) {
    CHECK(format_digits(parse_digits(s, 2), 2) == s);
  }
  CHECK(format_digits(parse_digits("0, 11, (3, 10)", 11), 11) == "0,11,(3,10)");
  CHECK(format_digits(parse_digits("11(01)"), 1) == "1(10)");
  CHECK(format_digits(parse_digits("2(12)", 2), 2) == "(21)");
  CHECK_THROWS_AS(parse_digits("12(", 2), DigitFormatError);
  CHECK_THROWS_AS(parse_digits("13", 2), DigitFormatError);
  CHECK_THROWS_AS(parse_digits("1()", 1), DigitFormatError);

  auto w = parse_pairs("1:1.(0:0.1:0)", 1);
  CHECK(format_pairs(w, 1) == "1:1(0:0.1:0)");
  CHECK(parse_pairs("1:1(0:0)", 1) == parse_pairs("1:1.(0:0)", 1));
  CHECK_THROWS_AS(parse_pairs("2:0", 1), DigitFormatError);
  CHECK_THROWS_AS(parse_pairs("1-0", 1), DigitFormatError);
}

TEST_CASE("pair codes follow the value order") {
  for (int m = 1; m <= 4; ++m) {
    int prev = -1;
    for (int b = m; b >= 0; --b)
      for (int a = 0; a <= m; ++a) {
        PairDigit p{b, a};
        CHECK(p.code(m) == prev + 1);
        CHECK(PairDigit::from_code(p.code(m), m) == p);
        prev = p.code(m);
      }
  }
}

TEST_CASE("psi and complements") {
  const int m = 1;
  auto w = parse_pairs("(1:1.1:0.0:0)", m);
  CHECK(format_digits(psi_expand(w, m), m) == "(111000)");
  CHECK(psi_inverse(psi_expand(w, m), m) == w);
  CHECK(psi_inverse(parse_digits("1(10)"), m) == parse_pairs("1:1(0:1)", m));
  CHECK_THROWS_AS(psi_inverse(parse_digits("101"), m), DigitFormatError);
  CHECK(complement_digits(parse_digits("1(001110)"), m) == parse_digits("0(110001)"));
  CHECK(complement_pairs(parse_pairs("1:0.0:1", m), m) == parse_pairs("0:1.1:0", m));
  CHECK(psi_expand(complement_pairs(w, m), m) == complement_digits(psi_expand(w, m), m));
}
