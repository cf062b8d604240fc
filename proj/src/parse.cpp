#include "negbeta/parse.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace negbeta {

namespace {

// Recursive descent over + - * / ^, parentheses, unary signs, decimal
// literals and implicit products such as 3b or 2(b - 1).
template <class Ops>
class ExprParser {
 public:
  using V = typename Ops::Value;

  ExprParser(std::string_view text, Ops ops) : s_(text), ops_(std::move(ops)) {}

  V parse() {
    V v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool starts_variable() {
    skip();
    for (const auto& name : ops_.variables)
      if (s_.substr(pos_, name.size()) == name) return true;
    return false;
  }

  V expr() {
    V v = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      V rhs = term();
      v = c == '+' ? ops_.add(v, rhs) : ops_.sub(v, rhs);
    }
    return v;
  }

  V term() {
    V v = unary();
    for (;;) {
      char c = peek();
      if (c == '*' || c == '/') {
        ++pos_;
        V rhs = unary();
        v = c == '*' ? ops_.mul(v, rhs) : ops_.div(v, rhs);
      } else if (c == '(' || starts_variable()) {
        v = ops_.mul(v, power());
      } else {
        return v;
      }
    }
  }

  V unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return ops_.neg(unary());
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  V power() {
    V base = primary();
    if (peek() != '^') return base;
    ++pos_;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    long e = std::stol(std::string(s_.substr(start, pos_ - start)));
    return ops_.pow(base, negative ? -e : e);
  }

  V primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      V v = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return ops_.constant(number());
    for (const auto& name : ops_.variables) {
      if (s_.substr(pos_, name.size()) == name) {
        pos_ += name.size();
        return ops_.variable();
      }
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Rational number() {
    std::size_t start = pos_;
    std::string digits;
    std::size_t frac = 0;
    bool dot = false;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        digits.push_back(c);
        if (dot) ++frac;
      } else if (c == '.' && !dot) {
        dot = true;
      } else {
        break;
      }
      ++pos_;
    }
    if (digits.empty()) {
      pos_ = start;
      fail("expected a number");
    }
    Rational q{Integer(digits)};
    if (frac > 0) {
      Integer den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
      q /= den;
      q.canonicalize();
    }
    return q;
  }

  std::string_view s_;
  Ops ops_;
  std::size_t pos_ = 0;
};

struct RationalOps {
  using Value = Rational;
  std::vector<std::string> variables;
  Value constant(const Rational& q) const { return q; }
  [[noreturn]] Value variable() const { throw ParseError("a plain rational was expected"); }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value div(const Value& a, const Value& b) const {
    if (b == 0) throw ParseError("division by zero");
    return a / b;
  }
  Value neg(const Value& a) const { return -a; }
  Value pow(const Value& a, long e) const {
    if (e < 0) return pow(div(Rational(1), a), -e);
    Value r = 1;
    for (long i = 0; i < e; ++i) r *= a;
    return r;
  }
};

struct PolyOps {
  using Value = Poly;
  std::vector<std::string> variables;
  Value constant(const Rational& q) const {
    Poly p{q};
    poly::trim(p);
    return p;
  }
  Value variable() const { return Poly{Rational(0), Rational(1)}; }
  Value add(const Value& a, const Value& b) const { return poly::add(a, b); }
  Value sub(const Value& a, const Value& b) const { return poly::sub(a, b); }
  Value mul(const Value& a, const Value& b) const { return poly::mul(a, b); }
  Value div(const Value& a, const Value& b) const {
    if (poly::degree(b) != 0) throw ParseError("only division by a nonzero constant is allowed in a polynomial");
    return poly::scale(a, Rational(1) / b[0]);
  }
  Value neg(const Value& a) const { return poly::scale(a, Rational(-1)); }
  Value pow(const Value& a, long e) const {
    if (e < 0) throw ParseError("negative exponent in a polynomial");
    Poly r = constant(Rational(1));
    for (long i = 0; i < e; ++i) r = poly::mul(r, a);
    return r;
  }
};

struct ElementOps {
  using Value = Element;
  std::vector<std::string> variables;
  FieldContext ctx;
  Value constant(const Rational& q) const { return ctx.from_rational(q); }
  Value variable() const { return ctx.beta(); }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value div(const Value& a, const Value& b) const { return a / b; }
  Value neg(const Value& a) const { return -a; }
  Value pow(const Value& a, long e) const {
    if (e < 0) return a.inverse().pow(static_cast<unsigned>(-e));
    return a.pow(static_cast<unsigned>(e));
  }
};

std::string trimmed(std::string_view text) {
  std::size_t a = 0, b = text.size();
  while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
  return std::string(text.substr(a, b - a));
}

// Splits "a, b, c" on top-level commas.
std::vector<std::string> split_args(std::string_view text) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == ',' && depth == 0) {
      out.push_back(trimmed(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trimmed(text.substr(start)));
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  return ExprParser<RationalOps>(text, RationalOps{{}}).parse();
}

Poly parse_poly(std::string_view text, char var) {
  return ExprParser<PolyOps>(text, PolyOps{{std::string(1, var)}}).parse();
}

FieldContext parse_base(std::string_view text) {
  std::string t = trimmed(text);
  std::string lower;
  for (char c : t) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "phi" || lower == "golden") return FieldContext::golden();
  if (lower == "tribonacci") return FieldContext::tribonacci();
  if (lower.rfind("root(", 0) == 0) {
    if (t.back() != ')') throw ParseError("root(...) is missing its closing parenthesis");
    auto args = split_args(std::string_view(t).substr(5, t.size() - 6));
    if (args.size() != 3) throw ParseError("root(poly, lo, hi) takes three arguments");
    Poly p = parse_poly(args[0], 'x');
    if (poly::degree(p) < 1) throw FieldError("the polynomial must have degree at least one");
    auto ints = poly::primitive_integer(p);
    return FieldContext::from_poly(std::span<const Integer>(ints), parse_rational(args[1]),
                                   parse_rational(args[2]), t);
  }
  Rational q;
  try {
    q = parse_rational(t);
  } catch (const ParseError&) {
    throw ParseError("unknown base '" + t + "'; expected phi, tribonacci, root(p, lo, hi) or a rational");
  }
  return FieldContext::rational(q);
}

Element parse_element(std::string_view text, const FieldContext& ctx) {
  return ExprParser<ElementOps>(text, ElementOps{{"beta", "b"}, ctx}).parse();
}

}  // namespace negbeta
