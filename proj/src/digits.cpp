#include "negbeta/digits.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace negbeta {

namespace {

std::strong_ordering compare_upto(const DigitString& u, const DigitString& v, bool alternate) {
  if (u.is_finite() != v.is_finite())
    throw std::invalid_argument("cannot compare a finite word with an infinite one");
  std::size_t n;
  if (u.is_finite()) {
    if (u.size() != v.size())
      throw std::invalid_argument("finite words of different lengths are not comparable");
    n = u.size();
  } else {
    n = std::max(u.preperiod().size(), v.preperiod().size()) +
        std::lcm(u.period().size(), v.period().size());
  }
  for (std::size_t i = 0; i < n; ++i) {
    int x = u.at(i), y = v.at(i);
    if (x == y) continue;
    // position k = i + 1; odd positions flip under the alternate order
    bool flip = alternate && (i % 2 == 0);
    return flip ? (y <=> x) : (x <=> y);
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_words(const std::vector<int>& u, const std::vector<int>& v,
                                   bool alternate) {
  if (u.size() != v.size())
    throw std::invalid_argument("finite words of different lengths are not comparable");
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == v[i]) continue;
    bool flip = alternate && (i % 2 == 0);
    return flip ? (v[i] <=> u[i]) : (u[i] <=> v[i]);
  }
  return std::strong_ordering::equal;
}

std::string strip_spaces(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  return s;
}

// Splits "pre(per)" into its two parts; `periodic` tells whether parentheses were present.
void split_periodic(const std::string& s, std::string& pre, std::string& per, bool& periodic) {
  auto open = s.find('(');
  if (open == std::string::npos) {
    if (s.find(')') != std::string::npos) throw DigitFormatError("unbalanced ')' in digit string");
    pre = s;
    per.clear();
    periodic = false;
    return;
  }
  if (s.back() != ')' || s.find('(', open + 1) != std::string::npos ||
      s.find(')') != s.size() - 1)
    throw DigitFormatError("expected the form pre(per)");
  pre = s.substr(0, open);
  per = s.substr(open + 1, s.size() - open - 2);
  if (per.empty()) throw DigitFormatError("empty period");
  periodic = true;
}

std::vector<int> parse_digit_part(const std::string& part, int max_digit) {
  std::vector<int> out;
  if (part.empty()) return out;
  if (max_digit <= 9) {
    for (char c : part) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw DigitFormatError(std::string("unexpected character '") + c + "' in digit string");
      out.push_back(c - '0');
    }
    return out;
  }
  std::size_t start = 0;
  std::string body = part;
  if (!body.empty() && body.back() == ',') body.pop_back();
  while (start <= body.size()) {
    auto comma = body.find(',', start);
    std::string tok = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw DigitFormatError("malformed digit token '" + tok + "'");
    out.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string join_digits(const std::vector<int>& w, int max_digit) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (max_digit > 9 && i > 0) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

std::vector<int> parse_pair_part(const std::string& part, int m) {
  std::vector<int> out;
  std::string body = part;
  if (!body.empty() && body.back() == '.') body.pop_back();
  if (body.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    auto dot = body.find('.', start);
    std::string tok = body.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    auto colon = tok.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == tok.size())
      throw DigitFormatError("pair digits must look like b:a, got '" + tok + "'");
    auto num = [&](const std::string& t) {
      if (!std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw DigitFormatError("malformed pair digit '" + tok + "'");
      return std::stoi(t);
    };
    PairDigit p{num(tok.substr(0, colon)), num(tok.substr(colon + 1))};
    if (p.a > m || p.b > m)
      throw DigitFormatError("pair digit '" + tok + "' outside the alphabet");
    out.push_back(p.code(m));
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  return out;
}

std::string join_pairs(const std::vector<int>& codes, int m) {
  std::string s;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (i > 0) s += '.';
    PairDigit p = PairDigit::from_code(codes[i], m);
    s += std::to_string(p.b) + ":" + std::to_string(p.a);
  }
  return s;
}

std::vector<int> primitive_root(const std::vector<int>& v) {
  const std::size_t n = v.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = v[i] == v[i - p];
    if (ok) return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(p)};
  }
  return v;
}

}  // namespace

DigitString DigitString::finite(std::vector<int> word) {
  DigitString s;
  s.pre_ = std::move(word);
  return s;
}

DigitString DigitString::periodic(std::vector<int> preperiod, std::vector<int> period) {
  if (period.empty()) throw DigitFormatError("periodic digit string needs a nonempty period");
  DigitString s;
  s.per_ = primitive_root(period);
  s.pre_ = std::move(preperiod);
  while (!s.pre_.empty() && s.pre_.back() == s.per_.back()) {
    s.pre_.pop_back();
    std::rotate(s.per_.rbegin(), s.per_.rbegin() + 1, s.per_.rend());
  }
  return s;
}

std::size_t DigitString::size() const {
  if (!is_finite()) throw std::logic_error("infinite digit string has no size");
  return pre_.size();
}

int DigitString::at(std::size_t i) const {
  if (i < pre_.size()) return pre_[i];
  if (per_.empty()) throw std::out_of_range("index past the end of a finite word");
  return per_[(i - pre_.size()) % per_.size()];
}

std::vector<int> DigitString::prefix(std::size_t n) const {
  if (is_finite()) n = std::min(n, pre_.size());
  std::vector<int> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(at(i));
  return out;
}

DigitString DigitString::tail(std::size_t k) const {
  if (is_finite()) {
    if (k > pre_.size()) throw std::out_of_range("tail past the end of a finite word");
    return finite({pre_.begin() + static_cast<std::ptrdiff_t>(k), pre_.end()});
  }
  if (k <= pre_.size())
    return periodic({pre_.begin() + static_cast<std::ptrdiff_t>(k), pre_.end()}, per_);
  std::size_t shift = (k - pre_.size()) % per_.size();
  std::vector<int> v(per_);
  std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(shift), v.end());
  return periodic({}, std::move(v));
}

std::strong_ordering lex_compare(const DigitString& u, const DigitString& v) {
  return compare_upto(u, v, false);
}

std::strong_ordering alt_compare(const DigitString& u, const DigitString& v) {
  return compare_upto(u, v, true);
}

std::strong_ordering lex_compare(const std::vector<int>& u, const std::vector<int>& v) {
  return compare_words(u, v, false);
}

std::strong_ordering alt_compare(const std::vector<int>& u, const std::vector<int>& v) {
  return compare_words(u, v, true);
}

std::string order_name(std::strong_ordering o) {
  if (o < 0) return "LT";
  if (o > 0) return "GT";
  return "EQ";
}

std::string format_digits(const DigitString& w, int max_digit) {
  std::string s = join_digits(w.preperiod(), max_digit);
  if (!w.is_finite()) {
    if (max_digit > 9 && !s.empty()) s += ',';
    s += "(" + join_digits(w.period(), max_digit) + ")";
  }
  return s;
}

DigitString parse_digits(std::string_view text, int max_digit) {
  std::string s = strip_spaces(text);
  std::string pre, per;
  bool periodic = false;
  split_periodic(s, pre, per, periodic);
  std::vector<int> u = parse_digit_part(pre, max_digit);
  for (int d : u)
    if (d > max_digit) throw DigitFormatError("digit " + std::to_string(d) + " outside the alphabet");
  if (!periodic) return DigitString::finite(std::move(u));
  std::vector<int> v = parse_digit_part(per, max_digit);
  for (int d : v)
    if (d > max_digit) throw DigitFormatError("digit " + std::to_string(d) + " outside the alphabet");
  return DigitString::periodic(std::move(u), std::move(v));
}

std::string format_pairs(const DigitString& codes, int m) {
  std::string s = join_pairs(codes.preperiod(), m);
  if (!codes.is_finite()) s += "(" + join_pairs(codes.period(), m) + ")";
  return s;
}

DigitString parse_pairs(std::string_view text, int m) {
  std::string s = strip_spaces(text);
  std::string pre, per;
  bool periodic = false;
  split_periodic(s, pre, per, periodic);
  std::vector<int> u = parse_pair_part(pre, m);
  if (!periodic) return DigitString::finite(std::move(u));
  return DigitString::periodic(std::move(u), parse_pair_part(per, m));
}

DigitString psi_expand(const DigitString& pair_codes, int m) {
  auto expand = [m](const std::vector<int>& codes) {
    std::vector<int> out;
    out.reserve(codes.size() * 2);
    for (int c : codes) {
      PairDigit p = PairDigit::from_code(c, m);
      out.push_back(p.b);
      out.push_back(p.a);
    }
    return out;
  };
  if (pair_codes.is_finite()) return DigitString::finite(expand(pair_codes.preperiod()));
  return DigitString::periodic(expand(pair_codes.preperiod()), expand(pair_codes.period()));
}

DigitString psi_inverse(const DigitString& word, int m) {
  auto compress = [m](const std::vector<int>& w) {
    std::vector<int> out;
    out.reserve(w.size() / 2);
    for (std::size_t i = 0; i + 1 < w.size(); i += 2) out.push_back(PairDigit{w[i], w[i + 1]}.code(m));
    return out;
  };
  if (word.is_finite()) {
    if (word.size() % 2 != 0) throw DigitFormatError("psi inverse needs a word of even length");
    return DigitString::finite(compress(word.preperiod()));
  }
  std::vector<int> u = word.preperiod(), v = word.period();
  if (u.size() % 2 != 0) {
    u.push_back(v.front());
    std::rotate(v.begin(), v.begin() + 1, v.end());
  }
  if (v.size() % 2 != 0) {
    std::vector<int> twice(v);
    twice.insert(twice.end(), v.begin(), v.end());
    v = std::move(twice);
  }
  return DigitString::periodic(compress(u), compress(v));
}

DigitString complement_digits(const DigitString& w, int m) {
  return w.map([m](int d) { return m - d; });
}

DigitString complement_pairs(const DigitString& pair_codes, int m) {
  const int top = (m + 1) * (m + 1) - 1;
  return pair_codes.map([top](int c) { return top - c; });
}

}  // namespace negbeta
