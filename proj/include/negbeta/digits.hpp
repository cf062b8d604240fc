#pragma once

// Finite and eventually periodic digit strings, and the two string orders.
//
// Digits are small integer codes. For the alphabet A = {0, ..., floor(beta)}
// the code is the digit itself; for pair digits -b*beta + a the code is the
// rank of the pair in the value order (see PairDigit), so that comparing
// codes compares digit values in both cases.

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace negbeta {

class DigitFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// u v^omega when `period` is nonempty, else the finite word u.
class DigitString {
 public:
  DigitString() = default;

  static DigitString finite(std::vector<int> word);
  /// Canonicalises: primitive period and shortest preperiod.
  static DigitString periodic(std::vector<int> preperiod, std::vector<int> period);

  const std::vector<int>& preperiod() const { return pre_; }
  const std::vector<int>& period() const { return per_; }
  bool is_finite() const { return per_.empty(); }
  /// Length of a finite word.
  std::size_t size() const;

  int at(std::size_t i) const;
  std::vector<int> prefix(std::size_t n) const;
  /// The suffix starting at index k (0-based).
  DigitString tail(std::size_t k) const;

  template <class F>
  DigitString map(F f) const {
    std::vector<int> u, v;
    u.reserve(pre_.size());
    v.reserve(per_.size());
    for (int d : pre_) u.push_back(f(d));
    for (int d : per_) v.push_back(f(d));
    return per_.empty() ? finite(std::move(u)) : periodic(std::move(u), std::move(v));
  }

  bool operator==(const DigitString& o) const = default;

 private:
  std::vector<int> pre_, per_;
};

/// Lexicographic order; both words infinite, or finite of equal length.
std::strong_ordering lex_compare(const DigitString& u, const DigitString& v);
/// Alternate order: position k (1-based) compares with sign (-1)^k.
std::strong_ordering alt_compare(const DigitString& u, const DigitString& v);

std::strong_ordering lex_compare(const std::vector<int>& u, const std::vector<int>& v);
std::strong_ordering alt_compare(const std::vector<int>& u, const std::vector<int>& v);

/// "<" / "=" / ">" style verdict names: LT, EQ, GT.
std::string order_name(std::strong_ordering o);

/// Digits over {0..max_digit}: contiguous characters when max_digit <= 9,
/// comma separated otherwise; `pre(per)` for u per^omega.
std::string format_digits(const DigitString& w, int max_digit);
/// Inverse of format_digits; comma mode is used when max_digit > 9.
DigitString parse_digits(std::string_view text, int max_digit = 9);

/// The pair digit -b*beta + a of the alphabet B over A = {0..m}.
struct PairDigit {
  int b = 0;
  int a = 0;

  /// Rank in the value order: m0 < m1 < ... < mm < (m-1)0 < ... < 0m.
  int code(int m) const { return (m - b) * (m + 1) + a; }
  static PairDigit from_code(int code, int m) { return {m - code / (m + 1), code % (m + 1)}; }

  bool operator==(const PairDigit&) const = default;
};

/// `b:a` tokens joined by dots, with the same `pre(per)` convention.
std::string format_pairs(const DigitString& codes, int m);
DigitString parse_pairs(std::string_view text, int m);

/// psi(-b*beta + a) = ba, extended letterwise.
DigitString psi_expand(const DigitString& pair_codes, int m);
/// Groups an A-word into consecutive pairs; finite words must have even length.
DigitString psi_inverse(const DigitString& word, int m);

/// d -> m - d.
DigitString complement_digits(const DigitString& w, int m);
/// -b*beta + a -> -(m-b)*beta + (m-a).
DigitString complement_pairs(const DigitString& pair_codes, int m);

}  // namespace negbeta
