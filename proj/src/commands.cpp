#include "negbeta/commands.hpp"

#include "negbeta/admissibility.hpp"
#include "negbeta/oracle.hpp"
#include "negbeta/parse.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>

namespace negbeta {

using nlohmann::json;

namespace {

json rational_list(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(q.get_str());
  return out;
}

json element_json(const Element& e) {
  return {{"coeffs", rational_list(e.coeffs())}, {"text", e.to_string()}, {"approx", e.approx(12)}};
}

json base_json(const std::string& text, const FieldContext& ctx) {
  json poly = json::array();
  for (const auto& c : ctx.input_poly()) poly.push_back(c.get_str());
  auto [lo, hi] = ctx.bracket();
  return {{"text", text},
          {"name", ctx.name()},
          {"min_poly", poly},
          {"bracket", {lo.get_str(), hi.get_str()}},
          {"floor", ctx.floor_beta()},
          {"approx", ctx.beta().approx(12)}};
}

json interval_json(const Interval& i) {
  return {{"lo", element_json(i.lo)},
          {"hi", element_json(i.hi)},
          {"lo_closed", i.lo_closed},
          {"hi_closed", i.hi_closed},
          {"text", i.to_string()}};
}

json header(const std::string& command) { return {{"schema", 1}, {"command", command}}; }

std::string symbol_for(const FieldContext& ctx) {
  if (ctx.name() == "phi") return "phi";
  if (ctx.name() == "tribonacci") return "mu";
  return "b";
}

// -2b+1 style rendering of a pair digit value.
std::string pair_symbol(PairDigit p, const std::string& sym) {
  std::string s;
  if (p.b == 1) s = "-" + sym;
  else if (p.b > 1) s = "-" + std::to_string(p.b) + sym;
  if (p.b == 0) return std::to_string(p.a);
  if (p.a > 0) s += "+" + std::to_string(p.a);
  return s;
}

std::string pair_token(PairDigit p) { return std::to_string(p.b) + ":" + std::to_string(p.a); }

std::size_t parse_budget(const char* var, std::size_t fallback) {
  const char* v = std::getenv(var);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  unsigned long long n = std::strtoull(v, &end, 10);
  if (*end != '\0' || n == 0) throw std::invalid_argument(std::string(var) + " must be a positive integer");
  return static_cast<std::size_t>(n);
}

ExpandOptions expand_options(std::size_t depth, const Budgets& budgets) {
  ExpandOptions o;
  o.depth = depth;
  o.orbit_budget = budgets.orbit;
  return o;
}

std::string render(const Expansion& e, const std::function<std::string(const DigitString&)>& fmt) {
  std::string s = fmt(e.digits);
  if (e.status == ExpansionStatus::PeriodNotFound) s += "...";
  return s;
}

json expansion_json(const Expansion& e, const std::string& text) {
  return {{"digits", text},
          {"preperiod", e.digits.preperiod()},
          {"period", e.digits.period()},
          {"periodic", e.status == ExpansionStatus::Periodic},
          {"status", status_name(e.status)},
          {"endpoint", e.endpoint}};
}

// Alternate-order verdict; prefixes are compared when a period is missing.
std::string compare_verdict(const Expansion& a, const Expansion& b) {
  if (a.status == ExpansionStatus::Periodic && b.status == ExpansionStatus::Periodic)
    return order_name(alt_compare(a.digits, b.digits));
  auto len = [](const Expansion& e) {
    return e.status == ExpansionStatus::Periodic ? std::size_t(-1) : e.digits.size();
  };
  std::size_t n = std::min(len(a), len(b));
  auto c = alt_compare(a.digits.prefix(n), b.digits.prefix(n));
  return c == 0 ? "UNDECIDED" : order_name(c);
}

std::string grouped(const DigitString& w, std::size_t n) {
  if (w.is_finite()) n = std::min(n, w.size());
  std::string s;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && i % 3 == 0) s += ' ';
    s += std::to_string(w.at(i));
  }
  return s;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

Budgets Budgets::from_environment() {
  Budgets b;
  b.orbit = parse_budget("NEGBETA_ORBIT_BUDGET", b.orbit);
  b.branch = parse_budget("NEGBETA_BRANCH_BUDGET", b.branch);
  return b;
}

Report error_report(const std::string& command, const std::string& message) {
  Report r;
  r.json = header(command);
  r.json["status"] = "ERROR";
  r.json["error"] = message;
  r.note = "error: " + message + "\n";
  r.exit_code = kExitError;
  return r;
}

Report cmd_expand(const std::string& base, const std::string& x_text, const std::string& kind, std::size_t depth,
                  const Budgets& budgets) {
  FieldContext ctx = parse_base(base);
  NegBetaSystem sys(ctx);
  Element x = parse_element(x_text, ctx);
  ExpandOptions opts = expand_options(depth, budgets);
  const int m = sys.m();

  Expansion e;
  Interval domain = sys.interval();
  std::string digits;
  std::optional<Element> value;
  json extra = json::object();

  if (kind == "greedy" || kind == "lazy") {
    e = kind == "greedy" ? greedy_neg_beta(sys, x, opts) : lazy_neg_beta(sys, x, opts);
    digits = render(e, [m](const DigitString& w) { return format_digits(w, m); });
    if (e.status == ExpansionStatus::Periodic) value = eval_neg_beta(sys, e.digits);
  } else if (kind == "is") {
    Scheme s = build_ito_sadahiro_scheme(sys);
    domain = s.domain();
    e = run_scheme(s, x, opts);
    digits = render(e, [m](const DigitString& w) { return format_digits(w, m); });
    if (e.status == ExpansionStatus::Periodic) value = eval_digits(e.digits, s.base(), s.digit_values());
  } else if (kind == "beta2-greedy" || kind == "beta2-lazy") {
    Scheme s = build_beta2_scheme(sys, kind == "beta2-greedy" ? Extremal::Greedy : Extremal::Lazy);
    e = run_scheme(s, x, opts);
    digits = render(e, [m](const DigitString& w) { return format_pairs(w, m); });
    extra["psi"] = render(e, [m](const DigitString& w) { return format_digits(psi_expand(w, m), m); });
    if (e.status == ExpansionStatus::Periodic) value = eval_pairs(sys, e.digits);
  } else {
    throw ParseError("unknown kind '" + kind + "'; expected greedy, lazy, is, beta2-greedy or beta2-lazy");
  }

  Report r;
  r.json = header("expand");
  r.json["status"] = status_name(e.status);
  r.json["base"] = base_json(base, ctx);
  r.json["x"] = element_json(x);
  r.json["x"]["input"] = x_text;
  r.json["interval"] = {{"l", element_json(sys.l())}, {"r", element_json(sys.r())}};
  r.json["domain"] = interval_json(domain);
  r.json["kind"] = kind;
  r.json["depth"] = depth;
  r.json["expansion"] = expansion_json(e, digits);
  r.json["expansion"].update(extra);
  if (value) {
    r.json["value"] = element_json(*value);
    r.json["round_trip"] = *value == x;
  } else {
    r.json["value"] = nullptr;
    r.json["round_trip"] = nullptr;
  }
  r.text = digits + "\n";
  if (e.status == ExpansionStatus::PeriodNotFound) {
    r.note = "no period within " + std::to_string(opts.orbit_budget) + " orbit states; showing a " +
             std::to_string(opts.fallback_depth) + "-digit prefix\n";
    r.exit_code = kExitUndecided;
  }
  return r;
}

Report cmd_admissible(const std::string& base, const std::string& word, const std::string& level,
                      const Budgets& budgets) {
  Report r;
  r.json = header("admissible");
  r.json["level"] = level;
  AdmissibilityResult result;
  std::string canonical;

  if (level == "pairs-greedy" || level == "pairs-lazy") {
    FieldContext ctx = parse_base(base);
    NegBetaSystem sys(ctx);
    GreedyAdmissibility checker(sys, expand_options(0, budgets));
    DigitString w = parse_pairs(word, sys.m());
    canonical = format_pairs(w, sys.m());
    result = level == "pairs-greedy" ? checker.check_greedy(w) : checker.check_lazy(w);
    const int m = sys.m();
    auto bound = [m](const Expansion& e) {
      return json{{"digits", render(e, [m](const DigitString& d) { return format_pairs(d, m); })},
                  {"status", status_name(e.status)}};
    };
    r.json["base"] = base_json(base, ctx);
    r.json["bounds"] = {{"top", bound(checker.bounds().top)}, {"mid", bound(checker.bounds().mid)}};
  } else if (level == "binary-golden" || level == "binary-is") {
    if (!base.empty() && parse_base(base).name() != "phi")
      throw std::invalid_argument("the " + level + " level is defined for base phi only");
    DigitString w = parse_digits(word, 1);
    canonical = format_digits(w, 1);
    result = level == "binary-golden" ? golden_forbidden_factor_check(w) : ito_sadahiro_admissible(w);
    r.json["base"] = base_json("phi", FieldContext::golden());
  } else {
    throw ParseError("unknown level '" + level + "'; expected pairs-greedy, pairs-lazy, binary-golden or binary-is");
  }

  r.json["word"] = canonical;
  r.json["verdict"] = verdict_name(result.verdict);
  r.json["status"] = result.verdict == Verdict::Undecided ? "UNDECIDED" : "OK";
  if (result.violation) {
    const Violation& v = *result.violation;
    r.json["violation"] = {{"rule", v.rule}, {"position", v.position}, {"factor", v.factor}};
    r.text = "REJECT " + v.rule + " at position " + std::to_string(v.position) + ": " + v.factor + "\n";
  } else {
    r.json["violation"] = nullptr;
    r.text = verdict_name(result.verdict) + "\n";
  }
  if (result.verdict == Verdict::Undecided) {
    r.note = "a reference bound has no detected period; raise NEGBETA_ORBIT_BUDGET to settle it\n";
    r.exit_code = kExitUndecided;
  }
  return r;
}

Report cmd_alphabet(const std::string& base, const Budgets& budgets) {
  FieldContext ctx = parse_base(base);
  NegBetaSystem sys(ctx);
  const int m = sys.m();
  const std::string sym = symbol_for(ctx);
  AlphabetInfo info = minimal_alphabet(sys);
  AdmissibilityBound bounds = reference_bounds(sys, expand_options(0, budgets));

  auto listing = [&](const std::vector<int>& codes, std::string& text) {
    json out = json::array();
    for (std::size_t i = 0; i < codes.size(); ++i) {
      PairDigit p = PairDigit::from_code(codes[i], m);
      out.push_back({{"pair", pair_token(p)}, {"value", pair_symbol(p, sym)},
                     {"coeffs", rational_list(sys.pair_value(codes[i]).coeffs())}});
      text += (i ? ", " : "") + pair_symbol(p, sym);
    }
    return out;
  };
  std::string all_text, g_text, l_text;
  std::vector<int> all_codes;
  for (int c = 0; c < sys.pair_count(); ++c) all_codes.push_back(c);
  const Element& b = sys.beta();
  Element margin = b * b - b * Rational(m) - Rational(m);
  auto bound = [m](const Expansion& e) {
    return json{{"digits", render(e, [m](const DigitString& d) { return format_pairs(d, m); })},
                {"status", status_name(e.status)}};
  };
  PairDigit top = PairDigit::from_code(info.max_greedy, m);

  Report r;
  r.json = header("alphabet");
  r.json["status"] = "OK";
  r.json["base"] = base_json(base, ctx);
  r.json["interval"] = {{"l", element_json(sys.l())}, {"r", element_json(sys.r())}};
  r.json["pairs"] = listing(all_codes, all_text);
  r.json["greedy"] = listing(info.greedy, g_text);
  r.json["lazy"] = listing(info.lazy, l_text);
  r.json["max_greedy"] = {{"pair", pair_token(top)}, {"value", pair_symbol(top, sym)}};
  r.json["full"] = info.full;
  r.json["margin"] = element_json(margin);
  r.json["bounds"] = {{"top", bound(bounds.top)}, {"mid", bound(bounds.mid)}};

  std::ostringstream t;
  t << "B   = {" << all_text << "}\n";
  t << "A_G = {" << g_text << "}\n";
  t << "A_L = {" << l_text << "}\n";
  t << "max A_G = " << pair_symbol(top, sym) << "\n";
  t << "A_G = B: " << (info.full ? "true" : "false") << "\n";
  r.text = t.str();
  return r;
}

Report cmd_unique(const std::string& base, std::size_t depth, std::size_t samples, std::size_t length,
                  std::uint64_t seed, const Budgets& budgets) {
  FieldContext ctx = parse_base(base);
  NegBetaSystem sys(ctx);
  const int m = sys.m();
  auto found = sample_unique_numbers(sys, length, samples, depth, seed, budgets.branch);

  Report r;
  r.json = header("unique");
  r.json["status"] = "OK";
  r.json["base"] = base_json(base, ctx);
  r.json["depth"] = depth;
  r.json["seed"] = seed;
  json list = json::array();
  std::ostringstream t;
  bool all_one = true;
  for (const auto& s : found) {
    std::string w = s.pairs ? format_pairs(s.word, m) : format_digits(s.word, m);
    std::string d = format_digits(s.digits, m);
    all_one = all_one && s.branches == 1;
    list.push_back({{"word", w}, {"digits", d}, {"x", element_json(s.value)}, {"branches", s.branches}});
    t << d << "  x = " << s.value.to_string() << "  branches = " << s.branches << "\n";
  }
  r.json["samples"] = list;
  r.json["all_unique"] = all_one;
  t << "all counts = 1: " << (all_one ? "true" : "false") << "\n";
  r.text = t.str();
  return r;
}

Report cmd_compare(const std::string& base, const std::string& x_text, std::size_t depth, const Budgets& budgets) {
  FieldContext ctx = parse_base(base);
  NegBetaSystem sys(ctx);
  Element x = parse_element(x_text, ctx);
  const int m = sys.m();
  Scheme is = build_ito_sadahiro_scheme(sys);
  if (!sys.in_interval(x) || !is.domain().contains(x))
    throw DomainError(x.to_string() + " is outside " + is.domain().to_string() + " intersected with " +
                      sys.interval().to_string());
  ExpandOptions opts = expand_options(depth, budgets);
  Expansion lazy = lazy_neg_beta(sys, x, opts);
  Expansion ito = run_scheme(is, x, opts);
  Expansion greedy = greedy_neg_beta(sys, x, opts);
  auto fmt = [m](const DigitString& w) { return format_digits(w, m); };
  std::string v1 = compare_verdict(lazy, ito);
  std::string v2 = compare_verdict(ito, greedy);

  Report r;
  r.json = header("compare");
  bool unresolved = lazy.status == ExpansionStatus::PeriodNotFound || ito.status == ExpansionStatus::PeriodNotFound ||
                    greedy.status == ExpansionStatus::PeriodNotFound || v1 == "UNDECIDED" || v2 == "UNDECIDED";
  r.json["status"] = unresolved ? "UNDECIDED" : "OK";
  r.json["base"] = base_json(base, ctx);
  r.json["x"] = element_json(x);
  r.json["x"]["input"] = x_text;
  r.json["interval"] = {{"l", element_json(sys.l())}, {"r", element_json(sys.r())}};
  r.json["is_domain"] = interval_json(is.domain());
  r.json["lazy"] = expansion_json(lazy, render(lazy, fmt));
  r.json["is"] = expansion_json(ito, render(ito, fmt));
  r.json["greedy"] = expansion_json(greedy, render(greedy, fmt));
  r.json["lazy_vs_is"] = v1;
  r.json["is_vs_greedy"] = v2;

  std::ostringstream t;
  auto row = [&](const char* name, const Expansion& e) {
    t << pad(name, 14) << pad(render(e, fmt), 14) << "= " << grouped(e.digits, 9) << " ...\n";
  };
  row("Ito-Sadahiro", ito);
  row("lazy", lazy);
  row("greedy", greedy);
  t << "lazy vs IS: " << v1 << "\n";
  t << "IS vs greedy: " << v2 << "\n";
  r.text = t.str();
  if (unresolved) r.exit_code = kExitUndecided;
  return r;
}

}  // namespace negbeta
