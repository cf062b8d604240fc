#pragma once

// Command implementations shared by the CLI and the Python module. Each
// returns a Report carrying both renderings; the caller picks one.

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <string>

namespace negbeta {

enum ExitCode : int {
  kExitOk = 0,
  kExitError = 2,      // parse, alphabet or domain error
  kExitUndecided = 3,  // UNDECIDED or PERIOD_NOT_FOUND
};

struct Report {
  nlohmann::json json;
  std::string text;  // stdout in text mode, newline terminated
  std::string note;  // extra diagnostics for stderr, may be empty
  int exit_code = kExitOk;
};

struct Budgets {
  std::size_t orbit = 10000;
  std::size_t branch = 2'000'000;

  /// Defaults overridden by NEGBETA_ORBIT_BUDGET / NEGBETA_BRANCH_BUDGET.
  static Budgets from_environment();
};

/// kind: greedy, lazy, is, beta2-greedy, beta2-lazy. depth 0 means period detection.
Report cmd_expand(const std::string& base, const std::string& x, const std::string& kind, std::size_t depth,
                  const Budgets& budgets = {});

/// level: pairs-greedy, pairs-lazy, binary-golden, binary-is.
Report cmd_admissible(const std::string& base, const std::string& word, const std::string& level,
                      const Budgets& budgets = {});

Report cmd_alphabet(const std::string& base, const Budgets& budgets = {});

Report cmd_unique(const std::string& base, std::size_t depth, std::size_t samples, std::size_t length,
                  std::uint64_t seed, const Budgets& budgets = {});

Report cmd_compare(const std::string& base, const std::string& x, std::size_t depth, const Budgets& budgets = {});

/// Runs `f` and turns library exceptions into an ERROR report with exit code 2.
template <class F>
Report guarded(const std::string& command, F&& f);

Report error_report(const std::string& command, const std::string& message);

}  // namespace negbeta

#include <stdexcept>

template <class F>
negbeta::Report negbeta::guarded(const std::string& command, F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {  // parse, field, digit format
    return error_report(command, e.what());
  } catch (const std::domain_error& e) {
    return error_report(command, e.what());
  } catch (const std::runtime_error& e) {  // budgets
    return error_report(command, e.what());
  }
}
