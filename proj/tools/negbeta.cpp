#include "negbeta/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using namespace negbeta;
  CLI::App app{"Greedy, lazy and Ito-Sadahiro representations in negative base -beta"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Print a JSON report");

  std::string base, x, kind = "greedy", word, level, golden, ito;
  std::size_t depth = 0, unique_depth = 10, samples = 10, length = 4;
  std::uint64_t seed = 1;

  auto* expand = app.add_subcommand("expand", "Expand x in one of the schemes");
  expand->add_option("--base", base, "phi, tribonacci, root(p, lo, hi) or a rational")->required();
  expand->add_option("--x", x, "Element of Q(beta), e.g. -1/2 or b - 1")->required()->allow_extra_args(false);
  expand->add_option("--kind", kind, "greedy, lazy, is, beta2-greedy, beta2-lazy")->capture_default_str();
  expand->add_option("--depth", depth, "Digits to produce; 0 detects the period")->capture_default_str();

  auto* admissible = app.add_subcommand("admissible", "Check whether a digit string is admissible");
  admissible->add_option("--base", base, "Base for the pair levels");
  admissible->add_option("--pairs", word, "Pair word such as 1:1.0:0 or 1:0(1:1)");
  admissible->add_option("--level", level, "pairs-greedy, pairs-lazy, binary-golden, binary-is");
  admissible->add_option("--binary-golden", golden, "Binary word, greedy (-phi) shape check");
  admissible->add_option("--binary-is", ito, "Binary word, Ito-Sadahiro (-phi) check");

  auto* alphabet = app.add_subcommand("alphabet", "Minimal alphabets A_G and A_L");
  alphabet->add_option("--base", base, "Base")->required();

  auto* unique = app.add_subcommand("unique", "Sample numbers with a unique representation");
  unique->add_option("--base", base, "Base")->required();
  unique->add_option("--depth", unique_depth, "Branch-count probe depth")->capture_default_str();
  unique->add_option("--samples", samples, "Number of samples")->capture_default_str();
  unique->add_option("--length", length, "Length of the sampled period")->capture_default_str();
  unique->add_option("--seed", seed, "Random seed")->capture_default_str();

  auto* compare = app.add_subcommand("compare", "Greedy, lazy and Ito-Sadahiro side by side");
  compare->add_option("--base", base, "Base")->required();
  compare->add_option("--x", x, "Element of Q(beta)")->required();
  compare->add_option("--depth", depth, "Digits to compare; 0 detects periods")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  Report report;
  try {
    Budgets budgets = Budgets::from_environment();
    if (expand->parsed()) {
      report = guarded("expand", [&] { return cmd_expand(base, x, kind, depth, budgets); });
    } else if (admissible->parsed()) {
      int given = !word.empty() + !golden.empty() + !ito.empty();
      if (given != 1) throw std::invalid_argument("give exactly one of --pairs, --binary-golden, --binary-is");
      if (!golden.empty()) {
        word = golden;
        level = "binary-golden";
      } else if (!ito.empty()) {
        word = ito;
        level = "binary-is";
      } else if (level.empty()) {
        level = "pairs-greedy";
      }
      report = guarded("admissible", [&] { return cmd_admissible(base, word, level, budgets); });
    } else if (alphabet->parsed()) {
      report = guarded("alphabet", [&] { return cmd_alphabet(base, budgets); });
    } else if (unique->parsed()) {
      report = guarded("unique", [&] { return cmd_unique(base, unique_depth, samples, length, seed, budgets); });
    } else if (compare->parsed()) {
      report = guarded("compare", [&] { return cmd_compare(base, x, depth, budgets); });
    }
  } catch (const std::exception& e) {
    report = error_report(app.get_subcommands().front()->get_name(), e.what());
  }

  if (as_json)
    std::cout << report.json.dump(2) << "\n";
  else
    std::cout << report.text;
  std::cerr << report.note;
  return report.exit_code;
}
