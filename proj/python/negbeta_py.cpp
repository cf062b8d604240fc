#include "negbeta/commands.hpp"

#include <pybind11/pybind11.h>

namespace py = pybind11;

namespace {

// (json text, plain text, exit code); library errors surface as ValueError.
py::tuple pack(const negbeta::Report& r) { return py::make_tuple(r.json.dump(), r.text, r.exit_code); }

negbeta::Budgets budgets() { return negbeta::Budgets::from_environment(); }

}  // namespace

PYBIND11_MODULE(_negbeta, m) {
  m.doc() = "Exact greedy, lazy and Ito-Sadahiro representations in base -beta";

  m.def(
      "expand",
      [](const std::string& base, const std::string& x, const std::string& kind, std::size_t depth) {
        return pack(negbeta::cmd_expand(base, x, kind, depth, budgets()));
      },
      py::arg("base"), py::arg("x"), py::arg("kind") = "greedy", py::arg("depth") = 0);

  m.def(
      "admissible",
      [](const std::string& base, const std::string& word, const std::string& level) {
        return pack(negbeta::cmd_admissible(base, word, level, budgets()));
      },
      py::arg("base"), py::arg("word"), py::arg("level"));

  m.def(
      "alphabet", [](const std::string& base) { return pack(negbeta::cmd_alphabet(base, budgets())); },
      py::arg("base"));

  m.def(
      "unique",
      [](const std::string& base, std::size_t depth, std::size_t samples, std::size_t length, std::uint64_t seed) {
        return pack(negbeta::cmd_unique(base, depth, samples, length, seed, budgets()));
      },
      py::arg("base"), py::arg("depth") = 10, py::arg("samples") = 10, py::arg("length") = 4, py::arg("seed") = 1);

  m.def(
      "compare",
      [](const std::string& base, const std::string& x, std::size_t depth) {
        return pack(negbeta::cmd_compare(base, x, depth, budgets()));
      },
      py::arg("base"), py::arg("x"), py::arg("depth") = 0);
}
