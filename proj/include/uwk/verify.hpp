#pragma once

// Verification suites behind the CLI `verify` subcommand: each suite runs a
// list of named checks and reports pass/fail per check.

#include <string>
#include <vector>

#include "uwk/poly.hpp"

namespace uwk::verify {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<Check> suite_graph();
std::vector<Check> suite_types(Int p, int f);
std::vector<Check> suite_ideals(const std::vector<polysym::MvPolynomial>& extra_generators);
std::vector<Check> suite_groups(Int p, int f);

}  // namespace uwk::verify
