// One line per acceptance criterion; exit status 1 if any fails.
// Argument: a suite id (default all) or a single criterion number.
#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "forestcolor/acceptance.hpp"

int main(int argc, char** argv) {
  std::string arg = argc > 1 ? argv[1] : "all";
  std::vector<int> ids;
  if (!arg.empty() && std::all_of(arg.begin(), arg.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
    ids = {std::stoi(arg)};
  } else {
    ids = forestcolor::suite_criteria(arg);
  }
  bool all = true;
  for (int id : ids) {
    forestcolor::Verdict v = forestcolor::run_criterion(id);
    std::cout << forestcolor::format_verdict(v) << std::endl;
    all = all && v.pass;
  }
  std::cout << (all ? "all criteria pass" : "some criteria FAIL") << std::endl;
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
