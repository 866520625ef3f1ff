#include <cstdlib>
#include <iostream>
#include <string>

#include "casimir/validation.hpp"

int main(int argc, char** argv) {
  unsigned jobs = 1;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--jobs") jobs = static_cast<unsigned>(std::stoul(argv[i + 1]));
  const auto results = casimir::validation::run_all(jobs);
  casimir::validation::print(std::cout, results);
  return casimir::validation::all_passed(results) ? EXIT_SUCCESS : EXIT_FAILURE;
}
