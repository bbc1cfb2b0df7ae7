// Runs every acceptance criterion and prints one line per criterion.

#include <cstdlib>
#include <iostream>

#include "superflow/acceptance.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = superflow::kAcceptanceSeed;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  int failed = 0;
  for (int id = 1; id <= superflow::kCriterionCount; ++id) {
    auto result = superflow::run_criterion(id, seed);
    std::cout << superflow::format_result(result) << std::endl;
    if (!result.passed) ++failed;
  }
  std::cout << (superflow::kCriterionCount - failed) << "/" << superflow::kCriterionCount
            << " acceptance criteria passed (seed " << seed << ")" << std::endl;
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
