#include <cstdlib>
#include <iostream>
#include <string>

#include "properties.hpp"

// Usage: property_suite [seed] [cases]
int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 20240607;
  const std::size_t cases = argc > 2 ? std::stoul(argv[2]) : 200;
  std::size_t failed = 0;
  for (const auto& r : anyonlab::testing::run_properties(seed, cases)) {
    std::cout << (r.failures ? "FAIL " : "ok   ") << r.name << ": " << r.cases - r.failures << "/" << r.cases << "\n";
    if (r.failures) {
      std::cout << "     first failure " << r.first_failure << "\n";
      ++failed;
    }
  }
  return failed ? EXIT_FAILURE : EXIT_SUCCESS;
}
