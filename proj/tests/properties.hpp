#ifndef ANYONLAB_TESTS_PROPERTIES_HPP
#define ANYONLAB_TESTS_PROPERTIES_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace anyonlab::testing {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0, failures = 0;
  std::string first_failure;
};

/// Randomized property checks, `cases` draws each, reproducible from `seed`.
std::vector<PropertyResult> run_properties(std::uint64_t seed, std::size_t cases);

}  // namespace anyonlab::testing

#endif  // ANYONLAB_TESTS_PROPERTIES_HPP
