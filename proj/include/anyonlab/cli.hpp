#ifndef ANYONLAB_CLI_HPP
#define ANYONLAB_CLI_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "anyonlab/report.hpp"

namespace anyonlab {

enum ExitCode : int { exit_ok = 0, exit_verification = 1, exit_invalid = 2, exit_cap = 3 };

/// Inclusive integer range "lo:hi" (or a single value).
struct Range {
  std::int64_t lo = 0, hi = -1;
  bool empty() const { return hi < lo; }
  std::vector<std::int64_t> values() const;
};

/// Throws InvalidInput on malformed text.
Range parse_range(const std::string& text);

/// Grid over alpha, beta >= 0 (alpha_bar = -alpha) and a, b.
struct ScanSpec {
  Range alpha{0, 2}, beta{0, 2}, a{-3, 3}, b{-3, 3};
  std::optional<Range> l, m;
  bool jsonl = false;
  unsigned jobs = 1;
  Caps caps;
};

std::vector<BBParams> scan_params(const ScanSpec& spec);

/// Runs fn(i) for i in [0, n) on up to `jobs` threads.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn);

/// One output line per grid point (and torus size), in parameter order.
std::vector<std::string> run_scan(const ScanSpec& spec);
std::string scan_header(const ScanSpec& spec);

struct CheckTally {
  std::string name;
  std::size_t passed = 0, failed = 0, skipped = 0;
  std::vector<std::string> failures;
};

struct VerifyOptions {
  std::vector<std::int64_t> sizes{2, 3, 4, 6, 12};
  std::optional<std::size_t> expect_q;
  unsigned jobs = 1;
  Caps caps;
};

/// Runs every cross-oracle and invariant check on each code.
std::vector<CheckTally> verify_codes(const std::vector<BBCode>& codes, const VerifyOptions& opts);

/// Entry point of the command-line tool; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace anyonlab

#endif  // ANYONLAB_CLI_HPP
