#ifndef ANYONLAB_REPORT_HPP
#define ANYONLAB_REPORT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "anyonlab/bkk.hpp"
#include "anyonlab/code_model.hpp"
#include "anyonlab/periods.hpp"
#include "anyonlab/torus.hpp"

namespace anyonlab {

inline constexpr const char* kSchema = "anyonlab/1";

struct Caps {
  BuchbergerOptions groebner;
  /// Longest anyon period searched for mobility generators.
  std::uint64_t period = 10'000'000;
  /// Longest anyon period for which size sequences are enumerated.
  std::uint64_t size_sequence_period = 100'000;
  std::size_t divisor_pairs = 4096;
  /// Largest l*m for the matrix oracles.
  std::size_t matrix = 10'000;
};

struct TorusChecks {
  std::optional<std::size_t> rank_oracle, koszul, kernel_dim;
  std::optional<bool> gcd_reduction;
};

struct TorusRecord {
  TorusSpec size;
  std::size_t n = 0, k = 0;
  /// Present only when verification was requested.
  std::optional<TorusChecks> checks;
  std::vector<std::string> notes;

  /// Every check that ran agrees with k.
  bool all_pass() const;
};

struct CodeReport {
  explicit CodeReport(BBCode c) : code(std::move(c)) {}

  BBCode code;
  bool topological = false;
  std::optional<std::size_t> q;
  std::optional<ClosedForm> closed_form;
  std::optional<std::int64_t> mv;
  std::optional<AnyonPeriods> periods;
  std::optional<MobilitySublattice> mobility;
  std::optional<std::vector<SizeClass>> size_sequences;
  std::optional<TorusRecord> torus;
  /// Fields skipped because a cap was hit, with the reason.
  std::vector<std::string> notes;
};

/// 4^q in decimal.
std::string anyon_count(std::size_t q);

/// Full analysis. Optional parts that hit a cap are left empty with a note;
/// the Q computation itself propagates CapExceeded.
CodeReport analyze(const BBCode& code, const Caps& caps = {}, bool with_size_sequences = true);

TorusRecord torus_record(const BBCode& code, TorusSpec t, bool verify, const Caps& caps = {});

nlohmann::json to_json(const CodeReport& r);
nlohmann::json to_json(const TorusRecord& r);
nlohmann::json code_json(const BBCode& code);
nlohmann::json groebner_json(const GroebnerBasis& g);

}  // namespace anyonlab

#endif  // ANYONLAB_REPORT_HPP
