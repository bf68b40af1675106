#ifndef ANYONLAB_DYNAMICS_HPP
#define ANYONLAB_DYNAMICS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "anyonlab/code_model.hpp"
#include "anyonlab/groebner.hpp"
#include "anyonlab/laurent.hpp"
#include "anyonlab/unipoly.hpp"

namespace anyonlab {

struct ExcitationPattern {
  std::size_t t = 0;
  LaurentPoly support;
  friend bool operator==(const ExcitationPattern&, const ExcitationPattern&) = default;
};

struct HoppingTrace {
  Axis axis = Axis::x;
  /// Univariate elimination element along the axis.
  UniPoly h;
  std::vector<ExcitationPattern> patterns;
  /// Translation of the final monomial relative to the initial lowest term.
  std::int64_t terminal = 0;
  /// False when the step cap was hit first.
  bool complete = false;
};

/// Lowest term along the axis: axis exponent first, then the other one.
Exponent lowest_term_along(const LaurentPoly& p, Axis axis);

/// Iterates xi <- xi + lowest(xi) * h until xi is a single monomial other than
/// the initial one. Throws DomainError for non-topological codes or Q = 0.
HoppingTrace hop_sequence(const BBCode& code, Axis axis, const LaurentPoly& init = LaurentPoly::one(),
                          std::size_t max_steps = 100'000, const BuchbergerOptions& opts = {});

/// eta^0 .. eta^steps. Throws DomainError unless 1 + eta is a monomial
/// multiple of f or g.
std::vector<ExcitationPattern> local_move_patterns(const BBCode& code, const LaurentPoly& eta, std::size_t steps);

/// Common normal form of all patterns modulo I_inf; throws ChargeViolation
/// when two patterns differ.
LaurentPoly charge_certificate(const std::vector<ExcitationPattern>& patterns, const BBCode& code,
                               const BuchbergerOptions& opts = {});
LaurentPoly charge_certificate(const HoppingTrace& trace, const BBCode& code, const BuchbergerOptions& opts = {});

/// Header "step,x,y" and one row per excited site.
std::string patterns_csv(const std::vector<ExcitationPattern>& patterns);
/// [[[x,y],...], ...] one array per frame.
nlohmann::json patterns_json(const std::vector<ExcitationPattern>& patterns);
/// One <g> per frame laid out left to right, unit grid, filled circles.
std::string patterns_svg(const std::vector<ExcitationPattern>& patterns);

}  // namespace anyonlab

#endif  // ANYONLAB_DYNAMICS_HPP
