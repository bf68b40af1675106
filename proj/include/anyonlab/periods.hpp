#ifndef ANYONLAB_PERIODS_HPP
#define ANYONLAB_PERIODS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "anyonlab/code_model.hpp"
#include "anyonlab/groebner.hpp"
#include "anyonlab/unipoly.hpp"

namespace anyonlab {

struct FactorPower {
  UniPoly factor;
  unsigned multiplicity = 1;
  friend bool operator==(const FactorPower&, const FactorPower&) = default;
};

/// Irreducible factors sorted by (degree, coefficients), each listed once.
using Factorization = std::vector<FactorPower>;

/// Pairwise coprime squarefree parts. Requires p nonzero; x-content is the
/// caller's business (a factor u is treated like any other).
std::vector<FactorPower> squarefree_decomposition(const UniPoly& p);

/// Complete factorization of a nonconstant polynomial; deterministic.
Factorization factor_univariate(const UniPoly& p);

/// Rabin's test.
bool is_irreducible(const UniPoly& p);

/// Product of factor^multiplicity.
UniPoly expand(const Factorization& f);

/// Prime factors of n with repetition, ascending. factor_integer(1) is empty.
std::vector<std::uint64_t> factor_integer(std::uint64_t n);
bool is_prime(std::uint64_t n);

/// Order of u modulo an irreducible p != u. Throws InvalidInput for p = u or a
/// constant, CapExceeded when deg p exceeds the cap.
std::uint64_t irreducible_period(const UniPoly& p, unsigned degree_cap = 64);

/// Least e > 0 with p | u^e - 1. Requires p(0) = 1. Throws OverflowError when
/// the period does not fit in 64 bits.
std::uint64_t polynomial_period(const UniPoly& p, unsigned degree_cap = 64);

struct AnyonPeriods {
  std::uint64_t l0 = 0, m0 = 0;
  /// The univariate elimination elements in x and in y.
  UniPoly hx, hy;
  friend bool operator==(const AnyonPeriods&, const AnyonPeriods&) = default;
};

/// Univariate element of a Groebner basis in the given variable; nullopt
/// when the basis has none.
std::optional<UniPoly> univariate_element(const GroebnerBasis& g, Var v);

/// Throws DomainError for non-topological codes.
AnyonPeriods anyon_periods(const BBCode& code, const BuchbergerOptions& opts = {});

struct LatticeVector {
  std::int64_t x = 0, y = 0;
  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
};

/// Generators of the mobility sublattice in two Hermite-like forms:
/// x-presentation ((l0,0), (i,j)) with j minimal positive and 0 <= i < l0,
/// y-presentation ((0,m0), (i,j)) with i minimal positive and 0 <= j < m0.
struct MobilitySublattice {
  std::uint64_t l0 = 0, m0 = 0;
  std::pair<LatticeVector, LatticeVector> x_presentation, y_presentation;
  /// Index of the sublattice in Z^2.
  std::uint64_t index() const { return l0 * static_cast<std::uint64_t>(x_presentation.second.y); }
};

/// "<x^762, x^216*y^6>" style rendering; a rectangular lattice always prints x first.
std::string print_generators(const std::pair<LatticeVector, LatticeVector>& gens);

/// Throws CapExceeded when l0 or m0 exceeds the cap.
MobilitySublattice mobility_generators(const BBCode& code, std::uint64_t cap = 10'000'000,
                                       const BuchbergerOptions& opts = {});

struct SizeClass {
  /// E.g. "12Z", "6Z-12Z", "others"; or an explicit list of gcd pairs when
  /// k does not depend on gcd(l,m) alone.
  std::string gcd_class;
  std::size_t k = 0;
  /// Divisor pairs (gcd(l,l0), gcd(m,m0)) in the class, ascending.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> members;
  /// Reduced basis of the torus ideal at the first member.
  GroebnerBasis witness;
};

/// Classes sorted by decreasing k. Throws CapExceeded when the periods exceed
/// the cap or the divisor grid has more than `pair_cap` points.
std::vector<SizeClass> size_sequences(const BBCode& code, std::uint64_t period_cap = 100'000,
                                      std::size_t pair_cap = 4096, const BuchbergerOptions& opts = {});

std::vector<std::uint64_t> divisors(std::uint64_t n);

}  // namespace anyonlab

#endif  // ANYONLAB_PERIODS_HPP
