#ifndef ANYONLAB_GROEBNER_HPP
#define ANYONLAB_GROEBNER_HPP

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "anyonlab/affine.hpp"
#include "anyonlab/gf2_matrix.hpp"

namespace anyonlab {

/// Which of the four affine variables belong to the ambient ring.
using VarMask = std::array<bool, 4>;

/// Variables occurring in any of the polynomials.
VarMask variables_of(const std::vector<AffinePoly>& polys);

struct Ideal {
  std::vector<AffinePoly> generators;
  MonomialOrder order;
  /// Ambient ring; when empty, the variables occurring in the generators.
  std::optional<VarMask> ring;
};

struct GroebnerBasis {
  /// Reduced basis, sorted ascending by leading term.
  std::vector<AffinePoly> elements;
  MonomialOrder order;
  VarMask ring{};

  std::vector<Monomial> leading_terms() const;
  friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;
};

/// Standard monomials, sorted ascending in the basis order.
struct QuotientBasis {
  std::vector<Monomial> monomials;
  MonomialOrder order;

  std::size_t size() const noexcept { return monomials.size(); }
  /// Position of m, or nullopt when m is not standard.
  std::optional<std::size_t> index_of(const Monomial& m) const;
};

struct BuchbergerOptions {
  std::size_t pair_cap = 1'000'000;
};

/// Full reduction of p by the divisors, always using the first divisor (in
/// list order) whose leading term divides the current leading monomial.
AffinePoly normal_form(const AffinePoly& p, const std::vector<AffinePoly>& divisors, const MonomialOrder& ord);
AffinePoly normal_form(const AffinePoly& p, const GroebnerBasis& g);

AffinePoly s_polynomial(const AffinePoly& f, const AffinePoly& g, const MonomialOrder& ord);

/// Reduced Groebner basis. Throws InvalidInput when every generator is zero
/// and CapExceeded when the pair queue grows beyond the cap.
GroebnerBasis buchberger(const Ideal& ideal, const BuchbergerOptions& opts = {});

/// Checks that every S-polynomial reduces to zero and the basis is reduced.
bool verify_groebner(const GroebnerBasis& g);

bool ideal_member(const AffinePoly& p, const GroebnerBasis& g);

/// Every ring variable has a pure power among the leading terms.
bool is_zero_dimensional(const GroebnerBasis& g);

/// Throws DomainError when the ideal is not zero-dimensional and CapExceeded
/// when more than `cap` standard monomials exist.
QuotientBasis quotient_basis(const GroebnerBasis& g, std::size_t cap = 10'000'000);
std::size_t quotient_dim(const GroebnerBasis& g);

/// Coordinates of a normal form in the quotient basis.
BitVec coordinates(const AffinePoly& nf, const QuotientBasis& basis);
AffinePoly from_coordinates(const BitVec& v, const QuotientBasis& basis);

/// Column c holds the coordinates of normal_form(p * B[c]).
GF2Matrix multiplication_matrix(const AffinePoly& p, const GroebnerBasis& g, const QuotientBasis& basis);

/// Normal-form engine with the basis preprocessed once; use for many reductions.
class Reducer {
 public:
  explicit Reducer(const GroebnerBasis& g);
  ~Reducer();
  Reducer(const Reducer&);
  Reducer& operator=(const Reducer&);
  Reducer(Reducer&&) noexcept;
  Reducer& operator=(Reducer&&) noexcept;

  AffinePoly reduce(const AffinePoly& p) const;
  const GroebnerBasis& basis() const noexcept { return basis_; }

 private:
  struct Impl;
  GroebnerBasis basis_;
  std::unique_ptr<Impl> impl_;
};

}  // namespace anyonlab

#endif  // ANYONLAB_GROEBNER_HPP
