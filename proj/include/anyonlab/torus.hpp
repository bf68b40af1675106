#ifndef ANYONLAB_TORUS_HPP
#define ANYONLAB_TORUS_HPP

#include <cstddef>
#include <cstdint>

#include "anyonlab/code_model.hpp"
#include "anyonlab/gf2_matrix.hpp"
#include "anyonlab/groebner.hpp"
#include "anyonlab/periods.hpp"

namespace anyonlab {

using TorusSpec = TorusSize;

/// Reduced basis of I_lm under lex y > x.
GroebnerBasis torus_basis(const BBCode& code, TorusSpec t, const BuchbergerOptions& opts = {});

/// k(l,m) = 2 dim R/I_lm.
std::size_t logical_count(const BBCode& code, TorusSpec t, const BuchbergerOptions& opts = {});

/// Matrix of multiplication by p on F2[x,y]/(x^l-1, y^m-1); site (i,j) has
/// index i*m + j. Throws CapExceeded when l*m exceeds the cap.
GF2Matrix circulant(const LaurentPoly& p, TorusSpec t, std::size_t cap = 10'000);

/// 2lm - rank[A|B] - rank[B^T|A^T] with A = f(X,Y), B = g(X,Y).
std::size_t rank_oracle_k(const BBCode& code, TorusSpec t, std::size_t cap = 10'000);

/// k(l,m) == k(gcd(l,l0), gcd(m,m0)).
bool gcd_reduction_check(const BBCode& code, TorusSpec t, const AnyonPeriods& periods,
                         const BuchbergerOptions& opts = {});

/// Quotient R/(f,g) with multiplication by x and y, reusable across sizes.
struct QuotientRing {
  GroebnerBasis basis;
  QuotientBasis monomials;
  GF2Matrix mx, my;
  BitVec one;

  std::size_t dim() const { return monomials.size(); }
};

/// Throws DomainError for non-topological codes.
QuotientRing quotient_ring(const BBCode& code, const BuchbergerOptions& opts = {});

/// M^e by repeated squaring.
GF2Matrix matrix_power(const GF2Matrix& m, std::uint64_t e);

/// 2Q - rank[M_a | M_b] - rank[M_b ; M_a] with a = x^l - 1, b = y^m - 1.
std::size_t koszul_homology_dim(const QuotientRing& ring, TorusSpec t);
std::size_t koszul_homology_dim(const BBCode& code, TorusSpec t, const BuchbergerOptions& opts = {});

/// lm - rank[M_f* ; M_g*].
std::size_t subsystem_symmetry_kernel_dim(const BBCode& code, TorusSpec t, std::size_t cap = 10'000);

}  // namespace anyonlab

#endif  // ANYONLAB_TORUS_HPP
