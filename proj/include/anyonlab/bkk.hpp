#ifndef ANYONLAB_BKK_HPP
#define ANYONLAB_BKK_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "anyonlab/code_model.hpp"
#include "anyonlab/laurent.hpp"
#include "anyonlab/unipoly.hpp"

namespace anyonlab {

struct Point {
  std::int64_t x = 0, y = 0;
  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// Convex lattice polygon; vertices counter-clockwise, starting from the
/// lexicographically smallest, without collinear points. Segments and points
/// are represented by two and one vertices.
struct LatticePolytope {
  std::vector<Point> vertices;
  friend bool operator==(const LatticePolytope&, const LatticePolytope&) = default;
};

LatticePolytope convex_hull(std::vector<Point> pts);
/// Throws DomainError for the zero polynomial.
LatticePolytope newton_polytope(const LaurentPoly& p);
LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);
LatticePolytope translate(const LatticePolytope& p, Point d);
/// Twice the Euclidean area (an exact integer).
std::int64_t doubled_area(const LatticePolytope& p);
std::int64_t mixed_volume(const LatticePolytope& p, const LatticePolytope& q);

/// (1 + (1+u)^(gamma/d))^d with d = gcd(gamma, |theta|); zero for gamma = 0.
/// Throws InvalidInput for gamma < 0 or gamma = theta = 0.
UniPoly phi_aux(std::int64_t gamma, std::int64_t theta);
/// Largest power of two dividing n (n >= 1).
std::int64_t p2(std::int64_t n);

enum class Quadrant { nonnegative, mixed, nonpositive };

struct RegimeClassification {
  Quadrant quadrant = Quadrant::nonnegative;
  /// Position relative to the hyperbolas, e.g. "ab>(alpha+1)(beta+1)".
  std::string tag;
  /// True on a hyperbola (formula is a Deg expression).
  bool boundary = false;
};

std::string quadrant_name(Quadrant q);

struct ClosedForm {
  std::int64_t q = 0;
  RegimeClassification regime;
  bool valid = false;
  /// Canonical parameters the formula was evaluated at.
  BBParams params;
};

/// Evaluates the regime formula for Q after canonicalizing to alpha >= beta >= 0.
/// Interior regimes are valid iff the face check passes; hyperbola formulas are
/// invalid when two hyperbolas meet or when the Deg argument vanishes.
ClosedForm q_closed_form(const BBParams& params);

/// False iff some edge of NP(f) + NP(g) restricts f and g to edge polynomials
/// with a common root in the torus.
bool bkk_face_check(const LaurentPoly& f, const LaurentPoly& g);

/// MV(NP(f), NP(g)).
std::int64_t mv_bound(const BBCode& code);

}  // namespace anyonlab

#endif  // ANYONLAB_BKK_HPP
