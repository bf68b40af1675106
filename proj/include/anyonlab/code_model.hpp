#ifndef ANYONLAB_CODE_MODEL_HPP
#define ANYONLAB_CODE_MODEL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "anyonlab/groebner.hpp"
#include "anyonlab/laurent.hpp"

namespace anyonlab {

/// Toric-layout parameters: f = 1 + x + x^alpha_bar y^b, g = 1 + y + y^beta_bar x^a.
/// alpha_bar and beta_bar are signed; the canonical range is alpha_bar = -alpha,
/// beta_bar = -beta with alpha >= beta >= 0.
struct BBParams {
  std::int64_t alpha_bar = 0;
  std::int64_t beta_bar = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;

  std::int64_t alpha() const { return -alpha_bar; }
  std::int64_t beta() const { return -beta_bar; }
  friend bool operator==(const BBParams&, const BBParams&) = default;
};

/// Bivariate-bicycle code given by its two check polynomials.
class BBCode {
 public:
  static BBCode from_params(const BBParams& p);
  /// Throws InvalidInput when f or g is zero.
  static BBCode from_polys(LaurentPoly f, LaurentPoly g);

  const LaurentPoly& f() const noexcept { return f_; }
  const LaurentPoly& g() const noexcept { return g_; }
  const std::optional<BBParams>& params() const noexcept { return params_; }

  /// "BB(-1,-1,3,3)" for parameterized codes, "BB(f; g)" otherwise.
  std::string label() const;

  friend bool operator==(const BBCode&, const BBCode&) = default;

 private:
  BBCode(LaurentPoly f, LaurentPoly g, std::optional<BBParams> p)
      : f_(std::move(f)), g_(std::move(g)), params_(p) {}
  LaurentPoly f_, g_;
  std::optional<BBParams> params_;
};

struct CheckPair {
  LaurentPoly hx_f, hx_g;  // h_X = (f; g)
  LaurentPoly hz_1, hz_2;  // h_Z = (g*; f*)
};

enum class Axis { x, y };

std::pair<LaurentPoly, LaurentPoly> expand_params(const BBParams& p);
CheckPair checks(const BBCode& code);

/// BB(f, g) -> BB(xi f, zeta g); xi and zeta must be monomials.
BBCode shift_origin(const BBCode& code, const LaurentPoly& xi, const LaurentPoly& zeta);
/// x -> x^-1 (or y -> y^-1) in both polynomials.
BBCode reverse_axis(const BBCode& code, Axis axis);
/// Exchanges x with y and f with g.
BBCode swap_axes(const BBCode& code);
/// Maps a parameterized code into alpha >= beta >= 0, alpha_bar = -alpha,
/// beta_bar = -beta. General codes are returned unchanged.
BBCode canonicalize(const BBCode& code);
BBParams canonical_params(BBParams p);

struct TorusSize {
  std::int64_t l = 1;
  std::int64_t m = 1;
};

/// Linear exponent substitution x -> x^s y^t, y -> x^u y^v. Without a torus the
/// matrix must be unimodular; on a torus the induced map on Z_l x Z_m must be a
/// well-defined bijection, and exponents are reduced into [0,l) x [0,m).
/// Throws InvalidInput otherwise.
LaurentPoly substitute_powers(const LaurentPoly& p, std::int64_t s, std::int64_t t, std::int64_t u, std::int64_t v,
                              std::optional<TorusSize> torus = std::nullopt);

/// Exponents reduced into [0,l) x [0,m).
LaurentPoly reduce_mod_torus(const LaurentPoly& p, TorusSize t);
/// p = (monomial) * q in R / (x^l - 1, y^m - 1).
bool proportional_mod_torus(const LaurentPoly& p, const LaurentPoly& q, TorusSize t);

Ideal ideal_infinite(const BBCode& code, const MonomialOrder& ord = MonomialOrder::elimination_x());
/// (f, g, x^l - 1, y^m - 1) in F2[x,y]; f and g are first shifted by a monomial
/// to nonnegative exponents and reduced into [0,l) x [0,m).
Ideal ideal_torus(const BBCode& code, TorusSize t, const MonomialOrder& ord = MonomialOrder());

GroebnerBasis infinite_basis(const BBCode& code, const MonomialOrder& ord = MonomialOrder::elimination_x(),
                             const BuchbergerOptions& opts = {});

/// Zero-dimensionality of I_inf. For parameterized codes also checks agreement
/// with the classification (only the class of (0,0,1,1) fails) and throws
/// InternalError on disagreement.
bool is_topological(const BBCode& code, const BuchbergerOptions& opts = {});
/// Q = dim R/(f,g); throws DomainError for non-topological codes.
std::size_t topological_index(const BBCode& code, const BuchbergerOptions& opts = {});

/// A published three-term code and the transformation into the toric layout.
struct PublishedCode {
  int n, k;
  TorusSize size;
  std::string a_poly, b_poly;
  std::int64_t s, t, u, v;  // exponent substitution x -> x^s y^t, y -> x^u y^v
  std::string f_poly, g_poly;
};

const std::vector<PublishedCode>& published_codes();

}  // namespace anyonlab

#endif  // ANYONLAB_CODE_MODEL_HPP
