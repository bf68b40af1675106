#ifndef ANYONLAB_TESTS_SUPPORT_HPP
#define ANYONLAB_TESTS_SUPPORT_HPP

#include <set>
#include <string>
#include <vector>

#include "anyonlab/affine.hpp"
#include "anyonlab/code_model.hpp"
#include "anyonlab/groebner.hpp"
#include "anyonlab/laurent.hpp"

namespace anyonlab::testing {

inline BBCode bb(std::int64_t alpha_bar, std::int64_t beta_bar, std::int64_t a, std::int64_t b) {
  return BBCode::from_params({alpha_bar, beta_bar, a, b});
}

inline BBCode toric() { return BBCode::from_polys(parse_poly("1+x"), parse_poly("1+y")); }

/// Affine polynomial from Laurent text; x^-k stands for xbar^k.
inline AffinePoly affine(const std::string& text) { return laurent_to_affine(parse_poly(text)); }

/// Term-set view of a basis, independent of element order.
inline std::set<std::string> basis_terms(const std::vector<AffinePoly>& elements, const MonomialOrder& ord) {
  std::set<std::string> out;
  for (const auto& e : elements) out.insert(print_affine(e, ord));
  return out;
}

inline std::set<std::string> basis_terms(const GroebnerBasis& g) { return basis_terms(g.elements, g.order); }

inline std::set<std::string> expected_terms(const std::vector<std::string>& texts, const MonomialOrder& ord) {
  std::vector<AffinePoly> polys;
  for (const auto& t : texts) polys.push_back(affine(t));
  return basis_terms(polys, ord);
}

}  // namespace anyonlab::testing

#endif  // ANYONLAB_TESTS_SUPPORT_HPP
