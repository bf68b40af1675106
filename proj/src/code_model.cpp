#include "anyonlab/code_model.hpp"

#include <algorithm>
#include <unordered_set>

#include "anyonlab/error.hpp"

namespace anyonlab {

namespace {

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("exponent overflow in substitution");
  return r;
}

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("exponent overflow in substitution");
  return r;
}

std::int64_t mod(std::int64_t v, std::int64_t n) {
  const std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

LaurentPoly map_exponents(const LaurentPoly& p, auto&& fn) {
  std::vector<Exponent> terms;
  terms.reserve(p.size());
  for (const auto& e : p.terms()) terms.push_back(fn(e));
  return LaurentPoly::from_terms(std::move(terms));
}

void require_monomial(const LaurentPoly& p, const char* what) {
  if (!p.is_monomial()) throw InvalidInput(std::string(what) + " must be a single monomial");
}

}  // namespace

BBCode BBCode::from_params(const BBParams& p) {
  auto [f, g] = expand_params(p);
  return BBCode(std::move(f), std::move(g), p);
}

BBCode BBCode::from_polys(LaurentPoly f, LaurentPoly g) {
  if (f.is_zero() || g.is_zero()) throw InvalidInput("check polynomials f and g must be nonzero");
  return BBCode(std::move(f), std::move(g), std::nullopt);
}

std::string BBCode::label() const {
  if (params_)
    return "BB(" + std::to_string(params_->alpha_bar) + "," + std::to_string(params_->beta_bar) + "," +
           std::to_string(params_->a) + "," + std::to_string(params_->b) + ")";
  return "BB(" + print_poly(f_) + "; " + print_poly(g_) + ")";
}

std::pair<LaurentPoly, LaurentPoly> expand_params(const BBParams& p) {
  return {LaurentPoly{{0, 0}, {1, 0}, {p.alpha_bar, p.b}}, LaurentPoly{{0, 0}, {0, 1}, {p.a, p.beta_bar}}};
}

CheckPair checks(const BBCode& code) {
  return {code.f(), code.g(), spatial_inversion(code.g()), spatial_inversion(code.f())};
}

BBCode shift_origin(const BBCode& code, const LaurentPoly& xi, const LaurentPoly& zeta) {
  require_monomial(xi, "origin shift xi");
  require_monomial(zeta, "origin shift zeta");
  return BBCode::from_polys(xi * code.f(), zeta * code.g());
}

BBCode reverse_axis(const BBCode& code, Axis axis) {
  auto flip = [axis](Exponent e) { return axis == Axis::x ? Exponent{-e.i, e.j} : Exponent{e.i, -e.j}; };
  return BBCode::from_polys(map_exponents(code.f(), flip), map_exponents(code.g(), flip));
}

BBCode swap_axes(const BBCode& code) {
  auto swap = [](Exponent e) { return Exponent{e.j, e.i}; };
  return BBCode::from_polys(map_exponents(code.g(), swap), map_exponents(code.f(), swap));
}

BBParams canonical_params(BBParams p) {
  // BB(1+alpha, bbar, a, b) ~ BB(-alpha, bbar, -a, b), and likewise in y.
  if (p.alpha_bar >= 1) {
    p.alpha_bar = 1 - p.alpha_bar;
    p.a = -p.a;
  }
  if (p.beta_bar >= 1) {
    p.beta_bar = 1 - p.beta_bar;
    p.b = -p.b;
  }
  if (p.alpha() < p.beta()) p = BBParams{p.beta_bar, p.alpha_bar, p.b, p.a};
  return p;
}

BBCode canonicalize(const BBCode& code) {
  if (!code.params()) return code;
  return BBCode::from_params(canonical_params(*code.params()));
}

LaurentPoly substitute_powers(const LaurentPoly& p, std::int64_t s, std::int64_t t, std::int64_t u, std::int64_t v,
                              std::optional<TorusSize> torus) {
  auto image = [&](Exponent e) {
    return Exponent{add_checked(mul_checked(s, e.i), mul_checked(u, e.j)),
                    add_checked(mul_checked(t, e.i), mul_checked(v, e.j))};
  };
  if (!torus) {
    const std::int64_t det = mul_checked(s, v) - mul_checked(t, u);
    if (det != 1 && det != -1) throw InvalidInput("substitution is not invertible on the infinite lattice");
    return map_exponents(p, image);
  }
  const auto [l, m] = *torus;
  if (l < 1 || m < 1) throw InvalidInput("torus dimensions must be positive");
  // x^l = 1 must map to 1, and likewise y^m.
  if (mod(mul_checked(t, l), m) != 0 || mod(mul_checked(u, m), l) != 0)
    throw InvalidInput("substitution is not well defined on the torus");
  if (mul_checked(l, m) > 10'000'000) throw CapExceeded("torus too large for the invertibility check");
  std::unordered_set<std::int64_t> seen;
  for (std::int64_t i = 0; i < l; ++i)
    for (std::int64_t j = 0; j < m; ++j) {
      const Exponent e = image({i, j});
      if (!seen.insert(mod(e.i, l) * m + mod(e.j, m)).second)
        throw InvalidInput("substitution is not invertible on the torus");
    }
  return reduce_mod_torus(map_exponents(p, image), *torus);
}

LaurentPoly reduce_mod_torus(const LaurentPoly& p, TorusSize t) {
  if (t.l < 1 || t.m < 1) throw InvalidInput("torus dimensions must be positive");
  return map_exponents(p, [&](Exponent e) { return Exponent{mod(e.i, t.l), mod(e.j, t.m)}; });
}

bool proportional_mod_torus(const LaurentPoly& p, const LaurentPoly& q, TorusSize t) {
  const LaurentPoly rp = reduce_mod_torus(p, t);
  const LaurentPoly rq = reduce_mod_torus(q, t);
  if (rq.is_zero()) throw DomainError("proportionality against the zero polynomial");
  if (rp.size() != rq.size()) return false;
  const Exponent anchor = rq.min_term();
  for (const auto& e : rp.terms()) {
    const Exponent shift = e + (-anchor);
    if (reduce_mod_torus(rq.translated(shift), t) == rp) return true;
  }
  return false;
}

Ideal ideal_infinite(const BBCode& code, const MonomialOrder& ord) {
  const AffinePoly xx{Monomial::of(1, 0, 1, 0), Monomial{}};
  const AffinePoly yy{Monomial::of(0, 1, 0, 1), Monomial{}};
  return Ideal{{laurent_to_affine(code.f()), laurent_to_affine(code.g()), xx, yy}, ord, VarMask{true, true, true, true}};
}

Ideal ideal_torus(const BBCode& code, TorusSize t, const MonomialOrder& ord) {
  if (t.l < 1 || t.m < 1) throw InvalidInput("torus dimensions must be positive");
  if (t.l > 0x7fffffff || t.m > 0x7fffffff) throw OverflowError("torus dimension exceeds the supported range");
  const auto l = static_cast<std::uint32_t>(t.l);
  const auto m = static_cast<std::uint32_t>(t.m);
  const AffinePoly xl{Monomial::of(l), Monomial{}};
  const AffinePoly ym{Monomial::of(0, m), Monomial{}};
  // Monomials are units on the torus, so shifting to the smallest nonnegative
  // exponents keeps the ideal and keeps the degrees small.
  auto embed = [&](const LaurentPoly& p) {
    std::int64_t mi = p.terms().front().i, mj = p.terms().front().j;
    for (const auto& e : p.terms()) {
      mi = std::min(mi, e.i);
      mj = std::min(mj, e.j);
    }
    return laurent_to_affine(reduce_mod_torus(p.translated({-mi, -mj}), t));
  };
  return Ideal{{embed(code.f()), embed(code.g()), xl, ym},
               ord, VarMask{true, true, false, false}};
}

GroebnerBasis infinite_basis(const BBCode& code, const MonomialOrder& ord, const BuchbergerOptions& opts) {
  return buchberger(ideal_infinite(code, ord), opts);
}

bool is_topological(const BBCode& code, const BuchbergerOptions& opts) {
  const bool zd = is_zero_dimensional(infinite_basis(code, MonomialOrder::elimination_x(), opts));
  if (code.params()) {
    const bool expected = !(canonical_params(*code.params()) == BBParams{0, 0, 1, 1});
    if (zd != expected) throw InternalError("topological condition disagrees with the classification for " + code.label());
  }
  return zd;
}

std::size_t topological_index(const BBCode& code, const BuchbergerOptions& opts) {
  const GroebnerBasis g = infinite_basis(code, MonomialOrder::elimination_x(), opts);
  if (!is_zero_dimensional(g)) throw DomainError(code.label() + " is not topological");
  return quotient_dim(g);
}

const std::vector<PublishedCode>& published_codes() {
  static const std::vector<PublishedCode> rows = {
      {72, 12, {6, 6}, "x^3+y+y^2", "y^3+x+x^2", 1, 0, 0, 1, "1+x+x^-1*y^3", "1+y+y^-1*x^3"},
      {90, 8, {15, 3}, "x^9+y+y^2", "1+x^2+x^7", 8, 0, 0, 1, "1+x+x^-4", "1+y+y^-1*x^-3"},
      {108, 8, {9, 6}, "x^3+y+y^2", "y^3+x+x^2", 1, 0, 0, 1, "1+x+x^-1*y^3", "1+y+y^-1*x^3"},
      {144, 12, {12, 6}, "x^3+y+y^2", "y^3+x+x^2", 1, 0, 0, 1, "1+x+x^-1*y^3", "1+y+y^-1*x^3"},
      {288, 12, {12, 12}, "x^3+y^2+y^7", "y^3+x+x^2", 1, 0, 0, 7, "1+x+x^-1*y^-3", "1+y+y^-1*x^3"},
      {360, 12, {30, 6}, "x^9+y+y^2", "y^3+x^25+x^26", 1, 0, 0, 1, "1+x+x^-25*y^3", "1+y+y^-1*x^9"},
      {756, 16, {21, 18}, "x^3+y^10+y^17", "y^5+x^3+x^19", 4, 0, 0, 13, "1+x+x^-12*y^11", "1+y+y^-4*x^12"},
  };
  return rows;
}

}  // namespace anyonlab
