#include "properties.hpp"

#include <functional>
#include <random>

#include "anyonlab/bkk.hpp"
#include "anyonlab/error.hpp"
#include "anyonlab/periods.hpp"
#include "anyonlab/torus.hpp"

namespace anyonlab::testing {

namespace {

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

LaurentPoly random_laurent(Rng& rng, int max_terms, std::int64_t radius) {
  std::vector<Exponent> terms;
  const auto n = uniform(rng, 0, max_terms);
  for (std::int64_t t = 0; t < n; ++t) terms.push_back({uniform(rng, -radius, radius), uniform(rng, -radius, radius)});
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly random_nonzero(Rng& rng, int max_terms, std::int64_t radius) {
  for (;;) {
    LaurentPoly p = random_laurent(rng, max_terms, radius);
    if (!p.is_zero()) return p;
  }
}

UniPoly random_uni(Rng& rng, unsigned max_degree) {
  UniPoly p;
  const auto d = static_cast<unsigned>(uniform(rng, 1, max_degree));
  p.set_coeff(d, true);
  for (unsigned k = 0; k < d; ++k)
    if (uniform(rng, 0, 1)) p.set_coeff(k, true);
  return p;
}

BBParams random_params(Rng& rng) {
  return {-uniform(rng, 0, 3), -uniform(rng, 0, 3), uniform(rng, -4, 4), uniform(rng, -4, 4)};
}

BBCode random_topological(Rng& rng) {
  for (;;) {
    BBCode c = BBCode::from_params(random_params(rng));
    if (is_topological(c)) return c;
  }
}

/// Runs `body` `cases` times; a false return or an exception counts as a failure.
PropertyResult check(const std::string& name, std::size_t cases, Rng& rng,
                     const std::function<bool(Rng&, std::string&)>& body) {
  PropertyResult r{name, cases, 0, {}};
  for (std::size_t i = 0; i < cases; ++i) {
    std::string what;
    bool ok = false;
    try {
      ok = body(rng, what);
    } catch (const std::exception& e) {
      what += std::string(" threw ") + e.what();
    }
    if (!ok) {
      if (r.failures++ == 0) r.first_failure = "case " + std::to_string(i) + ": " + what;
    }
  }
  return r;
}

}  // namespace

std::vector<PropertyResult> run_properties(std::uint64_t seed, std::size_t cases) {
  Rng rng(seed);
  std::vector<PropertyResult> out;

  out.push_back(check("ring axioms", cases, rng, [](Rng& g, std::string& what) {
    const LaurentPoly p = random_laurent(g, 6, 4), q = random_laurent(g, 6, 4), r = random_laurent(g, 6, 4);
    what = print_poly(p) + " | " + print_poly(q) + " | " + print_poly(r);
    const LaurentPoly one = LaurentPoly::one();
    return p + q == q + p && (p + q) + r == p + (q + r) && p * q == q * p && (p * q) * r == p * (q * r) &&
           p * (q + r) == p * q + p * r && p * one == p && (p + p).is_zero() && p + LaurentPoly{} == p &&
           spatial_inversion(p * q) == spatial_inversion(p) * spatial_inversion(q);
  }));

  out.push_back(check("parse/print round trip", cases, rng, [](Rng& g, std::string& what) {
    const LaurentPoly p = random_laurent(g, 8, 9);
    const std::string s = print_poly(p);
    what = s;
    return parse_poly(s) == p && print_poly(parse_poly(s)) == s && affine_to_laurent(laurent_to_affine(p)) == p;
  }));

  out.push_back(check("buchberger certificates", cases, rng, [](Rng& g, std::string& what) {
    // Either a parameterized code or one with random three-term polynomials.
    const BBCode c = uniform(g, 0, 1) ? BBCode::from_params(random_params(g))
                                      : BBCode::from_polys(random_nonzero(g, 3, 2), random_nonzero(g, 3, 2));
    what = c.label();
    const MonomialOrder ord = uniform(g, 0, 1) ? MonomialOrder::elimination_x() : MonomialOrder::elimination_y();
    const GroebnerBasis gb = infinite_basis(c, ord);
    if (!verify_groebner(gb)) return false;
    for (const auto& gen : ideal_infinite(c, ord).generators)
      if (!ideal_member(gen, gb)) return false;
    const TorusSize t{uniform(g, 1, 9), uniform(g, 1, 9)};
    const GroebnerBasis tb = torus_basis(c, t);
    return verify_groebner(tb) && ideal_member(laurent_to_affine(LaurentPoly::monomial(t.l, 0) + LaurentPoly::one()), tb);
  }));

  out.push_back(check("factorization reconstruction", cases, rng, [](Rng& g, std::string& what) {
    UniPoly p = random_uni(g, 48);
    if (uniform(g, 0, 2) == 0) p = p * p * random_uni(g, 6);
    what = print_uni(p);
    const Factorization f = factor_univariate(p);
    if (!(expand(f) == p)) return false;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (!is_irreducible(f[i].factor) || f[i].multiplicity == 0) return false;
      if (i > 0 && !(f[i - 1].factor < f[i].factor)) return false;  // sorted, no repeats
    }
    return true;
  }));

  out.push_back(check("mixed volume symmetry and translation", cases, rng, [](Rng& g, std::string& what) {
    const LaurentPoly f = random_nonzero(g, 5, 4), h = random_nonzero(g, 5, 4);
    what = print_poly(f) + " | " + print_poly(h);
    const LatticePolytope p = newton_polytope(f), q = newton_polytope(h);
    const Point d{uniform(g, -6, 6), uniform(g, -6, 6)};
    const std::int64_t mv = mixed_volume(p, q);
    const std::int64_t sum = doubled_area(minkowski_sum(p, q));
    return mv >= 0 && mv == mixed_volume(q, p) && mv == mixed_volume(translate(p, d), q) &&
           2 * mv == sum - doubled_area(p) - doubled_area(q);
  }));

  out.push_back(check("k <= 2Q", cases, rng, [](Rng& g, std::string& what) {
    const BBCode c = random_topological(g);
    const TorusSize t{uniform(g, 1, 16), uniform(g, 1, 16)};
    what = c.label() + " at " + std::to_string(t.l) + "x" + std::to_string(t.m);
    return logical_count(c, t) <= 2 * topological_index(c);
  }));

  out.push_back(check("kernel dimension = k/2", cases, rng, [](Rng& g, std::string& what) {
    const BBCode c = BBCode::from_params(random_params(g));
    const TorusSize t{uniform(g, 1, 14), uniform(g, 1, 14)};
    what = c.label() + " at " + std::to_string(t.l) + "x" + std::to_string(t.m);
    return 2 * subsystem_symmetry_kernel_dim(c, t) == logical_count(c, t);
  }));

  return out;
}

}  // namespace anyonlab::testing
