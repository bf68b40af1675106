#include "doctest.h"

#include "anyonlab/error.hpp"
#include "anyonlab/torus.hpp"
#include "support.hpp"

using namespace anyonlab;
using anyonlab::testing::affine;
using anyonlab::testing::bb;
using anyonlab::testing::toric;

TEST_SUITE("code_model") {
  TEST_CASE("parameter expansion") {
    auto [f, g] = expand_params({-1, -1, 3, 3});
    CHECK(f == parse_poly("1+x+x^-1*y^3"));
    CHECK(g == parse_poly("1+y+y^-1*x^3"));
    std::tie(f, g) = expand_params({0, 0, 1, 1});
    CHECK(f == parse_poly("1+x+y"));
    CHECK(g == parse_poly("1+y+x"));
    std::tie(f, g) = expand_params({-1, -1, 3, -3});
    CHECK(f == parse_poly("1+x+x^-1*y^-3"));
    CHECK(g == parse_poly("1+y+y^-1*x^3"));
    CHECK(bb(-1, -1, 3, 3).label() == "BB(-1,-1,3,3)");
    CHECK_THROWS_AS(BBCode::from_polys(LaurentPoly{}, parse_poly("1+y")), InvalidInput);
  }

  TEST_CASE("check polynomials") {
    const CheckPair c = checks(toric());
    CHECK(c.hz_1 == parse_poly("1+y^-1"));
    CHECK(c.hz_2 == parse_poly("1+x^-1"));
    CHECK(spatial_inversion(c.hz_2) == c.hx_f);
    CHECK(checks(bb(-1, -1, 3, 3)).hz_1 == parse_poly("1+y^-1+y*x^-3"));
  }

  TEST_CASE("origin shifts and axis maps") {
    const BBCode c = bb(-1, -1, 3, -3);
    CHECK(shift_origin(c, parse_poly("x"), LaurentPoly::one()).f() == parse_poly("x+x^2+y^-3"));
    CHECK(parse_poly("y") * parse_poly("1+y+y^-1*x^3") == parse_poly("y+y^2+x^3"));
    CHECK_THROWS_AS(shift_origin(c, parse_poly("1+x"), LaurentPoly::one()), InvalidInput);
    const BBCode t = BBCode::from_polys(parse_poly("1+x+y"), parse_poly("1+y"));
    CHECK(reverse_axis(t, Axis::x).f() == parse_poly("1+x^-1+y"));
    CHECK(reverse_axis(reverse_axis(c, Axis::y), Axis::y).f() == c.f());
    CHECK(swap_axes(swap_axes(c)).g() == c.g());
  }

  TEST_CASE("Q is invariant under origin shifts and the equivalence chain") {
    const BBCode c = bb(-1, -1, 3, 3);
    const BBCode s = shift_origin(c, parse_poly("x^-2*y^5"), parse_poly("x^3*y^-1"));
    CHECK(topological_index(s) == topological_index(c));
    // BB(-alpha,-beta,a,b) ~ BB(1+alpha,-beta,-a,b)
    for (auto [al, be, a, b] : std::vector<std::array<std::int64_t, 4>>{{1, 1, 3, 3}, {2, 1, 3, -2}, {0, 2, -1, 3}}) {
      INFO(al, " ", be, " ", a, " ", b);
      CHECK(topological_index(bb(-al, -be, a, b)) == topological_index(bb(1 + al, -be, -a, b)));
    }
  }

  TEST_CASE("canonicalization") {
    const BBParams p = canonical_params({-1, -2, 3, -3});
    CHECK(p.alpha() >= p.beta());
    CHECK(p.beta() >= 0);
    CHECK(topological_index(bb(p.alpha_bar, p.beta_bar, p.a, p.b)) == topological_index(bb(-1, -2, 3, -3)));
    CHECK(canonical_params({-2, -1, 3, 3}) == BBParams{-2, -1, 3, 3});
  }

  TEST_CASE("exponent substitution") {
    const LaurentPoly a = parse_poly("x^3+y^2+y^7");
    CHECK(substitute_powers(a, 1, 0, 0, 7, TorusSize{12, 12}) == parse_poly("x^3+y^2+y"));
    CHECK(substitute_powers(a, 1, 0, 0, 1) == a);
    CHECK_THROWS_AS(substitute_powers(a, 2, 0, 0, 1), InvalidInput);
    CHECK_THROWS_AS(substitute_powers(a, 2, 0, 0, 1, TorusSize{12, 12}), InvalidInput);
    // [[90,8]] row: x -> x^8 on a 15 x 3 torus.
    const TorusSize t{15, 3};
    const LaurentPoly f = substitute_powers(parse_poly("x^9+y+y^2"), 8, 0, 0, 1, t);
    CHECK(proportional_mod_torus(f, parse_poly("1+y+y^-1*x^-3"), t));
    CHECK(proportional_mod_torus(substitute_powers(parse_poly("1+x^2+x^7"), 8, 0, 0, 1, t), parse_poly("1+x+x^-4"), t));
  }

  TEST_CASE("published codes map to the toric layout") {
    for (const auto& row : published_codes()) {
      CAPTURE(row.n);
      const LaurentPoly a = substitute_powers(parse_poly(row.a_poly), row.s, row.t, row.u, row.v, row.size);
      const LaurentPoly b = substitute_powers(parse_poly(row.b_poly), row.s, row.t, row.u, row.v, row.size);
      const LaurentPoly f = parse_poly(row.f_poly), g = parse_poly(row.g_poly);
      const bool direct = proportional_mod_torus(a, f, row.size) && proportional_mod_torus(b, g, row.size);
      const bool swapped = proportional_mod_torus(a, g, row.size) && proportional_mod_torus(b, f, row.size);
      CHECK((direct || swapped));
      CHECK(row.n == 2 * row.size.l * row.size.m);
    }
  }

  TEST_CASE("ideals") {
    const Ideal inf = ideal_infinite(bb(-1, -1, 3, -3));
    REQUIRE(inf.generators.size() == 4);
    CHECK(inf.generators[0] == affine("1+x+x^-1*y^-3"));
    CHECK(inf.generators[1] == affine("1+y+y^-1*x^3"));
    CHECK(inf.generators[2] == AffinePoly{Monomial::of(1, 0, 1, 0), Monomial{}});
    CHECK(inf.generators[3] == AffinePoly{Monomial::of(0, 1, 0, 1), Monomial{}});

    const Ideal tor = ideal_torus(toric(), {2, 2});
    REQUIRE(tor.generators.size() == 4);
    CHECK(tor.generators[0] == affine("1+x"));
    CHECK(tor.generators[1] == affine("1+y"));
    CHECK(tor.generators[2] == affine("x^2+1"));
    CHECK(tor.generators[3] == affine("y^2+1"));

    const GroebnerBasis g = torus_basis(bb(-1, -1, 3, 3), {5, 7});
    CHECK(ideal_member(affine("x^5+1"), g));
    CHECK_THROWS_AS(ideal_torus(toric(), {0, 3}), InvalidInput);
  }

  TEST_CASE("topological condition") {
    CHECK_FALSE(is_topological(bb(0, 0, 1, 1)));
    CHECK(is_topological(bb(-1, -1, 3, 3)));
    for (std::int64_t al = 0; al <= 2; ++al)
      for (std::int64_t be = 0; be <= 2; ++be)
        for (std::int64_t a = -3; a <= 3; ++a)
          for (std::int64_t b = -3; b <= 3; ++b) {
            const bool exception = al == 0 && be == 0 && a == 1 && b == 1;
            CHECK(is_topological(bb(-al, -be, a, b)) == !exception);
          }
    // Outside the parameter family f = g up to a monomial is the only obstruction seen.
    CHECK_FALSE(is_topological(BBCode::from_polys(parse_poly("1+x+y"), parse_poly("x+x^2+x*y"))));
    CHECK(is_topological(toric()));
  }

  TEST_CASE("topological index") {
    CHECK(topological_index(bb(-1, -1, 3, 3)) == 8);
    CHECK(topological_index(bb(-1, -1, 3, -3)) == 13);
    CHECK(topological_index(bb(0, 0, 3, 3)) == 7);
    CHECK(topological_index(toric()) == 1);
    CHECK_THROWS_AS(topological_index(bb(0, 0, 1, 1)), DomainError);
  }
}
