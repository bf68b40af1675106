#include "doctest.h"

#include "anyonlab/bkk.hpp"
#include "anyonlab/error.hpp"
#include "support.hpp"

using namespace anyonlab;
using anyonlab::testing::bb;
using anyonlab::testing::toric;

TEST_SUITE("bkk") {
  TEST_CASE("newton polytopes") {
    CHECK(newton_polytope(parse_poly("1+x+x^-1*y^3")).vertices == std::vector<Point>{{-1, 3}, {0, 0}, {1, 0}});
    CHECK(newton_polytope(parse_poly("1+x")).vertices == std::vector<Point>{{0, 0}, {1, 0}});
    const LatticePolytope pt = newton_polytope(parse_poly("x^2*y"));
    CHECK(pt.vertices.size() == 1);
    CHECK(doubled_area(pt) == 0);
    CHECK_THROWS_AS(newton_polytope(LaurentPoly{}), DomainError);
    // Collinear interior points are dropped.
    CHECK(convex_hull({{0, 0}, {1, 0}, {2, 0}, {0, 2}}).vertices.size() == 3);
  }

  TEST_CASE("minkowski sums and areas") {
    const LatticePolytope ex = newton_polytope(parse_poly("1+x")), ey = newton_polytope(parse_poly("1+y"));
    const LatticePolytope sq = minkowski_sum(ex, ey);
    CHECK(sq.vertices.size() == 4);
    CHECK(doubled_area(sq) == 2);
    const LatticePolytope f = newton_polytope(parse_poly("1+x+x^-1*y^3"));
    const LatticePolytope g = newton_polytope(parse_poly("1+y+y^-1*x^3"));
    const LatticePolytope hex = minkowski_sum(f, g);
    CHECK(hex.vertices.size() == 6);
    CHECK(minkowski_sum(f, newton_polytope(parse_poly("x^2*y^-1"))) == translate(f, {2, -1}));
  }

  TEST_CASE("mixed volume") {
    const LatticePolytope ex = newton_polytope(parse_poly("1+x")), ey = newton_polytope(parse_poly("1+y"));
    CHECK(mixed_volume(ex, ey) == 1);
    const LatticePolytope f = newton_polytope(parse_poly("1+x+x^-1*y^3"));
    const LatticePolytope g = newton_polytope(parse_poly("1+y+y^-1*x^3"));
    CHECK(mixed_volume(f, g) == 8);
    CHECK(mixed_volume(g, f) == 8);
    CHECK(mixed_volume(translate(f, {5, -2}), g) == 8);
    CHECK(mv_bound(bb(-1, -1, 3, 3)) == 8);
    CHECK(mv_bound(toric()) == 1);
  }

  TEST_CASE("phi and p2") {
    CHECK(phi_aux(1, 1) == UniPoly{1});
    CHECK(phi_aux(2, 2) == UniPoly{2});
    CHECK(phi_aux(4, 4) == UniPoly{4});
    CHECK(phi_aux(0, 3).is_zero());
    CHECK_THROWS_AS(phi_aux(-1, 2), InvalidInput);
    CHECK(p2(4) == 4);
    CHECK(p2(5) == 1);
    CHECK(p2(12) == 4);
    CHECK_THROWS_AS(p2(0), InvalidInput);
  }

  TEST_CASE("closed forms") {
    const ClosedForm c = q_closed_form({-1, -1, 3, 3});
    CHECK(c.q == 8);
    CHECK(c.valid);
    CHECK(c.regime.quadrant == Quadrant::nonnegative);
    CHECK(c.regime.tag == "ab>(alpha+1)(beta+1)");

    const ClosedForm d = q_closed_form({-1, -1, 2, 1});
    CHECK(d.q == 3);
    CHECK(d.regime.tag == "alpha*beta<ab<(alpha+1)(beta+1)");

    const std::int64_t expect[] = {0, 0, 2, 0, 4, 4};
    for (std::int64_t c2 = 1; c2 <= 6; ++c2) {
      CAPTURE(c2);
      const ClosedForm e = q_closed_form({-c2, -c2, c2 + 1, c2 + 1});
      CHECK(e.q == expect[c2 - 1]);
      CHECK(e.q == c2 - p2(c2));
      CHECK(e.regime.boundary);
    }

    const ClosedForm bad = q_closed_form({0, 0, 3, 3});
    CHECK(bad.q == 9);
    CHECK_FALSE(bad.valid);
  }

  TEST_CASE("face check") {
    CHECK(bkk_face_check(parse_poly("1+x+x^-1*y^3"), parse_poly("1+y+y^-1*x^3")));
    CHECK_FALSE(bkk_face_check(parse_poly("1+x+y^3"), parse_poly("1+y+x^3")));
    CHECK(bkk_face_check(parse_poly("1+x"), parse_poly("1+y")));
  }
}
