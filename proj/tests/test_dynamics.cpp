#include "doctest.h"

#include "anyonlab/dynamics.hpp"
#include "anyonlab/error.hpp"
#include "anyonlab/periods.hpp"
#include "support.hpp"

using namespace anyonlab;
using anyonlab::testing::bb;
using anyonlab::testing::toric;

TEST_SUITE("dynamics") {
  TEST_CASE("hopping trace of the 12-period code") {
    const HoppingTrace tr = hop_sequence(bb(-1, -1, 3, 3), Axis::x);
    const std::vector<std::string> expect{"1",
                                          "x^6+x^5+x^3+x",
                                          "x^7+x^5+x^4+x^3+x^2",
                                          "x^8+x^4",
                                          "x^10+x^9+x^8+x^7+x^5",
                                          "x^11+x^9+x^7+x^6",
                                          "x^12"};
    REQUIRE(tr.patterns.size() == expect.size());
    for (std::size_t t = 0; t < expect.size(); ++t) {
      CHECK(tr.patterns[t].t == t);
      CHECK(tr.patterns[t].support == parse_poly(expect[t]));
    }
    CHECK(tr.complete);
    CHECK(tr.terminal == 12);
    CHECK(tr.h == UniPoly{6, 5, 3, 1, 0});
    CHECK(charge_certificate(tr, bb(-1, -1, 3, 3)) == LaurentPoly::one());
  }

  TEST_CASE("toric hop") {
    const HoppingTrace tr = hop_sequence(toric(), Axis::x);
    REQUIRE(tr.patterns.size() == 2);
    CHECK(tr.patterns[1].support == parse_poly("x"));
    CHECK(charge_certificate(tr, toric()) == LaurentPoly::one());
  }

  TEST_CASE("terminal translation is a multiple of the period") {
    for (const BBCode& c : {bb(-1, -1, 3, -3), bb(0, 0, 2, -2), bb(-2, -1, 3, 1)}) {
      CAPTURE(c.label());
      const AnyonPeriods p = anyon_periods(c);
      for (Axis axis : {Axis::x, Axis::y}) {
        const HoppingTrace tr = hop_sequence(c, axis);
        REQUIRE(tr.complete);
        CHECK(tr.terminal % static_cast<std::int64_t>(axis == Axis::x ? p.l0 : p.m0) == 0);
        CHECK_NOTHROW(charge_certificate(tr, c));
      }
    }
  }

  TEST_CASE("translated start translates the trace") {
    const HoppingTrace a = hop_sequence(bb(-1, -1, 3, 3), Axis::x);
    const HoppingTrace b = hop_sequence(bb(-1, -1, 3, 3), Axis::x, parse_poly("y"));
    REQUIRE(a.patterns.size() == b.patterns.size());
    for (std::size_t t = 0; t < a.patterns.size(); ++t)
      CHECK(b.patterns[t].support == a.patterns[t].support.translated({0, 1}));
    CHECK(charge_certificate(b, bb(-1, -1, 3, 3)) == parse_poly("y"));
  }

  TEST_CASE("step cap") {
    const HoppingTrace tr = hop_sequence(bb(-1, -1, 3, 3), Axis::x, LaurentPoly::one(), 2);
    CHECK_FALSE(tr.complete);
    CHECK(tr.patterns.size() == 3);
  }

  TEST_CASE("corrupted pattern violates charge conservation") {
    HoppingTrace tr = hop_sequence(bb(-1, -1, 3, 3), Axis::x);
    tr.patterns[3].support += LaurentPoly::monomial(20, 0);
    CHECK_THROWS_AS(charge_certificate(tr, bb(-1, -1, 3, 3)), ChargeViolation);
  }

  TEST_CASE("local moves") {
    const BBCode c = bb(-1, -1, 3, 3);
    const LaurentPoly eta = parse_poly("x^-3*y+x^-3*y^2");
    CHECK(LaurentPoly::monomial(3, 0) * (LaurentPoly::one() + eta) == parse_poly("y") * c.g());
    const auto pats = local_move_patterns(c, eta, 8);
    CHECK(pats.front().support == LaurentPoly::one());
    CHECK(charge_certificate(pats, c) == LaurentPoly::one());
    CHECK_THROWS_AS(local_move_patterns(c, parse_poly("x^2"), 3), DomainError);
  }

  TEST_CASE("domain errors") {
    CHECK_THROWS_AS(hop_sequence(bb(0, 0, 1, 1), Axis::x), DomainError);
    CHECK_THROWS_AS(hop_sequence(bb(0, 0, 3, 0), Axis::x), DomainError);
    CHECK_THROWS_AS(hop_sequence(toric(), Axis::x, LaurentPoly{}), InvalidInput);
  }

  TEST_CASE("exports") {
    const HoppingTrace tr = hop_sequence(toric(), Axis::y);
    CHECK(patterns_csv(tr.patterns) == "step,x,y\n0,0,0\n1,0,1\n");
    CHECK(patterns_json(tr.patterns).dump() == "[[[0,0]],[[0,1]]]");
    const std::string svg = patterns_svg(tr.patterns);
    CHECK(svg.find("<g id=\"frame0\"") != std::string::npos);
    CHECK(svg.find("<g id=\"frame1\"") != std::string::npos);
    CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
  }
}
