#include "doctest.h"

#include "anyonlab/affine.hpp"
#include "anyonlab/error.hpp"
#include "anyonlab/laurent.hpp"
#include "support.hpp"

using namespace anyonlab;
using anyonlab::testing::affine;

TEST_SUITE("laurent") {
  TEST_CASE("parse gives the exponent set") {
    const LaurentPoly f = parse_poly("1+x+x^-1*y^3");
    CHECK(f == LaurentPoly{{0, 0}, {1, 0}, {-1, 3}});
    CHECK(parse_poly("x + x").is_zero());
    CHECK(parse_poly("x^2*y + x*y + y + x^5 + x + 1").size() == 6);
    CHECK(parse_poly("x y^2") == LaurentPoly::monomial(1, 2));
    CHECK(parse_poly("0").is_zero());
    CHECK(parse_poly("y^-3x^2") == LaurentPoly::monomial(2, -3));
  }

  TEST_CASE("parse rejects malformed text") {
    CHECK_THROWS_AS(parse_poly(""), ParseError);
    CHECK_THROWS_AS(parse_poly("1+"), ParseError);
    CHECK_THROWS_AS(parse_poly("z"), ParseError);
    CHECK_THROWS_AS(parse_poly("x^"), ParseError);
    CHECK_THROWS_AS(parse_poly("2*x"), ParseError);
    CHECK_THROWS_AS(parse_poly("x^99999999999999999999"), InvalidInput);
  }

  TEST_CASE("print") {
    CHECK(print_poly(LaurentPoly::one()) == "1");
    CHECK(print_poly(LaurentPoly{}) == "0");
    CHECK(print_poly(parse_poly("1+x+x^-1*y^3")) == "x^-1*y^3 + x + 1");
    const std::string s = print_poly(parse_poly("y^-1*x^3+1+y"));
    CHECK(print_poly(parse_poly(s)) == s);
  }

  TEST_CASE("addition is symmetric difference") {
    const LaurentPoly f = parse_poly("1+x+x^-1*y^3");
    CHECK((f + f).is_zero());
    CHECK(add(parse_poly("1+x"), parse_poly("1+y")) == parse_poly("x+y"));
    const LaurentPoly e = parse_poly("x^2*y+x*y+y+x^5+x+1");
    CHECK((e + e).is_zero());
  }

  TEST_CASE("multiplication") {
    CHECK(mul(parse_poly("1+x"), parse_poly("1+x")) == parse_poly("1+x^2"));
    // (x^2+x+1)^3 by repeated multiplication.
    const LaurentPoly q = parse_poly("x^2+x+1");
    CHECK(q * q * q == parse_poly("x^6+x^5+x^3+x+1"));
    CHECK(q.pow(3) == q * q * q);
    CHECK(LaurentPoly::monomial(2, -1) * q == q.translated({2, -1}));
    CHECK((LaurentPoly{} * q).is_zero());
  }

  TEST_CASE("spatial inversion") {
    const LaurentPoly f = parse_poly("1+x+x^-1*y^3");
    CHECK(spatial_inversion(f) == parse_poly("1+x^-1+x*y^-3"));
    CHECK(spatial_inversion(spatial_inversion(f)) == f);
    CHECK(spatial_inversion(LaurentPoly{}).is_zero());
  }

  TEST_CASE("proportional") {
    const LaurentPoly g = parse_poly("1+y+y^-1*x^3");
    CHECK(proportional(parse_poly("x^3+y+y^2"), g));
    CHECK_FALSE(proportional(parse_poly("x^3+y+y^3"), g));
    CHECK_FALSE(proportional(LaurentPoly{}, g));
  }

  TEST_CASE("overflow is reported") {
    const LaurentPoly big = LaurentPoly::monomial(INT64_MAX, 0);
    CHECK_THROWS_AS(big.translated({1, 0}), OverflowError);
  }
}

TEST_SUITE("affine") {
  TEST_CASE("embedding") {
    const AffinePoly p = laurent_to_affine(parse_poly("x^-1*y^3"));
    CHECK(p == AffinePoly{Monomial::of(0, 3, 1, 0)});
    CHECK(laurent_to_affine(parse_poly("1+x+x^-1*y^-3")) ==
          AffinePoly{Monomial{}, Monomial::of(1), Monomial::of(0, 0, 1, 3)});
    CHECK(laurent_to_affine(LaurentPoly{}).is_zero());
    CHECK(affine_to_laurent(AffinePoly{Monomial::of(2, 0, 1, 0)}) == LaurentPoly::monomial(1, 0));
  }

  TEST_CASE("leading and lowest terms") {
    const MonomialOrder lex = MonomialOrder::lex({Var::ybar, Var::xbar, Var::y, Var::x});
    CHECK(leading_term(affine("x^2*y+x*y+y+x^5+x+1"), lex) == Monomial::of(2, 1));
    CHECK(lowest_term(affine("x^6+x^5+x^3+x+1"), lex) == Monomial{});
    CHECK(leading_term(affine("y^2+y+x^3"), lex) == Monomial::of(0, 2));
    CHECK(MonomialOrder::elimination_x().less(Monomial::of(9, 0, 0, 0), Monomial::of(0, 0, 1, 0)));
    CHECK(MonomialOrder::elimination_y().less(Monomial::of(0, 9, 0, 0), Monomial::of(1, 0, 0, 0)));
  }

  TEST_CASE("order must be a permutation") {
    CHECK_THROWS_AS(MonomialOrder({Var::x, Var::x, Var::y, Var::ybar}), InvalidInput);
  }

  TEST_CASE("print") {
    const MonomialOrder ord = MonomialOrder::elimination_x();
    CHECK(print_affine(affine("x^-1+x^5+x^4+x^2+1"), ord) == "xb + x^5 + x^4 + x^2 + 1");
    CHECK(print_affine(AffinePoly{}, ord) == "0");
  }
}
