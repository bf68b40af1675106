#include "doctest.h"

#include "anyonlab/error.hpp"
#include "anyonlab/gf2_matrix.hpp"
#include "anyonlab/groebner.hpp"
#include "support.hpp"

using namespace anyonlab;
using anyonlab::testing::affine;
using anyonlab::testing::basis_terms;
using anyonlab::testing::bb;
using anyonlab::testing::expected_terms;

namespace {

const MonomialOrder kYX = MonomialOrder::lex({Var::ybar, Var::xbar, Var::y, Var::x});

}  // namespace

TEST_SUITE("gf2") {
  TEST_CASE("rank and products") {
    GF2Matrix m(3, 3);
    m.set(0, 0, true);
    m.set(0, 1, true);
    m.set(1, 1, true);
    m.set(2, 0, true);
    m.set(2, 2, true);
    CHECK(m.rank() == 3);
    m.set(2, 2, false);
    m.set(2, 1, true);
    CHECK(m.rank() == 2);  // row 2 = row 0
    CHECK(GF2Matrix::identity(70).rank() == 70);
    CHECK(GF2Matrix::identity(3) * m == m);
    CHECK(m.transpose().transpose() == m);
    CHECK(vstack(m, m).rank() == 2);
    CHECK(hstack(m, GF2Matrix::identity(3)).rank() == 3);
    CHECK_THROWS_AS(m * GF2Matrix(2, 2), InvalidInput);
  }

  TEST_CASE("apply") {
    GF2Matrix m(2, 2);
    m.set(0, 1, true);
    m.set(1, 0, true);
    BitVec v(2);
    v.set(0, true);
    const BitVec w = m.apply(v);
    CHECK_FALSE(w.get(0));
    CHECK(w.get(1));
  }
}

TEST_SUITE("groebner") {
  TEST_CASE("normal form depends on divisor order for a non-basis") {
    const AffinePoly p = affine("y^2*x+y*x+y+x^3");
    CHECK(normal_form(p, {affine("y*x+1"), affine("y^2+x")}, kYX) == affine("x^3+1"));
    CHECK(normal_form(p, {affine("y^2+x"), affine("y*x+1")}, kYX) == affine("y+x^3+x^2+1"));
    CHECK(normal_form(p, {affine("x^3+1"), affine("y+x^2")}, kYX).is_zero());
  }

  TEST_CASE("small basis") {
    const GroebnerBasis g = buchberger({{affine("y*x+1"), affine("y^2+x")}, kYX, std::nullopt});
    CHECK(basis_terms(g) == expected_terms({"x^3+1", "y+x^2"}, kYX));
    CHECK(verify_groebner(g));
    CHECK(ideal_member(affine("y^2*x+y*x+y+x^3"), g));
    CHECK_FALSE(ideal_member(affine("x+1"), g));
    CHECK(s_polynomial(affine("y*x+1"), affine("y^2+x"), kYX) == affine("y+x^2"));
  }

  TEST_CASE("worked infinite-lattice basis") {
    const GroebnerBasis g = infinite_basis(bb(-1, -1, 3, 3));
    CHECK(basis_terms(g) == expected_terms({"x^6+x^5+x^3+x+1", "x^2*y+x*y+y+x^5+x+1", "y^2+y+x^3",
                                            "x^-1+x^5+x^4+x^2+1", "y^-1+y+x^5+x^4+x^3+1"},
                                           g.order));
    CHECK(verify_groebner(g));
    CHECK(is_zero_dimensional(g));
    CHECK(quotient_dim(g) == 8);
    const QuotientBasis q = quotient_basis(g);
    std::vector<Monomial> expect{Monomial::of(0), Monomial::of(1), Monomial::of(2), Monomial::of(3),
                                 Monomial::of(4), Monomial::of(5), Monomial::of(0, 1), Monomial::of(1, 1)};
    std::sort(expect.begin(), expect.end(), [&](auto& a, auto& b) { return g.order.less(a, b); });
    CHECK(q.monomials == expect);
    CHECK(ideal_member(affine("x^12+1"), g));
    CHECK_FALSE(ideal_member(affine("x^6+1"), g));
    CHECK_FALSE(ideal_member(AffinePoly::one(), g));
  }

  TEST_CASE("toric code") {
    const GroebnerBasis g = infinite_basis(anyonlab::testing::toric());
    CHECK(basis_terms(g) == expected_terms({"x+1", "y+1", "x^-1+1", "y^-1+1"}, g.order));
    CHECK(quotient_dim(g) == 1);
    const QuotientBasis q = quotient_basis(g);
    const GF2Matrix mx = multiplication_matrix(affine("x"), g, q);
    CHECK(mx == GF2Matrix::identity(1));
  }

  TEST_CASE("unit ideal") {
    const GroebnerBasis g = buchberger({{affine("x+1"), affine("x")}, kYX, std::nullopt});
    CHECK(basis_terms(g) == expected_terms({"1"}, kYX));
    CHECK(is_zero_dimensional(g));
    CHECK(quotient_dim(g) == 0);
    CHECK(quotient_basis(g).size() == 0);
  }

  TEST_CASE("non-zero-dimensional ideal") {
    const GroebnerBasis g = infinite_basis(bb(0, 0, 1, 1));
    CHECK_FALSE(is_zero_dimensional(g));
    CHECK_THROWS_AS(quotient_dim(g), DomainError);
  }

  TEST_CASE("multiplication matrices are a representation") {
    const GroebnerBasis g = infinite_basis(bb(-1, -1, 3, 3));
    const QuotientBasis q = quotient_basis(g);
    CHECK(multiplication_matrix(AffinePoly::one(), g, q) == GF2Matrix::identity(8));
    const AffinePoly p = affine("x^3+y*x^-1+1"), r = affine("y^2+x^-2*y^-1");
    CHECK(multiplication_matrix(p, g, q) * multiplication_matrix(r, g, q) == multiplication_matrix(p * r, g, q));
  }

  TEST_CASE("coordinates round trip") {
    const GroebnerBasis g = infinite_basis(bb(-1, -1, 3, -3));
    const QuotientBasis q = quotient_basis(g);
    const AffinePoly nf = normal_form(affine("x^40*y^3+x^-7"), g);
    CHECK(from_coordinates(coordinates(nf, q), q) == nf);
    const Reducer red(g);
    CHECK(red.reduce(affine("x^40*y^3+x^-7")) == nf);
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(buchberger({{AffinePoly{}}, kYX, std::nullopt}), InvalidInput);
    BuchbergerOptions tiny;
    tiny.pair_cap = 1;
    CHECK_THROWS_AS(infinite_basis(bb(-1, -1, 3, -3), MonomialOrder::elimination_x(), tiny), CapExceeded);
  }
}
