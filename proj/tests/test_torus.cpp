#include "doctest.h"

#include <numeric>

#include "anyonlab/error.hpp"
#include "anyonlab/periods.hpp"
#include "anyonlab/torus.hpp"
#include "support.hpp"

using namespace anyonlab;
using anyonlab::testing::bb;
using anyonlab::testing::toric;

TEST_SUITE("torus") {
  TEST_CASE("logical counts of the published codes") {
    CHECK(logical_count(bb(-1, -1, 3, 3), {6, 6}) == 12);
    CHECK(logical_count(bb(-1, -1, 3, 3), {9, 6}) == 8);
    CHECK(logical_count(bb(-1, -1, 3, -3), {12, 12}) == 12);
    CHECK(logical_count(toric(), {5, 3}) == 2);
  }

  TEST_CASE("circulants") {
    const GF2Matrix c = circulant(parse_poly("1+x"), {3, 2});
    CHECK(c.rows() == 6);
    CHECK(c.rank() == 4);
    CHECK(circulant(LaurentPoly::one(), {4, 4}) == GF2Matrix::identity(16));
    CHECK_THROWS_AS(circulant(parse_poly("1+x"), {200, 200}), CapExceeded);
  }

  TEST_CASE("rank oracle") {
    for (std::int64_t l = 1; l <= 5; ++l)
      for (std::int64_t m = 1; m <= 5; ++m) CHECK(rank_oracle_k(toric(), {l, m}) == 2);
    CHECK(rank_oracle_k(bb(-1, -1, 3, 3), {6, 6}) == 12);
    for (const auto& row : published_codes()) {
      CAPTURE(row.n);
      const BBCode raw = BBCode::from_polys(parse_poly(row.a_poly), parse_poly(row.b_poly));
      CHECK(rank_oracle_k(raw, row.size) == static_cast<std::size_t>(row.k));
    }
  }

  TEST_CASE("gcd reduction") {
    const BBCode c = bb(-1, -1, 3, 3);
    const AnyonPeriods p = anyon_periods(c);
    CHECK(logical_count(c, {18, 30}) == 12);
    CHECK(logical_count(c, {6, 6}) == 12);
    CHECK(gcd_reduction_check(c, {18, 30}, p));
    CHECK(logical_count(c, {5 + 12, 7}) == logical_count(c, {5, 7}));
    CHECK(gcd_reduction_check(toric(), {7, 4}, anyon_periods(toric())));
  }

  TEST_CASE("koszul homology") {
    CHECK(koszul_homology_dim(bb(-1, -1, 3, 3), {12, 12}) == 16);
    CHECK(koszul_homology_dim(bb(-1, -1, 3, 3), {5, 7}) == 0);
    CHECK(koszul_homology_dim(toric(), {3, 8}) == 2);
    CHECK_THROWS_AS(koszul_homology_dim(bb(0, 0, 1, 1), {3, 3}), DomainError);
    const QuotientRing q = quotient_ring(bb(-1, -1, 3, 3));
    CHECK(matrix_power(q.mx, 12) == GF2Matrix::identity(8));
    CHECK_FALSE(matrix_power(q.mx, 6) == GF2Matrix::identity(8));
  }

  TEST_CASE("subsystem symmetry kernel") {
    CHECK(subsystem_symmetry_kernel_dim(toric(), {2, 2}) == 1);
    CHECK(subsystem_symmetry_kernel_dim(bb(-1, -1, 3, 3), {6, 6}) == 6);
    CHECK(subsystem_symmetry_kernel_dim(bb(-1, -1, 3, 3), {5, 7}) == 0);
  }

  TEST_CASE("invalid sizes") {
    CHECK_THROWS_AS(logical_count(toric(), {0, 2}), InvalidInput);
    CHECK_THROWS_AS(rank_oracle_k(toric(), {2, -1}), InvalidInput);
  }
}
