#include "anyonlab/torus.hpp"

#include <numeric>

#include "anyonlab/error.hpp"

namespace anyonlab {

namespace {

void check_size(TorusSpec t) {
  if (t.l < 1 || t.m < 1) throw InvalidInput("torus dimensions must be positive");
}

std::int64_t mod(std::int64_t v, std::int64_t n) {
  const std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

}  // namespace

GroebnerBasis torus_basis(const BBCode& code, TorusSpec t, const BuchbergerOptions& opts) {
  check_size(t);
  return buchberger(ideal_torus(code, t), opts);
}

std::size_t logical_count(const BBCode& code, TorusSpec t, const BuchbergerOptions& opts) {
  return 2 * quotient_dim(torus_basis(code, t, opts));
}

GF2Matrix circulant(const LaurentPoly& p, TorusSpec t, std::size_t cap) {
  check_size(t);
  if (t.l > static_cast<std::int64_t>(cap) || t.m > static_cast<std::int64_t>(cap) ||
      static_cast<std::uint64_t>(t.l) * static_cast<std::uint64_t>(t.m) > cap)
    throw CapExceeded("torus " + std::to_string(t.l) + "x" + std::to_string(t.m) + " exceeds the matrix cap " +
                      std::to_string(cap));
  const auto n = static_cast<std::size_t>(t.l * t.m);
  GF2Matrix a(n, n);
  for (std::int64_t i = 0; i < t.l; ++i)
    for (std::int64_t j = 0; j < t.m; ++j) {
      const auto col = static_cast<std::size_t>(i * t.m + j);
      // Terms that coincide mod the torus cancel.
      for (const auto& e : p.terms())
        a.flip(static_cast<std::size_t>(mod(i + e.i, t.l) * t.m + mod(j + e.j, t.m)), col);
    }
  return a;
}

std::size_t rank_oracle_k(const BBCode& code, TorusSpec t, std::size_t cap) {
  const GF2Matrix a = circulant(code.f(), t, cap);
  const GF2Matrix b = circulant(code.g(), t, cap);
  const GF2Matrix hx = hstack(a, b);
  const GF2Matrix hz = hstack(b.transpose(), a.transpose());
  return 2 * a.rows() - hx.rank() - hz.rank();
}

bool gcd_reduction_check(const BBCode& code, TorusSpec t, const AnyonPeriods& periods, const BuchbergerOptions& opts) {
  check_size(t);
  const TorusSpec r{static_cast<std::int64_t>(std::gcd(static_cast<std::uint64_t>(t.l), periods.l0)),
                    static_cast<std::int64_t>(std::gcd(static_cast<std::uint64_t>(t.m), periods.m0))};
  return logical_count(code, t, opts) == logical_count(code, r, opts);
}

QuotientRing quotient_ring(const BBCode& code, const BuchbergerOptions& opts) {
  QuotientRing q;
  q.basis = infinite_basis(code, MonomialOrder::elimination_x(), opts);
  if (!is_zero_dimensional(q.basis)) throw DomainError(code.label() + " is not topological");
  q.monomials = quotient_basis(q.basis);
  q.mx = multiplication_matrix(AffinePoly{Monomial::of(1)}, q.basis, q.monomials);
  q.my = multiplication_matrix(AffinePoly{Monomial::of(0, 1)}, q.basis, q.monomials);
  q.one = coordinates(normal_form(AffinePoly::one(), q.basis), q.monomials);
  return q;
}

GF2Matrix matrix_power(const GF2Matrix& m, std::uint64_t e) {
  if (m.rows() != m.cols()) throw InvalidInput("matrix power needs a square matrix");
  GF2Matrix r = GF2Matrix::identity(m.rows()), b = m;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

std::size_t koszul_homology_dim(const QuotientRing& ring, TorusSpec t) {
  check_size(t);
  const std::size_t n = ring.dim();
  if (n == 0) return 0;
  GF2Matrix ma = matrix_power(ring.mx, static_cast<std::uint64_t>(t.l));
  GF2Matrix mb = matrix_power(ring.my, static_cast<std::uint64_t>(t.m));
  for (std::size_t i = 0; i < n; ++i) {
    ma.flip(i, i);
    mb.flip(i, i);
  }
  const std::size_t r1 = hstack(ma, mb).rank();
  const std::size_t r2 = vstack(mb, ma).rank();
  return 2 * n - r1 - r2;
}

std::size_t koszul_homology_dim(const BBCode& code, TorusSpec t, const BuchbergerOptions& opts) {
  return koszul_homology_dim(quotient_ring(code, opts), t);
}

std::size_t subsystem_symmetry_kernel_dim(const BBCode& code, TorusSpec t, std::size_t cap) {
  const GF2Matrix mf = circulant(spatial_inversion(code.f()), t, cap);
  const GF2Matrix mg = circulant(spatial_inversion(code.g()), t, cap);
  return mf.cols() - vstack(mf, mg).rank();
}

}  // namespace anyonlab
