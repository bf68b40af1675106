#include "anyonlab/dynamics.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "anyonlab/error.hpp"
#include "anyonlab/periods.hpp"
#include "anyonlab/torus.hpp"

namespace anyonlab {

namespace {

std::int64_t along(Exponent e, Axis axis) { return axis == Axis::x ? e.i : e.j; }
std::int64_t across(Exponent e, Axis axis) { return axis == Axis::x ? e.j : e.i; }

LaurentPoly to_laurent(const UniPoly& h, Axis axis) {
  std::vector<Exponent> terms;
  for (auto k : h.exponents())
    terms.push_back(axis == Axis::x ? Exponent{static_cast<std::int64_t>(k), 0} : Exponent{0, static_cast<std::int64_t>(k)});
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace

Exponent lowest_term_along(const LaurentPoly& p, Axis axis) {
  if (p.is_zero()) throw DomainError("lowest term of the zero polynomial");
  const auto terms = p.terms();
  return *std::min_element(terms.begin(), terms.end(), [axis](Exponent a, Exponent b) {
    if (along(a, axis) != along(b, axis)) return along(a, axis) < along(b, axis);
    return across(a, axis) < across(b, axis);
  });
}

HoppingTrace hop_sequence(const BBCode& code, Axis axis, const LaurentPoly& init, std::size_t max_steps,
                          const BuchbergerOptions& opts) {
  if (init.is_zero()) throw InvalidInput("initial excitation pattern must be nonzero");
  const GroebnerBasis g =
      infinite_basis(code, axis == Axis::x ? MonomialOrder::elimination_x() : MonomialOrder::elimination_y(), opts);
  if (!is_zero_dimensional(g)) throw DomainError(code.label() + " is not topological");
  const auto h = univariate_element(g, axis == Axis::x ? Var::x : Var::y);
  if (!h) throw InternalError("zero-dimensional basis without a univariate element");
  if (h->degree() < 1) throw DomainError(code.label() + " has no anyons to move");

  HoppingTrace trace;
  trace.axis = axis;
  trace.h = *h;
  const LaurentPoly hl = to_laurent(*h, axis);
  const Exponent start = lowest_term_along(init, axis);
  LaurentPoly xi = init;
  trace.patterns.push_back({0, xi});
  for (std::size_t t = 1; t <= max_steps; ++t) {
    xi += hl.translated(lowest_term_along(xi, axis));
    trace.patterns.push_back({t, xi});
    if (xi.is_zero()) throw InternalError("hopping pattern vanished");
    if (xi.is_monomial() && !(xi == init)) {
      trace.complete = true;
      trace.terminal = along(xi.terms().front(), axis) - along(start, axis);
      break;
    }
  }
  return trace;
}

std::vector<ExcitationPattern> local_move_patterns(const BBCode& code, const LaurentPoly& eta, std::size_t steps) {
  const LaurentPoly move = LaurentPoly::one() + eta;
  if (move.is_zero() || !(proportional(move, code.f()) || proportional(move, code.g())))
    throw DomainError("1 + eta is not a monomial multiple of f or g");
  std::vector<ExcitationPattern> out;
  LaurentPoly p = LaurentPoly::one();
  for (std::size_t t = 0; t <= steps; ++t) {
    out.push_back({t, p});
    p = p * eta;
  }
  return out;
}

LaurentPoly charge_certificate(const std::vector<ExcitationPattern>& patterns, const BBCode& code,
                               const BuchbergerOptions& opts) {
  if (patterns.empty()) throw InvalidInput("charge certificate of an empty trace");
  // Normal forms are evaluated as coordinate vectors in F2[x,y]/I_inf, so a
  // monomial x^i y^j costs O(log |i| + log |j|) matrix-vector products.
  const QuotientRing ring = quotient_ring(code, opts);
  std::array<std::vector<GF2Matrix>, 4> pow2;  // x, xbar, y, ybar
  pow2[0].push_back(ring.mx);
  pow2[1].push_back(multiplication_matrix(AffinePoly{Monomial::of(0, 0, 1)}, ring.basis, ring.monomials));
  pow2[2].push_back(ring.my);
  pow2[3].push_back(multiplication_matrix(AffinePoly{Monomial::of(0, 0, 0, 1)}, ring.basis, ring.monomials));
  auto apply_power = [&](BitVec v, std::size_t which, std::uint64_t e) {
    auto& table = pow2[which];
    for (std::size_t bit = 0; e; ++bit, e >>= 1) {
      if (bit == table.size()) table.push_back(table.back() * table.back());
      if (e & 1) v = table[bit].apply(v);
    }
    return v;
  };
  auto magnitude = [](std::int64_t k) { return k < 0 ? ~static_cast<std::uint64_t>(k) + 1 : static_cast<std::uint64_t>(k); };
  auto charge_of = [&](const LaurentPoly& p) {
    BitVec sum(ring.dim());
    for (const auto& e : p.terms()) {
      BitVec v = apply_power(ring.one, e.i < 0 ? 1 : 0, magnitude(e.i));
      sum ^= apply_power(std::move(v), e.j < 0 ? 3 : 2, magnitude(e.j));
    }
    return sum;
  };
  const BitVec charge = charge_of(patterns.front().support);
  for (const auto& p : patterns) {
    const BitVec c = charge_of(p.support);
    if (!(c == charge)) {
      const MonomialOrder& ord = ring.basis.order;
      throw ChargeViolation("pattern at step " + std::to_string(p.t) + " carries charge " +
                            print_affine(from_coordinates(c, ring.monomials), ord) + ", expected " +
                            print_affine(from_coordinates(charge, ring.monomials), ord));
    }
  }
  return affine_to_laurent(from_coordinates(charge, ring.monomials));
}

LaurentPoly charge_certificate(const HoppingTrace& trace, const BBCode& code, const BuchbergerOptions& opts) {
  return charge_certificate(trace.patterns, code, opts);
}

std::string patterns_csv(const std::vector<ExcitationPattern>& patterns) {
  std::ostringstream os;
  os << "step,x,y\n";
  for (const auto& p : patterns)
    for (const auto& e : p.support.terms()) os << p.t << ',' << e.i << ',' << e.j << '\n';
  return os.str();
}

nlohmann::json patterns_json(const std::vector<ExcitationPattern>& patterns) {
  nlohmann::json frames = nlohmann::json::array();
  for (const auto& p : patterns) {
    nlohmann::json sites = nlohmann::json::array();
    for (const auto& e : p.support.terms()) sites.push_back({e.i, e.j});
    frames.push_back(std::move(sites));
  }
  return frames;
}

std::string patterns_svg(const std::vector<ExcitationPattern>& patterns) {
  std::int64_t x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  bool first = true;
  for (const auto& p : patterns)
    for (const auto& e : p.support.terms()) {
      if (first) {
        x0 = x1 = e.i;
        y0 = y1 = e.j;
        first = false;
      }
      x0 = std::min(x0, e.i);
      x1 = std::max(x1, e.i);
      y0 = std::min(y0, e.j);
      y1 = std::max(y1, e.j);
    }
  const std::int64_t cell = 12, pad = 1;
  const std::int64_t w = (x1 - x0 + 1 + 2 * pad) * cell, hgt = (y1 - y0 + 1 + 2 * pad) * cell;
  const std::int64_t gap = cell;
  const auto frames = static_cast<std::int64_t>(patterns.size());
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << frames * (w + gap) << "\" height=\"" << hgt + 2 * cell
     << "\">\n";
  for (std::int64_t f = 0; f < frames; ++f) {
    const auto& p = patterns[static_cast<std::size_t>(f)];
    const std::int64_t ox = f * (w + gap);
    os << "  <g id=\"frame" << p.t << "\" transform=\"translate(" << ox << ",0)\">\n";
    os << "    <text x=\"2\" y=\"" << cell - 2 << "\" font-size=\"10\">t=" << p.t << "</text>\n";
    for (std::int64_t gx = 0; gx <= x1 - x0 + 2 * pad + 1; ++gx)
      os << "    <line x1=\"" << gx * cell << "\" y1=\"" << cell << "\" x2=\"" << gx * cell << "\" y2=\"" << hgt + cell
         << "\" stroke=\"#ccc\"/>\n";
    for (std::int64_t gy = 0; gy <= y1 - y0 + 2 * pad + 1; ++gy)
      os << "    <line x1=\"0\" y1=\"" << cell + gy * cell << "\" x2=\"" << w << "\" y2=\"" << cell + gy * cell
         << "\" stroke=\"#ccc\"/>\n";
    for (const auto& e : p.support.terms()) {
      // y grows upwards.
      const std::int64_t cx = (e.i - x0 + pad) * cell + cell / 2;
      const std::int64_t cy = cell + (y1 - e.j + pad) * cell + cell / 2;
      os << "    <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << cell / 3 << "\"/>\n";
    }
    os << "  </g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace anyonlab
