#include "anyonlab/periods.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "anyonlab/error.hpp"
#include "anyonlab/torus.hpp"

namespace anyonlab {

namespace {

std::string power(char var, std::int64_t e) {
  if (e == 1) return std::string(1, var);
  return std::string(1, var) + "^" + std::to_string(e);
}

std::string print_vector(LatticeVector v) {
  if (v.x == 0 && v.y == 0) return "1";
  if (v.y == 0) return power('x', v.x);
  if (v.x == 0) return power('y', v.y);
  return power('x', v.x) + "*" + power('y', v.y);
}

// Least j in [1, period_b] with b^j equal to some a^k, where a has period
// period_a; returns (k, j).
std::pair<std::uint64_t, std::uint64_t> first_collision(const GF2Matrix& ma, std::uint64_t period_a,
                                                        const GF2Matrix& mb, std::uint64_t period_b,
                                                        const BitVec& one) {
  std::unordered_map<BitVec, std::uint64_t, BitVecHash> index;
  index.reserve(static_cast<std::size_t>(period_a));
  BitVec v = one;
  for (std::uint64_t k = 0; k < period_a; ++k) {
    index.emplace(v, k);
    v = ma.apply(v);
  }
  if (!(v == one) || index.size() != period_a) throw InternalError("anyon period is inconsistent with the quotient ring");
  BitVec w = one;
  for (std::uint64_t j = 1; j <= period_b; ++j) {
    w = mb.apply(w);
    const auto it = index.find(w);
    if (it != index.end()) return {it->second, j};
  }
  throw InternalError("anyon period is inconsistent with the quotient ring");
}

}  // namespace

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw InvalidInput("divisors of zero");
  std::vector<std::uint64_t> out{1};
  const auto primes = factor_integer(n);
  for (std::size_t i = 0; i < primes.size();) {
    std::size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (std::size_t e = i; e < j; ++e) {
      pk *= primes[i];
      for (std::size_t t = 0; t < base; ++t) out.push_back(out[t] * pk);
    }
    i = j;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<UniPoly> univariate_element(const GroebnerBasis& g, Var v) {
  const auto vi = static_cast<std::size_t>(v);
  for (const auto& e : g.elements) {
    bool ok = true;
    UniPoly u;
    for (const auto& m : e.terms()) {
      for (std::size_t k = 0; k < 4; ++k)
        if (k != vi && m.exp[k] != 0) ok = false;
      if (!ok) break;
      u.set_coeff(m.exp[vi], true);
    }
    if (ok) return u;
  }
  return std::nullopt;
}

AnyonPeriods anyon_periods(const BBCode& code, const BuchbergerOptions& opts) {
  AnyonPeriods out;
  const UniPoly u{1};
  auto one_axis = [&](const MonomialOrder& ord, Var v, UniPoly& h) -> std::uint64_t {
    const GroebnerBasis g = infinite_basis(code, ord, opts);
    if (!is_zero_dimensional(g)) throw DomainError(code.label() + " is not topological");
    auto e = univariate_element(g, v);
    if (!e) throw InternalError("zero-dimensional basis without a univariate element");
    h = *e;
    if (h.is_one()) return 1;
    if (!h.coeff(0)) throw InternalError("univariate element is divisible by a unit");
    const std::uint64_t n = polynomial_period(h);
    // h generates the elimination ideal, so membership of u^n - 1 is h | u^n - 1.
    if (!uni_powmod(u, n, h).is_one()) throw InternalError("period is not a member of the ideal");
    auto primes = factor_integer(n);
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (auto q : primes)
      if (uni_powmod(u, n / q, h).is_one()) throw InternalError("period is not minimal");
    if (n <= 4096) {
      Monomial m{};
      m.exp[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(n);
      if (!ideal_member(AffinePoly{m, Monomial{}}, g)) throw InternalError("period is not a member of the ideal");
    }
    return n;
  };
  out.l0 = one_axis(MonomialOrder::elimination_x(), Var::x, out.hx);
  out.m0 = one_axis(MonomialOrder::elimination_y(), Var::y, out.hy);
  return out;
}

std::string print_generators(const std::pair<LatticeVector, LatticeVector>& gens) {
  if (gens.first == gens.second) return "<" + print_vector(gens.first) + ">";
  // A rectangular lattice reads the same in both presentations.
  if (gens.first.x == 0 && gens.second.y == 0)
    return "<" + print_vector(gens.second) + ", " + print_vector(gens.first) + ">";
  return "<" + print_vector(gens.first) + ", " + print_vector(gens.second) + ">";
}

MobilitySublattice mobility_generators(const BBCode& code, std::uint64_t cap, const BuchbergerOptions& opts) {
  const AnyonPeriods per = anyon_periods(code, opts);
  if (per.l0 > cap || per.m0 > cap)
    throw CapExceeded("anyon periods (" + std::to_string(per.l0) + ", " + std::to_string(per.m0) +
                      ") exceed the search cap " + std::to_string(cap));
  const QuotientRing ring = quotient_ring(code, opts);
  MobilitySublattice out;
  out.l0 = per.l0;
  out.m0 = per.m0;
  const auto l0 = static_cast<std::int64_t>(per.l0), m0 = static_cast<std::int64_t>(per.m0);
  {
    // y^j = x^k, so x^(l0-k) y^j = 1.
    const auto [k, j] = first_collision(ring.mx, per.l0, ring.my, per.m0, ring.one);
    const std::int64_t i = (l0 - static_cast<std::int64_t>(k)) % l0;
    out.x_presentation = {{l0, 0}, {i, static_cast<std::int64_t>(j)}};
  }
  {
    const auto [k, i] = first_collision(ring.my, per.m0, ring.mx, per.l0, ring.one);
    const std::int64_t j = (m0 - static_cast<std::int64_t>(k)) % m0;
    out.y_presentation = {{0, m0}, {static_cast<std::int64_t>(i), j}};
  }
  if (out.l0 * static_cast<std::uint64_t>(out.x_presentation.second.y) !=
      out.m0 * static_cast<std::uint64_t>(out.y_presentation.second.x))
    throw InternalError("the two presentations disagree on the sublattice index");
  return out;
}

std::vector<SizeClass> size_sequences(const BBCode& code, std::uint64_t period_cap, std::size_t pair_cap,
                                      const BuchbergerOptions& opts) {
  const AnyonPeriods per = anyon_periods(code, opts);
  if (per.l0 > period_cap || per.m0 > period_cap)
    throw CapExceeded("anyon periods exceed the size-sequence cap " + std::to_string(period_cap));
  const auto dl = divisors(per.l0), dm = divisors(per.m0);
  if (dl.size() * dm.size() > pair_cap) throw CapExceeded("divisor grid exceeds the pair cap");

  using Pair = std::pair<std::uint64_t, std::uint64_t>;
  std::map<Pair, GroebnerBasis> bases;
  std::map<Pair, std::size_t> k;
  for (auto a : dl)
    for (auto b : dm) {
      GroebnerBasis g = torus_basis(code, {static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)}, opts);
      k[{a, b}] = 2 * quotient_dim(g);
      bases.emplace(Pair{a, b}, std::move(g));
    }

  // Does k depend on gcd(l, m) alone?
  bool gcd_only = true;
  for (const auto& [p, kv] : k) {
    const std::uint64_t g = std::gcd(p.first, p.second);
    if (k.at({g, g}) != kv) gcd_only = false;
  }

  std::map<std::size_t, SizeClass, std::greater<>> classes;
  for (const auto& [p, kv] : k) {
    auto& c = classes[kv];
    c.k = kv;
    c.members.push_back(p);
  }

  const auto dL = divisors(std::gcd(per.l0, per.m0));
  std::vector<SizeClass> out;
  for (auto& [kv, c] : classes) {
    const bool has_one = c.members.front() == Pair{1, 1};
    if (c.members.size() == k.size()) {
      c.gcd_class = "Z";
      c.witness = bases.at(c.members.front());
    } else if (gcd_only) {
      std::vector<std::uint64_t> in;
      for (auto g : dL)
        if (k.at({g, g}) == kv) in.push_back(g);
      auto member = [&](std::uint64_t g) { return std::find(in.begin(), in.end(), g) != in.end(); };
      std::string desc;
      for (auto a : in) {
        if (std::any_of(in.begin(), in.end(), [&](auto b) { return b != a && a % b == 0; })) continue;
        std::string piece = a == 1 ? "Z" : std::to_string(a) + "Z";
        std::vector<std::uint64_t> excluded;
        for (auto b : dL)
          if (b % a == 0 && !member(b)) excluded.push_back(b);
        for (auto b : excluded) {
          if (std::any_of(excluded.begin(), excluded.end(), [&](auto e) { return e != b && b % e == 0; })) continue;
          piece += "-" + std::to_string(b) + "Z";
        }
        if (!desc.empty()) desc += " or ";
        desc += piece;
        if (c.witness.elements.empty()) c.witness = bases.at({a, a});
      }
      c.gcd_class = has_one ? "others" : desc;
    } else {
      std::string desc = "(gcd(l,l0),gcd(m,m0)) in {";
      for (std::size_t t = 0; t < c.members.size(); ++t) {
        if (t) desc += ",";
        desc += "(" + std::to_string(c.members[t].first) + "," + std::to_string(c.members[t].second) + ")";
      }
      c.gcd_class = has_one ? "others" : desc + "}";
      c.witness = bases.at(c.members.front());
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace anyonlab
