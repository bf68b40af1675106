#include "anyonlab/groebner.hpp"

#include <algorithm>
#include <set>

#include "anyonlab/error.hpp"

namespace anyonlab {

namespace {

// Monomials are packed into one 128-bit key: four 32-bit lanes holding the
// exponents in priority order, most significant lane first. Integer order on
// keys is then the lex order. Bit 31 of every lane is a guard bit that stays
// clear, which makes divisibility and overflow checks branch-free.
using Key = unsigned __int128;

constexpr std::uint32_t kLaneMax = (std::uint32_t{1} << 31) - 1;
constexpr Key kLaneMask = 0xFFFFFFFFu;
constexpr Key kGuard = (Key{0x80000000u} << 96) | (Key{0x80000000u} << 64) | (Key{0x80000000u} << 32) | Key{0x80000000u};

std::uint32_t lane(Key k, int l) { return static_cast<std::uint32_t>((k >> (96 - 32 * l)) & kLaneMask); }

Key pack(const Monomial& m, const MonomialOrder& ord) {
  const auto e = ord.permute(m);
  Key k = 0;
  for (int l = 0; l < 4; ++l) {
    if (e[static_cast<std::size_t>(l)] > kLaneMax) throw OverflowError("exponent exceeds the Groebner engine range");
    k = (k << 32) | e[static_cast<std::size_t>(l)];
  }
  return k;
}

Monomial unpack(Key k, const MonomialOrder& ord) { return ord.unpermute({lane(k, 0), lane(k, 1), lane(k, 2), lane(k, 3)}); }

bool kdivides(Key a, Key b) { return (((b | kGuard) - a) & kGuard) == kGuard; }

Key kmul(Key a, Key b) {
  const Key s = a + b;
  if (s & kGuard) throw OverflowError("exponent exceeds the Groebner engine range");
  return s;
}

Key klcm(Key a, Key b) {
  Key k = 0;
  for (int l = 0; l < 4; ++l) k = (k << 32) | std::max(lane(a, l), lane(b, l));
  return k;
}

bool kcoprime(Key a, Key b) {
  for (int l = 0; l < 4; ++l)
    if (lane(a, l) != 0 && lane(b, l) != 0) return false;
  return true;
}

// Terms ascending; the leading term is back().
using KPoly = std::vector<Key>;

KPoly to_kpoly(const AffinePoly& p, const MonomialOrder& ord) {
  KPoly out;
  out.reserve(p.size());
  for (const auto& m : p.terms()) out.push_back(pack(m, ord));
  std::sort(out.begin(), out.end());
  return out;
}

AffinePoly from_kpoly(const KPoly& p, const MonomialOrder& ord) {
  std::vector<Monomial> terms;
  terms.reserve(p.size());
  for (Key k : p) terms.push_back(unpack(k, ord));
  return AffinePoly::from_terms(std::move(terms));
}

// p += shift * g, as a symmetric difference of sorted term lists.
void add_shifted(KPoly& p, const KPoly& g, Key shift, KPoly& scratch) {
  scratch.clear();
  scratch.reserve(p.size() + g.size());
  auto a = p.begin();
  auto b = g.begin();
  while (a != p.end() && b != g.end()) {
    const Key kb = kmul(*b, shift);
    if (*a < kb) {
      scratch.push_back(*a++);
    } else if (kb < *a) {
      scratch.push_back(kb);
      ++b;
    } else {
      ++a;
      ++b;
    }
  }
  scratch.insert(scratch.end(), a, p.end());
  for (; b != g.end(); ++b) scratch.push_back(kmul(*b, shift));
  p.swap(scratch);
}

KPoly reduce(KPoly p, const std::vector<const KPoly*>& divisors) {
  KPoly rem;
  KPoly scratch;
  while (!p.empty()) {
    const Key t = p.back();
    const KPoly* div = nullptr;
    for (const KPoly* d : divisors)
      if (kdivides(d->back(), t)) {
        div = d;
        break;
      }
    if (!div) {
      rem.push_back(t);
      p.pop_back();
      continue;
    }
    add_shifted(p, *div, t - div->back(), scratch);
  }
  std::reverse(rem.begin(), rem.end());
  return rem;
}

KPoly kspoly(const KPoly& f, const KPoly& g) {
  const Key l = klcm(f.back(), g.back());
  KPoly p, scratch;
  add_shifted(p, f, l - f.back(), scratch);
  add_shifted(p, g, l - g.back(), scratch);
  return p;
}

class Engine {
 public:
  Engine(const MonomialOrder& ord, std::size_t cap) : ord_(ord), cap_(cap) {}

  void add_generator(const KPoly& gen) {
    KPoly h = reduce(gen, active_divisors());
    if (!h.empty()) update(std::move(h));
  }

  void run() {
    while (!pairs_.empty()) {
      const Pair pr = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      KPoly h = reduce(kspoly(polys_[pr.i], polys_[pr.j]), active_divisors());
      if (!h.empty()) update(std::move(h));
    }
  }

  std::vector<KPoly> reduced_basis() const {
    const auto active = active_divisors();
    std::vector<const KPoly*> minimal;
    for (std::size_t a = 0; a < active.size(); ++a) {
      bool redundant = false;
      for (std::size_t b = 0; b < active.size() && !redundant; ++b) {
        if (a == b) continue;
        const Key la = active[a]->back(), lb = active[b]->back();
        redundant = kdivides(lb, la) && (la != lb || b < a);
      }
      if (!redundant) minimal.push_back(active[a]);
    }
    std::vector<KPoly> out;
    for (const KPoly* g : minimal) {
      if (g->back() == 0) return {KPoly{0}};
      std::vector<const KPoly*> others;
      for (const KPoly* o : minimal)
        if (o != g) others.push_back(o);
      out.push_back(reduce(*g, others));
    }
    std::sort(out.begin(), out.end(), [](const KPoly& a, const KPoly& b) { return a.back() < b.back(); });
    return out;
  }

 private:
  struct Pair {
    Key lcm;
    std::size_t i, j;
    friend bool operator<(const Pair& a, const Pair& b) {
      if (a.lcm != b.lcm) return a.lcm < b.lcm;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    }
  };

  std::vector<const KPoly*> active_divisors() const {
    std::vector<const KPoly*> out;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) out.push_back(&polys_[k]);
    return out;
  }

  // Gebauer-Moeller installation of a new element h.
  void update(KPoly h) {
    const std::size_t hi = polys_.size();
    const Key lh = h.back();
    polys_.push_back(std::move(h));
    active_.push_back(false);

    std::vector<std::size_t> cands;
    for (std::size_t k = 0; k < hi; ++k)
      if (active_[k]) cands.push_back(k);

    std::vector<std::pair<Key, std::size_t>> c, d;
    for (std::size_t k : cands) c.emplace_back(klcm(lh, polys_[k].back()), k);
    for (std::size_t n = 0; n < c.size(); ++n) {
      const auto [l1, g1] = c[n];
      bool keep = kcoprime(lh, polys_[g1].back());
      if (!keep) {
        keep = true;
        for (std::size_t r = n + 1; r < c.size() && keep; ++r)
          if (kdivides(c[r].first, l1)) keep = false;
        for (std::size_t r = 0; r < d.size() && keep; ++r)
          if (kdivides(d[r].first, l1)) keep = false;
      }
      if (keep) d.emplace_back(l1, g1);
    }

    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Key l = it->lcm;
      if (kdivides(lh, l) && klcm(polys_[it->i].back(), lh) != l && klcm(lh, polys_[it->j].back()) != l)
        it = pairs_.erase(it);
      else
        ++it;
    }
    for (const auto& [l, g] : d)
      if (!kcoprime(lh, polys_[g].back())) pairs_.insert({l, g, hi});
    if (pairs_.size() > cap_)
      throw CapExceeded("Buchberger pair queue exceeded the cap of " + std::to_string(cap_) + " pairs");

    for (std::size_t k : cands)
      if (kdivides(lh, polys_[k].back())) active_[k] = false;
    active_[hi] = true;
  }

  MonomialOrder ord_;
  std::size_t cap_;
  std::vector<KPoly> polys_;
  std::vector<bool> active_;
  std::set<Pair> pairs_;
};

}  // namespace

VarMask variables_of(const std::vector<AffinePoly>& polys) {
  VarMask mask{};
  for (const auto& p : polys)
    for (const auto& m : p.terms())
      for (std::size_t v = 0; v < 4; ++v)
        if (m.exp[v] != 0) mask[v] = true;
  return mask;
}

std::vector<Monomial> GroebnerBasis::leading_terms() const {
  std::vector<Monomial> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(leading_term(e, order));
  return out;
}

std::optional<std::size_t> QuotientBasis::index_of(const Monomial& m) const {
  auto it = std::lower_bound(monomials.begin(), monomials.end(), m,
                             [&](const Monomial& a, const Monomial& b) { return order.less(a, b); });
  if (it == monomials.end() || !(*it == m)) return std::nullopt;
  return static_cast<std::size_t>(it - monomials.begin());
}

AffinePoly normal_form(const AffinePoly& p, const std::vector<AffinePoly>& divisors, const MonomialOrder& ord) {
  std::vector<KPoly> ds;
  ds.reserve(divisors.size());
  for (const auto& d : divisors) {
    if (d.is_zero()) throw InvalidInput("normal_form: zero divisor");
    ds.push_back(to_kpoly(d, ord));
  }
  std::vector<const KPoly*> ptrs;
  for (const auto& d : ds) ptrs.push_back(&d);
  return from_kpoly(reduce(to_kpoly(p, ord), ptrs), ord);
}

AffinePoly normal_form(const AffinePoly& p, const GroebnerBasis& g) { return normal_form(p, g.elements, g.order); }

AffinePoly s_polynomial(const AffinePoly& f, const AffinePoly& g, const MonomialOrder& ord) {
  if (f.is_zero() || g.is_zero()) throw DomainError("S-polynomial of a zero polynomial");
  return from_kpoly(kspoly(to_kpoly(f, ord), to_kpoly(g, ord)), ord);
}

GroebnerBasis buchberger(const Ideal& ideal, const BuchbergerOptions& opts) {
  Engine engine(ideal.order, opts.pair_cap);
  bool any = false;
  for (const auto& gen : ideal.generators) {
    if (gen.is_zero()) continue;
    any = true;
    engine.add_generator(to_kpoly(gen, ideal.order));
  }
  if (!any) throw InvalidInput("ideal needs at least one nonzero generator");
  engine.run();
  GroebnerBasis out;
  out.order = ideal.order;
  out.ring = ideal.ring.value_or(variables_of(ideal.generators));
  for (const auto& k : engine.reduced_basis()) out.elements.push_back(from_kpoly(k, ideal.order));
  return out;
}

bool verify_groebner(const GroebnerBasis& g) {
  const auto& ord = g.order;
  std::vector<KPoly> ks;
  for (const auto& e : g.elements) {
    if (e.is_zero()) return false;
    ks.push_back(to_kpoly(e, ord));
  }
  std::vector<const KPoly*> ptrs;
  for (const auto& k : ks) ptrs.push_back(&k);
  for (std::size_t a = 0; a < ks.size(); ++a) {
    if (a > 0 && !(ks[a - 1].back() < ks[a].back())) return false;
    for (std::size_t b = 0; b < ks.size(); ++b) {
      if (a == b) continue;
      for (Key t : ks[a])
        if (kdivides(ks[b].back(), t)) return false;
      if (b > a && !reduce(kspoly(ks[a], ks[b]), ptrs).empty()) return false;
    }
  }
  return true;
}

bool ideal_member(const AffinePoly& p, const GroebnerBasis& g) { return normal_form(p, g).is_zero(); }

bool is_zero_dimensional(const GroebnerBasis& g) {
  const auto lts = g.leading_terms();
  if (std::any_of(lts.begin(), lts.end(), [](const Monomial& m) { return m.is_one(); })) return true;
  for (std::size_t v = 0; v < 4; ++v) {
    if (!g.ring[v]) continue;
    const bool found = std::any_of(lts.begin(), lts.end(), [&](const Monomial& m) { return m.is_pure_power() && m.exp[v] != 0; });
    if (!found) return false;
  }
  return true;
}

QuotientBasis quotient_basis(const GroebnerBasis& g, std::size_t cap) {
  if (!is_zero_dimensional(g)) throw DomainError("quotient basis of a non-zero-dimensional ideal is infinite");
  QuotientBasis qb;
  qb.order = g.order;
  std::vector<Key> lts;
  for (const auto& m : g.leading_terms()) lts.push_back(pack(m, g.order));
  if (std::find(lts.begin(), lts.end(), Key{0}) != lts.end()) return qb;

  // Lanes of ring variables, outermost (highest priority) first.
  std::vector<int> lanes;
  std::array<std::uint32_t, 4> bound{};
  for (int l = 0; l < 4; ++l) {
    const auto v = static_cast<std::size_t>(g.order.priority()[static_cast<std::size_t>(l)]);
    if (!g.ring[v]) continue;
    lanes.push_back(l);
    std::uint32_t b = kLaneMax;
    for (Key k : lts) {
      const Key only = Key{lane(k, l)} << (96 - 32 * l);
      if (k == only) b = std::min(b, lane(k, l));
    }
    bound[static_cast<std::size_t>(l)] = b;
  }
  auto divisible = [&](Key m) {
    return std::any_of(lts.begin(), lts.end(), [&](Key t) { return kdivides(t, m); });
  };
  std::vector<Key> out;
  // Depth-first walk; once a monomial is divisible, so is every multiple, so
  // the current lane can stop.
  auto walk = [&](auto&& self, std::size_t depth, Key base) -> void {
    const int l = lanes[depth];
    for (std::uint32_t e = 0; e < bound[static_cast<std::size_t>(l)]; ++e) {
      const Key m = base | (Key{e} << (96 - 32 * l));
      if (divisible(m)) break;
      if (depth + 1 == lanes.size()) {
        out.push_back(m);
        if (out.size() > cap) throw CapExceeded("quotient basis exceeds " + std::to_string(cap) + " monomials");
      } else {
        self(self, depth + 1, m);
      }
    }
  };
  if (lanes.empty())
    out.push_back(0);
  else
    walk(walk, 0, 0);
  qb.monomials.reserve(out.size());
  for (Key k : out) qb.monomials.push_back(unpack(k, g.order));
  return qb;
}

std::size_t quotient_dim(const GroebnerBasis& g) { return quotient_basis(g).size(); }

BitVec coordinates(const AffinePoly& nf, const QuotientBasis& basis) {
  BitVec v(basis.size());
  for (const auto& m : nf.terms()) {
    const auto idx = basis.index_of(m);
    if (!idx) throw InternalError("normal form has a non-standard monomial " + print_monomial(m));
    v.set(*idx, true);
  }
  return v;
}

AffinePoly from_coordinates(const BitVec& v, const QuotientBasis& basis) {
  std::vector<Monomial> terms;
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (v.get(k)) terms.push_back(basis.monomials[k]);
  return AffinePoly::from_terms(std::move(terms));
}

GF2Matrix multiplication_matrix(const AffinePoly& p, const GroebnerBasis& g, const QuotientBasis& basis) {
  const Reducer red(g);
  const std::size_t n = basis.size();
  GF2Matrix m(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    const BitVec col = coordinates(red.reduce(p.times(basis.monomials[c])), basis);
    for (std::size_t r = 0; r < n; ++r)
      if (col.get(r)) m.set(r, c, true);
  }
  return m;
}

struct Reducer::Impl {
  std::vector<KPoly> polys;
  std::vector<const KPoly*> ptrs;
};

Reducer::Reducer(const GroebnerBasis& g) : basis_(g), impl_(std::make_unique<Impl>()) {
  for (const auto& e : g.elements) impl_->polys.push_back(to_kpoly(e, g.order));
  for (const auto& k : impl_->polys) impl_->ptrs.push_back(&k);
}

Reducer::~Reducer() = default;

Reducer::Reducer(const Reducer& o) : Reducer(o.basis_) {}

Reducer& Reducer::operator=(const Reducer& o) {
  if (this != &o) *this = Reducer(o);
  return *this;
}

Reducer::Reducer(Reducer&&) noexcept = default;
Reducer& Reducer::operator=(Reducer&&) noexcept = default;

AffinePoly Reducer::reduce(const AffinePoly& p) const {
  return from_kpoly(anyonlab::reduce(to_kpoly(p, basis_.order), impl_->ptrs), basis_.order);
}

}  // namespace anyonlab
