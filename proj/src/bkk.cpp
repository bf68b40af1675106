#include "anyonlab/bkk.hpp"

#include <algorithm>
#include <numeric>

#include "anyonlab/error.hpp"

namespace anyonlab {

namespace {

__int128 cross(Point o, Point a, Point b) {
  return static_cast<__int128>(a.x - o.x) * (b.y - o.y) - static_cast<__int128>(a.y - o.y) * (b.x - o.x);
}

std::int64_t dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }

// Terms of p maximizing <n, e>.
std::vector<Exponent> face_terms(const LaurentPoly& p, Point n) {
  std::vector<Exponent> out;
  std::int64_t best = 0;
  for (const auto& e : p.terms()) {
    const std::int64_t v = dot(n, {e.i, e.j});
    if (out.empty() || v > best) {
      out.assign(1, e);
      best = v;
    } else if (v == best) {
      out.push_back(e);
    }
  }
  return out;
}

// Restriction to a line with primitive direction d, as a univariate
// polynomial in the line parameter with zero low degree.
UniPoly along_line(const std::vector<Exponent>& terms, Point d) {
  std::vector<std::int64_t> ks;
  const Exponent base = terms.front();
  for (const auto& e : terms) ks.push_back(d.x != 0 ? (e.i - base.i) / d.x : (e.j - base.j) / d.y);
  const std::int64_t lo = *std::min_element(ks.begin(), ks.end());
  UniPoly u;
  for (auto k : ks) u.set_coeff(static_cast<std::size_t>(k - lo), true);
  return u;
}

}  // namespace

LatticePolytope convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return {pts};
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return {hull};
}

LatticePolytope newton_polytope(const LaurentPoly& p) {
  if (p.is_zero()) throw DomainError("Newton polytope of the zero polynomial");
  std::vector<Point> pts;
  for (const auto& e : p.terms()) pts.push_back({e.i, e.j});
  return convex_hull(std::move(pts));
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
  std::vector<Point> pts;
  for (const auto& a : p.vertices)
    for (const auto& b : q.vertices) pts.push_back({a.x + b.x, a.y + b.y});
  return convex_hull(std::move(pts));
}

LatticePolytope translate(const LatticePolytope& p, Point d) {
  LatticePolytope out = p;
  for (auto& v : out.vertices) v = {v.x + d.x, v.y + d.y};
  return out;
}

std::int64_t doubled_area(const LatticePolytope& p) {
  const auto& v = p.vertices;
  if (v.size() < 3) return 0;
  __int128 s = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const Point a = v[k], b = v[(k + 1) % v.size()];
    s += static_cast<__int128>(a.x) * b.y - static_cast<__int128>(a.y) * b.x;
  }
  if (s < 0) s = -s;
  return static_cast<std::int64_t>(s);
}

std::int64_t mixed_volume(const LatticePolytope& p, const LatticePolytope& q) {
  const std::int64_t d = doubled_area(minkowski_sum(p, q)) - doubled_area(p) - doubled_area(q);
  if (d % 2 != 0 || d < 0) throw InternalError("mixed volume is not a nonnegative integer");
  return d / 2;
}

UniPoly phi_aux(std::int64_t gamma, std::int64_t theta) {
  if (gamma < 0) throw InvalidInput("phi: gamma must be nonnegative");
  if (gamma == 0 && theta == 0) throw InvalidInput("phi: gamma = theta = 0 is undefined");
  if (gamma == 0) return {};
  const std::int64_t d = std::gcd(gamma, theta < 0 ? -theta : theta);
  const UniPoly inner = UniPoly::one() + uni_pow(UniPoly{0, 1}, static_cast<std::uint64_t>(gamma / d));
  return uni_pow(inner, static_cast<std::uint64_t>(d));
}

std::int64_t p2(std::int64_t n) {
  if (n < 1) throw InvalidInput("p2 needs a positive integer");
  return n & -n;
}

std::string quadrant_name(Quadrant q) {
  switch (q) {
    case Quadrant::nonnegative:
      return "a>=0,b>=0";
    case Quadrant::mixed:
      return "ab<0";
    case Quadrant::nonpositive:
      return "a<=0,b<=0";
  }
  return "";
}

ClosedForm q_closed_form(const BBParams& input) {
  const BBParams p = canonical_params(input);
  const std::int64_t al = p.alpha(), be = p.beta(), a = p.a, b = p.b;
  const std::int64_t ab = a * b;
  const UniPoly one_u{0, 1};
  ClosedForm out;
  out.params = p;
  const auto [f, g] = expand_params(p);
  const bool faces_ok = bkk_face_check(f, g);

  auto interior = [&](std::string tag, std::int64_t q) {
    out.regime.tag = std::move(tag);
    out.q = q;
    out.valid = faces_ok;
  };
  auto boundary = [&](std::string tag, const UniPoly& arg) {
    out.regime.tag = std::move(tag);
    out.regime.boundary = true;
    // The hyperbola formulas assume alpha, beta >= 1.
    out.q = arg.is_zero() ? 0 : deg_spread(arg);
    out.valid = !arg.is_zero() && al >= 1 && be >= 1;
  };
  // phi with gamma = 0 vanishes; extend that to theta = 0 as well.
  auto phi0 = [](std::int64_t gamma, std::int64_t theta) { return gamma == 0 ? UniPoly{} : phi_aux(gamma, theta); };
  auto pw = [&](std::int64_t e) { return uni_pow(one_u, static_cast<std::uint64_t>(e)); };

  if (a >= 0 && b >= 0) {
    out.regime.quadrant = Quadrant::nonnegative;
    if (ab > (al + 1) * (be + 1))
      interior("ab>(alpha+1)(beta+1)", ab - al * be);
    else if (ab == (al + 1) * (be + 1))
      boundary("ab=(alpha+1)(beta+1)", phi_aux(al + 1, a) + pw(al) * phi_aux(be + 1, b));
    else if (ab > al * be)
      interior("alpha*beta<ab<(alpha+1)(beta+1)", al + be + 1);
    else if (ab == al * be)
      boundary("ab=alpha*beta", phi0(al, a) + pw(al + 1) * phi0(be, b));
    else
      interior("ab<alpha*beta", (al + 1) * (be + 1) - ab);
  } else if (a <= 0 && b <= 0) {
    out.regime.quadrant = Quadrant::nonpositive;
    const std::int64_t h1 = al * (be + 1), h2 = (al + 1) * be;
    if (ab == h1 && ab == h2) {
      // Both lower hyperbolas meet (alpha = beta). The Deg argument then has a
      // factor (1+u) as well; report the stripped degree but do not vouch for it.
      UniPoly arg = phi0(al, a) + phi_aux(be + 1, b);
      while (!arg.is_zero() && uni_mod(arg, one_u).is_zero()) arg = uni_div(arg, one_u);
      boundary("ab=alpha(beta+1)=(alpha+1)beta", arg);
      out.valid = false;
    } else if (ab > h1) {
      interior("ab>alpha(beta+1)", ab - al * be + 1);
    } else if (ab == h1) {
      boundary("ab=alpha(beta+1)", phi0(al, a) + pw(al - be) * phi_aux(be + 1, b));
    } else if (ab > h2) {
      interior("(alpha+1)beta<ab<alpha(beta+1)", al + 1);
    } else if (ab == h2) {
      boundary("ab=(alpha+1)beta", phi_aux(al + 1, a) + one_u * phi0(be, b));
    } else {
      interior("ab<(alpha+1)beta", (al + 1) * (be + 1) - ab);
    }
  } else {
    out.regime.quadrant = Quadrant::mixed;
    interior("ab<0", (al + 1) * (be + 1) - ab);
  }
  return out;
}

bool bkk_face_check(const LaurentPoly& f, const LaurentPoly& g) {
  const LatticePolytope sum = minkowski_sum(newton_polytope(f), newton_polytope(g));
  const auto& v = sum.vertices;
  if (v.size() < 2) return true;
  std::vector<Point> dirs;
  if (v.size() == 2) {
    dirs = {{v[1].x - v[0].x, v[1].y - v[0].y}, {v[0].x - v[1].x, v[0].y - v[1].y}};
  } else {
    for (std::size_t k = 0; k < v.size(); ++k) {
      const Point a = v[k], b = v[(k + 1) % v.size()];
      dirs.push_back({b.x - a.x, b.y - a.y});
    }
  }
  for (Point d : dirs) {
    const std::int64_t gd = std::gcd(d.x < 0 ? -d.x : d.x, d.y < 0 ? -d.y : d.y);
    d = {d.x / gd, d.y / gd};
    // Outward normal of a counter-clockwise edge.
    const Point n{d.y, -d.x};
    const auto fs = face_terms(f, n);
    const auto gs = face_terms(g, n);
    if (fs.size() < 2 || gs.size() < 2) continue;
    if (!uni_gcd(along_line(fs, d), along_line(gs, d)).is_one()) return false;
  }
  return true;
}

std::int64_t mv_bound(const BBCode& code) {
  return mixed_volume(newton_polytope(code.f()), newton_polytope(code.g()));
}

}  // namespace anyonlab
