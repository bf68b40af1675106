#include "anyonlab/affine.hpp"

#include <algorithm>
#include <limits>

#include "anyonlab/error.hpp"

namespace anyonlab {

namespace {

std::uint32_t checked_add(std::uint32_t a, std::uint32_t b) {
  std::uint32_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("affine exponent overflow");
  return r;
}

std::uint32_t narrow(std::int64_t v) {
  if (v < 0 || v > std::numeric_limits<std::uint32_t>::max())
    throw OverflowError("exponent " + std::to_string(v) + " out of affine range");
  return static_cast<std::uint32_t>(v);
}

void normalize(std::vector<Monomial>& terms) {
  std::sort(terms.begin(), terms.end());
  std::size_t out = 0;
  for (std::size_t k = 0; k < terms.size();) {
    std::size_t run = k;
    while (run < terms.size() && terms[run] == terms[k]) ++run;
    if ((run - k) % 2 == 1) terms[out++] = terms[k];
    k = run;
  }
  terms.resize(out);
}

}  // namespace

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t v = 0; v < 4; ++v)
    if (exp[v] > other.exp[v]) return false;
  return true;
}

bool Monomial::is_pure_power() const {
  return std::count_if(exp.begin(), exp.end(), [](std::uint32_t e) { return e != 0; }) == 1;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t v = 0; v < 4; ++v) m.exp[v] = checked_add(a.exp[v], b.exp[v]);
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t v = 0; v < 4; ++v) m.exp[v] = std::max(a.exp[v], b.exp[v]);
  return m;
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t v = 0; v < 4; ++v) {
    if (b.exp[v] > a.exp[v]) throw InternalError("monomial quotient: divisor does not divide");
    m.exp[v] = a.exp[v] - b.exp[v];
  }
  return m;
}

MonomialOrder::MonomialOrder(std::array<Var, 4> priority) : priority_(priority) {
  std::array<bool, 4> seen{};
  for (Var v : priority) {
    const auto k = static_cast<std::size_t>(v);
    if (k >= 4 || seen[k]) throw InvalidInput("monomial order priority must be a permutation of x, y, xbar, ybar");
    seen[k] = true;
  }
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  for (Var v : priority_)
    if (auto c = a[v] <=> b[v]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::array<std::uint32_t, 4> MonomialOrder::permute(const Monomial& m) const {
  return {m[priority_[0]], m[priority_[1]], m[priority_[2]], m[priority_[3]]};
}

Monomial MonomialOrder::unpermute(const std::array<std::uint32_t, 4>& e) const {
  Monomial m;
  for (std::size_t k = 0; k < 4; ++k) m.exp[static_cast<std::size_t>(priority_[k])] = e[k];
  return m;
}

std::string MonomialOrder::describe() const {
  static constexpr const char* names[] = {"x", "y", "xbar", "ybar"};
  std::string out = "lex ";
  for (std::size_t k = 0; k < 4; ++k) {
    if (k) out += " > ";
    out += names[static_cast<std::size_t>(priority_[k])];
  }
  return out;
}

AffinePoly::AffinePoly(std::initializer_list<Monomial> terms) : terms_(terms) { normalize(terms_); }

AffinePoly AffinePoly::from_terms(std::vector<Monomial> terms) {
  AffinePoly p;
  p.terms_ = std::move(terms);
  normalize(p.terms_);
  return p;
}

AffinePoly& AffinePoly::operator+=(const AffinePoly& other) {
  std::vector<Monomial> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
                                std::back_inserter(merged));
  terms_ = std::move(merged);
  return *this;
}

AffinePoly operator*(const AffinePoly& a, const AffinePoly& b) {
  std::vector<Monomial> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back(s * t);
  return AffinePoly::from_terms(std::move(prod));
}

AffinePoly AffinePoly::times(const Monomial& m) const {
  AffinePoly p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back(t * m);
  std::sort(p.terms_.begin(), p.terms_.end());
  return p;
}

Monomial leading_term(const AffinePoly& p, const MonomialOrder& ord) {
  if (p.is_zero()) throw DomainError("leading term of the zero polynomial");
  return *std::max_element(p.terms().begin(), p.terms().end(),
                           [&](const Monomial& a, const Monomial& b) { return ord.less(a, b); });
}

Monomial lowest_term(const AffinePoly& p, const MonomialOrder& ord) {
  if (p.is_zero()) throw DomainError("lowest term of the zero polynomial");
  return *std::min_element(p.terms().begin(), p.terms().end(),
                           [&](const Monomial& a, const Monomial& b) { return ord.less(a, b); });
}

AffinePoly laurent_to_affine(const LaurentPoly& p) {
  std::vector<Monomial> terms;
  terms.reserve(p.size());
  for (const auto& e : p.terms()) {
    Monomial m;
    if (e.i >= 0)
      m.exp[0] = narrow(e.i);
    else
      m.exp[2] = narrow(-e.i);
    if (e.j >= 0)
      m.exp[1] = narrow(e.j);
    else
      m.exp[3] = narrow(-e.j);
    terms.push_back(m);
  }
  return AffinePoly::from_terms(std::move(terms));
}

LaurentPoly affine_to_laurent(const AffinePoly& p) {
  std::vector<Exponent> terms;
  terms.reserve(p.size());
  for (const auto& m : p.terms())
    terms.push_back({static_cast<std::int64_t>(m.exp[0]) - m.exp[2], static_cast<std::int64_t>(m.exp[1]) - m.exp[3]});
  return LaurentPoly::from_terms(std::move(terms));
}

std::string print_monomial(const Monomial& m) {
  static constexpr const char* names[] = {"x", "y", "xb", "yb"};
  std::string out;
  for (std::size_t v = 0; v < 4; ++v) {
    if (m.exp[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[v];
    if (m.exp[v] != 1) out += '^' + std::to_string(m.exp[v]);
  }
  return out.empty() ? "1" : out;
}

std::string print_affine(const AffinePoly& p, const MonomialOrder& ord) {
  if (p.is_zero()) return "0";
  std::vector<Monomial> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [&](const Monomial& a, const Monomial& b) { return ord.less(b, a); });
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (k) out += " + ";
    out += print_monomial(terms[k]);
  }
  return out;
}

}  // namespace anyonlab
