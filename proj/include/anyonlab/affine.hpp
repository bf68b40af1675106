#ifndef ANYONLAB_AFFINE_HPP
#define ANYONLAB_AFFINE_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "anyonlab/laurent.hpp"

namespace anyonlab {

/// The four affine variables; xbar and ybar stand in for x^-1 and y^-1.
enum class Var : std::uint8_t { x = 0, y = 1, xbar = 2, ybar = 3 };

/// Monomial x^e0 y^e1 xbar^e2 ybar^e3.
struct Monomial {
  std::array<std::uint32_t, 4> exp{};

  static Monomial of(std::uint32_t x, std::uint32_t y = 0, std::uint32_t xbar = 0, std::uint32_t ybar = 0) {
    return Monomial{{x, y, xbar, ybar}};
  }
  std::uint32_t operator[](Var v) const { return exp[static_cast<std::size_t>(v)]; }

  bool divides(const Monomial& other) const;
  bool is_one() const { return exp == std::array<std::uint32_t, 4>{}; }
  /// True iff exactly one variable has a nonzero exponent.
  bool is_pure_power() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);  // checked
Monomial lcm(const Monomial& a, const Monomial& b);
/// a / b; requires b | a.
Monomial quotient(const Monomial& a, const Monomial& b);

/// Lexicographic order with a configurable variable priority.
class MonomialOrder {
 public:
  /// The default infinite-lattice order: ybar > xbar > y > x.
  MonomialOrder() : MonomialOrder({Var::ybar, Var::xbar, Var::y, Var::x}) {}
  /// Throws InvalidInput unless `priority` is a permutation of the four variables.
  explicit MonomialOrder(std::array<Var, 4> priority);

  static MonomialOrder lex(std::array<Var, 4> priority) { return MonomialOrder(priority); }
  /// ybar > xbar > y > x
  static MonomialOrder elimination_x() { return MonomialOrder(); }
  /// xbar > ybar > x > y
  static MonomialOrder elimination_y() { return MonomialOrder({Var::xbar, Var::ybar, Var::x, Var::y}); }

  const std::array<Var, 4>& priority() const { return priority_; }
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  /// Exponents rearranged so that plain lexicographic comparison realizes this order.
  std::array<std::uint32_t, 4> permute(const Monomial& m) const;
  Monomial unpermute(const std::array<std::uint32_t, 4>& e) const;

  std::string describe() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  std::array<Var, 4> priority_;
};

/// Polynomial over F2 in x, y, xbar, ybar with set semantics.
/// Terms are stored sorted ascending by raw exponent vector.
class AffinePoly {
 public:
  AffinePoly() = default;
  AffinePoly(std::initializer_list<Monomial> terms);
  static AffinePoly from_terms(std::vector<Monomial> terms);
  static AffinePoly one() { return AffinePoly{Monomial{}}; }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::span<const Monomial> terms() const noexcept { return terms_; }

  AffinePoly& operator+=(const AffinePoly& other);
  friend AffinePoly operator+(AffinePoly a, const AffinePoly& b) { return a += b; }
  friend AffinePoly operator*(const AffinePoly& a, const AffinePoly& b);
  AffinePoly times(const Monomial& m) const;

  friend bool operator==(const AffinePoly&, const AffinePoly&) = default;

 private:
  std::vector<Monomial> terms_;
};

Monomial leading_term(const AffinePoly& p, const MonomialOrder& ord);
Monomial lowest_term(const AffinePoly& p, const MonomialOrder& ord);

/// Negative exponents of x (y) become powers of xbar (ybar).
AffinePoly laurent_to_affine(const LaurentPoly& p);
/// Inverse embedding: xbar -> x^-1, ybar -> y^-1 (mixed x*xbar collapse).
LaurentPoly affine_to_laurent(const AffinePoly& p);

/// Human-readable form, terms in descending `ord` order, e.g. "xb + x^5 + 1".
std::string print_affine(const AffinePoly& p, const MonomialOrder& ord);
std::string print_monomial(const Monomial& m);

}  // namespace anyonlab

#endif  // ANYONLAB_AFFINE_HPP
