#ifndef ANYONLAB_LAURENT_HPP
#define ANYONLAB_LAURENT_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace anyonlab {

/// Exponent pair (i, j) standing for the monomial x^i y^j.
struct Exponent {
  std::int64_t i = 0;
  std::int64_t j = 0;

  friend bool operator==(const Exponent&, const Exponent&) = default;
  // y-exponent first: matches the canonical print order.
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
    if (auto c = a.j <=> b.j; c != 0) return c;
    return a.i <=> b.i;
  }
};

Exponent operator+(Exponent a, Exponent b);  // checked
Exponent operator-(Exponent a);              // checked

/// Element of F2[x^{+-1}, y^{+-1}].
///
/// Coefficients are implicit: a term is either present (coefficient 1) or
/// absent. Terms are kept sorted ascending by (j, i) with no duplicates, so
/// two polynomials are equal iff their term vectors are equal.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::initializer_list<Exponent> terms);

  /// Builds from an arbitrary multiset of exponents; pairs cancel mod 2.
  static LaurentPoly from_terms(std::vector<Exponent> terms);
  static LaurentPoly monomial(std::int64_t i, std::int64_t j) { return LaurentPoly{{i, j}}; }
  static LaurentPoly one() { return monomial(0, 0); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  std::size_t size() const noexcept { return terms_.size(); }
  std::span<const Exponent> terms() const noexcept { return terms_; }
  bool contains(Exponent e) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  /// Multiplies by x^e.i y^e.j.
  LaurentPoly translated(Exponent e) const;
  LaurentPoly pow(std::uint64_t n) const;

  /// Smallest term in (j, i) order; used as a canonical translation anchor.
  Exponent min_term() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::vector<Exponent> terms_;
};

/// Parses the textual grammar used by the CLI and JSON documents:
/// a '+'-separated sum of terms, each either "1", "0" or a product of
/// factors x, y, x^k, y^k (k a signed integer), optionally joined by '*'.
/// Whitespace is ignored. Throws ParseError / OverflowError.
LaurentPoly parse_poly(std::string_view text);

/// Canonical text: terms in (j desc, i desc) order, zero prints as "0".
std::string print_poly(const LaurentPoly& p);

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);

/// p(x^-1, y^-1).
LaurentPoly spatial_inversion(const LaurentPoly& p);

/// True iff p = t * q for some monomial t (q nonzero).
bool proportional(const LaurentPoly& p, const LaurentPoly& q);

}  // namespace anyonlab

#endif  // ANYONLAB_LAURENT_HPP
