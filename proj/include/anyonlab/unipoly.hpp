#ifndef ANYONLAB_UNIPOLY_HPP
#define ANYONLAB_UNIPOLY_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace anyonlab {

/// Univariate polynomial over F2, stored densely: bit k of the word array is
/// the coefficient of u^k. The word vector never has trailing zero words, so
/// the zero polynomial has no words at all.
class UniPoly {
 public:
  UniPoly() = default;
  /// Polynomial with the listed exponents set (duplicates cancel).
  UniPoly(std::initializer_list<unsigned> exponents);

  static UniPoly monomial(std::size_t k);
  static UniPoly one() { return monomial(0); }
  static UniPoly from_words(std::vector<std::uint64_t> words);

  bool is_zero() const noexcept { return words_.empty(); }
  bool is_one() const noexcept { return words_.size() == 1 && words_[0] == 1; }
  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept;
  /// Lowest exponent with a nonzero coefficient; -1 for zero.
  long low_degree() const noexcept;
  bool coeff(std::size_t k) const noexcept;
  void set_coeff(std::size_t k, bool value);
  std::vector<unsigned> exponents() const;
  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  UniPoly& operator+=(const UniPoly& other);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly shifted(std::size_t k) const;  // times u^k

  friend bool operator==(const UniPoly&, const UniPoly&) = default;
  /// Orders by degree, then coefficients from the top; used for deterministic sorting.
  friend bool operator<(const UniPoly& a, const UniPoly& b);

 private:
  void trim();
  std::vector<std::uint64_t> words_;
};

long uni_degree(const UniPoly& p);
/// Highest minus lowest nonzero exponent. Throws DomainError for zero.
long deg_spread(const UniPoly& p);
UniPoly uni_mul(const UniPoly& a, const UniPoly& b);
UniPoly uni_pow(const UniPoly& p, std::uint64_t n);
/// Quotient and remainder; throws DomainError on division by zero.
void uni_divmod(const UniPoly& a, const UniPoly& b, UniPoly& quot, UniPoly& rem);
UniPoly uni_mod(const UniPoly& a, const UniPoly& m);
UniPoly uni_div(const UniPoly& a, const UniPoly& b);
UniPoly uni_gcd(UniPoly a, UniPoly b);
UniPoly uni_derivative(const UniPoly& p);
/// a * b mod m.
UniPoly uni_mulmod(const UniPoly& a, const UniPoly& b, const UniPoly& m);
/// base^n mod m (n may be huge).
UniPoly uni_powmod(const UniPoly& base, std::uint64_t n, const UniPoly& m);
/// Square root of a polynomial whose odd coefficients vanish (p' = 0).
UniPoly uni_sqrt(const UniPoly& p);
/// p(u + 1).
UniPoly shift_substitute(const UniPoly& p);

/// e.g. "x^11 + x^10 + 1" with the chosen variable name.
std::string print_uni(const UniPoly& p, char var = 'x');

}  // namespace anyonlab

#endif  // ANYONLAB_UNIPOLY_HPP
