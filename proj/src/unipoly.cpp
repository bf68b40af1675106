#include "anyonlab/unipoly.hpp"

#include <algorithm>
#include <bit>

#include "anyonlab/error.hpp"

namespace anyonlab {

UniPoly::UniPoly(std::initializer_list<unsigned> exponents) {
  for (unsigned k : exponents) set_coeff(k, !coeff(k));
}

UniPoly UniPoly::monomial(std::size_t k) {
  UniPoly p;
  p.set_coeff(k, true);
  return p;
}

UniPoly UniPoly::from_words(std::vector<std::uint64_t> words) {
  UniPoly p;
  p.words_ = std::move(words);
  p.trim();
  return p;
}

void UniPoly::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

long UniPoly::degree() const noexcept {
  if (words_.empty()) return -1;
  return static_cast<long>(64 * (words_.size() - 1) + 63 - std::countl_zero(words_.back()));
}

long UniPoly::low_degree() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0) return static_cast<long>(64 * w + std::countr_zero(words_[w]));
  return -1;
}

bool UniPoly::coeff(std::size_t k) const noexcept {
  const std::size_t w = k / 64;
  return w < words_.size() && ((words_[w] >> (k % 64)) & 1U);
}

void UniPoly::set_coeff(std::size_t k, bool value) {
  const std::size_t w = k / 64;
  if (w >= words_.size()) {
    if (!value) return;
    words_.resize(w + 1, 0);
  }
  const std::uint64_t bit = std::uint64_t{1} << (k % 64);
  words_[w] = value ? (words_[w] | bit) : (words_[w] & ~bit);
  trim();
}

std::vector<unsigned> UniPoly::exponents() const {
  std::vector<unsigned> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t word = words_[w];
    while (word) {
      out.push_back(static_cast<unsigned>(64 * w + std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t w = 0; w < other.words_.size(); ++w) words_[w] ^= other.words_[w];
  trim();
  return *this;
}

UniPoly UniPoly::shifted(std::size_t k) const {
  if (is_zero()) return {};
  const std::size_t ws = k / 64, bs = k % 64;
  std::vector<std::uint64_t> out(words_.size() + ws + 1, 0);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    out[w + ws] ^= words_[w] << bs;
    if (bs) out[w + ws + 1] ^= words_[w] >> (64 - bs);
  }
  return from_words(std::move(out));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const UniPoly& small = a.words_.size() <= b.words_.size() ? a : b;
  const UniPoly& big = (&small == &a) ? b : a;
  std::vector<std::uint64_t> out(a.words_.size() + b.words_.size() + 1, 0);
  for (unsigned k : small.exponents()) {
    const std::size_t ws = k / 64, bs = k % 64;
    for (std::size_t w = 0; w < big.words_.size(); ++w) {
      out[w + ws] ^= big.words_[w] << bs;
      if (bs) out[w + ws + 1] ^= big.words_[w] >> (64 - bs);
    }
  }
  return UniPoly::from_words(std::move(out));
}

bool operator<(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t w = a.words_.size(); w-- > 0;)
    if (a.words_[w] != b.words_[w]) return a.words_[w] < b.words_[w];
  return false;
}

long uni_degree(const UniPoly& p) { return p.degree(); }

long deg_spread(const UniPoly& p) {
  if (p.is_zero()) throw DomainError("deg_spread of the zero polynomial");
  return p.degree() - p.low_degree();
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) { return a * b; }

UniPoly uni_pow(const UniPoly& p, std::uint64_t n) {
  UniPoly result = UniPoly::one();
  UniPoly base = p;
  while (n) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n) base = base * base;
  }
  return result;
}

void uni_divmod(const UniPoly& a, const UniPoly& b, UniPoly& quot, UniPoly& rem) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  rem = a;
  quot = UniPoly{};
  const long db = b.degree();
  while (!rem.is_zero() && rem.degree() >= db) {
    const long shift = rem.degree() - db;
    rem += b.shifted(static_cast<std::size_t>(shift));
    quot.set_coeff(static_cast<std::size_t>(shift), true);
  }
}

UniPoly uni_mod(const UniPoly& a, const UniPoly& m) {
  if (m.is_zero()) throw DomainError("polynomial reduction modulo zero");
  const long dm = m.degree();
  if (a.degree() < dm) return a;
  // In-place word-level reduction: cheaper than building shifted copies.
  std::vector<std::uint64_t> r = a.words();
  const auto& mw = m.words();
  for (long d = a.degree(); d >= dm; --d) {
    if (!((r[static_cast<std::size_t>(d) / 64] >> (d % 64)) & 1U)) continue;
    const std::size_t shift = static_cast<std::size_t>(d - dm);
    const std::size_t ws = shift / 64, bs = shift % 64;
    for (std::size_t w = 0; w < mw.size(); ++w) {
      r[w + ws] ^= mw[w] << bs;
      if (bs && w + ws + 1 < r.size()) r[w + ws + 1] ^= mw[w] >> (64 - bs);
    }
  }
  return UniPoly::from_words(std::move(r));
}

UniPoly uni_div(const UniPoly& a, const UniPoly& b) {
  UniPoly q, r;
  uni_divmod(a, b, q, r);
  return q;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
  while (!b.is_zero()) {
    UniPoly r = uni_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;  // monic automatically over F2
}

UniPoly uni_derivative(const UniPoly& p) {
  // d/du u^k = k u^(k-1): only odd k survive in characteristic 2.
  UniPoly d;
  for (unsigned k : p.exponents())
    if (k % 2 == 1) d.set_coeff(k - 1, true);
  return d;
}

UniPoly uni_mulmod(const UniPoly& a, const UniPoly& b, const UniPoly& m) { return uni_mod(a * b, m); }

UniPoly uni_powmod(const UniPoly& base, std::uint64_t n, const UniPoly& m) {
  UniPoly result = uni_mod(UniPoly::one(), m);
  UniPoly b = uni_mod(base, m);
  while (n) {
    if (n & 1U) result = uni_mulmod(result, b, m);
    n >>= 1U;
    if (n) b = uni_mulmod(b, b, m);
  }
  return result;
}

UniPoly uni_sqrt(const UniPoly& p) {
  UniPoly r;
  for (unsigned k : p.exponents()) {
    if (k % 2 != 0) throw DomainError("uni_sqrt: polynomial is not a square");
    r.set_coeff(k / 2, true);
  }
  return r;
}

UniPoly shift_substitute(const UniPoly& p) {
  // Horner in (u + 1): r <- r * (u + 1) + c_k from the top coefficient down.
  UniPoly r;
  const UniPoly u_plus_1{0, 1};
  for (long k = p.degree(); k >= 0; --k) {
    r = r * u_plus_1;
    if (p.coeff(static_cast<std::size_t>(k))) r += UniPoly::one();
  }
  return r;
}

std::string print_uni(const UniPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto ex = p.exponents();
  for (auto it = ex.rbegin(); it != ex.rend(); ++it) {
    if (!out.empty()) out += " + ";
    if (*it == 0)
      out += '1';
    else if (*it == 1)
      out += var;
    else
      out += std::string(1, var) + '^' + std::to_string(*it);
  }
  return out;
}

}  // namespace anyonlab
