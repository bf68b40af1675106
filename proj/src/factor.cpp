#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "anyonlab/error.hpp"
#include "anyonlab/periods.hpp"

namespace anyonlab {

namespace {

const UniPoly kU{1};

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
  std::uint64_t r = 1 % n;
  a %= n;
  while (e) {
    if (e & 1) r = mulmod64(r, a, n);
    a = mulmod64(a, a, n);
    e >>= 1;
  }
  return r;
}

std::uint64_t pollard_rho(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  // Brent's variant; constants walk deterministically from c = 1.
  for (std::uint64_t c = 1;; ++c) {
    auto step = [&](std::uint64_t v) { return (mulmod64(v, v, n) + c) % n; };
    std::uint64_t y = 2, x = 2, d = 1, q = 1, ys = 2;
    std::uint64_t r = 1;
    const std::uint64_t batch = 128;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = step(y);
      for (std::uint64_t k = 0; k < r && d == 1; k += batch) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(batch, r - k); ++i) {
          y = step(y);
          q = mulmod64(q, x > y ? x - y : y - x, n);
        }
        d = std::gcd(q, n);
      }
      r *= 2;
    } while (d == 1);
    if (d == n) {
      do {
        ys = step(ys);
        d = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (d == 1);
    }
    if (d != n) return d;
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const std::uint64_t d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

// u^(2^k) mod p by repeated squaring.
UniPoly frobenius(UniPoly a, unsigned k, const UniPoly& p) {
  for (unsigned i = 0; i < k; ++i) a = uni_mulmod(a, a, p);
  return a;
}

// f is squarefree with all irreducible factors of degree d.
void equal_degree_split(const UniPoly& f, unsigned d, std::vector<UniPoly>& out) {
  const long n = f.degree();
  if (n == static_cast<long>(d)) {
    out.push_back(f);
    return;
  }
  std::mt19937_64 gen(0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(n) ^ (static_cast<std::uint64_t>(d) << 32));
  for (;;) {
    std::vector<std::uint64_t> words(static_cast<std::size_t>(n + 63) / 64);
    for (auto& w : words) w = gen();
    if (n % 64) words.back() &= (std::uint64_t{1} << (n % 64)) - 1;
    const UniPoly a = UniPoly::from_words(std::move(words));
    if (a.degree() < 1) continue;
    // Absolute trace of a in each residue field GF(2^d).
    UniPoly t = a, sq = a;
    for (unsigned i = 1; i < d; ++i) {
      sq = uni_mulmod(sq, sq, f);
      t += sq;
    }
    if (t.is_zero()) continue;
    const UniPoly g = uni_gcd(f, t);
    if (g.degree() > 0 && g.degree() < n) {
      equal_degree_split(g, d, out);
      equal_degree_split(uni_div(f, g), d, out);
      return;
    }
  }
}

// Irreducible factors of a squarefree polynomial.
std::vector<UniPoly> factor_squarefree(UniPoly f) {
  std::vector<UniPoly> out;
  UniPoly h = uni_mod(kU, f);
  for (unsigned d = 1; f.degree() >= 2 * static_cast<long>(d); ++d) {
    h = uni_mulmod(h, h, f);
    const UniPoly g = uni_gcd(f, h + kU);
    if (!g.is_one()) {
      equal_degree_split(g, d, out);
      f = uni_div(f, g);
      h = uni_mod(h, f);
    }
  }
  if (f.degree() > 0) out.push_back(f);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  // These bases are deterministic for all 64-bit n.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> factor_integer(std::uint64_t n) {
  if (n == 0) throw InvalidInput("cannot factor zero");
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p < 1'000'000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  }
  factor_into(n, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FactorPower> squarefree_decomposition(const UniPoly& p) {
  if (p.is_zero()) throw InvalidInput("squarefree decomposition of zero");
  std::vector<FactorPower> out;
  if (p.degree() == 0) return out;
  const UniPoly dp = uni_derivative(p);
  if (dp.is_zero()) {
    for (auto fp : squarefree_decomposition(uni_sqrt(p))) {
      fp.multiplicity *= 2;
      out.push_back(std::move(fp));
    }
    return out;
  }
  UniPoly c = uni_gcd(p, dp);
  UniPoly w = uni_div(p, c);
  for (unsigned i = 1; !w.is_one(); ++i) {
    const UniPoly y = uni_gcd(w, c);
    const UniPoly fac = uni_div(w, y);
    if (!fac.is_one()) out.push_back({fac, i});
    w = y;
    c = uni_div(c, y);
  }
  if (!c.is_one()) {
    for (auto fp : squarefree_decomposition(uni_sqrt(c))) {
      fp.multiplicity *= 2;
      out.push_back(std::move(fp));
    }
  }
  return out;
}

Factorization factor_univariate(const UniPoly& p) {
  if (p.is_zero() || p.degree() < 1) throw InvalidInput("factorization needs a nonconstant polynomial");
  std::map<UniPoly, unsigned> acc;
  for (const auto& sf : squarefree_decomposition(p))
    for (auto& q : factor_squarefree(sf.factor)) acc[q] += sf.multiplicity;
  Factorization out;
  for (auto& [q, m] : acc) out.push_back({q, m});
  return out;
}

bool is_irreducible(const UniPoly& p) {
  const long n = p.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const auto un = static_cast<unsigned>(n);
  if (!(frobenius(kU, un, p) == uni_mod(kU, p))) return false;
  std::vector<std::uint64_t> primes = factor_integer(un);
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (auto q : primes) {
    const UniPoly h = frobenius(kU, un / static_cast<unsigned>(q), p) + kU;
    if (!uni_gcd(p, h).is_one()) return false;
  }
  return true;
}

UniPoly expand(const Factorization& f) {
  UniPoly out = UniPoly::one();
  for (const auto& fp : f) out = out * uni_pow(fp.factor, fp.multiplicity);
  return out;
}

std::uint64_t irreducible_period(const UniPoly& p, unsigned degree_cap) {
  if (p.degree() < 1) throw InvalidInput("period of a constant polynomial");
  if (p == kU) throw InvalidInput("u has no period");
  const long d = p.degree();
  if (d > static_cast<long>(degree_cap) || d > 64)
    throw CapExceeded("degree " + std::to_string(d) + " exceeds the period degree cap");
  const std::uint64_t n = d == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1;
  std::uint64_t e = n;
  std::vector<std::uint64_t> primes = factor_integer(n);
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (auto q : primes) {
    while (e % q == 0 && uni_powmod(kU, e / q, p).is_one()) e /= q;
  }
  if (!uni_powmod(kU, e, p).is_one()) throw InternalError("polynomial is not irreducible: " + print_uni(p));
  return e;
}

std::uint64_t polynomial_period(const UniPoly& p, unsigned degree_cap) {
  if (p.is_zero()) throw InvalidInput("period of the zero polynomial");
  if (!p.coeff(0)) throw InvalidInput("period needs a polynomial prime to u");
  if (p.is_one()) return 1;
  std::uint64_t l = 1;
  unsigned maxm = 1;
  for (const auto& fp : factor_univariate(p)) {
    const std::uint64_t e = irreducible_period(fp.factor, degree_cap);
    const std::uint64_t g = std::gcd(l, e);
    if (__builtin_mul_overflow(l / g, e, &l)) throw OverflowError("polynomial period exceeds 64 bits");
    maxm = std::max(maxm, fp.multiplicity);
  }
  std::uint64_t t = 1;
  while (t < maxm) t *= 2;
  std::uint64_t out;
  if (__builtin_mul_overflow(l, t, &out)) throw OverflowError("polynomial period exceeds 64 bits");
  return out;
}

}  // namespace anyonlab
