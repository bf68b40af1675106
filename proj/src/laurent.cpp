#include "anyonlab/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "anyonlab/error.hpp"

namespace anyonlab {

namespace {

constexpr std::int64_t kExpMax = std::numeric_limits<std::int64_t>::max();

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r) || r == std::numeric_limits<std::int64_t>::min())
    throw OverflowError("exponent overflow");
  return r;
}

// Sorts and removes pairs of equal exponents (coefficients live in F2).
void normalize(std::vector<Exponent>& terms) {
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

Exponent operator+(Exponent a, Exponent b) { return {checked_add(a.i, b.i), checked_add(a.j, b.j)}; }

Exponent operator-(Exponent a) { return {checked_add(0, -a.i), checked_add(0, -a.j)}; }

LaurentPoly::LaurentPoly(std::initializer_list<Exponent> terms) : terms_(terms) { normalize(terms_); }

LaurentPoly LaurentPoly::from_terms(std::vector<Exponent> terms) {
  LaurentPoly p;
  p.terms_ = std::move(terms);
  normalize(p.terms_);
  return p;
}

bool LaurentPoly::contains(Exponent e) const { return std::binary_search(terms_.begin(), terms_.end(), e); }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  std::vector<Exponent> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
                                std::back_inserter(merged));
  terms_ = std::move(merged);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  std::vector<Exponent> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back(s + t);
  return LaurentPoly::from_terms(std::move(prod));
}

LaurentPoly LaurentPoly::translated(Exponent e) const {
  LaurentPoly p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back(t + e);
  return p;  // translation preserves the (j, i) order
}

LaurentPoly LaurentPoly::pow(std::uint64_t n) const {
  LaurentPoly result = one();
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

Exponent LaurentPoly::min_term() const {
  if (terms_.empty()) throw DomainError("min_term of the zero polynomial");
  return terms_.front();
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

LaurentPoly spatial_inversion(const LaurentPoly& p) {
  std::vector<Exponent> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back(-t);
  return LaurentPoly::from_terms(std::move(terms));
}

bool proportional(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw DomainError("proportionality against the zero polynomial");
  if (p.size() != q.size()) return false;
  const Exponent shift = p.min_term() + (-q.min_term());
  return q.translated(shift) == p;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  LaurentPoly parse() {
    std::vector<Exponent> terms;
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
    while (true) {
      skip_ws();
      if (peek() == '0' && !is_digit_at(pos_ + 1)) {
        ++pos_;
      } else {
        terms.push_back(parse_term());
      }
      skip_ws();
      if (pos_ == text_.size()) break;
      if (peek() != '+') throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
      ++pos_;
    }
    return LaurentPoly::from_terms(std::move(terms));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool is_digit_at(std::size_t p) const {
    return p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]));
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Exponent parse_term() {
    skip_ws();
    if (peek() == '1' && !is_digit_at(pos_ + 1)) {
      ++pos_;
      return {0, 0};
    }
    Exponent e{0, 0};
    bool any = false;
    while (true) {
      skip_ws();
      const char c = peek();
      if (c == 'x' || c == 'y') {
        ++pos_;
        std::int64_t k = 1;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          k = parse_int();
        }
        e = (c == 'x') ? e + Exponent{k, 0} : e + Exponent{0, k};
        any = true;
      } else if (c == '*' && any) {
        ++pos_;
        skip_ws();
        if (peek() != 'x' && peek() != 'y') throw ParseError("expected x or y after '*'", pos_);
      } else {
        break;
      }
    }
    if (!any) throw ParseError("expected a term", pos_);
    return e;
  }

  std::int64_t parse_int() {
    skip_ws();
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = peek() == '-';
      ++pos_;
      skip_ws();
    }
    if (!is_digit_at(pos_)) throw ParseError("expected an integer exponent", pos_);
    const std::size_t start = pos_;
    std::int64_t v = 0;
    while (is_digit_at(pos_)) {
      const int d = text_[pos_] - '0';
      if (v > (kExpMax - d) / 10) throw OverflowError("exponent exceeds 63-bit range at byte " + std::to_string(start));
      v = v * 10 + d;
      ++pos_;
    }
    return neg ? -v : v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void append_factor(std::string& out, char var, std::int64_t k) {
  if (k == 0) return;
  if (!out.empty() && out.back() != ' ') out += '*';
  out += var;
  if (k != 1) out += '^' + std::to_string(k);
}

}  // namespace

LaurentPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

std::string print_poly(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (it != terms.rbegin()) out += " + ";
    if (it->i == 0 && it->j == 0) {
      out += '1';
      continue;
    }
    std::string term;
    append_factor(term, 'x', it->i);
    append_factor(term, 'y', it->j);
    out += term;
  }
  return out;
}

}  // namespace anyonlab
