#include "anyonlab/gf2_matrix.hpp"

#include <algorithm>
#include <bit>

#include "anyonlab/error.hpp"

namespace anyonlab {

bool BitVec::any() const noexcept {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVec::popcount() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

BitVec& BitVec::operator^=(const BitVec& o) {
  if (o.n_ != n_) throw InvalidInput("bit vector length mismatch");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
  return *this;
}

std::size_t BitVecHash::operator()(const BitVec& v) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ v.size();
  for (auto w : v.words()) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 33));
}

GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0) {}

GF2Matrix GF2Matrix::identity(std::size_t n) {
  GF2Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m.set(k, k, true);
  return m;
}

void GF2Matrix::set(std::size_t r, std::size_t c, bool v) noexcept {
  std::uint64_t& w = data_[r * wpr_ + c / 64];
  const std::uint64_t bit = std::uint64_t{1} << (c % 64);
  w = v ? (w | bit) : (w & ~bit);
}

std::size_t GF2Matrix::rank() const {
  std::vector<std::uint64_t> a = data_;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t piv = rank;
    while (piv < rows_ && !(a[piv * wpr_ + w] & bit)) ++piv;
    if (piv == rows_) continue;
    if (piv != rank)
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(piv * wpr_),
                       a.begin() + static_cast<std::ptrdiff_t>((piv + 1) * wpr_),
                       a.begin() + static_cast<std::ptrdiff_t>(rank * wpr_));
    const std::uint64_t* prow = &a[rank * wpr_];
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      std::uint64_t* row = &a[r * wpr_];
      if (!(row[w] & bit)) continue;
      // Words left of w are already zero in the pivot row.
      for (std::size_t k = w; k < wpr_; ++k) row[k] ^= prow[k];
    }
    ++rank;
  }
  return rank;
}

GF2Matrix GF2Matrix::transpose() const {
  GF2Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t w = 0; w < wpr_; ++w) {
      std::uint64_t word = data_[r * wpr_ + w];
      while (word) {
        const std::size_t c = 64 * w + static_cast<std::size_t>(std::countr_zero(word));
        t.set(c, r, true);
        word &= word - 1;
      }
    }
  return t;
}

GF2Matrix GF2Matrix::operator*(const GF2Matrix& o) const {
  if (cols_ != o.rows_) throw InvalidInput("matrix product shape mismatch");
  GF2Matrix p(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t w = 0; w < wpr_; ++w) {
      std::uint64_t word = data_[r * wpr_ + w];
      while (word) {
        const std::size_t k = 64 * w + static_cast<std::size_t>(std::countr_zero(word));
        for (std::size_t j = 0; j < p.wpr_; ++j) p.data_[r * p.wpr_ + j] ^= o.data_[k * o.wpr_ + j];
        word &= word - 1;
      }
    }
  return p;
}

BitVec GF2Matrix::apply(const BitVec& v) const {
  if (v.size() != cols_) throw InvalidInput("matrix-vector shape mismatch");
  BitVec out(rows_);
  const auto vw = v.words();
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < wpr_; ++w) acc ^= data_[r * wpr_ + w] & vw[w];
    if (std::popcount(acc) & 1) out.set(r, true);
  }
  return out;
}

GF2Matrix hstack(const GF2Matrix& a, const GF2Matrix& b) {
  if (a.rows_ != b.rows_) throw InvalidInput("hstack row mismatch");
  GF2Matrix m(a.rows_, a.cols_ + b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    std::copy_n(&a.data_[r * a.wpr_], a.wpr_, &m.data_[r * m.wpr_]);
    for (std::size_t c = 0; c < b.cols_; ++c)
      if (b.get(r, c)) m.set(r, a.cols_ + c, true);
  }
  return m;
}

GF2Matrix vstack(const GF2Matrix& a, const GF2Matrix& b) {
  if (a.cols_ != b.cols_) throw InvalidInput("vstack column mismatch");
  GF2Matrix m(a.rows_ + b.rows_, a.cols_);
  std::copy(a.data_.begin(), a.data_.end(), m.data_.begin());
  std::copy(b.data_.begin(), b.data_.end(), m.data_.begin() + static_cast<std::ptrdiff_t>(a.data_.size()));
  return m;
}

}  // namespace anyonlab
