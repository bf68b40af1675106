#ifndef ANYONLAB_GF2_MATRIX_HPP
#define ANYONLAB_GF2_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace anyonlab {

/// Packed bit vector over F2.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const noexcept { return n_; }
  bool get(std::size_t k) const noexcept { return (words_[k / 64] >> (k % 64)) & 1U; }
  void set(std::size_t k, bool v) noexcept {
    const std::uint64_t bit = std::uint64_t{1} << (k % 64);
    words_[k / 64] = v ? (words_[k / 64] | bit) : (words_[k / 64] & ~bit);
  }
  void flip(std::size_t k) noexcept { words_[k / 64] ^= std::uint64_t{1} << (k % 64); }
  bool any() const noexcept;
  std::size_t popcount() const noexcept;
  BitVec& operator^=(const BitVec& o);
  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }

  friend bool operator==(const BitVec&, const BitVec&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitVecHash {
  std::size_t operator()(const BitVec& v) const noexcept;
};

/// Dense F2 matrix with rows packed into 64-bit words.
class GF2Matrix {
 public:
  GF2Matrix() = default;
  GF2Matrix(std::size_t rows, std::size_t cols);
  static GF2Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool get(std::size_t r, std::size_t c) const noexcept {
    return (data_[r * wpr_ + c / 64] >> (c % 64)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool v) noexcept;
  void flip(std::size_t r, std::size_t c) noexcept { data_[r * wpr_ + c / 64] ^= std::uint64_t{1} << (c % 64); }

  /// Rank by Gaussian elimination, pivot columns scanned left to right.
  std::size_t rank() const;
  GF2Matrix transpose() const;
  /// Matrix product over F2; throws InvalidInput on shape mismatch.
  GF2Matrix operator*(const GF2Matrix& o) const;
  BitVec apply(const BitVec& v) const;

  friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<std::uint64_t> data_;

  friend GF2Matrix hstack(const GF2Matrix&, const GF2Matrix&);
  friend GF2Matrix vstack(const GF2Matrix&, const GF2Matrix&);
};

/// [A | B]
GF2Matrix hstack(const GF2Matrix& a, const GF2Matrix& b);
/// [A ; B]
GF2Matrix vstack(const GF2Matrix& a, const GF2Matrix& b);

}  // namespace anyonlab

#endif  // ANYONLAB_GF2_MATRIX_HPP
