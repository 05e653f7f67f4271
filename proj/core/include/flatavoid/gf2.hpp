#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "flatavoid/bigint.hpp"

namespace flatavoid {

// Vector over GF(2), packed 64 coordinates per word. Coordinate x_j of the
// usual 1-indexed notation lives at bit j-1, so the leftmost character of a
// string literal is bit 0 and equals the least significant bit of word 0.
// Trailing bits of the last word are kept zero; operator== relies on that.
class BitVector {
 public:
  BitVector() = default;

  explicit BitVector(std::size_t len) : len_(len), words_((len + 63) / 64) {}

  // "1001" -> coordinates x1=1, x2=0, x3=0, x4=1.
  static BitVector from_string(std::string_view bits);

  // Low `len` bits of `code`, bit i of the code becoming coordinate i.
  static BitVector from_code(std::uint64_t code, std::size_t len);

  std::size_t size() const { return len_; }

  bool get(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(std::size_t i, bool v) {
    std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVector& operator^=(const BitVector& o);

  friend BitVector operator^(BitVector a, const BitVector& b) {
    a ^= b;
    return a;
  }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (std::uint64_t w : words_)
      if (w) return true;
    return false;
  }

  bool is_zero() const { return !any(); }

  // Parity of the AND of two equal-length vectors (the GF(2) inner product).
  bool dot(const BitVector& o) const;

  // Position of the first set bit; size() if none.
  std::size_t first_set() const;

  // The integer whose bit i is coordinate i. Requires size() <= 64.
  std::uint64_t code() const;

  std::string str() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

  std::size_t hash() const;

  bool operator==(const BitVector&) const = default;

 private:
  std::size_t len_ = 0;
  std::vector<std::uint64_t> words_;
};

// Row-major matrix over GF(2). The column count is tracked independently of
// the rows so a matrix with zero rows still knows its width.
class BitMatrix {
 public:
  BitMatrix() = default;

  BitMatrix(std::size_t rows, std::size_t cols)
      : cols_(cols), rows_(rows, BitVector(cols)) {}

  explicit BitMatrix(std::size_t cols) : cols_(cols) {}

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_strings(const std::vector<std::string>& rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  const BitVector& row(std::size_t i) const { return rows_[i]; }
  BitVector& row(std::size_t i) { return rows_[i]; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }

  void append_row(BitVector r);

  std::size_t hash() const;

  bool operator==(const BitMatrix&) const = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

struct RrefResult {
  BitMatrix matrix;                 // reduced row echelon form, no zero rows
  std::vector<std::size_t> pivots;  // pivot column of each remaining row
};

// Gauss-Jordan elimination. Pivot columns are strictly increasing, each
// pivot column has exactly one 1, and all-zero rows are dropped, so the
// result is the canonical basis of the row space: two matrices have equal
// row spaces iff their RrefResult::matrix agree.
RrefResult rref(const BitMatrix& m);

std::size_t rank(const BitMatrix& m);

// Basis of {x : m x = 0}, one row per free column of m, ordered by free
// column. Rows are independent but not themselves in RREF; apply rref() for
// a canonical form. Empty matrix when the nullspace is trivial.
BitMatrix nullspace_basis(const BitMatrix& m);

// m v over GF(2); v.size() must equal m.cols().
BitVector matvec(const BitMatrix& m, const BitVector& v);

BigInt pow2(std::size_t e);

// C(n, k), exact.
BigInt binomial(std::size_t n, std::size_t k);

// Gaussian binomial [n k]_2: the number of k-dimensional subspaces of
// GF(2)^n. Computed as the exact product of (2^(n-k+i)-1)/(2^i-1) for
// i = 1..k; each partial product is integral. Throws std::invalid_argument
// if k > n.
BigInt gaussian_binomial(std::size_t n, std::size_t k);

}  // namespace flatavoid

template <>
struct std::hash<flatavoid::BitVector> {
  std::size_t operator()(const flatavoid::BitVector& v) const {
    return v.hash();
  }
};

template <>
struct std::hash<flatavoid::BitMatrix> {
  std::size_t operator()(const flatavoid::BitMatrix& m) const {
    return m.hash();
  }
};
