#include "flatavoid/gf2.hpp"

#include <stdexcept>

namespace flatavoid {

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i, true);
    else if (bits[i] != '0')
      throw std::invalid_argument("bit string must consist of 0s and 1s");
  }
  return v;
}

BitVector BitVector::from_code(std::uint64_t code, std::size_t len) {
  if (len > 64) throw std::invalid_argument("from_code: length exceeds 64");
  if (len < 64 && (code >> len) != 0)
    throw std::invalid_argument("from_code: code has bits beyond the length");
  BitVector v(len);
  if (len) v.words_[0] = code;
  return v;
}

BitVector& BitVector::operator^=(const BitVector& o) {
  if (len_ != o.len_) throw std::invalid_argument("xor: length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

bool BitVector::dot(const BitVector& o) const {
  if (len_ != o.len_) throw std::invalid_argument("dot: length mismatch");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i)
    acc ^= words_[i] & o.words_[i];
  return std::popcount(acc) & 1;
}

std::size_t BitVector::first_set() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return (i << 6) + std::countr_zero(words_[i]);
  return len_;
}

std::uint64_t BitVector::code() const {
  if (len_ > 64) throw std::invalid_argument("code: length exceeds 64");
  return words_.empty() ? 0 : words_[0];
}

std::string BitVector::str() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

std::size_t BitVector::hash() const {
  // FNV-1a over the words, seeded with the length.
  std::uint64_t h = 1469598103934665603ull ^ len_;
  for (std::uint64_t w : words_) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
  if (rows.empty()) return BitMatrix();
  BitMatrix m(rows[0].size());
  for (const std::string& r : rows) m.append_row(BitVector::from_string(r));
  return m;
}

void BitMatrix::append_row(BitVector r) {
  if (rows_.empty() && cols_ == 0)
    cols_ = r.size();
  else if (r.size() != cols_)
    throw std::invalid_argument("append_row: width mismatch");
  rows_.push_back(std::move(r));
}

std::size_t BitMatrix::hash() const {
  std::uint64_t h = 1469598103934665603ull ^ (cols_ * 0x9e3779b97f4a7c15ull);
  for (const BitVector& r : rows_) {
    h ^= r.hash();
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

RrefResult rref(const BitMatrix& m) {
  std::vector<BitVector> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));

  std::vector<std::size_t> pivots;
  std::size_t next = 0;  // first row not yet fixed
  for (std::size_t col = 0; col < m.cols() && next < rows.size(); ++col) {
    std::size_t pivot = next;
    while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[next], rows[pivot]);
    // Clear the column everywhere else: Jordan, not just Gauss.
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != next && rows[r].get(col)) rows[r] ^= rows[next];
    pivots.push_back(col);
    ++next;
  }

  BitMatrix out(m.cols());
  for (std::size_t r = 0; r < next; ++r) out.append_row(std::move(rows[r]));
  return {std::move(out), std::move(pivots)};
}

std::size_t rank(const BitMatrix& m) { return rref(m).matrix.rows(); }

BitMatrix nullspace_basis(const BitMatrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;

  BitMatrix out(m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    // Basis vector: 1 at the free column, and at pivot column p_i the entry
    // of RREF row i in the free column (so that every RREF row dots to 0).
    BitVector v(m.cols());
    v.set(free, true);
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      if (r.matrix.get(i, free)) v.set(r.pivots[i], true);
    out.append_row(std::move(v));
  }
  return out;
}

BitVector matvec(const BitMatrix& m, const BitVector& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("matvec: size mismatch");
  BitVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m.row(i).dot(v)) out.set(i, true);
  return out;
}

BigInt pow2(std::size_t e) { return BigInt(1) << e; }

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r *= BigInt(n - k + i);
    r /= BigInt(i);  // exact: r is C(n-k+i, i) at this point
  }
  return r;
}

BigInt gaussian_binomial(std::size_t n, std::size_t k) {
  if (k > n) throw std::invalid_argument("gaussian_binomial: k > n");
  BigInt r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r *= pow2(n - k + i) - 1;
    r /= pow2(i) - 1;  // exact: r is [n-k+i, i]_2 at this point
  }
  return r;
}

}  // namespace flatavoid
