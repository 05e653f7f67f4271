#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "flatavoid/bigint.hpp"
#include "flatavoid/gf2.hpp"

namespace flatavoid {

// Binary linear code, stored canonically: the generator matrix is the RREF
// basis of the code and the parity check is the RREF basis of the dual.
// Both are computed at construction, so dual() is an exact involution and
// equality of codes is equality of generator matrices.
class LinearCode {
 public:
  // The [0, 0] code whose only word is the empty word.
  LinearCode() : length_(0) {}

  // Code spanned by the rows; they need not be independent.
  static LinearCode from_generator(std::size_t length, const BitMatrix& rows);

  // {0} in GF(2)^length.
  static LinearCode trivial(std::size_t length);

  // All of GF(2)^length.
  static LinearCode full(std::size_t length);

  std::size_t length() const { return length_; }
  std::size_t dimension() const { return gen_.rows(); }

  const BitMatrix& generator() const { return gen_; }
  const BitMatrix& parity_check() const { return pcheck_; }

  // Membership via the parity check: y is a codeword iff H y = 0.
  bool contains(const BitVector& y) const;

  LinearCode dual() const;

  std::size_t hash() const { return gen_.hash() ^ (length_ * 0x9e3779b97f4a7c15ull); }

  bool operator==(const LinearCode&) const = default;

 private:
  LinearCode(std::size_t length, BitMatrix gen, BitMatrix pcheck)
      : length_(length), gen_(std::move(gen)), pcheck_(std::move(pcheck)) {}

  std::size_t length_;
  BitMatrix gen_;     // RREF, rank = dimension
  BitMatrix pcheck_;  // RREF basis of the dual code
};

// Coset L + y0 of a linear code L. The stored offset is the canonical coset
// representative: it is reduced to zero on every pivot column of L's
// generator, so equal cosets compare equal field-by-field.
class AffineCode {
 public:
  AffineCode(LinearCode code, const BitVector& offset);

  const LinearCode& code() const { return code_; }
  const BitVector& offset() const { return offset_; }

  std::size_t length() const { return code_.length(); }
  std::size_t dimension() const { return code_.dimension(); }

  bool contains(const BitVector& y) const;

  bool operator==(const AffineCode&) const = default;

 private:
  LinearCode code_;
  BitVector offset_;
};

// Homogeneous weight enumerator W(x, y) = sum_w coeffs[w] x^w y^(length-w).
// coeffs[w] counts the words of Hamming weight w; coefficients are exact.
struct WeightEnumerator {
  std::size_t length = 0;
  std::vector<BigInt> coeffs;  // size length + 1

  bool operator==(const WeightEnumerator&) const = default;
};

BigInt evaluate(const WeightEnumerator& w, const BigInt& x, const BigInt& y);

// Weight histogram by walking all 2^dim codewords with a Gray-code XOR
// chain. Refused (std::invalid_argument) when dim > 28.
WeightEnumerator weight_enumerator_direct(const LinearCode& c);

// Coset weight histogram, same enumeration and the same dim <= 28 cap.
WeightEnumerator weight_enumerator(const AffineCode& c);

// Enumerator of the dual of a code of dimension `code_dim` whose enumerator
// is `w`: B_u = 2^(-code_dim) sum_w A_w K_u(w) with Krawtchouk numbers
// K_u(w) = sum_i (-1)^i C(w, i) C(len-w, u-i). Every division must be exact
// and every output coefficient nonnegative; anything else means `w` is not
// the enumerator of a [len, code_dim] code and raises std::invalid_argument.
WeightEnumerator macwilliams_transform(const WeightEnumerator& w,
                                       std::size_t code_dim);

// Weight enumerator of c, choosing the cheaper side: direct enumeration of
// c when dim <= length - dim, otherwise direct enumeration of the dual
// followed by the MacWilliams transform back. Refused when
// min(dim, length - dim) > 28.
WeightEnumerator weight_enumerator(const LinearCode& c);

// Every linear code of the given length exactly once, in (dimension, pivot
// set, free-bit pattern) order; returns how many were visited. Lengths
// above 5 are refused: the count grows like 2^(len^2/4).
std::uint64_t enumerate_all_codes(std::size_t length,
                                  const std::function<void(const LinearCode&)>& fn);

struct ValueCountReport {
  std::size_t length = 0;
  long long a = 0, b = 0;
  std::vector<BigInt> values;          // distinct W_C(a, b), ascending
  BigInt elementary_bound;             // from the value's magnitude alone
  std::optional<BigInt> dual_bound;    // only when b > |a|
  bool violated = false;               // distinct count exceeds a bound
};

// Distinct values of W_C(a, b) over all codes of the given length, checked
// against two upper bounds on how many values can occur: a magnitude bound
// of ((|a|+|b|)/g)^len values (doubled plus one when a b < 0, g = gcd), and,
// when b > |a|, a sharper bound (len+1) * (2b / gcd(b-a, b+a))^len obtained
// by pairing each code with its dual. a = 0 or b = 0 is refused.
ValueCountReport check_value_count_bounds(std::size_t length, long long a,
                                          long long b);

// --- file format ---------------------------------------------------------
//
//   length=<len> dim=<d>
//   <d generator rows as 0/1 strings, leftmost character = coordinate 1>
//   offset=<0/1 string>          (optional; makes the file an affine code)
//
// Blank lines are ignored. parse_error carries the 1-based line number.

struct CodeFile {
  LinearCode code;
  std::optional<BitVector> offset;  // canonical representative if present

  AffineCode affine() const {
    return AffineCode(code, offset ? *offset : BitVector(code.length()));
  }
};

CodeFile parse_code_file(std::istream& in);
CodeFile read_code_file(const std::string& path);

void write_code_file(std::ostream& out, const LinearCode& c);
void write_code_file(std::ostream& out, const AffineCode& c);

}  // namespace flatavoid

template <>
struct std::hash<flatavoid::LinearCode> {
  std::size_t operator()(const flatavoid::LinearCode& c) const {
    return c.hash();
  }
};
