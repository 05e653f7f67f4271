#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flatavoid/bigint.hpp"
#include "flatavoid/codes.hpp"

namespace flatavoid {

// Word over the two-letter transform alphabet. Reading order matters: the
// word acts as a composition, rightmost letter first (see apply_word).
struct TransformWord {
  std::string letters;  // over {'a', 'b'}

  static TransformWord parse(std::string_view s);

  std::size_t length() const { return letters.size(); }

  bool operator==(const TransformWord&) const = default;
};

// Row-major 2x2 integer matrix, exact arithmetic throughout. Entries of
// word products grow like 64^r, hence unbounded precision.
struct Mat2 {
  BigInt m00, m01, m10, m11;

  static Mat2 identity() { return {1, 0, 0, 1}; }

  Mat2 operator*(const Mat2& o) const {
    return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
            m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
  }

  BigInt det() const { return m00 * m11 - m01 * m10; }

  bool operator==(const Mat2&) const = default;

  // Lexicographic by entry, for ordered containers.
  friend bool operator<(const Mat2& a, const Mat2& b) {
    if (a.m00 != b.m00) return a.m00 < b.m00;
    if (a.m01 != b.m01) return a.m01 < b.m01;
    if (a.m10 != b.m10) return a.m10 < b.m10;
    return a.m11 < b.m11;
  }
};

// The weight-enumerator evaluation pair (W(1,3), W(3,1)) that the letter
// matrices act on.
struct VPair {
  BigInt w13, w31;

  bool operator==(const VPair&) const = default;
};

// M_a = [[9,0],[0,1]], M_b = [[10,6],[6,10]].
const Mat2& letter_matrix(char letter);

// Appends two zero coordinates: length + 2, dimension unchanged. Effect on
// the weight enumerator: W -> y^2 W(x, y).
LinearCode transform_a(const LinearCode& c);

// transform_a plus the span of (1..1,1,0) and (1..1,0,1): length + 2,
// dimension + 2. Effect: W -> (x^2+y^2) W(x,y) + 2xy W(y,x).
LinearCode transform_b(const LinearCode& c);

// Appends one zero coordinate: length + 1, dimension unchanged; W(1,3)
// exactly triples.
LinearCode pad_zero(const LinearCode& c);

// Applies the letters right to left (composition order): for f = "ab" the
// b step runs first. Noncommutative: "ab" and "ba" on the empty code give
// W(1,3) = 144 vs 96.
LinearCode apply_word(const TransformWord& f, const LinearCode& c);

// Product of the letter matrices in the order written, so that
// v(apply_word(f, c)) = word_matrix(f) * v(c) holds literally.
Mat2 word_matrix(const TransformWord& f);

VPair apply_matrix(const Mat2& m, const VPair& v);

// (W_c(1,3), W_c(3,1)) via the weight enumerator; subject to the codes
// module enumeration caps.
VPair v_of_code(const LinearCode& c);

// Same pair for apply_word(f, c) given v_of_code(c), via the matrix
// recurrence only — no enumeration, so no caps.
VPair v_of_word(const TransformWord& f, const VPair& seed);

struct SizeReport {
  int r = 0;
  bool balanced_only = false;
  std::vector<BigInt> values;         // distinct W(1,3) over the words, ascending
  std::vector<BigInt> avoider_sizes;  // 2^(4r) - value, ascending
  // Proven floor on |values| for the full word set (absent for
  // balanced-only reports and r = 0).
  std::optional<BigInt> lower_bound;

  std::size_t count() const { return values.size(); }
};

// Walks all 2^r words (balanced_only: exactly floor(r/2) letters a and
// ceil(r/2) letters b), deduplicating the first entries of M_f (1,1)^T.
// The avoider sizes are the set sizes 2^(4r) - v the code-based
// construction realizes at k = 3 from these words. r above 24 is refused.
SizeReport distinct_sizes(int r, bool balanced_only = false);

// Smallest B >= 1 with B^3 >= C(r-1, floor((r-1)/2)): the proven lower
// bound on distinct_sizes(r, false).count(). Requires r >= 1.
BigInt distinct_size_lower_bound(int r);

// True iff for every r <= r_max all 2^r word products are pairwise
// distinct (a consequence of the letter matrices generating a free group).
// r_max above 14 is refused.
bool check_free_distinctness(int r_max);

struct PingPongReport {
  std::size_t x1_samples = 0;
  std::size_t x2_samples = 0;
  std::size_t skipped = 0;  // samples on a region boundary
  std::uint64_t checks = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// Region X1: |y|/|x| < 1/3 or > 3; region X2: 1/3 < |y|/|x| < 3 (x, y
// nonzero). For each sample in X2 checks that M_a^m lands in X1 for every
// nonzero |m| <= max_abs_exponent, and for each sample in X1 that M_b^m
// lands in X2 — exact rational arithmetic, negative exponents via the
// inverse matrices. Samples with a zero entry are rejected
// (std::invalid_argument); samples on a boundary are skipped and counted.
PingPongReport pingpong_region_check(
    const std::vector<std::pair<long long, long long>>& samples,
    int max_abs_exponent);

}  // namespace flatavoid
