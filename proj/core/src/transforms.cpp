#include "flatavoid/transforms.hpp"

#include <set>
#include <stdexcept>

namespace flatavoid {

TransformWord TransformWord::parse(std::string_view s) {
  for (char ch : s)
    if (ch != 'a' && ch != 'b')
      throw std::invalid_argument(
          "transform word must consist of letters 'a' and 'b'");
  return TransformWord{std::string(s)};
}

const Mat2& letter_matrix(char letter) {
  static const Mat2 ma{9, 0, 0, 1};
  static const Mat2 mb{10, 6, 6, 10};
  switch (letter) {
    case 'a':
      return ma;
    case 'b':
      return mb;
    default:
      throw std::invalid_argument("letter must be 'a' or 'b'");
  }
}

namespace {

// Copies c's generator into length + extra columns (original coordinates
// keep their positions; the new trailing coordinates are zero).
BitMatrix widened_generator(const LinearCode& c, std::size_t extra) {
  BitMatrix g(c.dimension(), c.length() + extra);
  for (std::size_t i = 0; i < c.dimension(); ++i)
    for (std::size_t j = 0; j < c.length(); ++j)
      if (c.generator().get(i, j)) g.set(i, j, true);
  return g;
}

}  // namespace

LinearCode transform_a(const LinearCode& c) {
  return LinearCode::from_generator(c.length() + 2, widened_generator(c, 2));
}

LinearCode transform_b(const LinearCode& c) {
  BitMatrix g = widened_generator(c, 2);
  const std::size_t len = c.length() + 2;
  // (1,...,1,1,0) and (1,...,1,0,1): all-ones on the original coordinates
  // plus one of the two new unit positions. Independent of the widened rows
  // (those vanish on the new coordinates), so the dimension rises by 2.
  BitVector u(len), v(len);
  for (std::size_t j = 0; j < c.length(); ++j) {
    u.set(j, true);
    v.set(j, true);
  }
  u.set(len - 2, true);
  v.set(len - 1, true);
  g.append_row(std::move(u));
  g.append_row(std::move(v));
  return LinearCode::from_generator(len, g);
}

LinearCode pad_zero(const LinearCode& c) {
  return LinearCode::from_generator(c.length() + 1, widened_generator(c, 1));
}

LinearCode apply_word(const TransformWord& f, const LinearCode& c) {
  LinearCode out = c;
  for (auto it = f.letters.rbegin(); it != f.letters.rend(); ++it)
    out = (*it == 'a') ? transform_a(out) : transform_b(out);
  return out;
}

Mat2 word_matrix(const TransformWord& f) {
  Mat2 m = Mat2::identity();
  for (char ch : f.letters) m = m * letter_matrix(ch);
  return m;
}

VPair apply_matrix(const Mat2& m, const VPair& v) {
  return {m.m00 * v.w13 + m.m01 * v.w31, m.m10 * v.w13 + m.m11 * v.w31};
}

VPair v_of_code(const LinearCode& c) {
  const WeightEnumerator w = weight_enumerator(c);
  return {evaluate(w, 1, 3), evaluate(w, 3, 1)};
}

VPair v_of_word(const TransformWord& f, const VPair& seed) {
  return apply_matrix(word_matrix(f), seed);
}

namespace {

// Depth-first over words of length r in lexicographic order ('a' < 'b'),
// carrying the left-to-right prefix product.
template <typename Leaf>
void walk_words(int depth, int r, int count_a, const Mat2& prefix, Leaf&& leaf) {
  if (depth == r) {
    leaf(prefix, count_a);
    return;
  }
  walk_words(depth + 1, r, count_a + 1, prefix * letter_matrix('a'), leaf);
  walk_words(depth + 1, r, count_a, prefix * letter_matrix('b'), leaf);
}

}  // namespace

SizeReport distinct_sizes(int r, bool balanced_only) {
  if (r < 0 || r > 24)
    throw std::invalid_argument("distinct_sizes: r must be in [0, 24]");

  const int want_a = r / 2;  // balanced: floor(r/2) a's, ceil(r/2) b's
  std::set<BigInt> values;
  walk_words(0, r, 0, Mat2::identity(), [&](const Mat2& m, int count_a) {
    if (balanced_only && count_a != want_a) return;
    values.insert(m.m00 + m.m01);  // first entry of M (1,1)^T
  });

  SizeReport rep;
  rep.r = r;
  rep.balanced_only = balanced_only;
  rep.values.assign(values.begin(), values.end());

  const BigInt domain = pow2(static_cast<std::size_t>(4 * r));
  std::set<BigInt> sizes;
  for (const BigInt& v : rep.values) sizes.insert(domain - v);
  rep.avoider_sizes.assign(sizes.begin(), sizes.end());

  if (!balanced_only && r >= 1) rep.lower_bound = distinct_size_lower_bound(r);
  return rep;
}

BigInt distinct_size_lower_bound(int r) {
  if (r < 1)
    throw std::invalid_argument("distinct_size_lower_bound: r must be >= 1");
  const BigInt t = binomial(static_cast<std::size_t>(r - 1),
                            static_cast<std::size_t>((r - 1) / 2));
  BigInt b = 1;
  while (b * b * b < t) ++b;
  return b;
}

bool check_free_distinctness(int r_max) {
  if (r_max < 0 || r_max > 14)
    throw std::invalid_argument("check_free_distinctness: r_max must be in [0, 14]");
  for (int r = 1; r <= r_max; ++r) {
    std::set<Mat2> seen;
    walk_words(0, r, 0, Mat2::identity(),
               [&](const Mat2& m, int) { seen.insert(m); });
    if (seen.size() != (std::size_t{1} << r)) return false;
  }
  return true;
}

namespace {

struct RatVec {
  BigRational x, y;
};

struct RatMat {
  BigRational m00, m01, m10, m11;

  RatVec apply(const RatVec& v) const {
    return {m00 * v.x + m01 * v.y, m10 * v.x + m11 * v.y};
  }
};

enum class Region { kX1, kX2, kBoundary };

Region classify(const BigRational& x, const BigRational& y) {
  using boost::multiprecision::abs;
  const BigRational ax = abs(x), ay = abs(y);
  // |y|/|x| < 1/3 or > 3 -> X1; strictly between -> X2.
  if (3 * ay < ax || ay > 3 * ax) return Region::kX1;
  if (ax < 3 * ay && ay < 3 * ax) return Region::kX2;
  return Region::kBoundary;
}

std::string rat_str(const BigRational& q) {
  const BigInt den = boost::multiprecision::denominator(q);
  std::string s = boost::multiprecision::numerator(q).str();
  if (den != 1) s += "/" + den.str();
  return s;
}

}  // namespace

PingPongReport pingpong_region_check(
    const std::vector<std::pair<long long, long long>>& samples,
    int max_abs_exponent) {
  if (max_abs_exponent < 1)
    throw std::invalid_argument("pingpong_region_check: exponent range must be >= 1");

  const RatMat ma{9, 0, 0, 1};
  const RatMat ma_inv{BigRational(1, 9), 0, 0, 1};
  const RatMat mb{10, 6, 6, 10};
  const RatMat mb_inv{BigRational(10, 64), BigRational(-6, 64),
                      BigRational(-6, 64), BigRational(10, 64)};

  PingPongReport rep;
  for (const auto& [sx, sy] : samples) {
    if (sx == 0 || sy == 0)
      throw std::invalid_argument("pingpong_region_check: zero-entry sample");
    const RatVec v{BigRational(sx), BigRational(sy)};
    const Region home = classify(v.x, v.y);
    if (home == Region::kBoundary) {
      ++rep.skipped;
      continue;
    }

    // From X2 the powers of M_a must land in X1 and vice versa.
    const bool from_x2 = home == Region::kX2;
    (from_x2 ? rep.x2_samples : rep.x1_samples)++;
    const RatMat& fwd = from_x2 ? ma : mb;
    const RatMat& bwd = from_x2 ? ma_inv : mb_inv;
    const Region want = from_x2 ? Region::kX1 : Region::kX2;
    const char* mat_name = from_x2 ? "M_a" : "M_b";

    for (int dir = 0; dir < 2; ++dir) {
      const RatMat& step = dir == 0 ? fwd : bwd;
      RatVec cur = v;
      for (int m = 1; m <= max_abs_exponent; ++m) {
        cur = step.apply(cur);
        ++rep.checks;
        const bool zero = cur.x == 0 || cur.y == 0;
        if (zero || classify(cur.x, cur.y) != want) {
          const int exponent = dir == 0 ? m : -m;
          rep.violations.push_back(
              "sample (" + std::to_string(sx) + "," + std::to_string(sy) +
              "): " + mat_name + "^" + std::to_string(exponent) + " gives (" +
              rat_str(cur.x) + ", " + rat_str(cur.y) + ") outside " +
              (want == Region::kX1 ? "X1" : "X2"));
        }
      }
    }
  }
  return rep;
}

}  // namespace flatavoid
