#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "flatavoid/constructions.hpp"
#include "flatavoid/geometry.hpp"
#include "flatavoid/transforms.hpp"
#include "oracles.hpp"

using namespace flatavoid;

namespace {

// All words over {a,b} of length exactly r, lexicographic.
std::vector<TransformWord> words_of_length(int r) {
  std::vector<TransformWord> out;
  std::string w(r, 'a');
  std::function<void(int)> rec = [&](int i) {
    if (i == r) {
      out.push_back(TransformWord{w});
      return;
    }
    for (char ch : {'a', 'b'}) {
      w[i] = ch;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

LinearCode figure_code() {
  return LinearCode::from_generator(
      4, BitMatrix::from_strings({"1001", "0101", "1110"}));
}

}  // namespace

TEST_SUITE("transforms") {
  TEST_CASE("letter matrices and word products") {
    CHECK(letter_matrix('a') == Mat2{9, 0, 0, 1});
    CHECK(letter_matrix('b') == Mat2{10, 6, 6, 10});
    CHECK(word_matrix(TransformWord::parse("")) == Mat2::identity());
    CHECK(word_matrix(TransformWord::parse("ab")) == Mat2{90, 54, 6, 10});
    CHECK(word_matrix(TransformWord::parse("ba")) == Mat2{90, 6, 54, 10});
    CHECK(word_matrix(TransformWord::parse("bb")) ==
          Mat2{136, 120, 120, 136});
    CHECK_THROWS_AS(TransformWord::parse("abc"), std::invalid_argument);
  }

  TEST_CASE("single transforms on the empty code") {
    LinearCode c0;
    auto a = transform_a(c0);
    CHECK(a.length() == 2);
    CHECK(a.dimension() == 0);
    CHECK(v_of_code(a) == VPair{9, 1});
    auto b = transform_b(c0);
    CHECK(b.length() == 2);
    CHECK(b.dimension() == 2);
    CHECK(v_of_code(b) == VPair{16, 16});
    CHECK(v_of_code(c0) == VPair{1, 1});
  }

  TEST_CASE("transforms reshape the figure example generator") {
    auto c = figure_code();
    auto a = transform_a(c);
    CHECK(a.length() == 6);
    CHECK(a.dimension() == 3);
    // Appended coordinates stay zero across all codewords: the dual
    // contains both unit vectors there.
    CHECK(a.contains(BitVector::from_string("100100")));
    CHECK(!a.contains(BitVector::from_string("100110")));
    auto b = transform_b(c);
    CHECK(b.length() == 6);
    CHECK(b.dimension() == 5);
    CHECK(b.contains(BitVector::from_string("111110")));
    CHECK(b.contains(BitVector::from_string("111101")));
    CHECK(b.contains(BitVector::from_string("100100")));
  }

  TEST_CASE("composition order: rightmost letter first") {
    LinearCode c0;
    auto ab = apply_word(TransformWord::parse("ab"), c0);
    CHECK(ab.length() == 4);
    CHECK(ab.dimension() == 2);
    CHECK(evaluate(weight_enumerator(ab), 1, 3) == 144);
    auto ba = apply_word(TransformWord::parse("ba"), c0);
    CHECK(evaluate(weight_enumerator(ba), 1, 3) == 96);
    // ba(C0) is the explicit four-word code.
    std::vector<std::string> words{"0000", "1110", "1101", "0011"};
    for (const auto& w : words) CHECK(ba.contains(BitVector::from_string(w)));
    CHECK(ba.dimension() == 2);
    auto empty = apply_word(TransformWord::parse(""), figure_code());
    CHECK(empty == figure_code());
  }

  TEST_CASE("symbolic recurrence equals exhaustive enumeration") {
    LinearCode c0;
    auto w0 = weight_enumerator(c0);
    for (int r = 0; r <= 4; ++r) {
      for (const auto& f : words_of_length(r)) {
        auto symbolic = oracle::apply_word_symbolic(f, w0);
        auto exhaustive = weight_enumerator_direct(apply_word(f, c0));
        CHECK(symbolic == exhaustive);
      }
    }
    auto fig = figure_code();
    auto wf = weight_enumerator(fig);
    for (char letter : {'a', 'b'}) {
      auto symbolic = oracle::apply_letter_symbolic(letter, wf);
      auto code = letter == 'a' ? transform_a(fig) : transform_b(fig);
      CHECK(symbolic == weight_enumerator_direct(code));
    }
  }

  TEST_CASE("matrix recurrence tracks the enumerator pair for any seed") {
    for (std::size_t len = 0; len <= 4; ++len) {
      enumerate_all_codes(len, [&](const LinearCode& c) {
        auto seed = v_of_code(c);
        for (int r = 0; r <= 4; ++r)
          for (const auto& f : words_of_length(r)) {
            auto direct = v_of_code(apply_word(f, c));
            auto tracked = v_of_word(f, seed);
            CHECK(direct == tracked);
            CHECK(tracked == apply_matrix(word_matrix(f), seed));
          }
      });
    }
  }

  TEST_CASE("pad_zero triples the evaluation at (1,3)") {
    LinearCode c0;
    CHECK(evaluate(weight_enumerator(pad_zero(c0)), 1, 3) == 3);
    auto b = transform_b(c0);
    auto padded = pad_zero(b);
    CHECK(padded.length() == 3);
    CHECK(padded.dimension() == 2);
    CHECK(evaluate(weight_enumerator(padded), 1, 3) == 48);
    std::mt19937_64 rng(29);
    for (int iter = 0; iter < 20; ++iter) {
      std::size_t len = rng() % 7;
      std::size_t rows = rng() % (len + 1);
      BitMatrix g(rows, len);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < len; ++c) g.set(r, c, rng() & 1);
      auto c = LinearCode::from_generator(len, g);
      CHECK(evaluate(weight_enumerator(pad_zero(c)), 1, 3) ==
            3 * evaluate(weight_enumerator(c), 1, 3));
      CHECK(pad_zero(c).dimension() == c.dimension());
    }
  }

  TEST_CASE("determinants factor by letter counts") {
    for (int r = 0; r <= 8; ++r) {
      for (const auto& f : words_of_length(r)) {
        int na = 0;
        for (char ch : f.letters) na += ch == 'a';
        int nb = r - na;
        BigInt expect = 1;
        for (int i = 0; i < na; ++i) expect *= 9;
        for (int i = 0; i < nb; ++i) expect *= 64;
        CHECK(word_matrix(f).det() == expect);
      }
    }
    // Spot-check longer words instead of the full 2^12 sweep.
    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 50; ++iter) {
      int r = 9 + static_cast<int>(rng() % 4);
      std::string w;
      int na = 0;
      for (int i = 0; i < r; ++i) {
        bool a = rng() & 1;
        na += a;
        w.push_back(a ? 'a' : 'b');
      }
      BigInt expect = 1;
      for (int i = 0; i < na; ++i) expect *= 9;
      for (int i = 0; i < r - na; ++i) expect *= 64;
      CHECK(word_matrix(TransformWord{w}).det() == expect);
    }
  }

  TEST_CASE("size reports") {
    auto r0 = distinct_sizes(0);
    CHECK(r0.values == std::vector<BigInt>{1});
    CHECK(!r0.lower_bound.has_value());
    auto r1 = distinct_sizes(1);
    CHECK(r1.values == std::vector<BigInt>{9, 16});
    CHECK(r1.avoider_sizes == std::vector<BigInt>{0, 7});
    REQUIRE(r1.lower_bound.has_value());
    CHECK(*r1.lower_bound == 1);
    auto r2 = distinct_sizes(2);
    CHECK(r2.values == std::vector<BigInt>{81, 96, 144, 256});
    CHECK(r2.avoider_sizes == std::vector<BigInt>{0, 112, 160, 175});
    auto b2 = distinct_sizes(2, true);
    CHECK(b2.values == std::vector<BigInt>{96, 144});
    CHECK(!b2.lower_bound.has_value());
    CHECK_THROWS_AS(distinct_sizes(25), std::invalid_argument);
  }

  TEST_CASE("at least two sizes at every word length") {
    for (int r = 1; r <= 20; ++r) {
      auto rep = distinct_sizes(r);
      CHECK(rep.count() >= 2);
      if (rep.lower_bound)
        CHECK(BigInt(rep.count()) >= *rep.lower_bound);
    }
  }

  TEST_CASE("balanced words share one determinant") {
    for (int r : {2, 3, 5, 6}) {
      int want_a = r / 2;
      BigInt expect = 1;
      for (int i = 0; i < want_a; ++i) expect *= 9;
      for (int i = 0; i < r - want_a; ++i) expect *= 64;
      for (const auto& f : words_of_length(r)) {
        int na = 0;
        for (char ch : f.letters) na += ch == 'a';
        if (na != want_a) continue;
        CHECK(word_matrix(f).det() == expect);
      }
    }
  }

  TEST_CASE("lower bound is the cube-root ceiling") {
    CHECK(distinct_size_lower_bound(1) == 1);
    CHECK(distinct_size_lower_bound(5) == 2);   // binom(4,2) = 6
    CHECK(distinct_size_lower_bound(7) == 3);   // binom(6,3) = 20
    CHECK(distinct_size_lower_bound(15) == 16);  // binom(14,7) = 3432
    for (int r = 1; r <= 15; ++r) {
      auto b = distinct_size_lower_bound(r);
      CHECK(b * b * b >= binomial(r - 1, (r - 1) / 2));
      CHECK((b - 1) * (b - 1) * (b - 1) < binomial(r - 1, (r - 1) / 2));
    }
    CHECK_THROWS_AS(distinct_size_lower_bound(0), std::invalid_argument);
  }

  TEST_CASE("word family sizes are realized by verified avoiders") {
    for (int r = 1; r <= 2; ++r) {
      auto rep = distinct_sizes(r);
      for (const auto& f : words_of_length(r)) {
        auto c = apply_word(f, LinearCode());
        auto s = code_based_set(c, 3, 0);
        BigInt size = BigInt(s.count());
        BigInt value = v_of_word(f, {1, 1}).w13;
        CHECK(size == pow2(4 * r) - value);
        bool listed = false;
        for (const auto& v : rep.avoider_sizes) listed |= (v == size);
        CHECK(listed);
        ScanOptions opt;
        opt.threads = 0;
        CHECK(is_avoider(s, 3, 1, opt));
      }
    }
  }

  TEST_CASE("free distinctness of word products") {
    CHECK(check_free_distinctness(8));
    CHECK_THROWS_AS(check_free_distinctness(15), std::invalid_argument);
  }

  TEST_CASE("ping-pong regions") {
    std::vector<std::pair<long long, long long>> samples{
        {1, 1},    // X2
        {2, 1},    // X2
        {-5, 4},   // X2
        {9, 1},    // X1
        {1, 100},  // X1
        {-7, -1},  // X1
        {3, 1},    // boundary, skipped
        {1, 3},    // boundary, skipped
    };
    auto rep = pingpong_region_check(samples, 3);
    CHECK(rep.ok());
    CHECK(rep.x2_samples == 3);
    CHECK(rep.x1_samples == 3);
    CHECK(rep.skipped == 2);
    // 6 live samples, 3 exponents, forward and backward.
    CHECK(rep.checks == 6u * 3u * 2u);
    CHECK_THROWS_AS(pingpong_region_check({{0, 1}}, 2), std::invalid_argument);
    CHECK_THROWS_AS(pingpong_region_check({{1, 1}}, 0), std::invalid_argument);
  }
}
