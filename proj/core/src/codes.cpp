#include "flatavoid/codes.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>

#include "flatavoid/errors.hpp"
#include "parse_util.hpp"

namespace flatavoid {

namespace {

constexpr std::size_t kDirectEnumCap = 28;  // 2^28 codeword walks at most

BigInt ipow(BigInt base, std::size_t e) {
  BigInt r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

}  // namespace

LinearCode LinearCode::from_generator(std::size_t length, const BitMatrix& rows) {
  if (rows.rows() > 0 && rows.cols() != length)
    throw std::invalid_argument("from_generator: row width differs from length");
  BitMatrix input = rows.rows() ? rows : BitMatrix(length);
  BitMatrix gen = rref(input).matrix;
  BitMatrix pcheck = rref(nullspace_basis(gen)).matrix;
  return LinearCode(length, std::move(gen), std::move(pcheck));
}

LinearCode LinearCode::trivial(std::size_t length) {
  return from_generator(length, BitMatrix(length));
}

LinearCode LinearCode::full(std::size_t length) {
  return from_generator(length, BitMatrix::identity(length));
}

bool LinearCode::contains(const BitVector& y) const {
  if (y.size() != length_)
    throw std::invalid_argument("contains: word length differs from code length");
  return matvec(pcheck_, y).is_zero();
}

LinearCode LinearCode::dual() const {
  return LinearCode(length_, pcheck_, gen_);
}

AffineCode::AffineCode(LinearCode code, const BitVector& offset)
    : code_(std::move(code)), offset_(offset) {
  if (offset_.size() != code_.length())
    throw std::invalid_argument("AffineCode: offset length differs from code length");
  // Reduce to the canonical coset representative: zero on every pivot
  // column of the generator. The generator is RREF, so the pivot of row i
  // is its first set bit.
  const BitMatrix& g = code_.generator();
  for (std::size_t i = 0; i < g.rows(); ++i)
    if (offset_.get(g.row(i).first_set())) offset_ ^= g.row(i);
}

bool AffineCode::contains(const BitVector& y) const {
  return code_.contains(y ^ offset_);
}

BigInt evaluate(const WeightEnumerator& w, const BigInt& x, const BigInt& y) {
  if (w.coeffs.size() != w.length + 1)
    throw std::invalid_argument("evaluate: coefficient vector has wrong size");
  std::vector<BigInt> xp(w.length + 1), yp(w.length + 1);
  xp[0] = yp[0] = 1;
  for (std::size_t i = 1; i <= w.length; ++i) {
    xp[i] = xp[i - 1] * x;
    yp[i] = yp[i - 1] * y;
  }
  BigInt acc = 0;
  for (std::size_t wt = 0; wt <= w.length; ++wt)
    if (w.coeffs[wt] != 0) acc += w.coeffs[wt] * xp[wt] * yp[w.length - wt];
  return acc;
}

namespace {

// Shared Gray-code walk: histogram of popcounts over { start + span } where
// span ranges over the row space of gen. 2^gen.rows() steps.
WeightEnumerator coset_histogram(const BitMatrix& gen, BitVector start,
                                 std::size_t length) {
  std::vector<std::uint64_t> hist(length + 1, 0);
  ++hist[start.popcount()];
  const std::uint64_t total = std::uint64_t{1} << gen.rows();
  for (std::uint64_t g = 1; g < total; ++g) {
    start ^= gen.row(std::countr_zero(g));
    ++hist[start.popcount()];
  }
  WeightEnumerator w;
  w.length = length;
  w.coeffs.assign(hist.begin(), hist.end());
  return w;
}

}  // namespace

WeightEnumerator weight_enumerator_direct(const LinearCode& c) {
  if (c.dimension() > kDirectEnumCap)
    throw std::invalid_argument("weight_enumerator_direct: dimension exceeds 28");
  return coset_histogram(c.generator(), BitVector(c.length()), c.length());
}

WeightEnumerator weight_enumerator(const AffineCode& c) {
  if (c.dimension() > kDirectEnumCap)
    throw std::invalid_argument("weight_enumerator: dimension exceeds 28");
  return coset_histogram(c.code().generator(), c.offset(), c.length());
}

WeightEnumerator macwilliams_transform(const WeightEnumerator& w,
                                       std::size_t code_dim) {
  const std::size_t n = w.length;
  if (w.coeffs.size() != n + 1)
    throw std::invalid_argument("macwilliams_transform: bad coefficient vector");

  std::vector<std::vector<BigInt>> C(n + 1, std::vector<BigInt>(n + 1));
  for (std::size_t i = 0; i <= n; ++i) {
    C[i][0] = 1;
    for (std::size_t j = 1; j <= i; ++j)
      C[i][j] = C[i - 1][j - 1] + (j <= i - 1 ? C[i - 1][j] : BigInt(0));
  }

  const BigInt denom = pow2(code_dim);
  WeightEnumerator out;
  out.length = n;
  out.coeffs.assign(n + 1, BigInt(0));
  for (std::size_t u = 0; u <= n; ++u) {
    BigInt acc = 0;
    for (std::size_t wt = 0; wt <= n; ++wt) {
      if (w.coeffs[wt] == 0) continue;
      // Krawtchouk number K_u(wt) for length n.
      BigInt k = 0;
      const std::size_t lo = u > n - wt ? u - (n - wt) : 0;
      const std::size_t hi = std::min(u, wt);
      for (std::size_t i = lo; i <= hi; ++i) {
        const BigInt term = C[wt][i] * C[n - wt][u - i];
        if (i & 1)
          k -= term;
        else
          k += term;
      }
      acc += w.coeffs[wt] * k;
    }
    // Integrality and nonnegativity certify that `w` really was the
    // enumerator of a code of the claimed dimension.
    if (acc < 0 || acc % denom != 0)
      throw std::invalid_argument(
          "macwilliams_transform: input is not the enumerator of a code of "
          "the given dimension");
    out.coeffs[u] = acc / denom;
  }
  return out;
}

WeightEnumerator weight_enumerator(const LinearCode& c) {
  const std::size_t d = c.dimension();
  const std::size_t codim = c.length() - d;
  if (std::min(d, codim) > kDirectEnumCap)
    throw std::invalid_argument(
        "weight_enumerator: both the code and its dual exceed the 2^28 "
        "enumeration cap");
  if (d <= codim) return weight_enumerator_direct(c);
  return macwilliams_transform(weight_enumerator_direct(c.dual()), codim);
}

std::uint64_t enumerate_all_codes(std::size_t length,
                                  const std::function<void(const LinearCode&)>& fn) {
  if (length > 5)
    throw std::invalid_argument("enumerate_all_codes: length above 5 refused");

  std::uint64_t count = 0;
  for (std::size_t k = 0; k <= length; ++k) {
    if (k == 0) {
      fn(LinearCode::trivial(length));
      ++count;
      continue;
    }
    // Pivot sets in lexicographic order; each RREF matrix with that pivot
    // set corresponds to one assignment of its free cells, so every code is
    // produced exactly once.
    std::vector<std::size_t> piv(k);
    std::iota(piv.begin(), piv.end(), 0);
    while (true) {
      std::vector<bool> is_pivot(length, false);
      for (std::size_t p : piv) is_pivot[p] = true;
      std::vector<std::pair<std::size_t, std::size_t>> cells;  // (row, col)
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t c = piv[i] + 1; c < length; ++c)
          if (!is_pivot[c]) cells.emplace_back(i, c);

      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells.size());
           ++bits) {
        BitMatrix g(k, length);
        for (std::size_t i = 0; i < k; ++i) g.set(i, piv[i], true);
        for (std::size_t j = 0; j < cells.size(); ++j)
          if ((bits >> j) & 1) g.set(cells[j].first, cells[j].second, true);
        fn(LinearCode::from_generator(length, g));
        ++count;
      }

      // Next k-combination of {0, ..., length-1}.
      std::size_t i = k;
      while (i-- > 0) {
        if (piv[i] + 1 <= length - k + i) {
          ++piv[i];
          for (std::size_t j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
          break;
        }
        if (i == 0) {
          i = k + 1;  // signal exhaustion
          break;
        }
      }
      if (i == k + 1) break;
    }
  }
  return count;
}

ValueCountReport check_value_count_bounds(std::size_t length, long long a,
                                          long long b) {
  if (a == 0 || b == 0)
    throw std::invalid_argument(
        "check_value_count_bounds: evaluation point needs nonzero entries");

  std::set<BigInt> values;
  enumerate_all_codes(length, [&](const LinearCode& c) {
    values.insert(evaluate(weight_enumerator(c), BigInt(a), BigInt(b)));
  });

  ValueCountReport r;
  r.length = length;
  r.a = a;
  r.b = b;
  r.values.assign(values.begin(), values.end());

  const long long aa = std::abs(a), ab = std::abs(b);
  const long long g = std::gcd(aa, ab);
  const BigInt base_pow = ipow(BigInt((aa + ab) / g), length);
  r.elementary_bound = (a > 0) == (b > 0) ? base_pow : 2 * base_pow + 1;

  if (b > aa) {
    // gcd(b-a, b+a) divides their sum 2b, so the base is an integer.
    const long long g2 = std::gcd(b - a, b + a);
    r.dual_bound = BigInt(length + 1) * ipow(BigInt(2 * b / g2), length);
  }

  const BigInt n_values = r.values.size();
  r.violated = n_values > r.elementary_bound ||
               (r.dual_bound && n_values > *r.dual_bound);
  return r;
}

// --- file format ----------------------------------------------------------

CodeFile parse_code_file(std::istream& in) {
  using detail::next_content_line;
  using detail::parse_bits;
  using detail::parse_kv_uint;
  using detail::split_ws;

  int lineno = 0;
  std::string line;

  if (!next_content_line(in, line, lineno))
    throw parse_error(1, "missing header: expected 'length=<n> dim=<d>'");
  const int header_line = lineno;
  const std::vector<std::string> toks = split_ws(line);
  if (toks.size() != 2)
    throw parse_error(header_line, "header must be 'length=<n> dim=<d>'");
  const std::size_t length = parse_kv_uint(toks[0], "length", header_line);
  const std::size_t dim = parse_kv_uint(toks[1], "dim", header_line);
  if (dim > length)
    throw parse_error(header_line, "dim exceeds length");

  BitMatrix rows(length);
  for (std::size_t i = 0; i < dim; ++i) {
    if (!next_content_line(in, line, lineno))
      throw parse_error(lineno + 1, "expected " + std::to_string(dim) +
                                        " generator rows, found " +
                                        std::to_string(i));
    if (line.find('=') != std::string::npos)
      throw parse_error(lineno, "expected a generator row, got '" + line + "'");
    rows.append_row(parse_bits(line, length, lineno, "generator row"));
  }

  CodeFile f;
  f.code = LinearCode::from_generator(length, rows);
  if (f.code.dimension() != dim)
    throw parse_error(header_line,
                      "generator rows span dimension " +
                          std::to_string(f.code.dimension()) + ", header says " +
                          std::to_string(dim));

  if (next_content_line(in, line, lineno)) {
    const std::string prefix = "offset=";
    if (line.rfind(prefix, 0) != 0)
      throw parse_error(lineno, "unexpected line '" + line + "'");
    const BitVector raw =
        parse_bits(line.substr(prefix.size()), length, lineno, "offset");
    f.offset = AffineCode(f.code, raw).offset();
    if (next_content_line(in, line, lineno))
      throw parse_error(lineno, "unexpected line '" + line + "'");
  }
  return f;
}

CodeFile read_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open code file '" + path + "'");
  return parse_code_file(in);
}

void write_code_file(std::ostream& out, const LinearCode& c) {
  out << "length=" << c.length() << " dim=" << c.dimension() << "\n";
  for (std::size_t i = 0; i < c.generator().rows(); ++i)
    out << c.generator().row(i).str() << "\n";
}

void write_code_file(std::ostream& out, const AffineCode& c) {
  write_code_file(out, c.code());
  out << "offset=" << c.offset().str() << "\n";
}

}  // namespace flatavoid
