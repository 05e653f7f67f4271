#include "flatavoid/geometry.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <fstream>
#include <istream>
#include <mutex>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "flatavoid/errors.hpp"
#include "parse_util.hpp"
#include "thread_util.hpp"

namespace flatavoid {

std::uint32_t point_code(const BitVector& v) {
  if (v.size() > static_cast<std::size_t>(kMaxAmbientDim))
    throw std::invalid_argument("point_code: vector longer than the ambient cap");
  return static_cast<std::uint32_t>(v.code());
}

BitVector point_vector(int n, std::uint32_t code) {
  return BitVector::from_code(code, static_cast<std::size_t>(n));
}

PointSet::PointSet(int n) : n_(n) {
  if (n < 0 || n > kMaxAmbientDim)
    throw std::invalid_argument("PointSet: ambient dimension must be in [0, 24]");
  words_.assign(((std::size_t{1} << n) + 63) / 64, 0);
}

PointSet PointSet::full(int n) {
  PointSet s(n);
  for (std::uint64_t& w : s.words_) w = ~std::uint64_t{0};
  // Keep bits beyond 2^n zero so equality stays bitwise.
  const std::uint32_t tail = s.domain_size() & 63u;
  if (tail) s.words_.back() &= (std::uint64_t{1} << tail) - 1;
  return s;
}

PointSet PointSet::from_words(int n, std::vector<std::uint64_t> words) {
  PointSet s(n);
  if (words.size() != s.words_.size())
    throw std::invalid_argument("from_words: wrong word count for 2^n bits");
  const std::uint32_t tail = s.domain_size() & 63u;
  if (tail && (words.back() >> tail) != 0)
    throw std::invalid_argument("from_words: bits at or beyond 2^n");
  s.words_ = std::move(words);
  return s;
}

void PointSet::add(std::uint32_t p) {
  if (p >= domain_size()) throw std::invalid_argument("add: point out of range");
  words_[p >> 6] |= std::uint64_t{1} << (p & 63);
}

void PointSet::remove(std::uint32_t p) {
  if (p >= domain_size())
    throw std::invalid_argument("remove: point out of range");
  words_[p >> 6] &= ~(std::uint64_t{1} << (p & 63));
}

std::uint64_t PointSet::count() const {
  std::uint64_t c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

std::vector<std::uint32_t> PointSet::points() const {
  std::vector<std::uint32_t> out;
  out.reserve(count());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      out.push_back(static_cast<std::uint32_t>((i << 6) + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

namespace {

void require_same_dim(const PointSet& a, const PointSet& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("set operation: ambient dimensions differ");
}

}  // namespace

PointSet PointSet::operator|(const PointSet& o) const {
  require_same_dim(*this, o);
  PointSet r(n_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    r.words_[i] = words_[i] | o.words_[i];
  return r;
}

PointSet PointSet::operator&(const PointSet& o) const {
  require_same_dim(*this, o);
  PointSet r(n_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    r.words_[i] = words_[i] & o.words_[i];
  return r;
}

PointSet PointSet::operator^(const PointSet& o) const {
  require_same_dim(*this, o);
  PointSet r(n_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    r.words_[i] = words_[i] ^ o.words_[i];
  return r;
}

PointSet PointSet::complement() const {
  PointSet r = PointSet::full(n_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] ^= words_[i];
  return r;
}

Flat make_flat(int n, const BitMatrix& basis, const BitVector& rep) {
  if (n < 0 || n > kMaxAmbientDim)
    throw std::invalid_argument("make_flat: ambient dimension must be in [0, 24]");
  if (basis.rows() > 0 && basis.cols() != static_cast<std::size_t>(n))
    throw std::invalid_argument("make_flat: basis width differs from n");
  if (rep.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("make_flat: representative length differs from n");

  RrefResult r = rref(basis.rows() ? basis : BitMatrix(static_cast<std::size_t>(n)));
  if (r.matrix.rows() != basis.rows())
    throw std::invalid_argument("make_flat: basis rows are dependent");

  Flat f;
  f.n = n;
  f.k = static_cast<int>(r.matrix.rows());
  f.basis = std::move(r.matrix);
  f.rep = rep;
  // Zero the representative on every pivot column; the result is the unique
  // point of the flat with that property.
  for (std::size_t i = 0; i < f.basis.rows(); ++i)
    if (f.rep.get(r.pivots[i])) f.rep ^= f.basis.row(i);
  return f;
}

std::vector<std::uint32_t> flat_points(const Flat& f) {
  std::vector<std::uint32_t> rowcode(f.basis.rows());
  for (std::size_t i = 0; i < f.basis.rows(); ++i)
    rowcode[i] = static_cast<std::uint32_t>(f.basis.row(i).code());

  std::vector<std::uint32_t> pts;
  pts.reserve(std::size_t{1} << f.k);
  std::uint32_t cur = static_cast<std::uint32_t>(f.rep.code());
  pts.push_back(cur);
  for (std::uint64_t g = 1; g < (std::uint64_t{1} << f.k); ++g) {
    cur ^= rowcode[std::countr_zero(g)];
    pts.push_back(cur);
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

bool flat_contains(const Flat& f, std::uint32_t p) {
  // Reduce p modulo the direction space; membership iff it reduces to rep.
  BitVector v = point_vector(f.n, p);
  for (std::size_t i = 0; i < f.basis.rows(); ++i) {
    const std::size_t pivot = f.basis.row(i).first_set();
    if (v.get(pivot)) v ^= f.basis.row(i);
  }
  return v == f.rep;
}

BigInt flat_count(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("flat_count: negative dimension");
  if (k > n) return 0;
  return pow2(static_cast<std::size_t>(n - k)) *
         gaussian_binomial(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
}

namespace {

// Lexicographic k-subsets of {0, ..., n-1}. k = 0 yields one empty subset.
struct Combinations {
  int n, k;
  std::vector<int> cur;
  bool exhausted;

  Combinations(int n_, int k_) : n(n_), k(k_), cur(k_), exhausted(k_ > n_) {
    std::iota(cur.begin(), cur.end(), 0);
  }

  bool pop(std::vector<int>& out) {
    if (exhausted) return false;
    out = cur;
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) {
      exhausted = true;
    } else {
      ++cur[i];
      for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return true;
  }
};

// Free generator cells of an RREF basis with the given pivot set, row-major:
// row i may have a 1 in column c only for c > piv[i], c not a pivot.
struct PivotLayout {
  std::vector<int> free_cols;               // non-pivot columns, ascending
  std::vector<std::pair<int, int>> cells;   // (row, col)

  PivotLayout(int n, const std::vector<int>& piv) {
    std::vector<bool> is_pivot(n, false);
    for (int p : piv) is_pivot[p] = true;
    for (int c = 0; c < n; ++c)
      if (!is_pivot[c]) free_cols.push_back(c);
    for (std::size_t i = 0; i < piv.size(); ++i)
      for (int c = piv[i] + 1; c < n; ++c)
        if (!is_pivot[c]) cells.emplace_back(static_cast<int>(i), c);
  }
};

void check_flat_budget(int n, int k, std::uint64_t budget, const char* who) {
  const BigInt total = flat_count(n, k);
  if (total > budget)
    throw budget_error(std::string(who) + ": " + total.str() + " " +
                       std::to_string(k) + "-flats in dimension " +
                       std::to_string(n) + " exceed the budget of " +
                       std::to_string(budget) + " (raise it to proceed)");
}

}  // namespace

void enumerate_flats(int n, int k, const std::function<void(const Flat&)>& fn,
                     std::uint64_t budget) {
  if (n < 0 || n > kMaxAmbientDim)
    throw std::invalid_argument("enumerate_flats: ambient dimension must be in [0, 24]");
  if (k < 0) throw std::invalid_argument("enumerate_flats: negative flat dimension");
  if (k > n) return;
  check_flat_budget(n, k, budget, "enumerate_flats");

  Combinations combs(n, k);
  std::vector<int> piv;
  while (combs.pop(piv)) {
    const PivotLayout layout(n, piv);
    const std::uint64_t n_basis = std::uint64_t{1} << layout.cells.size();
    const std::uint64_t n_rep = std::uint64_t{1} << layout.free_cols.size();

    for (std::uint64_t bits = 0; bits < n_basis; ++bits) {
      Flat f;
      f.n = n;
      f.k = k;
      f.basis = BitMatrix(static_cast<std::size_t>(k), static_cast<std::size_t>(n));
      for (int i = 0; i < k; ++i) f.basis.set(i, piv[i], true);
      for (std::size_t j = 0; j < layout.cells.size(); ++j)
        if ((bits >> j) & 1)
          f.basis.set(layout.cells[j].first, layout.cells[j].second, true);

      for (std::uint64_t rb = 0; rb < n_rep; ++rb) {
        f.rep = BitVector(static_cast<std::size_t>(n));
        for (std::size_t j = 0; j < layout.free_cols.size(); ++j)
          if ((rb >> j) & 1) f.rep.set(layout.free_cols[j], true);
        fn(f);
      }
    }
  }
}

namespace {

struct ScanOutcome {
  std::set<std::uint32_t> profile;
  bool aborted = false;
};

// Shared flat scan: computes the k-profile of s, splitting work across
// threads by pivot set. If abort_when(count) returns true for any flat the
// whole scan stops early (used by the predicate shortcuts); the profile is
// then partial and only `aborted` is meaningful.
ScanOutcome scan_profile(const PointSet& s, int k, const ScanOptions& opt,
                         const std::function<bool(std::uint32_t)>& abort_when) {
  const int n = s.ambient_dim();
  ScanOutcome out;
  if (k < 0) throw std::invalid_argument("profile: negative flat dimension");
  if (k > n) return out;
  check_flat_budget(n, k, opt.budget, "profile");

  const int threads = detail::resolve_threads(opt.threads);
  const std::uint64_t* words = s.words().data();
  const auto contains = [words](std::uint32_t p) -> std::uint32_t {
    return (words[p >> 6] >> (p & 63)) & 1u;
  };

  std::mutex queue_mu;
  Combinations combs(n, k);
  std::atomic<bool> stop{false};

  std::mutex merge_mu;
  // Profile accumulators are bitmaps over possible counts 0..2^k; OR-merge
  // makes the result independent of how pivot sets land on workers.
  const std::size_t acc_words = ((std::size_t{1} << k) + 1 + 63) / 64;
  std::vector<std::uint64_t> seen(acc_words, 0);

  auto worker = [&]() {
    std::vector<std::uint64_t> local_seen(acc_words, 0);
    std::vector<int> piv;
    std::vector<std::uint32_t> rowcode(static_cast<std::size_t>(k));

    while (true) {
      {
        std::lock_guard<std::mutex> lock(queue_mu);
        if (stop.load(std::memory_order_relaxed) || !combs.pop(piv)) break;
      }
      const PivotLayout layout(n, piv);
      const std::uint64_t n_basis = std::uint64_t{1} << layout.cells.size();
      const std::uint64_t n_rep = std::uint64_t{1} << layout.free_cols.size();

      for (std::uint64_t bits = 0; bits < n_basis; ++bits) {
        for (int i = 0; i < k; ++i) rowcode[i] = std::uint32_t{1} << piv[i];
        for (std::size_t j = 0; j < layout.cells.size(); ++j)
          if ((bits >> j) & 1)
            rowcode[layout.cells[j].first] |= std::uint32_t{1}
                                              << layout.cells[j].second;

        // Representatives walk in Gray order over the free columns, so each
        // step toggles one coordinate of `rep`.
        std::uint32_t rep = 0;
        for (std::uint64_t rb = 0;; ++rb) {
          if (stop.load(std::memory_order_relaxed)) break;
          std::uint32_t cur = rep;
          std::uint32_t cnt = contains(cur);
          for (std::uint64_t g = 1; g < (std::uint64_t{1} << k); ++g) {
            cur ^= rowcode[std::countr_zero(g)];
            cnt += contains(cur);
          }
          local_seen[cnt >> 6] |= std::uint64_t{1} << (cnt & 63);
          if (abort_when && abort_when(cnt)) {
            stop.store(true, std::memory_order_relaxed);
            break;
          }
          if (rb + 1 >= n_rep) break;
          rep ^= std::uint32_t{1}
                 << layout.free_cols[std::countr_zero(rb + 1)];
        }
      }
    }

    std::lock_guard<std::mutex> lock(merge_mu);
    for (std::size_t i = 0; i < acc_words; ++i) seen[i] |= local_seen[i];
  };

  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  out.aborted = stop.load();
  for (std::size_t i = 0; i < acc_words; ++i) {
    std::uint64_t w = seen[i];
    while (w) {
      out.profile.insert(static_cast<std::uint32_t>((i << 6) + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

}  // namespace

std::set<std::uint32_t> profile(const PointSet& s, int k, const ScanOptions& opt,
                                ScanStats* stats) {
  ScanOutcome out = scan_profile(s, k, opt, nullptr);
  if (stats) {
    stats->flats_scanned =
        k > s.ambient_dim()
            ? 0
            : static_cast<std::uint64_t>(flat_count(s.ambient_dim(), k));
  }
  return out.profile;
}

bool is_avoider(const PointSet& s, int k, std::uint32_t t, const ScanOptions& opt) {
  if (k < 0) throw std::invalid_argument("is_avoider: negative flat dimension");
  if (k < 64 && t > (std::uint64_t{1} << k))
    throw std::invalid_argument("is_avoider: t exceeds the flat size 2^k");
  return !scan_profile(s, k, opt, [t](std::uint32_t c) { return c == t; }).aborted;
}

bool is_evasive(const PointSet& s, int k, std::uint32_t c, const ScanOptions& opt) {
  if (k < 0) throw std::invalid_argument("is_evasive: negative flat dimension");
  return !scan_profile(s, k, opt, [c](std::uint32_t x) { return x > c; }).aborted;
}

// --- file format ----------------------------------------------------------

PointSet parse_set_file(std::istream& in) {
  using detail::next_content_line;
  using detail::parse_kv_uint;
  using detail::split_ws;

  int lineno = 0;
  std::string line;
  if (!next_content_line(in, line, lineno))
    throw parse_error(1, "missing header: expected 'n=<dimension>'");
  const std::vector<std::string> toks = split_ws(line);
  if (toks.size() != 1)
    throw parse_error(lineno, "header must be exactly 'n=<dimension>'");
  const std::uint64_t n = parse_kv_uint(toks[0], "n", lineno);
  if (n > static_cast<std::uint64_t>(kMaxAmbientDim))
    throw parse_error(lineno, "dimension exceeds the ambient cap of 24");
  PointSet s(static_cast<int>(n));

  if (!next_content_line(in, line, lineno))
    throw parse_error(lineno + 1, "expected a 'points=' or 'hex=' line");

  if (line.rfind("points=", 0) == 0) {
    const std::string body = line.substr(7);
    if (!detail::trim(body).empty()) {
      for (const std::string& raw : detail::split_on(body, ',')) {
        const std::string tok = detail::trim(raw);
        const std::uint64_t p = detail::parse_uint(tok, lineno, "point");
        if (p >= s.domain_size())
          throw parse_error(lineno, "point " + tok + " is outside [0, 2^" +
                                        std::to_string(n) + ")");
        s.add(static_cast<std::uint32_t>(p));
      }
    }
  } else if (line.rfind("hex=", 0) == 0) {
    const std::string body = detail::trim(line.substr(4));
    if (body.empty()) throw parse_error(lineno, "empty hex bitmap");
    // Rightmost hex digit covers bits 0..3.
    for (std::size_t i = 0; i < body.size(); ++i) {
      const char ch = body[body.size() - 1 - i];
      std::uint32_t nibble;
      if (ch >= '0' && ch <= '9')
        nibble = ch - '0';
      else if (ch >= 'a' && ch <= 'f')
        nibble = ch - 'a' + 10;
      else if (ch >= 'A' && ch <= 'F')
        nibble = ch - 'A' + 10;
      else
        throw parse_error(lineno, std::string("invalid hex digit '") + ch + "'");
      for (int b = 0; b < 4; ++b) {
        if (!((nibble >> b) & 1)) continue;
        const std::uint64_t p = 4 * i + b;
        if (p >= s.domain_size())
          throw parse_error(lineno, "hex bitmap has bits at or beyond 2^" +
                                        std::to_string(n));
        s.add(static_cast<std::uint32_t>(p));
      }
    }
  } else {
    throw parse_error(lineno, "expected 'points=' or 'hex=', got '" + line + "'");
  }

  if (next_content_line(in, line, lineno))
    throw parse_error(lineno, "unexpected line '" + line + "'");
  return s;
}

PointSet read_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open set file '" + path + "'");
  return parse_set_file(in);
}

void write_set_file(std::ostream& out, const PointSet& s, SetFileStyle style) {
  out << "n=" << s.ambient_dim() << "\n";
  if (style == SetFileStyle::kPoints) {
    out << "points=";
    bool first = true;
    for (std::uint32_t p : s.points()) {
      if (!first) out << ",";
      out << p;
      first = false;
    }
    out << "\n";
    return;
  }
  const std::size_t digits = (s.domain_size() + 3) / 4;
  std::string hex(digits, '0');
  static const char* kDigits = "0123456789abcdef";
  for (std::uint32_t p : s.points()) {
    const std::size_t d = digits - 1 - (p >> 2);
    const int b = p & 3;
    const int cur = (hex[d] <= '9') ? hex[d] - '0' : hex[d] - 'a' + 10;
    hex[d] = kDigits[cur | (1 << b)];
  }
  out << "hex=" << hex << "\n";
}

}  // namespace flatavoid
