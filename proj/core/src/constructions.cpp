#include "flatavoid/constructions.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <set>
#include <stdexcept>
#include <thread>

#include "flatavoid/errors.hpp"
#include "parse_util.hpp"
#include "thread_util.hpp"

namespace flatavoid {

SignatureContext make_signature_context(int k, std::size_t ell) {
  if (k < 3)
    throw std::invalid_argument("signature: k must be at least 3");
  SignatureContext ctx;
  ctx.k = k;
  ctx.ell = ell;
  ctx.n = ell * static_cast<std::size_t>(k - 1);
  return ctx;
}

BitVector signature(const BitVector& x, const SignatureContext& ctx) {
  if (x.size() != ctx.n)
    throw std::invalid_argument("signature: input length differs from ell*(k-1)");
  BitVector s(ctx.ell);
  const std::size_t block = static_cast<std::size_t>(ctx.k - 1);
  for (std::size_t i = 0; i < ctx.ell; ++i) {
    bool all = true;
    for (std::size_t j = 0; j < block && all; ++j) all = x.get(i * block + j);
    if (all) s.set(i, true);
  }
  return s;
}

namespace {

// Codeword membership of every possible signature, as a 2^ell bitmap.
// `start` shifts to a coset (the affine variant); pass the zero vector for
// the linear case.
std::vector<std::uint64_t> signature_membership(const LinearCode& c,
                                                const BitVector& start) {
  const std::size_t ell = c.length();
  std::vector<std::uint64_t> member((std::size_t{1} << ell) / 64 + 1, 0);
  std::uint64_t cur = start.code();
  member[cur >> 6] |= std::uint64_t{1} << (cur & 63);
  for (std::uint64_t g = 1; g < (std::uint64_t{1} << c.dimension()); ++g) {
    cur ^= c.generator().row(std::countr_zero(g)).code();
    member[cur >> 6] |= std::uint64_t{1} << (cur & 63);
  }
  return member;
}

PointSet signature_complement_set(const LinearCode& code, const BitVector& start,
                                  int k, int threads) {
  const SignatureContext ctx = make_signature_context(k, code.length());
  if (ctx.n > static_cast<std::size_t>(kMaxAmbientDim))
    throw std::invalid_argument(
        "code_based_set: ambient dimension ell*(k-1) exceeds 24");
  const int n = static_cast<int>(ctx.n);

  const std::vector<std::uint64_t> member = signature_membership(code, start);
  const std::size_t block = static_cast<std::size_t>(k - 1);
  std::vector<std::uint32_t> block_mask(ctx.ell);
  for (std::size_t i = 0; i < ctx.ell; ++i)
    block_mask[i] = ((std::uint32_t{1} << block) - 1) << (i * block);

  const std::uint64_t domain = std::uint64_t{1} << n;
  std::vector<std::uint64_t> words((domain + 63) / 64, 0);

  // Each worker fills a disjoint word range, so assembly is deterministic.
  const int nthreads = detail::resolve_threads(threads);
  auto fill = [&](std::size_t word_begin, std::size_t word_end) {
    for (std::size_t w = word_begin; w < word_end; ++w) {
      std::uint64_t acc = 0;
      const std::uint64_t base = std::uint64_t{w} << 6;
      const std::uint64_t lim = std::min<std::uint64_t>(64, domain - base);
      for (std::uint64_t o = 0; o < lim; ++o) {
        const std::uint32_t x = static_cast<std::uint32_t>(base + o);
        std::uint32_t sig = 0;
        for (std::size_t i = 0; i < ctx.ell; ++i)
          if ((x & block_mask[i]) == block_mask[i]) sig |= std::uint32_t{1} << i;
        if (!((member[sig >> 6] >> (sig & 63)) & 1)) acc |= std::uint64_t{1} << o;
      }
      words[w] = acc;
    }
  };

  if (nthreads <= 1 || words.size() < 2) {
    fill(0, words.size());
  } else {
    const std::size_t chunks = std::min<std::size_t>(nthreads, words.size());
    std::vector<std::thread> pool;
    pool.reserve(chunks);
    const std::size_t per = (words.size() + chunks - 1) / chunks;
    for (std::size_t c0 = 0; c0 < words.size(); c0 += per)
      pool.emplace_back(fill, c0, std::min(words.size(), c0 + per));
    for (std::thread& t : pool) t.join();
  }
  return PointSet::from_words(n, std::move(words));
}

}  // namespace

PointSet code_based_set(const LinearCode& c, int k, int threads) {
  return signature_complement_set(c, BitVector(c.length()), k, threads);
}

PointSet affine_code_based_set(const AffineCode& c, int k, int threads) {
  return signature_complement_set(c.code(), c.offset(), k, threads);
}

Hypergraph::Hypergraph(int n, const std::vector<std::vector<int>>& edges)
    : n_(n) {
  if (n < 0 || n > kMaxAmbientDim)
    throw std::invalid_argument("Hypergraph: vertex count must be in [0, 24]");
  std::set<std::uint32_t> seen;
  for (const std::vector<int>& e : edges) {
    std::uint32_t mask = 0;
    for (int v : e) {
      if (v < 1 || v > n)
        throw std::invalid_argument("Hypergraph: vertex " + std::to_string(v) +
                                    " outside [1, " + std::to_string(n) + "]");
      mask |= std::uint32_t{1} << (v - 1);
    }
    if (!seen.insert(mask).second)
      throw std::invalid_argument("Hypergraph: duplicate edge");
    edges_.push_back(mask);
  }
}

int Hypergraph::rank() const {
  int r = 0;
  for (std::uint32_t e : edges_) r = std::max(r, std::popcount(e));
  return r;
}

BigInt count_independent_sets(const Hypergraph& h) {
  if (h.vertex_count() > 20)
    throw std::invalid_argument(
        "count_independent_sets: vertex count above 20 refused (2^n scan)");
  const std::uint32_t domain = std::uint32_t{1} << h.vertex_count();
  const std::vector<std::uint32_t>& edges = h.edge_masks();
  std::uint64_t count = 0;
  for (std::uint32_t w = 0; w < domain; ++w) {
    bool independent = true;
    for (std::uint32_t e : edges) {
      if ((w & e) == e) {
        independent = false;
        break;
      }
    }
    count += independent;
  }
  return BigInt(count);
}

PointSet hypergraph_set(const Hypergraph& h, int k) {
  if (k < 3) throw std::invalid_argument("hypergraph_set: k must be at least 3");
  if (h.rank() > k - 1)
    throw std::invalid_argument("hypergraph_set: an edge has size " +
                                std::to_string(h.rank()) +
                                ", exceeding k-1 = " + std::to_string(k - 1));
  PointSet s(h.vertex_count());
  const std::uint32_t domain_mask = s.domain_size() - 1;
  for (std::uint32_t e : h.edge_masks()) {
    // All supersets of e: walk the submasks of its complement.
    const std::uint32_t comp = domain_mask & ~e;
    std::uint32_t sub = comp;
    while (true) {
      s.add(e | sub);
      if (sub == 0) break;
      sub = (sub - 1) & comp;
    }
  }
  return s;
}

PointSet flats_avoider(int k, const std::vector<std::vector<Flat>>& groups) {
  if (k < 2) throw std::invalid_argument("flats_avoider: k must be at least 2");
  const Flat* first = nullptr;
  for (const auto& g : groups)
    if (!g.empty()) {
      first = &g.front();
      break;
    }
  if (!first)
    throw std::invalid_argument("flats_avoider: at least one flat is required");
  const int n = first->n;
  const int want_dim = n - k + 1;

  PointSet result(n);
  for (const std::vector<Flat>& group : groups) {
    PointSet sym(n);
    for (const Flat& f : group) {
      if (f.n != n)
        throw std::invalid_argument("flats_avoider: mixed ambient dimensions");
      if (f.k != want_dim)
        throw std::invalid_argument(
            "flats_avoider: flat of dimension " + std::to_string(f.k) +
            " where n-k+1 = " + std::to_string(want_dim) + " is required");
      PointSet fs(n);
      for (std::uint32_t p : flat_points(f)) fs.add(p);
      sym = sym ^ fs;
    }
    result = result | sym;
  }
  return result;
}

// --- file formats ----------------------------------------------------------

Hypergraph parse_hypergraph_file(std::istream& in) {
  using detail::next_content_line;
  using detail::parse_kv_uint;
  using detail::split_ws;

  int lineno = 0;
  std::string line;
  if (!next_content_line(in, line, lineno))
    throw parse_error(1, "missing header: expected 'n=<vertex count>'");
  const std::vector<std::string> toks = split_ws(line);
  if (toks.size() != 1)
    throw parse_error(lineno, "header must be exactly 'n=<vertex count>'");
  const std::uint64_t n = parse_kv_uint(toks[0], "n", lineno);
  if (n > static_cast<std::uint64_t>(kMaxAmbientDim))
    throw parse_error(lineno, "vertex count exceeds 24");

  std::vector<std::vector<int>> edges;
  std::set<std::uint32_t> seen;
  while (next_content_line(in, line, lineno)) {
    std::vector<int> edge;
    std::uint32_t mask = 0;
    for (const std::string& raw : detail::split_on(line, ',')) {
      const std::string tok = detail::trim(raw);
      const std::uint64_t v = detail::parse_uint(tok, lineno, "vertex");
      if (v < 1 || v > n)
        throw parse_error(lineno, "vertex " + tok + " outside [1, " +
                                      std::to_string(n) + "]");
      const std::uint32_t bit = std::uint32_t{1} << (v - 1);
      if (mask & bit)
        throw parse_error(lineno, "vertex " + tok + " repeated within an edge");
      mask |= bit;
      edge.push_back(static_cast<int>(v));
    }
    if (!seen.insert(mask).second)
      throw parse_error(lineno, "duplicate edge");
    edges.push_back(std::move(edge));
  }
  return Hypergraph(static_cast<int>(n), edges);
}

Hypergraph read_hypergraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open hypergraph file '" + path + "'");
  return parse_hypergraph_file(in);
}

FlatGroupsFile parse_flat_groups_file(std::istream& in) {
  using detail::next_content_line;
  using detail::parse_bits;
  using detail::parse_kv_uint;
  using detail::split_ws;

  int lineno = 0;
  std::string line;
  if (!next_content_line(in, line, lineno))
    throw parse_error(1, "missing header: expected 'n=<n> k=<k>'");
  const std::vector<std::string> toks = split_ws(line);
  if (toks.size() != 2)
    throw parse_error(lineno, "header must be 'n=<n> k=<k>'");
  FlatGroupsFile f;
  const std::uint64_t n = parse_kv_uint(toks[0], "n", lineno);
  const std::uint64_t k = parse_kv_uint(toks[1], "k", lineno);
  if (n > static_cast<std::uint64_t>(kMaxAmbientDim))
    throw parse_error(lineno, "dimension exceeds the ambient cap of 24");
  f.n = static_cast<int>(n);
  f.k = static_cast<int>(k);

  while (next_content_line(in, line, lineno)) {
    const std::vector<std::string> parts = split_ws(line);
    if (parts.size() == 1 && parts[0] == "group") {
      f.groups.emplace_back();
      continue;
    }
    if (parts.size() == 3 && parts[0] == "flat") {
      if (f.groups.empty())
        throw parse_error(lineno, "flat before the first 'group' line");
      if (parts[1].rfind("rep=", 0) != 0 || parts[2].rfind("basis=", 0) != 0)
        throw parse_error(lineno, "expected 'flat rep=<bits> basis=<rows>'");
      const BitVector rep =
          parse_bits(parts[1].substr(4), f.n, lineno, "representative");
      BitMatrix basis(static_cast<std::size_t>(f.n));
      const std::string rows = parts[2].substr(6);
      if (!rows.empty())
        for (const std::string& r : detail::split_on(rows, ';'))
          basis.append_row(parse_bits(r, f.n, lineno, "basis row"));
      try {
        f.groups.back().push_back(make_flat(f.n, basis, rep));
      } catch (const std::invalid_argument& e) {
        throw parse_error(lineno, e.what());
      }
      continue;
    }
    throw parse_error(lineno, "expected 'group' or 'flat ...', got '" + line + "'");
  }
  return f;
}

FlatGroupsFile read_flat_groups_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open flats file '" + path + "'");
  return parse_flat_groups_file(in);
}

}  // namespace flatavoid
