#include "flatavoid/spectrum.hpp"

#include <bit>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

#include "flatavoid/errors.hpp"

namespace flatavoid {

namespace {

std::filesystem::path cache_path(const std::string& dir, int n, int k, int t) {
  return std::filesystem::path(dir) /
         ("spectrum_n" + std::to_string(n) + "_k" + std::to_string(k) + "_t" +
          std::to_string(t) + ".json");
}

std::optional<SpectrumResult> load_cached(const std::string& dir, int n, int k,
                                          int t) {
  std::ifstream in(cache_path(dir, n, k, t));
  if (!in) return std::nullopt;
  try {
    const nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("n").get<int>() != n || j.at("k").get<int>() != k ||
        j.at("t").get<int>() != t)
      return std::nullopt;
    SpectrumResult r;
    r.n = n;
    r.k = k;
    r.t = t;
    for (const auto& m : j.at("members"))
      r.members.push_back(m.get<std::uint32_t>());
    r.density_num = BigInt(j.at("density_num").get<std::string>());
    r.density_den = BigInt(j.at("density_den").get<std::string>());
    return r;
  } catch (const std::exception&) {
    return std::nullopt;  // stale or corrupt cache: recompute
  }
}

void store_cached(const std::string& dir, const SpectrumResult& r) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return;  // caching is best-effort
  nlohmann::json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["t"] = r.t;
  j["members"] = r.members;
  j["density_num"] = r.density_num.str();
  j["density_den"] = r.density_den.str();
  std::ofstream out(cache_path(dir, r.n, r.k, r.t));
  if (out) out << j.dump(2) << "\n";
}

}  // namespace

SpectrumResult spectrum_exhaustive(int n, int k, int t,
                                   const std::string& cache_dir) {
  if (n < 1 || n > 4)
    throw std::invalid_argument(
        "spectrum_exhaustive: n must be in [1, 4] (2^(2^n) subsets)");
  if (k < 1 || k > n)
    throw std::invalid_argument("spectrum_exhaustive: k must be in [1, n]");
  if (t < 0 || t > (1 << k))
    throw std::invalid_argument("spectrum_exhaustive: t must be in [0, 2^k]");

  if (!cache_dir.empty())
    if (auto cached = load_cached(cache_dir, n, k, t)) return *cached;

  const std::uint32_t domain = std::uint32_t{1} << n;  // <= 16 points
  std::vector<std::uint32_t> flat_masks;
  enumerate_flats(n, k, [&](const Flat& f) {
    std::uint32_t mask = 0;
    for (std::uint32_t p : flat_points(f)) mask |= std::uint32_t{1} << p;
    flat_masks.push_back(mask);
  });

  SpectrumResult r;
  r.n = n;
  r.k = k;
  r.t = t;

  for (std::uint32_t m = 0; m <= domain; ++m) {
    // m is a member unless some m-subset avoids t everywhere.
    bool avoider_found = false;
    std::uint64_t s = (m == 0) ? 0 : ((std::uint64_t{1} << m) - 1);
    while (true) {
      bool avoids = true;
      for (std::uint32_t f : flat_masks) {
        if (std::popcount(static_cast<std::uint32_t>(s) & f) ==
            static_cast<int>(t)) {
          avoids = false;
          break;
        }
      }
      if (avoids) {
        avoider_found = true;
        break;
      }
      if (m == 0 || m == domain) break;  // single subset in the class
      // Gosper's hack: next subset of the same popcount.
      const std::uint64_t c = s & -s;
      const std::uint64_t r2 = s + c;
      s = (((s ^ r2) >> 2) / c) | r2;
      if (s >= (std::uint64_t{1} << domain)) break;
    }
    if (!avoider_found) r.members.push_back(m);
  }

  const BigInt num(r.members.size());
  const BigInt den = pow2(static_cast<std::size_t>(n));
  const BigInt g = boost::multiprecision::gcd(num, den);
  r.density_num = g == 0 ? num : num / g;
  r.density_den = g == 0 ? den : den / g;

  if (!cache_dir.empty()) store_cached(cache_dir, r);
  return r;
}

namespace {

struct SearchContext {
  std::uint32_t domain = 0;
  int t = 0;
  std::uint64_t m = 0;
  std::vector<std::vector<std::uint32_t>> flats_with;     // point -> flat ids
  std::vector<std::vector<std::uint32_t>> flats_ending;   // point -> flat ids with max = point
  std::vector<std::uint32_t> counts;                      // per flat: chosen points so far
  std::vector<std::uint32_t> chosen;
  std::uint64_t nodes = 0;
  std::uint64_t node_budget = 0;
};

enum class DfsResult { kFound, kExhausted, kBudget };

// Decide point `pos`: whichever branch is taken, every flat whose last
// point is `pos` has its intersection count final and must differ from t.
DfsResult dfs(SearchContext& ctx, std::uint32_t pos) {
  if (ctx.nodes >= ctx.node_budget) return DfsResult::kBudget;
  ++ctx.nodes;
  if (ctx.chosen.size() == ctx.m &&
      static_cast<std::uint64_t>(pos) == ctx.domain)
    return DfsResult::kFound;
  if (pos >= ctx.domain) return DfsResult::kExhausted;
  // Not enough points left to reach m.
  if (ctx.m - ctx.chosen.size() > ctx.domain - pos) return DfsResult::kExhausted;

  const auto completed_ok = [&]() {
    for (std::uint32_t f : ctx.flats_ending[pos])
      if (ctx.counts[f] == static_cast<std::uint32_t>(ctx.t)) return false;
    return true;
  };

  // Include pos first: avoiders of the requested size tend to be found
  // sooner by filling greedily.
  if (ctx.chosen.size() < ctx.m) {
    for (std::uint32_t f : ctx.flats_with[pos]) ++ctx.counts[f];
    ctx.chosen.push_back(pos);
    if (completed_ok()) {
      const DfsResult r = dfs(ctx, pos + 1);
      if (r != DfsResult::kExhausted) return r;
    }
    ctx.chosen.pop_back();
    for (std::uint32_t f : ctx.flats_with[pos]) --ctx.counts[f];
  }

  if (!completed_ok()) return DfsResult::kExhausted;
  return dfs(ctx, pos + 1);
}

}  // namespace

AvoiderSearch exists_avoider_of_size(int n, int k, int t, std::uint64_t m,
                                     std::uint64_t node_budget,
                                     std::uint64_t flat_budget) {
  // Recursion depth is 2^n; 14 keeps the stack modest (the scan itself is
  // hopeless long before that anyway).
  if (n < 0 || n > 14)
    throw std::invalid_argument("exists_avoider_of_size: n must be in [0, 14]");
  if (k < 0) throw std::invalid_argument("exists_avoider_of_size: negative k");
  if (k < 64 && t >= 0 &&
      static_cast<std::uint64_t>(t) > (std::uint64_t{1} << k))
    throw std::invalid_argument("exists_avoider_of_size: t exceeds 2^k");
  if (t < 0) throw std::invalid_argument("exists_avoider_of_size: negative t");
  const std::uint64_t domain = std::uint64_t{1} << n;
  if (m > domain)
    throw std::invalid_argument("exists_avoider_of_size: m exceeds 2^n");

  AvoiderSearch out;

  SearchContext ctx;
  ctx.domain = static_cast<std::uint32_t>(domain);
  ctx.t = t;
  ctx.m = m;
  ctx.node_budget = node_budget;
  ctx.flats_with.resize(domain);
  ctx.flats_ending.resize(domain);

  if (k <= n) {
    std::uint32_t id = 0;
    enumerate_flats(n, k, [&](const Flat& f) {
      const std::vector<std::uint32_t> pts = flat_points(f);
      for (std::uint32_t p : pts) ctx.flats_with[p].push_back(id);
      ctx.flats_ending[pts.back()].push_back(id);  // pts ascending
      ++id;
    }, flat_budget);
    ctx.counts.assign(id, 0);
  }

  const DfsResult r = dfs(ctx, 0);
  out.nodes = ctx.nodes;
  switch (r) {
    case DfsResult::kBudget:
      out.outcome = SearchOutcome::kBudgetExceeded;
      return out;
    case DfsResult::kExhausted:
      out.outcome = SearchOutcome::kExhausted;
      return out;
    case DfsResult::kFound:
      break;
  }

  PointSet witness(n);
  for (std::uint32_t p : ctx.chosen) witness.add(p);
  // The witness never leaves unverified: an independent full scan must
  // agree before we claim existence.
  if (!is_avoider(witness, k, static_cast<std::uint32_t>(t),
                  ScanOptions{flat_budget, 1}))
    throw std::logic_error(
        "exists_avoider_of_size: witness failed re-verification");
  out.outcome = SearchOutcome::kFound;
  out.witness = std::move(witness);
  return out;
}

}  // namespace flatavoid
