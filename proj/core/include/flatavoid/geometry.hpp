#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "flatavoid/bigint.hpp"
#include "flatavoid/gf2.hpp"

namespace flatavoid {

// Everything here works in the affine space GF(2)^n with points encoded as
// integers: coordinate x_j is bit j-1 of the code, so x = (1,1,0,0) in
// GF(2)^4 is point 3. Ambient dimensions above 24 are refused; the dense
// bitmap and the flat scans stop being sensible beyond that.
inline constexpr int kMaxAmbientDim = 24;

// Flat enumerations refuse to start when they would visit more flats than
// this (callers can override per call).
inline constexpr std::uint64_t kDefaultFlatBudget = std::uint64_t{1} << 31;

std::uint32_t point_code(const BitVector& v);
BitVector point_vector(int n, std::uint32_t code);

// Subset of GF(2)^n as a dense bitmap of 2^n bits.
class PointSet {
 public:
  explicit PointSet(int n);

  static PointSet full(int n);

  // Adopts a prebuilt bitmap; must have the exact word count for 2^n bits
  // and no bits at or beyond 2^n.
  static PointSet from_words(int n, std::vector<std::uint64_t> words);

  int ambient_dim() const { return n_; }
  std::uint32_t domain_size() const { return std::uint32_t{1} << n_; }

  bool contains(std::uint32_t p) const {
    return (words_[p >> 6] >> (p & 63)) & 1u;
  }

  void add(std::uint32_t p);
  void remove(std::uint32_t p);

  std::uint64_t count() const;
  std::vector<std::uint32_t> points() const;  // ascending

  PointSet operator|(const PointSet& o) const;
  PointSet operator&(const PointSet& o) const;
  PointSet operator^(const PointSet& o) const;
  PointSet complement() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

  bool operator==(const PointSet&) const = default;

 private:
  int n_;
  std::vector<std::uint64_t> words_;
};

// Affine subspace of GF(2)^n of dimension k, stored canonically: basis is
// the RREF basis of the direction space and rep is the unique point of the
// flat that is zero on every pivot column. Canonical fields make equality
// field-wise.
struct Flat {
  int n = 0;
  int k = 0;
  BitMatrix basis;
  BitVector rep;

  bool operator==(const Flat&) const = default;

  std::size_t hash() const {
    return basis.hash() ^ (rep.hash() * 0x9e3779b97f4a7c15ull);
  }
};

// Canonicalizes basis and rep. The basis rows must be independent
// (std::invalid_argument otherwise); the representative may be any point of
// the intended flat.
Flat make_flat(int n, const BitMatrix& basis, const BitVector& rep);

// The 2^k point codes of the flat, ascending. Whether a single point lies
// on the flat is cheaper: reduce and compare, see flat_contains.
std::vector<std::uint32_t> flat_points(const Flat& f);

bool flat_contains(const Flat& f, std::uint32_t p);

// Number of k-flats in GF(2)^n: 2^(n-k) [n k]_2, and 0 when k > n.
BigInt flat_count(int n, int k);

// Every k-flat of GF(2)^n exactly once, ordered by (pivot set of the
// direction space, basis free bits, representative). Refuses to start
// (budget_error) when flat_count(n, k) exceeds the budget.
void enumerate_flats(int n, int k, const std::function<void(const Flat&)>& fn,
                     std::uint64_t budget = kDefaultFlatBudget);

struct ScanOptions {
  std::uint64_t budget = kDefaultFlatBudget;
  int threads = 1;  // 0 = one per hardware thread
};

struct ScanStats {
  std::uint64_t flats_scanned = 0;
};

// k-profile of s: the set of |s ∩ F| over all k-flats F. Work is split
// across threads by pivot set; the result does not depend on the thread
// count. Empty when k > n (there are no k-flats to meet).
std::set<std::uint32_t> profile(const PointSet& s, int k,
                                const ScanOptions& opt = {},
                                ScanStats* stats = nullptr);

// s meets no k-flat in exactly t points, i.e. t is not in the k-profile.
bool is_avoider(const PointSet& s, int k, std::uint32_t t,
                const ScanOptions& opt = {});

// Every k-flat meets s in at most c points: max of the k-profile is <= c.
bool is_evasive(const PointSet& s, int k, std::uint32_t c,
                const ScanOptions& opt = {});

// --- file format ----------------------------------------------------------
//
//   n=<n>
//   points=<comma separated point codes>     (either this ...)
//   hex=<bitmap as a hex number, bit p = point p>   (... or this)
//
// Written form: hex by default, zero-padded to 2^n/4 digits.

enum class SetFileStyle { kHex, kPoints };

PointSet parse_set_file(std::istream& in);
PointSet read_set_file(const std::string& path);
void write_set_file(std::ostream& out, const PointSet& s,
                    SetFileStyle style = SetFileStyle::kHex);

}  // namespace flatavoid

template <>
struct std::hash<flatavoid::Flat> {
  std::size_t operator()(const flatavoid::Flat& f) const { return f.hash(); }
};
