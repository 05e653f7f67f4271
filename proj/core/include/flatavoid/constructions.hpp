#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "flatavoid/bigint.hpp"
#include "flatavoid/codes.hpp"
#include "flatavoid/geometry.hpp"
#include "flatavoid/gf2.hpp"

namespace flatavoid {

// Block structure tying a code of length ell to the ambient space
// GF(2)^(ell*(k-1)): block i (1-based) is the run of k-1 coordinates
// (i-1)(k-1)+1 .. i(k-1).
struct SignatureContext {
  int k = 3;
  std::size_t ell = 0;
  std::size_t n = 0;  // ell * (k - 1)
};

// k >= 3 is required; smaller k leaves no room for the construction.
SignatureContext make_signature_context(int k, std::size_t ell);

// Coordinate i of the result is 1 iff every coordinate of block i of x is 1.
BitVector signature(const BitVector& x, const SignatureContext& ctx);

// The set {x : signature(x) not a codeword of c} in GF(2)^(ell*(k-1)).
// Its size is 2^n - W_c(1, 2^(k-1) - 1). Ambient dimensions above 24 are
// refused, as is k < 3.
PointSet code_based_set(const LinearCode& c, int k, int threads = 1);

// Same with coset membership: x is kept iff signature(x) is not in the
// affine code. Size: 2^n - W(1, 2^(k-1)-1) with W the coset enumerator.
PointSet affine_code_based_set(const AffineCode& c, int k, int threads = 1);

// Hypergraph on vertices [n] = {1, ..., n}, edges stored as bitmasks
// (vertex v = bit v-1). Duplicate edges are rejected.
class Hypergraph {
 public:
  Hypergraph(int n, const std::vector<std::vector<int>>& edges);

  int vertex_count() const { return n_; }
  const std::vector<std::uint32_t>& edge_masks() const { return edges_; }

  // Largest edge size; 0 when there are no edges.
  int rank() const;

 private:
  int n_;
  std::vector<std::uint32_t> edges_;
};

// Number of independent sets of h: subsets of [n] containing no edge
// entirely. Exhaustive 2^n scan; n above 20 is refused.
BigInt count_independent_sets(const Hypergraph& h);

// Union over edges e of F_e = {x : x_v = 1 for all v in e}, a set in
// GF(2)^n of size 2^n - count_independent_sets(h). Requires k >= 3 and
// every edge of size at most k-1 (so each F_e splits into (n-k+1)-flats).
PointSet hypergraph_set(const Hypergraph& h, int k);

// Union over groups of the symmetric difference of the flats within each
// group. Every flat must have dimension n-k+1 for the declared k >= 2; at
// least one flat is required (it fixes the ambient dimension).
PointSet flats_avoider(int k, const std::vector<std::vector<Flat>>& groups);

// --- file formats ---------------------------------------------------------
//
// Hypergraph file:
//   n=<n>
//   <edge per line: comma-separated 1-indexed vertices>
//
// Flat-groups file:
//   n=<n> k=<k>
//   group
//   flat rep=<0/1 string> basis=<row>;<row>;...
//   ...
// Each `group` line starts a new group; each flat's basis rows are
// semicolon-joined 0/1 strings (empty after `basis=` for a 0-dim flat).

Hypergraph parse_hypergraph_file(std::istream& in);
Hypergraph read_hypergraph_file(const std::string& path);

struct FlatGroupsFile {
  int n = 0;
  int k = 0;
  std::vector<std::vector<Flat>> groups;
};

FlatGroupsFile parse_flat_groups_file(std::istream& in);
FlatGroupsFile read_flat_groups_file(const std::string& path);

}  // namespace flatavoid
