#pragma once

#include "fg/bitset.hpp"
#include "fg/numeric.hpp"
#include "fg/projective.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace fg {

/// Where a graph came from; serialized with it.
struct GraphMeta {
  std::string kind;    // collinearity, oppositeness, lines, planes, ...
  std::string family;  // polar family name or "pg"
  unsigned r = 0;
  int t_twice = 0;
  unsigned p = 0, e = 0;
  friend bool operator==(const GraphMeta&, const GraphMeta&) = default;
};

/// Simple undirected graph stored as adjacency bitsets.
class DenseGraph {
 public:
  DenseGraph() = default;
  explicit DenseGraph(std::size_t n) : rows_(n, Bitset(n)) {}

  /// Takes ownership of rows; throws Precondition if not symmetric or loops present.
  static DenseGraph from_rows(std::vector<Bitset> rows, GraphMeta meta = {});

  std::size_t size() const noexcept { return rows_.size(); }
  const Bitset& row(std::size_t i) const noexcept { return rows_[i]; }
  const std::vector<Bitset>& rows() const noexcept { return rows_; }
  bool adjacent(std::size_t i, std::size_t j) const noexcept { return rows_[i].test(j); }
  void add_edge(std::size_t i, std::size_t j) noexcept {
    rows_[i].set(j);
    rows_[j].set(i);
  }
  std::size_t degree(std::size_t i) const noexcept { return rows_[i].count(); }
  std::uint64_t edge_count() const noexcept;
  /// The common degree, or nothing for an irregular graph.
  std::optional<std::size_t> regular_degree() const noexcept;

  DenseGraph complement() const;
  /// Vertex i of this graph becomes perm[i].
  DenseGraph relabeled(const std::vector<std::uint32_t>& perm) const;

  GraphMeta meta;

 private:
  std::vector<Bitset> rows_;
};

std::uint64_t induced_edge_count(const DenseGraph& g, const Bitset& s);

/// 3-uniform hypergraph given by blocks: every 3-subset of a block is an edge
/// and two blocks share at most one vertex (the line structure of PG(r,q)).
/// The pair -> block map replaces a pair -> triple list.
class TripleHypergraph {
 public:
  static constexpr std::size_t kDensePairLimit = 2048;
  static constexpr std::uint64_t kMaxEdges = 20'000'000;

  TripleHypergraph() = default;
  /// Blocks with fewer than three vertices are dropped.
  TripleHypergraph(std::size_t n, std::vector<std::vector<std::uint32_t>> blocks);

  std::size_t size() const noexcept { return n_; }
  std::uint64_t edge_count() const noexcept { return edge_count_; }
  /// All edges as sorted triples in lexicographic order (built on first call).
  const std::vector<std::array<std::uint32_t, 3>>& edges() const;

  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<std::uint32_t>& block(std::size_t b) const noexcept { return blocks_[b]; }
  const Bitset& block_mask(std::size_t b) const noexcept { return masks_[b]; }
  const std::vector<std::uint32_t>& blocks_through(std::size_t v) const noexcept { return incidence_[v]; }
  /// Block containing both u and v, or -1.
  std::int64_t block_of(std::uint32_t u, std::uint32_t v) const;
  /// Number of edges containing u and v.
  std::size_t codegree(std::uint32_t u, std::uint32_t v) const;

  /// Back-reference for hypergraphs built on a projective space.
  ProjSpacePtr pg;

 private:
  std::size_t n_ = 0;
  std::uint64_t edge_count_ = 0;
  std::vector<std::vector<std::uint32_t>> blocks_;
  std::vector<Bitset> masks_;
  std::vector<std::vector<std::uint32_t>> incidence_;
  std::vector<std::int32_t> dense_pairs_;
  std::unordered_map<std::uint64_t, std::uint32_t> sparse_pairs_;
  mutable std::vector<std::array<std::uint32_t, 3>> edges_;
};

std::uint64_t hyper_induced_edge_count(const TripleHypergraph& h, const Bitset& u);
/// Largest number of induced edges through a pair of U; 0 when |U| < 2.
std::uint64_t delta2(const TripleHypergraph& h, const Bitset& u);
/// 3 e(H[U]) / |U|. Throws EmptySet for U empty.
Rational avg_degree(const TripleHypergraph& h, const Bitset& u);

}  // namespace fg
