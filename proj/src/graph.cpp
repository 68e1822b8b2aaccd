#include "fg/graph.hpp"

#include "fg/error.hpp"

#include <algorithm>

namespace fg {

DenseGraph DenseGraph::from_rows(std::vector<Bitset> rows, GraphMeta meta) {
  const std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i) {
    require(rows[i].size() == n, Errc::Precondition, "adjacency row width mismatch");
    require(!rows[i].test(i), Errc::Precondition, "graph has a loop");
    rows[i].for_each([&](std::size_t j) { require(rows[j].test(i), Errc::Precondition, "adjacency not symmetric"); });
  }
  DenseGraph g;
  g.rows_ = std::move(rows);
  g.meta = std::move(meta);
  return g;
}

std::uint64_t DenseGraph::edge_count() const noexcept {
  std::uint64_t twice = 0;
  for (const auto& r : rows_) twice += r.count();
  return twice / 2;
}

std::optional<std::size_t> DenseGraph::regular_degree() const noexcept {
  if (rows_.empty()) return 0;
  const std::size_t d = rows_[0].count();
  for (const auto& r : rows_)
    if (r.count() != d) return std::nullopt;
  return d;
}

DenseGraph DenseGraph::complement() const {
  DenseGraph g(size());
  g.meta = meta;
  g.meta.kind += "-complement";
  for (std::size_t i = 0; i < size(); ++i) {
    g.rows_[i].set_all();
    g.rows_[i].subtract(rows_[i]);
    g.rows_[i].reset(i);
  }
  return g;
}

DenseGraph DenseGraph::relabeled(const std::vector<std::uint32_t>& perm) const {
  require(perm.size() == size(), Errc::Precondition, "permutation size mismatch");
  DenseGraph g(size());
  g.meta = meta;
  for (std::size_t i = 0; i < size(); ++i) rows_[i].for_each([&](std::size_t j) { g.rows_[perm[i]].set(perm[j]); });
  return g;
}

std::uint64_t induced_edge_count(const DenseGraph& g, const Bitset& s) {
  std::uint64_t twice = 0;
  s.for_each([&](std::size_t i) { twice += g.row(i).and_count(s); });
  return twice / 2;
}

namespace {

std::uint64_t choose3(std::uint64_t k) { return k < 3 ? 0 : k * (k - 1) * (k - 2) / 6; }
std::uint64_t pair_key(std::uint32_t u, std::uint32_t v) {
  if (u > v) std::swap(u, v);
  return (std::uint64_t{u} << 32) | v;
}

}  // namespace

TripleHypergraph::TripleHypergraph(std::size_t n, std::vector<std::vector<std::uint32_t>> blocks) : n_(n) {
  incidence_.resize(n);
  const bool dense = n <= kDensePairLimit;
  if (dense) dense_pairs_.assign(n * n, -1);
  for (auto& b : blocks) {
    if (b.size() < 3) continue;
    std::sort(b.begin(), b.end());
    require(std::adjacent_find(b.begin(), b.end()) == b.end() && b.back() < n, Errc::Precondition,
            "block has repeated or out-of-range vertices");
    const auto id = static_cast<std::uint32_t>(blocks_.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
      incidence_[b[i]].push_back(id);
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        if (dense) {
          auto& slot = dense_pairs_[b[i] * n + b[j]];
          require(slot < 0, Errc::Precondition, "two blocks share a pair");
          slot = dense_pairs_[b[j] * n + b[i]] = static_cast<std::int32_t>(id);
        } else {
          require(sparse_pairs_.emplace(pair_key(b[i], b[j]), id).second, Errc::Precondition,
                  "two blocks share a pair");
        }
      }
    }
    edge_count_ += choose3(b.size());
    masks_.push_back(Bitset::from_indices(n, b));
    blocks_.push_back(std::move(b));
  }
}

const std::vector<std::array<std::uint32_t, 3>>& TripleHypergraph::edges() const {
  require(edge_count_ <= kMaxEdges, Errc::Guard, "too many hyperedges to list");
  if (edges_.size() == edge_count_) return edges_;
  edges_.clear();
  edges_.reserve(edge_count_);
  for (const auto& b : blocks_)
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j)
        for (std::size_t k = j + 1; k < b.size(); ++k) edges_.push_back({b[i], b[j], b[k]});
  std::sort(edges_.begin(), edges_.end());
  return edges_;
}

std::int64_t TripleHypergraph::block_of(std::uint32_t u, std::uint32_t v) const {
  if (u == v) return -1;
  if (!dense_pairs_.empty()) return dense_pairs_[std::size_t{u} * n_ + v];
  auto it = sparse_pairs_.find(pair_key(u, v));
  return it == sparse_pairs_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

std::size_t TripleHypergraph::codegree(std::uint32_t u, std::uint32_t v) const {
  const auto b = block_of(u, v);
  return b < 0 ? 0 : blocks_[static_cast<std::size_t>(b)].size() - 2;
}

namespace {

// |B ∩ U| for every block meeting U in at least two vertices.
std::vector<std::uint64_t> block_occupancy(const TripleHypergraph& h, const Bitset& u) {
  std::vector<std::uint64_t> k;
  k.reserve(h.block_count());
  for (std::size_t b = 0; b < h.block_count(); ++b) k.push_back(h.block_mask(b).and_count(u));
  return k;
}

}  // namespace

std::uint64_t hyper_induced_edge_count(const TripleHypergraph& h, const Bitset& u) {
  std::uint64_t e = 0;
  for (auto k : block_occupancy(h, u)) e += choose3(k);
  return e;
}

std::uint64_t delta2(const TripleHypergraph& h, const Bitset& u) {
  std::uint64_t best = 0;
  for (auto k : block_occupancy(h, u))
    if (k >= 3) best = std::max(best, k - 2);
  return best;
}

Rational avg_degree(const TripleHypergraph& h, const Bitset& u) {
  const auto s = u.count();
  require(s > 0, Errc::EmptySet, "average degree of an empty vertex set");
  return Rational(3 * hyper_induced_edge_count(h, u), s);
}

}  // namespace fg
