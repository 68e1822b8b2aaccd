#pragma once

#include "fg/graph.hpp"
#include "fg/numeric.hpp"
#include "fg/polar.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace fg {

struct SolveOptions {
  std::uint64_t budget = 100'000'000;  // node expansions
  /// A proven upper bound on alpha; the search stops once it is attained.
  std::optional<std::size_t> known_upper_bound;
};

struct SolveResult {
  std::size_t alpha = 0;
  std::vector<std::uint32_t> witness;  // sorted
  std::uint64_t nodes = 0;
  double elapsed_ms = 0;
  bool timeout = false;           // alpha is then only a lower bound
  bool stopped_at_bound = false;  // optimality certified by known_upper_bound
  friend bool operator==(const SolveResult&, const SolveResult&) = default;
};

struct CountResult {
  std::uint64_t m = 0;
  BigInt count;
  std::uint64_t nodes = 0;
  friend bool operator==(const CountResult&, const CountResult&) = default;
};

/// Exact maximum independent set by branch and bound: greedy clique cover
/// bound, candidates ordered by descending degree then index. Timeout is
/// reported in the result, never as an exception.
SolveResult max_independent_set(const DenseGraph& g, const SolveOptions& opt = {});

/// Exact maximum independent set (cap) of a block hypergraph. Choosing P
/// removes, for every chosen Q, the rest of the block through P and Q. The
/// bound covers the candidates by cliques of the induced conflict graph and by
/// blocks free of chosen vertices (at most two from each).
SolveResult max_cap(const TripleHypergraph& h, const SolveOptions& opt = {});

/// All independent sets of size exactly m of the hypergraph, in lexicographic
/// order. Guard above max_results.
std::vector<std::vector<std::uint32_t>> caps_of_size(const TripleHypergraph& h, std::size_t m,
                                                      std::size_t max_results = 1'000'000);

/// Number of independent m-sets by ordered DFS. Guard when the node count
/// exceeds budget.
CountResult count_independent_sets(const DenseGraph& g, std::uint64_t m, std::uint64_t budget = 1'000'000'000);
CountResult count_independent_sets(const TripleHypergraph& h, std::uint64_t m, std::uint64_t budget = 1'000'000'000);

/// Inclusion-maximal independent sets of size >= min_size (Bron-Kerbosch with
/// pivoting on the complement), sorted lexicographically. Guard above 10^6.
std::vector<std::vector<std::uint32_t>> list_maximal_independent_sets(const DenseGraph& g, std::size_t min_size);

/// Geometric wrappers: witnesses are polar point indices, subspace indices
/// (enumerate_subspaces order) and flag indices (maximal_flags order).
SolveResult max_partial_ovoid(const PolarSpace& space, const SolveOptions& opt = {});
SolveResult max_partial_spread(const ProjSpace& pg, unsigned k, const SolveOptions& opt = {});
SolveResult max_ekr_set(const PolarSpace& space, const SolveOptions& opt = {});

}  // namespace fg
