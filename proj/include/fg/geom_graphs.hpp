#pragma once

#include "fg/graph.hpp"
#include "fg/polar.hpp"

namespace fg {

/// Points of the polar space, adjacent when collinear. Guard above 5*10^4 points.
DenseGraph collinearity_graph(const PolarSpace& space);

/// Maximal flags, adjacent when opposite. Guard above 10^4 flags.
DenseGraph oppositeness_graph(const PolarSpace& space);

/// (k-1)-dimensional subspaces of pg for k in {2,3}, adjacent when they meet.
/// Vertex i is the i-th entry of enumerate_subspaces(pg, k).
DenseGraph subspace_intersection_graph(const ProjSpace& pg, unsigned k);

/// Collinear triples of PG(r,q); blocks are the lines in line-index order.
/// Guard when theta > 5*10^4, when lines are not stored, or when there are
/// too many edges to materialize (use cap_aggregates instead).
TripleHypergraph cap_hypergraph(ProjSpacePtr pg);

/// Closed-form (n, e, Delta_2) of the collinear-triple hypergraph of PG(r,q).
struct CapAggregates {
  BigInt n;
  BigInt e;
  std::uint64_t delta2 = 0;
};
CapAggregates cap_aggregates(unsigned r, unsigned q);

}  // namespace fg
