#include "fg/geom_graphs.hpp"

#include "fg/error.hpp"

namespace fg {

namespace {

GraphMeta polar_meta(const PolarSpace& s, const char* kind) {
  return {kind, s.spec().name(), s.rank(), s.spec().t.twice, s.spec().field->p(), s.spec().field->e()};
}

void assert_regular(const DenseGraph& g) {
  require(g.regular_degree().has_value(), Errc::FormInconsistent, g.meta.kind + " graph of " + g.meta.family +
                                                                       " is not regular");
}

}  // namespace

DenseGraph collinearity_graph(const PolarSpace& space) {
  require(space.point_count() <= 50'000, Errc::Guard, "collinearity graph above 5*10^4 vertices");
  std::vector<Bitset> rows;
  rows.reserve(space.point_count());
  for (std::size_t p = 0; p < space.point_count(); ++p) rows.push_back(space.collinear_row(p));
  auto g = DenseGraph::from_rows(std::move(rows), polar_meta(space, "collinearity"));
  assert_regular(g);
  return g;
}

DenseGraph oppositeness_graph(const PolarSpace& space) {
  const auto flags = space.maximal_flags();
  require(flags.size() <= 10'000, Errc::Guard, "oppositeness graph above 10^4 vertices");
  DenseGraph g(flags.size());
  g.meta = polar_meta(space, "oppositeness");
  for (std::size_t i = 0; i < flags.size(); ++i)
    for (std::size_t j = i + 1; j < flags.size(); ++j)
      if (space.opposite_flags(flags[i], flags[j])) g.add_edge(i, j);
  assert_regular(g);
  return g;
}

DenseGraph subspace_intersection_graph(const ProjSpace& pg, unsigned k) {
  require(k == 2 || k == 3, Errc::Precondition, "subspace graphs are built for lines and planes");
  require(gaussian_binomial(pg.dimension() + 1, k, pg.q()) <= 50'000, Errc::Guard,
          "subspace graph above 5*10^4 vertices");
  const auto subs = enumerate_subspaces(pg, k);
  std::vector<Bitset> masks;
  masks.reserve(subs.size());
  for (const auto& s : subs) masks.push_back(Bitset::from_indices(pg.point_count(), s));
  DenseGraph g(subs.size());
  g.meta = {k == 2 ? "lines" : "planes", "pg", pg.dimension(), 0, pg.field().p(), pg.field().e()};
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = i + 1; j < subs.size(); ++j)
      if (masks[i].intersects(masks[j])) g.add_edge(i, j);
  assert_regular(g);
  return g;
}

TripleHypergraph cap_hypergraph(ProjSpacePtr pg) {
  require(pg->point_count() <= 50'000, Errc::Guard, "cap hypergraph above 5*10^4 vertices");
  require(pg->lines_materialized(), Errc::Guard, "cap hypergraph needs stored lines");
  const auto agg = cap_aggregates(pg->dimension(), pg->q());
  require(agg.e <= TripleHypergraph::kMaxEdges, Errc::Guard, "cap hypergraph has too many edges to materialize");
  std::vector<std::vector<std::uint32_t>> blocks;
  blocks.reserve(pg->line_count());
  for (std::uint64_t l = 0; l < pg->line_count(); ++l) {
    auto pts = pg->line(l);
    blocks.emplace_back(pts.begin(), pts.end());
  }
  TripleHypergraph h(pg->point_count(), std::move(blocks));
  h.pg = std::move(pg);
  return h;
}

CapAggregates cap_aggregates(unsigned r, unsigned q) {
  const BigInt theta = (ipow(BigInt(q), r + 1) - 1) / (q - 1);
  // every pair spans one line and picks one of its q-1 remaining points;
  // each triple is counted from its three pairs
  return {theta, theta * (theta - 1) * (q - 1) / 6, q - 1};
}

}  // namespace fg
