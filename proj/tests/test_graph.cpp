#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fg/error.hpp"
#include "fg/field.hpp"
#include "fg/geom_graphs.hpp"
#include "fg/instance.hpp"

#include "test_util.hpp"

using namespace fg;
using fg::test::collinear_by_minors;

namespace {

struct Srg {
  std::size_t k = 0, lambda = 0, mu = 0;
  bool ok = true;
};

// Parameters read off by counting common neighbours.
Srg srg_params(const DenseGraph& g) {
  Srg s;
  s.k = g.degree(0);
  bool seen_adj = false, seen_non = false;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.degree(i) != s.k) s.ok = false;
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const auto c = g.row(i).and_count(g.row(j));
      auto& slot = g.adjacent(i, j) ? s.lambda : s.mu;
      auto& seen = g.adjacent(i, j) ? seen_adj : seen_non;
      if (!seen) {
        slot = c;
        seen = true;
      } else if (slot != c) {
        s.ok = false;
      }
    }
  }
  return s;
}

}  // namespace

TEST_CASE("collinearity graphs are strongly regular with the GQ parameters") {
  struct Case {
    const char* name;
    std::size_t n, k, lambda, mu;
  };
  // GQ(s,t): srg((s+1)(st+1), s(t+1), s-1, t+1)
  for (const auto& c : {Case{"W(3,2)", 15, 6, 1, 3}, Case{"W(3,3)", 40, 12, 2, 4}, Case{"Q(4,3)", 40, 12, 2, 4},
                        Case{"Q-(5,2)", 27, 10, 1, 5}, Case{"Q+(3,2)", 9, 4, 1, 2}, Case{"H(3,4)", 45, 12, 3, 3}}) {
    CAPTURE(c.name);
    const auto g = instance_graph(parse_instance(c.name));
    CHECK(g.size() == c.n);
    const auto s = srg_params(g);
    CHECK(s.ok);
    CHECK(s.k == c.k);
    CHECK(s.lambda == c.lambda);
    CHECK(s.mu == c.mu);
  }
}

TEST_CASE("oppositeness, line and plane graphs have the expected sizes and degrees") {
  const auto opp = instance_graph(parse_instance("W(3,2)/opp"));
  CHECK(opp.size() == 45);
  CHECK(opp.regular_degree() == std::optional<std::size_t>(16));

  const auto lines = instance_graph(parse_instance("PG(3,2)/lines"));
  CHECK(lines.size() == 35);
  // a line meets (q+1) * (lines through a point - 1) others
  CHECK(lines.regular_degree() == std::optional<std::size_t>(3 * 6));

  const auto lines3 = instance_graph(parse_instance("PG(3,3)/lines"));
  CHECK(lines3.size() == 130);
  CHECK(lines3.regular_degree() == std::optional<std::size_t>(4 * 12));
}

TEST_CASE("plane graph of PG(5,2): disjoint planes number q^9") {
  const auto pg = build_pg(5, make_field(2, 1));
  const auto g = subspace_intersection_graph(*pg, 3);
  CHECK(g.size() == 1395);
  CHECK(g.regular_degree() == std::optional<std::size_t>(1395 - 512 - 1));
}

TEST_CASE("cap hypergraph edge counts agree with a minor-based oracle") {
  for (auto [r, q] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}}) {
    CAPTURE(r);
    CAPTURE(q);
    const auto pg = build_pg(r, make_field(q, 1));
    const auto h = cap_hypergraph(pg);
    std::uint64_t brute = 0;
    const auto n = static_cast<PointId>(pg->point_count());
    for (PointId a = 0; a < n; ++a)
      for (PointId b = a + 1; b < n; ++b)
        for (PointId c = b + 1; c < n; ++c) brute += collinear_by_minors(*pg, a, b, c);
    CHECK(h.edge_count() == brute);
    const auto agg = cap_aggregates(r, q);
    CHECK(agg.e == BigInt(brute));
    CHECK(agg.n == BigInt(n));
    Bitset all(n);
    all.set_all();
    CHECK(delta2(h, all) == q - 1);
    CHECK(agg.delta2 == q - 1);
    CHECK(h.codegree(0, 1) == q - 1);
    CHECK(avg_degree(h, all) == Rational(3 * brute, n));
  }
}

TEST_CASE("hypergraph edges list every collinear triple once") {
  const auto pg = build_pg(2, make_field(3, 1));
  const auto h = cap_hypergraph(pg);
  const auto& e = h.edges();
  CHECK(e.size() == 52);
  for (const auto& t : e) {
    CHECK(t[0] < t[1]);
    CHECK(t[1] < t[2]);
    CHECK(collinear_by_minors(*pg, t[0], t[1], t[2]));
  }
  CHECK(std::is_sorted(e.begin(), e.end()));
}

TEST_CASE("DenseGraph basics") {
  std::vector<Bitset> rows(4, Bitset(4));
  rows[0].set(1);
  rows[1].set(0);
  rows[1].set(2);
  rows[2].set(1);
  auto g = DenseGraph::from_rows(rows);
  CHECK(g.edge_count() == 2);
  CHECK_FALSE(g.regular_degree());
  CHECK(g.complement().edge_count() == 4);
  const auto h = g.relabeled({3, 2, 1, 0});
  CHECK(h.adjacent(3, 2));
  CHECK(h.adjacent(2, 1));
  CHECK_FALSE(h.adjacent(0, 1));
  CHECK(induced_edge_count(g, Bitset::from_indices(4, std::vector<std::uint32_t>{0, 1, 2})) == 2);

  rows[3].set(0);  // asymmetric
  CHECK_THROWS_AS(DenseGraph::from_rows(rows), Error);
}

TEST_CASE("TripleHypergraph rejects blocks sharing a pair and reports empty sets") {
  CHECK_THROWS_AS(TripleHypergraph(5, {{0, 1, 2}, {0, 1, 3}}), Error);
  TripleHypergraph h(6, {{0, 1, 2, 3}, {3, 4, 5}});
  CHECK(h.edge_count() == 4 + 1);
  CHECK(h.block_of(0, 3) == 0);
  CHECK(h.block_of(0, 4) == -1);
  CHECK(h.codegree(3, 4) == 1);
  CHECK(h.codegree(0, 1) == 2);
  Bitset u(6);
  CHECK_THROWS_AS(avg_degree(h, u), Error);
  u.set(0);
  u.set(1);
  u.set(2);
  CHECK(hyper_induced_edge_count(h, u) == 1);
  CHECK(delta2(h, u) == 1);
}

TEST_CASE("instance notation round-trips") {
  for (const char* s : {"W(3,2)", "Q(4,3)", "Q+(3,2)", "Q-(5,2)", "H(3,4)", "H(4,4)", "PG(3,3)", "PG(3,2)/lines",
                        "PG(5,2)/planes", "W(3,2)/opp", "W(5,2)"})
    CHECK(parse_instance(s).name() == s);
  CHECK(parse_instance("PG(3,3)/caps").name() == "PG(3,3)");
  CHECK(parse_instance("W(5,3)").rank == 3);
  CHECK(parse_instance("Q-(5,2)").t() == TypeExponent{4});
  CHECK_THROWS_AS(parse_instance("W(4,2)"), Error);
  CHECK_THROWS_AS(parse_instance("PG(3,3)/opp"), Error);
  CHECK_THROWS_AS(parse_instance("X(3,3)"), Error);
  CHECK_THROWS_AS(instance_graph(parse_instance("W(3,6)")), Error);
}
