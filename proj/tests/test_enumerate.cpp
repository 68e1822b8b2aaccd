#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fg/enumerate.hpp"
#include "fg/error.hpp"
#include "fg/field.hpp"
#include "fg/geom_graphs.hpp"
#include "fg/instance.hpp"
#include "fg/spectra.hpp"

#include "test_util.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace fg;
using fg::test::collinear_by_minors;
using fg::test::for_each_subset;

namespace {

bool independent(const DenseGraph& g, const std::vector<std::uint32_t>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) return false;
  return true;
}

bool is_cap(const ProjSpace& pg, const std::vector<std::uint32_t>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      for (std::size_t k = j + 1; k < s.size(); ++k)
        if (collinear_by_minors(pg, s[i], s[j], s[k])) return false;
  return true;
}

}  // namespace

TEST_CASE("maximum independent sets of small collinearity and line graphs") {
  const auto w = instance_graph(parse_instance("W(3,2)"));
  const auto r = max_independent_set(w);
  CHECK(r.alpha == 5);
  CHECK_FALSE(r.timeout);
  CHECK(r.witness.size() == 5);
  CHECK(independent(w, r.witness));
  CHECK(std::is_sorted(r.witness.begin(), r.witness.end()));
  CHECK(Rational(r.alpha) <= dh_bound(15, 6, -3));

  DenseGraph empty(7);
  CHECK(max_independent_set(empty).alpha == 7);
  CHECK(max_independent_set(DenseGraph(0)).alpha == 0);
}

TEST_CASE("line spread of PG(3,2)") {
  const auto pg = build_pg(3, make_field(2, 1));
  const auto r = max_partial_spread(*pg, 2);
  CHECK(r.alpha == 5);
  const auto lines = enumerate_subspaces(*pg, 2);
  std::vector<int> hits(pg->point_count(), 0);
  for (auto l : r.witness)
    for (auto p : lines[l]) ++hits[p];
  CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
}

TEST_CASE("EKR set and partial ovoid wrappers") {
  const auto w = instance_polar(parse_instance("W(3,2)"));
  CHECK(max_ekr_set(*w).alpha == 9);
  CHECK(max_partial_ovoid(*w).alpha == 5);
}

TEST_CASE("known upper bound stops the search") {
  const auto g = instance_graph(parse_instance("W(3,2)"));
  SolveOptions opt;
  opt.known_upper_bound = 5;
  const auto r = max_independent_set(g, opt);
  CHECK(r.alpha == 5);
  CHECK(r.stopped_at_bound);
}

TEST_CASE("timeout is reported in the result") {
  const auto g = instance_graph(parse_instance("Q(4,3)"));
  SolveOptions opt;
  opt.budget = 5;
  const auto r = max_independent_set(g, opt);
  CHECK(r.timeout);
  CHECK(independent(g, r.witness));
  CHECK(r.witness.size() == r.alpha);
}

TEST_CASE("alpha is invariant under relabeling") {
  const auto g = instance_graph(parse_instance("Q-(5,2)"));
  const auto base = max_independent_set(g).alpha;
  CHECK(base == 6);
  std::mt19937 rng(12345);
  for (int t = 0; t < 3; ++t) {
    std::vector<std::uint32_t> perm(g.size());
    std::iota(perm.begin(), perm.end(), 0u);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto h = g.relabeled(perm);
    const auto r = max_independent_set(h);
    CHECK(r.alpha == base);
    CHECK(independent(h, r.witness));
  }
}

TEST_CASE("maximum caps") {
  struct Case {
    unsigned r, q;
    std::size_t alpha;
  };
  for (const auto& c : {Case{2, 2, 4}, Case{2, 3, 4}, Case{2, 4, 6}, Case{3, 2, 8}, Case{2, 5, 6}}) {
    CAPTURE(c.r);
    CAPTURE(c.q);
    const auto pg = build_pg(c.r, make_field_of_order(c.q));
    const auto h = cap_hypergraph(pg);
    const auto res = max_cap(h);
    CHECK(res.alpha == c.alpha);
    CHECK_FALSE(res.timeout);
    CHECK(hyper_induced_edge_count(h, Bitset::from_indices(h.size(), res.witness)) == 0);
    if (c.q != 4) CHECK(is_cap(*pg, res.witness));
    CHECK(res.alpha + h.edge_count() >= h.size());
  }
}

TEST_CASE("cap counts agree with a coordinate oracle on PG(2,3)") {
  const auto pg = build_pg(2, make_field(3, 1));
  const auto h = cap_hypergraph(pg);
  for (std::size_t m = 0; m <= 5; ++m) {
    CAPTURE(m);
    std::uint64_t brute = 0;
    for_each_subset(13, m, [&](const std::vector<std::uint32_t>& s) { brute += is_cap(*pg, s); });
    CHECK(count_independent_sets(h, m).count == brute);
    if (m >= 1) CHECK(caps_of_size(h, m).size() == brute);
  }
  CHECK(count_independent_sets(h, 3).count == 234);
  CHECK(count_independent_sets(h, 5).count == 0);
}

TEST_CASE("graph counts agree with brute force") {
  for (const char* name : {"W(3,2)", "Q-(5,2)", "Q+(3,2)"}) {
    CAPTURE(name);
    const auto g = instance_graph(parse_instance(name));
    for (std::size_t m = 0; m <= 6; ++m) {
      CAPTURE(m);
      std::uint64_t brute = 0;
      for_each_subset(g.size(), m, [&](const std::vector<std::uint32_t>& s) { brute += independent(g, s); });
      CHECK(count_independent_sets(g, m).count == brute);
    }
  }
  const auto w = instance_graph(parse_instance("W(3,2)"));
  CHECK(count_independent_sets(w, 2).count == 60);
  CHECK(count_independent_sets(w, 0).count == 1);
  CHECK(count_independent_sets(w, 6).count == 0);
  CHECK_THROWS_AS(count_independent_sets(instance_graph(parse_instance("Q(4,3)")), 8, 1000), Error);
}

TEST_CASE("maximal independent sets") {
  DenseGraph tri(3);
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(0, 2);
  CHECK(list_maximal_independent_sets(tri, 1) == std::vector<std::vector<std::uint32_t>>{{0}, {1}, {2}});
  CHECK(list_maximal_independent_sets(DenseGraph(3), 3) == std::vector<std::vector<std::uint32_t>>{{0, 1, 2}});

  const auto w = instance_graph(parse_instance("W(3,2)"));
  std::vector<std::vector<std::uint32_t>> ovoids;
  for_each_subset(15, 5, [&](const std::vector<std::uint32_t>& s) {
    if (independent(w, s)) ovoids.push_back(s);
  });
  CHECK(ovoids.size() == 6);
  CHECK(list_maximal_independent_sets(w, 5) == ovoids);

  // every maximal set of the brute-force list is maximal and independent
  const auto all = list_maximal_independent_sets(w, 1);
  for (const auto& s : all) {
    CHECK(independent(w, s));
    Bitset in = Bitset::from_indices(15, s);
    for (std::uint32_t v = 0; v < 15; ++v)
      if (!in.test(v)) CHECK(w.row(v).and_count(in) > 0);
  }
}
