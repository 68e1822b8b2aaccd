#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fg/error.hpp"
#include "fg/field.hpp"
#include "fg/geom_graphs.hpp"
#include "fg/instance.hpp"
#include "fg/supersat.hpp"

#include "test_util.hpp"

#include <bit>

using namespace fg;
using fg::test::code_of;

namespace {

// Balanced parts minimize a convex sum.
BigInt balanced_min(unsigned s, unsigned total) {
  const unsigned q = total / s, rem = total % s;
  auto c2 = [](unsigned k) { return BigInt(k) * (k == 0 ? 0 : k - 1) / 2; };
  return BigInt(rem) * c2(q + 1) + BigInt(s - rem) * c2(q);
}

}  // namespace

TEST_CASE("interlacing bound holds with exact minima on W(3,2) for s <= 6") {
  const auto g = instance_graph(parse_instance("W(3,2)"));
  const std::size_t n = g.size();
  std::vector<std::uint64_t> brute(7, ~std::uint64_t{0});
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const auto s = static_cast<std::size_t>(std::popcount(mask));
    if (s > 6) continue;
    std::uint64_t e = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if ((mask >> i & 1) && (mask >> j & 1) && g.adjacent(i, j)) ++e;
    brute[s] = std::min(brute[s], e);
  }
  for (std::uint64_t s = 0; s <= 6; ++s) {
    CAPTURE(s);
    const auto r = min_induced_edges(g, s, true);
    CHECK(r.exact);
    CHECK(r.min_edges == brute[s]);
    CHECK(Rational(2 * r.min_edges) >= interlacing_edge_bound(15, 6, -3, s));
    CHECK(induced_edge_count(g, Bitset::from_indices(n, r.witness)) == r.min_edges);
  }
  CHECK(interlacing_edge_bound(15, 6, -3, 5) == 0);
  CHECK(interlacing_edge_bound(15, 6, -3, 6) == Rational(18, 5));
  CHECK(interlacing_edge_bound(15, 6, -3, 0) == 0);
}

TEST_CASE("epsilon corollary") {
  CHECK(epsilon_supersat_bound(15, 6, -3, Rational(1, 5), 6) == Rational(18, 5));
  CHECK(code_of([] { epsilon_supersat_bound(15, 6, -3, Rational(1, 5), 5); }) == Errc::PreconditionSize);
  // at s = (1+eps) alpha the corollary sits below the interlacing bound
  CHECK(epsilon_supersat_bound(15, 6, -3, Rational(1, 5), 6) <= interlacing_edge_bound(15, 6, -3, 6));
  CHECK(code_of([] { epsilon_supersat_bound(15, 6, -3, 0, 6); }) == Errc::EpsilonRange);
}

TEST_CASE("Jensen lemma equals the exact composition minimum on the grid s <= 8, y <= 5") {
  for (unsigned s = 1; s <= 8; ++s)
    for (unsigned y = 1; y <= 5; ++y) {
      CAPTURE(s);
      CAPTURE(y);
      const auto exact = exact_composition_min(s, s * y - 1);
      CHECK(exact == balanced_min(s, s * y - 1));
      CHECK(jensen_min(s, y) == exact);
    }
  CHECK(jensen_min(3, 2) == 2);
  CHECK(exact_composition_min(3, 5) == 2);
  CHECK(jensen_min(7, 2) == 6);
}

TEST_CASE("Fano plane: k form is tight, cubic form fails and is guarded") {
  const auto h = cap_hypergraph(build_pg(2, make_field(2, 1)));
  const auto r = min_induced_edges(h, 6, true);
  CHECK(r.min_edges == 4);
  CHECK(triples_lower_bound(6, 2, 2, TripleForm::K) == 4);
  CHECK(code_of([] { triples_lower_bound(6, 2, 2, TripleForm::Cubic); }) == Errc::GuardCubic);
  const auto unguarded = triples_lower_bound(6, 2, 2, TripleForm::Cubic, false);
  CHECK(unguarded == Rational(24, 5));
  CHECK(Rational(r.min_edges) < unguarded);
  CHECK(code_of([] { triples_lower_bound(7, 2, 2, TripleForm::K); }) == Errc::NonIntegralK);
}

TEST_CASE("k form holds exhaustively on PG(2,2), PG(2,3), PG(3,2)") {
  struct Case {
    unsigned r, q;
  };
  for (const auto& c : {Case{2, 2}, Case{2, 3}, Case{3, 2}}) {
    const auto h = cap_hypergraph(build_pg(c.r, make_field(c.q, 1)));
    const auto gr = pg_point_count(c.r - 1, c.q);
    for (std::uint64_t k = 2; k * gr <= h.size(); ++k) {
      CAPTURE(c.r);
      CAPTURE(c.q);
      CAPTURE(k);
      const auto res = min_induced_edges(h, k * gr, true);
      CHECK(Rational(res.min_edges) >= triples_lower_bound(k * gr, c.r, c.q, TripleForm::K));
    }
  }
}

TEST_CASE("k form on PG(3,3) with sampled 26-sets") {
  const auto h = cap_hypergraph(build_pg(3, make_field(3, 1)));
  CHECK(triples_lower_bound(26, 3, 3, TripleForm::K) == 104);
  const auto res = min_induced_edges(h, 26, false, 2000, 7);
  CHECK(res.min_edges >= 104);
  CHECK(res.trials == 2000);
  // cubic form is admissible at [r]_q = 13
  CHECK(triples_lower_bound(26, 3, 3, TripleForm::Cubic) == Rational(26 * 26 * 26, 15 * 13));
}

TEST_CASE("plane pairs") {
  CHECK(plane_pairs_set_size(Rational(1, 9), 2) == 10);
  CHECK(plane_pairs_bound(Rational(1, 9), 2) == Rational(7, 3));
  CHECK(plane_pairs_bound(0, 2) == 0);
  CHECK(code_of([] { plane_pairs_bound(Rational(1, 100), 2); }) == Errc::PreconditionSize);
  const auto g = subspace_intersection_graph(*build_pg(5, make_field(2, 1)), 3);
  const auto res = min_induced_edges(g, 10, false, 2000, 3);
  CHECK(res.min_edges >= 3);
}

TEST_CASE("min_induced_edges edge cases") {
  const auto g = instance_graph(parse_instance("W(3,2)"));
  CHECK(min_induced_edges(g, 0, true).min_edges == 0);
  CHECK(min_induced_edges(g, 1, false, 5).min_edges == 0);
  const auto a = min_induced_edges(g, 7, false, 300, 11);
  const auto b = min_induced_edges(g, 7, false, 300, 11);
  CHECK(a == b);
  CHECK(code_of([&] { min_induced_edges(instance_graph(parse_instance("Q(4,3)")), 12, true); }) == Errc::Guard);
}
