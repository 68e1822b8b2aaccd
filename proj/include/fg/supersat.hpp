#pragma once

#include "fg/graph.hpp"
#include "fg/numeric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fg {

/// ((d - lambda)/n) s^2 + lambda s, a lower bound for 2 e(S) when |S| = s.
Rational interlacing_edge_bound(const BigInt& n, const BigInt& d, const BigInt& lambda, std::uint64_t s);

/// (eps/(1+eps)) ((d - lambda)/n) s^2, a lower bound for 2 e(S). Needs
/// s >= (1+eps) alpha with alpha the Delsarte-Hoffman value (PreconditionSize).
Rational epsilon_supersat_bound(const BigInt& n, const BigInt& d, const BigInt& lambda, const Rational& eps,
                                std::uint64_t s);

/// (s-1) C(y,2) + C(y-1,2): the least sum of C(w_i,2) over s parts summing to s y - 1.
BigInt jensen_min(std::uint64_t s, std::uint64_t y);
/// True minimum of sum C(w_i,2) over compositions of total into s nonnegative
/// parts, by exhaustive search. Guard above 10^7 compositions.
BigInt exact_composition_min(unsigned s, unsigned total);

enum class TripleForm { K, Cubic };

/// Lower bound on collinear triples among |P| points of PG(r,q), with
/// [r]_q = (q^r-1)/(q-1). Form K needs |P| = k [r]_q for an integer k > 1
/// (NonIntegralK otherwise). The cubic form |P|^3/(15 [r]_q) needs
/// |P| >= 2 [r]_q, and with enforce_guard also [r]_q >= 6 (GuardCubic).
Rational triples_lower_bound(std::uint64_t p_size, unsigned r, unsigned q, TripleForm form, bool enforce_guard = true);

/// eps (q^4 + q^2 + 1), the number of intersecting pairs forced among
/// floor((1+eps)(q^3+1)) planes of PG(5,q). PreconditionSize if eps > 0 and the
/// set size is below q^3 + 2.
Rational plane_pairs_bound(const Rational& eps, unsigned q);
std::uint64_t plane_pairs_set_size(const Rational& eps, unsigned q);

struct MinEdgesResult {
  std::uint64_t s = 0;
  std::uint64_t min_edges = 0;
  std::vector<std::uint32_t> witness;
  bool exact = false;
  std::uint64_t trials = 0;    // sampled subsets, or improving leaves in exact mode
  friend bool operator==(const MinEdgesResult&, const MinEdgesResult&) = default;
};

/// Minimum e(S) over |S| = s. exact enumerates with branch and bound (Guard
/// when C(n,s) > 10^7); sampled takes the minimum over independent uniform
/// s-subsets, reproducible from (seed, trials).
MinEdgesResult min_induced_edges(const DenseGraph& g, std::uint64_t s, bool exact, std::uint64_t trials = 0,
                                 std::uint64_t seed = 0);
MinEdgesResult min_induced_edges(const TripleHypergraph& h, std::uint64_t s, bool exact, std::uint64_t trials = 0,
                                 std::uint64_t seed = 0);

/// One verdict: min_observed against a rational bound on the same quantity.
struct SupersatReport {
  std::string instance;
  std::string statement;
  std::uint64_t s = 0;
  Rational bound_value;
  std::uint64_t min_observed = 0;
  bool exact = false;
  std::uint64_t trials = 0;
  bool holds = false;
  friend bool operator==(const SupersatReport&, const SupersatReport&) = default;
};

}  // namespace fg
