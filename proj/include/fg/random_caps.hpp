#pragma once

#include "fg/graph.hpp"
#include "fg/projective.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fg {

using VertexList = std::vector<std::uint32_t>;

/// Points x with counter_uniform(seed, trial, x) < p, ascending. The same
/// (seed, trial) gives nested samples as p grows.
VertexList sample_points(const ProjSpace& pg, double p, std::uint64_t seed, std::uint64_t trial);

enum class AlphaKind { Exact, LowerBound };
std::string alpha_kind_name(AlphaKind k);
AlphaKind parse_alpha_kind(const std::string& s);

struct AlphaMeasurement {
  std::size_t alpha = 0;
  AlphaKind kind = AlphaKind::Exact;
  VertexList witness;  // a cap of that size, sorted point ids
  std::uint64_t edges = 0;
};

inline constexpr std::size_t kExactSampleLimit = 300;

/// Largest cap inside S. Exact by branch and bound when |S| <= 300 or S spans
/// no collinear triple; otherwise a maximal cap grown greedily from `warm`
/// (which must be a cap inside S) in the order of S. A timed-out search also
/// falls back to the greedy value and is flagged LowerBound.
AlphaMeasurement alpha_of_sample(const ProjSpace& pg, const VertexList& s, std::uint64_t budget,
                                 const VertexList& warm = {});
/// Same on the hypergraph built by cap_hypergraph (needs h.pg).
AlphaMeasurement alpha_of_sample(const TripleHypergraph& h, const VertexList& s, std::uint64_t budget);

/// Number of collinear triples inside S.
std::uint64_t induced_triples(const ProjSpace& pg, const VertexList& s);

struct TrialRecord {
  unsigned r = 0, q = 0;
  double p = 0;
  std::uint64_t seed = 0, trial = 0;
  std::uint64_t v = 0, e = 0;
  std::uint64_t alpha = 0;
  AlphaKind kind = AlphaKind::Exact;
  double elapsed_ms = 0;
  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

struct SweepAggregate {
  double p = 0;
  double median_alpha = 0;
  std::uint64_t min_alpha = 0, max_alpha = 0;
  double mean_v = 0, mean_e = 0;
  double median_ratio = 0;     // alpha / v, 1 when v = 0
  double middle_ratio = 0;     // median alpha / (q^{(r-1)/2} / ln q)
  std::size_t exact_trials = 0;
  friend bool operator==(const SweepAggregate&, const SweepAggregate&) = default;
};

struct GridSpec {
  double pmin = 0, pmax = 1;
  std::size_t points = 12;
};

/// n log-spaced values from pmin to pmax (a single point gives pmin).
std::vector<double> log_grid(const GridSpec& g);

struct SweepTable {
  unsigned r = 0, q = 0;
  std::uint64_t seed = 0, trials = 0, budget = 0;
  std::vector<double> grid;
  std::vector<TrialRecord> records;  // grid-major, trials ascending
  std::vector<SweepAggregate> aggregates;
  double sparse_boundary = 0;  // q^{-(r+1)/2}
  double dense_boundary = 0;   // q^{-(r-1)/2} ln^2 q
};

/// {q^{-(r+1)/2}, q^{-(r-1)/2} ln^2 q}: the sparse and dense regime boundaries.
std::pair<double, double> regime_boundaries(unsigned r, unsigned q);

/// Coupled sweep: each trial draws one uniform per point and reveals the
/// samples for the grid in ascending order. Trials run in parallel; the table
/// does not depend on the thread count apart from elapsed_ms.
/// Guard when trials or points are 0 or trials * points * budget > 10^12.
SweepTable sweep(unsigned r, unsigned q, const GridSpec& grid, std::uint64_t trials, std::uint64_t seed,
                 std::uint64_t budget = 50'000);

/// Recomputes the aggregates from table.records.
std::vector<SweepAggregate> aggregate(const SweepTable& t);

inline constexpr const char* kSweepCsvHeader = "r,q,p,seed,trial,v,e,alpha,alpha_kind,elapsed_ms";
/// One row per record; elapsed_ms is written as 0 when timing is false.
void write_sweep_csv(const SweepTable& t, std::ostream& os, bool timing = true);
/// Parses the CSV back into records (Parse on malformed rows).
std::vector<TrialRecord> read_sweep_csv(std::istream& is);

struct ContainerStats {
  double ln_count = 0;  // ln of the container count bound
  double size_bound = 0;
};
/// c2 q^{(r-1)/2} ln^2 q and 8 q^{r-1}.
ContainerStats closed_form_container_stats(unsigned r, unsigned q, double c2 = 1);

/// ln of |C| p^m C(size, m): the union bound on the chance of an m-cap.
/// DomainError when m exceeds the size bound.
double first_moment_bound(unsigned r, unsigned q, double p, std::uint64_t m, const ContainerStats& stats);

}  // namespace fg
