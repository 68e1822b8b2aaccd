#include "fg/random_caps.hpp"

#include "fg/containers.hpp"
#include "fg/enumerate.hpp"
#include "fg/error.hpp"
#include "fg/parallel.hpp"
#include "fg/rng.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <tuple>
#include <unordered_map>

namespace fg {

VertexList sample_points(const ProjSpace& pg, double p, std::uint64_t seed, std::uint64_t trial) {
  require(p >= 0 && p <= 1, Errc::Precondition, "p must lie in [0, 1]");
  VertexList s;
  for (std::size_t x = 0; x < pg.point_count(); ++x)
    if (counter_uniform(seed, trial, x) < p) s.push_back(static_cast<std::uint32_t>(x));
  return s;
}

std::string alpha_kind_name(AlphaKind k) { return k == AlphaKind::Exact ? "exact" : "lower_bound"; }

AlphaKind parse_alpha_kind(const std::string& s) {
  if (s == "exact") return AlphaKind::Exact;
  if (s == "lower_bound") return AlphaKind::LowerBound;
  throw Error(Errc::Parse, "unknown alpha kind '" + s + "'");
}

namespace {

std::uint64_t c2(std::uint64_t k) { return k < 2 ? 0 : k * (k - 1) / 2; }
std::uint64_t c3(std::uint64_t k) { return k < 3 ? 0 : k * (k - 1) * (k - 2) / 6; }

std::vector<PointId> points_of_line(const ProjSpace& pg, std::uint64_t l) {
  if (pg.lines_materialized()) {
    auto sp = pg.line(l);
    return {sp.begin(), sp.end()};
  }
  return pg.compute_line(l);
}

// Extends the cap `warm` to a maximal cap inside s, scanning s in order. Every
// point of s left out completes a collinear triple with two cap points, so the
// result has at least |s| - e(H[s]) points.
VertexList greedy_cap(const ProjSpace& pg, const VertexList& s, const VertexList& warm) {
  Bitset blocked(pg.point_count());
  VertexList cap;
  auto add = [&](std::uint32_t x) {
    for (auto c : cap)
      for (auto y : points_of_line(pg, pg.line_index(x, c))) blocked.set(y);
    blocked.set(x);
    cap.push_back(x);
  };
  for (auto x : warm) {
    require(!blocked.test(x), Errc::Precondition, "warm start is not a cap");
    add(x);
  }
  for (auto x : s)
    if (!blocked.test(x)) add(x);
  std::sort(cap.begin(), cap.end());
  return cap;
}

// Lines meeting s in at least three points, as lists of positions in s.
std::vector<std::vector<std::uint32_t>> induced_blocks(const ProjSpace& pg, const VertexList& s) {
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> by_line;
  for (std::uint32_t i = 0; i < s.size(); ++i)
    for (std::uint32_t j = i + 1; j < s.size(); ++j) {
      auto& v = by_line[pg.line_index(s[i], s[j])];
      v.push_back(i);
      v.push_back(j);
    }
  std::vector<std::pair<std::uint64_t, std::vector<std::uint32_t>>> sorted(by_line.begin(), by_line.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::vector<std::uint32_t>> blocks;
  for (auto& [l, v] : sorted) {
    if (v.size() < 3) continue;
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (v.size() >= 3) blocks.push_back(std::move(v));
  }
  return blocks;
}

AlphaMeasurement measure(const ProjSpace& pg, const VertexList& s, std::uint64_t e, std::uint64_t budget,
                         const VertexList& warm) {
  AlphaMeasurement m;
  m.edges = e;
  if (e == 0) {
    m.alpha = s.size();
    m.witness = s;
    std::sort(m.witness.begin(), m.witness.end());
    return m;
  }
  if (s.size() <= kExactSampleLimit) {
    TripleHypergraph h(s.size(), induced_blocks(pg, s));
    SolveOptions opt;
    opt.budget = budget;
    const auto res = max_cap(h, opt);
    for (auto i : res.witness) m.witness.push_back(s[i]);
    std::sort(m.witness.begin(), m.witness.end());
    if (!res.timeout) {
      m.alpha = m.witness.size();
      return m;
    }
    m.kind = AlphaKind::LowerBound;
    auto g = greedy_cap(pg, s, warm);
    if (g.size() > m.witness.size()) m.witness = std::move(g);
    m.alpha = m.witness.size();
    return m;
  }
  m.kind = AlphaKind::LowerBound;
  m.witness = greedy_cap(pg, s, warm);
  m.alpha = m.witness.size();
  return m;
}

}  // namespace

std::uint64_t induced_triples(const ProjSpace& pg, const VertexList& s) {
  std::uint64_t e = 0;
  if (pg.lines_materialized()) {
    std::unordered_map<std::uint32_t, std::uint64_t> k;
    for (auto x : s)
      for (auto l : pg.lines_through(x)) e += c2(k[l]++);
    return e;
  }
  for (const auto& b : induced_blocks(pg, s)) e += c3(b.size());
  return e;
}

AlphaMeasurement alpha_of_sample(const ProjSpace& pg, const VertexList& s, std::uint64_t budget,
                                 const VertexList& warm) {
  return measure(pg, s, induced_triples(pg, s), budget, warm);
}

AlphaMeasurement alpha_of_sample(const TripleHypergraph& h, const VertexList& s, std::uint64_t budget) {
  require(h.pg != nullptr, Errc::Precondition, "alpha_of_sample needs a hypergraph built on PG(r,q)");
  return alpha_of_sample(*h.pg, s, budget);
}

std::vector<double> log_grid(const GridSpec& g) {
  require(g.points >= 1, Errc::Guard, "grid needs at least one point");
  require(g.pmin > 0 && g.pmin <= g.pmax && g.pmax <= 1, Errc::Precondition, "grid needs 0 < pmin <= pmax <= 1");
  std::vector<double> out(g.points);
  const double a = std::log(g.pmin), b = std::log(g.pmax);
  for (std::size_t i = 0; i < g.points; ++i)
    out[i] = g.points == 1 ? g.pmin : std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(g.points - 1));
  out.back() = g.points == 1 ? g.pmin : g.pmax;
  return out;
}

namespace {

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const auto n = v.size();
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

}  // namespace

std::vector<SweepAggregate> aggregate(const SweepTable& t) {
  std::vector<SweepAggregate> out;
  const double scale = std::pow(static_cast<double>(t.q), (t.r - 1) / 2.0) / std::log(static_cast<double>(t.q));
  for (std::size_t pi = 0; pi < t.grid.size(); ++pi) {
    SweepAggregate a;
    a.p = t.grid[pi];
    std::vector<double> alphas, ratios;
    a.min_alpha = ~std::uint64_t{0};
    for (std::uint64_t k = 0; k < t.trials; ++k) {
      const auto& rec = t.records[pi * t.trials + k];
      alphas.push_back(static_cast<double>(rec.alpha));
      ratios.push_back(rec.v == 0 ? 1.0 : static_cast<double>(rec.alpha) / static_cast<double>(rec.v));
      a.min_alpha = std::min(a.min_alpha, rec.alpha);
      a.max_alpha = std::max(a.max_alpha, rec.alpha);
      a.mean_v += static_cast<double>(rec.v);
      a.mean_e += static_cast<double>(rec.e);
      a.exact_trials += rec.kind == AlphaKind::Exact;
    }
    a.mean_v /= static_cast<double>(t.trials);
    a.mean_e /= static_cast<double>(t.trials);
    a.median_alpha = median(alphas);
    a.median_ratio = median(ratios);
    a.middle_ratio = a.median_alpha / scale;
    out.push_back(a);
  }
  return out;
}

std::pair<double, double> regime_boundaries(unsigned r, unsigned q) {
  const double qd = static_cast<double>(q), lq = std::log(qd);
  return {std::pow(qd, -(r + 1.0) / 2), std::pow(qd, -(r - 1.0) / 2) * lq * lq};
}

SweepTable sweep(unsigned r, unsigned q, const GridSpec& grid, std::uint64_t trials, std::uint64_t seed,
                 std::uint64_t budget) {
  require(trials >= 1, Errc::Guard, "sweep needs at least one trial");
  require(grid.points >= 1, Errc::Guard, "sweep needs at least one grid point");
  require(static_cast<double>(trials) * static_cast<double>(grid.points) * static_cast<double>(budget) <= 1e12,
          Errc::Guard, "sweep exceeds the total node budget of 10^12");
  const double lo = std::pow(static_cast<double>(q), -static_cast<double>(r));
  require(grid.pmin >= lo * (1 - 1e-12), Errc::Precondition, "grid must lie within [q^-r, 1]");

  SweepTable t;
  t.r = r;
  t.q = q;
  t.seed = seed;
  t.trials = trials;
  t.budget = budget;
  t.grid = log_grid(grid);
  std::tie(t.sparse_boundary, t.dense_boundary) = regime_boundaries(r, q);

  const auto pg = build_pg(r, make_field_of_order(q), ProjSpace::Lines::Always);
  const std::size_t n = pg->point_count();
  t.records.resize(t.grid.size() * trials);

  parallel_for(trials, [&](std::size_t k) {
    std::vector<double> u(n);
    for (std::size_t x = 0; x < n; ++x) u[x] = counter_uniform(seed, k, x);
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return u[a] < u[b] || (u[a] == u[b] && a < b); });

    std::vector<std::uint16_t> on_line(pg->line_count(), 0);
    std::uint64_t e = 0;
    std::size_t pos = 0;
    VertexList s, prev;
    for (std::size_t pi = 0; pi < t.grid.size(); ++pi) {
      const double p = t.grid[pi];
      while (pos < n && u[order[pos]] < p) {
        const auto x = order[pos++];
        for (auto l : pg->lines_through(x)) e += c2(on_line[l]++);
        s.insert(std::upper_bound(s.begin(), s.end(), x), x);
      }
      const auto start = std::chrono::steady_clock::now();
      auto m = measure(*pg, s, e, budget, prev);
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      require(m.alpha + e >= s.size(), Errc::Precondition, "deletion bound violated");
      TrialRecord& rec = t.records[pi * trials + k];
      rec = {r, q, p, seed, k, s.size(), e, m.alpha, m.kind, ms};
      prev = std::move(m.witness);
    }
  });
  t.aggregates = aggregate(t);
  return t;
}

namespace {

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt_fixed3(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

}  // namespace

void write_sweep_csv(const SweepTable& t, std::ostream& os, bool timing) {
  os << kSweepCsvHeader << '\n';
  for (const auto& rec : t.records)
    os << rec.r << ',' << rec.q << ',' << fmt_double(rec.p) << ',' << rec.seed << ',' << rec.trial << ',' << rec.v
       << ',' << rec.e << ',' << rec.alpha << ',' << alpha_kind_name(rec.kind) << ','
       << (timing ? fmt_fixed3(rec.elapsed_ms) : "0") << '\n';
}

std::vector<TrialRecord> read_sweep_csv(std::istream& is) {
  std::string line;
  require(static_cast<bool>(std::getline(is, line)) && line == kSweepCsvHeader, Errc::Parse, "missing sweep CSV header");
  std::vector<TrialRecord> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    require(f.size() == 10, Errc::Parse, "sweep CSV row needs 10 fields: " + line);
    try {
      TrialRecord rec;
      rec.r = static_cast<unsigned>(std::stoul(f[0]));
      rec.q = static_cast<unsigned>(std::stoul(f[1]));
      rec.p = std::stod(f[2]);
      rec.seed = std::stoull(f[3]);
      rec.trial = std::stoull(f[4]);
      rec.v = std::stoull(f[5]);
      rec.e = std::stoull(f[6]);
      rec.alpha = std::stoull(f[7]);
      rec.kind = parse_alpha_kind(f[8]);
      rec.elapsed_ms = std::stod(f[9]);
      out.push_back(rec);
    } catch (const std::logic_error&) {
      throw Error(Errc::Parse, "bad sweep CSV row: " + line);
    }
  }
  return out;
}

ContainerStats closed_form_container_stats(unsigned r, unsigned q, double c2) {
  const double lq = std::log(static_cast<double>(q));
  return {c2 * std::pow(static_cast<double>(q), (r - 1) / 2.0) * lq * lq,
          8 * std::pow(static_cast<double>(q), static_cast<double>(r - 1))};
}

double first_moment_bound(unsigned r, unsigned q, double p, std::uint64_t m, const ContainerStats& stats) {
  (void)r;
  (void)q;
  require(p >= 0 && p <= 1, Errc::Precondition, "p must lie in [0, 1]");
  require(static_cast<double>(m) <= stats.size_bound, Errc::DomainError, "m exceeds the container size bound");
  const double mp = m == 0 ? 0 : static_cast<double>(m) * std::log(p);
  return stats.ln_count + mp + binom_real(stats.size_bound, static_cast<double>(m));
}

}  // namespace fg
