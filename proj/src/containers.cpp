#include "fg/containers.hpp"

#include "fg/error.hpp"
#include "fg/parallel.hpp"
#include "fg/rng.hpp"
#include "fg/projective.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <sstream>

namespace fg {

ContainerParams graph_container_params(const BigInt& n, const BigInt& d, const BigInt& lambda, const Rational& eps) {
  require(d > 0 && lambda < 0, Errc::SignError, "container parameters need d > 0 > lambda");
  require(eps > 0 && eps <= Rational(n, d), Errc::EpsilonRange, "epsilon must lie in (0, n/d]");
  ContainerParams p;
  p.epsilon = eps;
  p.alpha = Rational(-n * lambda, d - lambda);
  p.R = (1 + eps) * p.alpha;
  p.beta = eps / (1 + eps) * Rational(d - lambda, n);
  const double nd = to_double(Rational(n, d - lambda));
  p.f = (1 + 1 / to_double(eps)) * nd * std::log(to_double(Rational(d - lambda, -lambda) / (1 + eps)));
  p.f_cap = p.f > 0 ? static_cast<std::size_t>(std::floor(p.f)) : 0;
  p.r_cap = floor_of(p.R).convert_to<std::size_t>();
  require(p.beta < 1, Errc::Precondition, "beta must be below 1");
  // e^{-beta f} n equals R identically; the check guards the arithmetic.
  const double lhs = std::exp(-to_double(p.beta) * p.f) * to_double(n);
  require(lhs <= to_double(p.R) * (1 + 1e-9), Errc::Precondition, "e^{-beta f} n exceeds R");
  return p;
}

std::size_t ContainerFamily::max_fingerprint() const {
  std::size_t m = 0;
  for (const auto& [f, c] : entries) m = std::max(m, f.size());
  return m;
}

std::size_t ContainerFamily::max_container() const {
  std::size_t m = 0;
  for (const auto& [f, c] : entries) m = std::max(m, c.size());
  return m;
}

bool VerifyReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const ContainerCheck& c) { return c.pass; });
}

std::pair<VertexList, VertexList> kw_container_of(const DenseGraph& g, const ContainerParams& params,
                                                  const VertexList& independent) {
  const std::size_t n = g.size();
  const Bitset in = Bitset::from_indices(n, independent);
  Bitset a(n);
  a.set_all();
  VertexList fp;
  while (a.count() > params.r_cap && fp.size() < params.f_cap) {
    std::size_t best = n, best_deg = 0;
    a.for_each([&](std::size_t v) {
      const auto deg = g.row(v).and_count(a);
      if (best == n || deg > best_deg) {
        best = v;
        best_deg = deg;
      }
    });
    a.reset(best);
    if (in.test(best)) {
      fp.push_back(static_cast<std::uint32_t>(best));
      a.subtract(g.row(best));
    }
  }
  std::sort(fp.begin(), fp.end());
  Bitset c = a;
  for (auto v : fp) c.set(v);
  return {fp, c.to_indices()};
}

namespace {

template <class Builder>
ContainerFamily build_family(const std::vector<VertexList>& sets, Builder build) {
  std::vector<std::pair<VertexList, VertexList>> out(sets.size());
  parallel_for(sets.size(), [&](std::size_t i) { out[i] = build(sets[i]); });
  ContainerFamily fam;
  for (auto& [f, c] : out) {
    auto [it, fresh] = fam.entries.emplace(std::move(f), c);
    require(fresh || it->second == c, Errc::Precondition, "fingerprint maps to two containers");
  }
  return fam;
}

std::vector<Bitset> container_masks(const ContainerFamily& fam, std::size_t n) {
  std::vector<Bitset> masks;
  masks.reserve(fam.entries.size());
  for (const auto& [f, c] : fam.entries) masks.push_back(Bitset::from_indices(n, c));
  return masks;
}

// Index of the first set not contained in any container, or npos.
std::size_t first_uncovered(const std::vector<Bitset>& masks, const std::vector<VertexList>& sets, std::size_t n,
                            std::size_t min_size) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].size() < min_size) continue;
    const Bitset s = Bitset::from_indices(n, sets[i]);
    if (std::none_of(masks.begin(), masks.end(), [&](const Bitset& m) { return s.is_subset_of(m); })) return i;
  }
  return static_cast<std::size_t>(-1);
}

std::string join(const VertexList& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

}  // namespace

ContainerFamily kw_containers(const DenseGraph& g, const ContainerParams& params,
                              const std::vector<VertexList>& independents) {
  require(g.size() <= 5000, Errc::Guard, "kw_containers above 5000 vertices");
  return build_family(independents, [&](const VertexList& s) { return kw_container_of(g, params, s); });
}

VerifyReport verify_containers(const ContainerFamily& fam, const DenseGraph& g, const ContainerParams& params,
                               const std::vector<VertexList>& independents, std::uint64_t samples,
                               std::uint64_t seed) {
  const std::size_t n = g.size();
  VerifyReport rep;
  const auto masks = container_masks(fam, n);

  const auto min_size = static_cast<std::size_t>(std::ceil(std::max(params.f, 0.0)));
  const auto bad = first_uncovered(masks, independents, n, min_size);
  rep.checks.push_back({"coverage", bad == static_cast<std::size_t>(-1),
                        bad == static_cast<std::size_t>(-1) ? std::to_string(independents.size()) + " sets covered"
                                                            : "uncovered: {" + join(independents[bad]) + "}"});

  const double size_cap = to_double(params.R) + params.f;
  const auto largest = fam.max_container();
  rep.checks.push_back({"container size <= R + f", static_cast<double>(largest) <= size_cap + 1e-9,
                        "max " + std::to_string(largest) + " vs " + std::to_string(size_cap)});

  // 2e(S) >= beta |S|^2 on random S with |S| >= R
  const std::size_t lo = ceil_of(params.R).convert_to<std::size_t>();
  bool sat = true;
  std::string sat_detail = "no sample (R >= n)";
  if (lo <= n && samples > 0) {
    std::vector<char> ok(samples, 1);
    parallel_for(samples, [&](std::size_t t) {
      auto eng = trial_engine(seed, t);
      const std::size_t s = std::uniform_int_distribution<std::size_t>(std::max<std::size_t>(lo, 1), n)(eng);
      std::vector<std::uint32_t> perm(n);
      for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<std::uint32_t>(i);
      for (std::size_t i = 0; i < s; ++i) std::swap(perm[i], perm[std::uniform_int_distribution<std::size_t>(i, n - 1)(eng)]);
      perm.resize(s);
      const auto e = induced_edge_count(g, Bitset::from_indices(n, perm));
      ok[t] = Rational(2 * e) >= params.beta * s * s;
    });
    const auto fails = static_cast<std::size_t>(std::count(ok.begin(), ok.end(), 0));
    sat = fails == 0;
    sat_detail = std::to_string(samples) + " samples, " + std::to_string(fails) + " violations";
  }
  rep.checks.push_back({"supersaturation 2e(S) >= beta|S|^2", sat, sat_detail});

  BigInt env = 0;
  const auto fc = static_cast<unsigned>(std::ceil(std::max(params.f, 0.0)));
  for (unsigned i = 0; i <= fc; ++i) env += binomial(static_cast<unsigned>(n), i);
  rep.checks.push_back({"family size envelope", BigInt(fam.entries.size()) <= env,
                        std::to_string(fam.entries.size()) + " <= " + env.str()});
  return rep;
}

double st_tau(double u, double m, double q, const ContainerConstants& k) {
  require(u > 0 && m > 0, Errc::Precondition, "st_tau needs u, m > 0");
  return std::max(k.tau_linear * q * u / m, k.tau_sqrt_base * k.tau_c1 * std::sqrt(u / m));
}

double codegree_condition(double delta2, double avg_deg, double tau) {
  require(avg_deg > 0 && tau > 0, Errc::Precondition, "codegree condition needs d, tau > 0");
  return delta2 / (avg_deg * tau) + 1 / (2 * avg_deg * tau * tau);
}

StCertificate st_certificate(unsigned r, unsigned q, const ContainerConstants& k) {
  StCertificate c;
  c.r = r;
  c.q = q;
  const double theta = static_cast<double>(pg_point_count(r, q));
  c.u = theta;
  c.m = theta * (theta - 1) * (q - 1) / 6;
  c.tau = st_tau(c.u, c.m, q, k);
  c.lhs = codegree_condition(q - 1, 3 * c.m / c.u, c.tau);
  c.tau_ok = c.tau < 0.5;
  c.lhs_ok = c.lhs <= to_double(k.codegree_cap);
  return c;
}

StBookkeeping st_bookkeeping(double e_h, double e0, unsigned r, unsigned q, const ContainerConstants& k) {
  require(e0 > 0 && e0 <= e_h, Errc::Precondition, "st_bookkeeping needs 0 < e0 <= e(H)");
  StBookkeeping b;
  const double ratio = to_double(k.ratio);
  b.s = std::log(e_h / e0) / std::log(ratio);
  const double theta = static_cast<double>(pg_point_count(r, q));
  const double gr = static_cast<double>(pg_point_count(r - 1, q));
  auto u_of = [&](double m) { return std::min(theta, std::cbrt(15 * gr * m)); };
  for (std::size_t i = 0; static_cast<double>(i) < b.s; ++i) {
    const double m = std::pow(ratio, static_cast<double>(i)) * e0;
    const double u = u_of(m);
    const double tau = st_tau(u, m, q, k);
    b.m_schedule.push_back(m);
    b.f_schedule.push_back(u * tau * std::log(1 / tau));
    b.f_sum += b.f_schedule.back();
  }
  b.tau_star = st_tau(u_of(e0), e0, q, k);
  b.fingerprint_cap = k.c_st * (b.s + 1) * b.tau_star * theta;
  b.count_cap = k.c_st * b.f_sum;
  return b;
}

namespace {

std::uint64_t c3(std::uint64_t k) { return k < 3 ? 0 : k * (k - 1) * (k - 2) / 6; }
std::uint64_t c2(std::uint64_t k) { return k < 2 ? 0 : k * (k - 1) / 2; }

}  // namespace

std::pair<VertexList, VertexList> scythe_container_of(const TripleHypergraph& h, double e0,
                                                      const VertexList& independent, const VertexList& start) {
  const std::size_t n = h.size();
  const Bitset in = Bitset::from_indices(n, independent);
  Bitset a(n);
  if (start.empty())
    a.set_all();
  else
    a = Bitset::from_indices(n, start);
  std::vector<std::uint64_t> k(h.block_count());
  std::uint64_t e = 0;
  for (std::size_t b = 0; b < k.size(); ++b) {
    k[b] = h.block_mask(b).and_count(a);
    e += c3(k[b]);
  }
  auto drop = [&](std::size_t v) {
    a.reset(v);
    for (auto b : h.blocks_through(v)) {
      e -= c2(k[b] - 1);
      --k[b];
    }
  };
  VertexList fp;
  while (static_cast<double>(e) > e0 && a.any()) {
    std::size_t best = n;
    std::uint64_t best_deg = 0;
    a.for_each([&](std::size_t v) {
      std::uint64_t deg = 0;
      for (auto b : h.blocks_through(v)) deg += c2(k[b] - 1);
      if (best == n || deg > best_deg) {
        best = v;
        best_deg = deg;
      }
    });
    if (in.test(best)) {
      a.reset(best);  // stays in the container through the fingerprint
      for (auto u : fp) {
        const auto b = h.block_of(u, static_cast<std::uint32_t>(best));
        if (b < 0) continue;
        for (auto x : h.block(static_cast<std::size_t>(b)))
          if (a.test(x)) drop(x);
      }
      fp.push_back(static_cast<std::uint32_t>(best));
    } else {
      drop(best);
    }
  }
  std::sort(fp.begin(), fp.end());
  Bitset c = a;
  for (auto v : fp) c.set(v);
  return {fp, c.to_indices()};
}

ContainerFamily scythe_containers_3u(const TripleHypergraph& h, double e0, const std::vector<VertexList>& caps) {
  require(h.size() <= 2000, Errc::Guard, "scythe above 2000 points");
  return build_family(caps, [&](const VertexList& s) { return scythe_container_of(h, e0, s); });
}

VerifyReport verify_scythe(const ContainerFamily& fam, const TripleHypergraph& h, double e0, unsigned r,
                           const std::vector<VertexList>& caps, std::size_t size_cap, double count_cap) {
  const std::size_t n = h.size();
  VerifyReport rep;
  const auto masks = container_masks(fam, n);
  const auto bad = first_uncovered(masks, caps, n, 0);
  rep.checks.push_back({"coverage", bad == static_cast<std::size_t>(-1),
                        bad == static_cast<std::size_t>(-1) ? std::to_string(caps.size()) + " caps covered"
                                                            : "uncovered: {" + join(caps[bad]) + "}"});

  std::uint64_t max_e = 0;
  std::size_t max_c = 0;
  bool cor_ok = true;
  std::string cor_detail = "holds on all containers";
  const unsigned q = h.pg ? h.pg->q() : 0;
  require(q >= 2, Errc::Precondition, "verify_scythe needs a hypergraph built on PG(r,q)");
  const std::uint64_t g = pg_point_count(r - 1, q);
  for (const auto& m : masks) {
    const auto e = hyper_induced_edge_count(h, m);
    const auto sz = m.count();
    max_e = std::max(max_e, e);
    max_c = std::max(max_c, sz);
    for (std::uint64_t kk : {2u, 4u}) {
      const Rational t = Rational(kk * kk * (kk - 1) * g * g, 6) - Rational(kk * (kk - 1) * g, 3);
      if (Rational(e) <= t && sz > kk * g) {
        cor_ok = false;
        cor_detail = "e=" + std::to_string(e) + " but |C|=" + std::to_string(sz) + " > " + std::to_string(kk * g);
      }
    }
  }
  rep.checks.push_back({"e(H[C]) <= e0", static_cast<double>(max_e) <= e0,
                        "max " + std::to_string(max_e) + " vs " + std::to_string(e0)});
  rep.checks.push_back({"edge-to-size corollary (k = 2, 4)", cor_ok, cor_detail});
  if (size_cap > 0)
    rep.checks.push_back({"|C| <= " + std::to_string(size_cap), max_c <= size_cap,
                          "max container " + std::to_string(max_c)});
  if (count_cap > 0) {
    const double ln_size = std::log(static_cast<double>(std::max<std::size_t>(fam.entries.size(), 1)));
    rep.checks.push_back({"ln |family| <= count cap", ln_size <= count_cap,
                          std::to_string(ln_size) + " vs " + std::to_string(count_cap)});
  }
  return rep;
}

double gamma_target(const Rational& gamma, unsigned q) {
  const double g = to_double(gamma);
  const double p3 = static_cast<double>(pg_point_count(2, q));
  return (1 + g) * (1 + g) * g / 12 * p3 * p3;
}

ContainerFamily gamma_refinement(const TripleHypergraph& h, const ContainerFamily& fam, const Rational& gamma,
                                 const std::vector<VertexList>& caps) {
  require(gamma > 0 && gamma <= Rational(1, 10), Errc::GammaRange, "gamma must lie in (0, 1/10]");
  require(h.pg && h.pg->dimension() == 3, Errc::Precondition, "gamma refinement is stated for PG(3,q)");
  const double target = gamma_target(gamma, h.pg->q());
  const std::size_t n = h.size();
  // Fingerprints of the refined family: outer fingerprint, a separator, inner fingerprint.
  constexpr auto kSep = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::pair<VertexList, VertexList>> items(fam.entries.begin(), fam.entries.end());
  std::vector<std::vector<std::pair<VertexList, VertexList>>> out(items.size());
  parallel_for(items.size(), [&](std::size_t i) {
    const auto& [outer, cont] = items[i];
    const Bitset cm = Bitset::from_indices(n, cont);
    if (static_cast<double>(hyper_induced_edge_count(h, cm)) <= target) {
      out[i].emplace_back(outer, cont);
      return;
    }
    for (const auto& cap : caps) {
      if (!Bitset::from_indices(n, cap).is_subset_of(cm)) continue;
      auto [inner, c2] = scythe_container_of(h, target, cap, cont);
      VertexList key = outer;
      key.push_back(kSep);
      key.insert(key.end(), inner.begin(), inner.end());
      out[i].emplace_back(std::move(key), std::move(c2));
    }
  });
  ContainerFamily res;
  for (auto& v : out)
    for (auto& [f, c] : v) {
      auto [it, fresh] = res.entries.emplace(std::move(f), c);
      require(fresh || it->second == c, Errc::Precondition, "fingerprint maps to two containers");
    }
  return res;
}

double binom_real(double x, double m) {
  require(m >= 0 && x >= m, Errc::DomainError, "binom_real needs x >= m >= 0");
  return std::lgamma(x + 1) - std::lgamma(m + 1) - std::lgamma(x - m + 1);
}

CountVsBound count_vs_bound(const BigInt& count, double alpha, double gamma, std::uint64_t m) {
  CountVsBound r;
  r.ln_count = count > 0 ? ln(count) : -std::numeric_limits<double>::infinity();
  r.ln_bound = binom_real((1 + gamma) * alpha, static_cast<double>(m));
  r.holds = r.ln_count <= r.ln_bound + 1e-12;
  return r;
}

}  // namespace fg
