#pragma once

#include "fg/graph.hpp"
#include "fg/numeric.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace fg {

/// Constants of the container theorems; defaults are the published values.
/// tau_c1 scales the square-root term of st_tau (18 c1); 1 reproduces the
/// displayed tau, 32 the value the proof later settles on.
struct ContainerConstants {
  double c_st = 62208;
  Rational ratio{12, 11};
  Rational codegree_cap{1, 288};
  double tau_linear = 576;
  double tau_sqrt_base = 18;
  double tau_c1 = 1;
};

struct ContainerParams {
  Rational epsilon, beta, R, alpha;
  double f = 0;
  std::size_t f_cap = 0;  // floor(f), the fingerprint length limit
  std::size_t r_cap = 0;  // floor(R)
};

/// R = (1+eps) alpha, beta = (eps/(1+eps)) (d-lambda)/n and
/// f = (1 + 1/eps) (n/(d-lambda)) ln((1/(1+eps)) (d-lambda)/(-lambda)).
/// EpsilonRange unless 0 < eps <= n/d; asserts beta < 1 and e^{-beta f} n <= R.
ContainerParams graph_container_params(const BigInt& n, const BigInt& d, const BigInt& lambda, const Rational& eps);

using VertexList = std::vector<std::uint32_t>;

struct ContainerFamily {
  std::map<VertexList, VertexList> entries;  // fingerprint -> container
  std::size_t max_fingerprint() const;
  std::size_t max_container() const;
};

/// Max-degree fingerprint builder: returns (F, C) for one independent set.
std::pair<VertexList, VertexList> kw_container_of(const DenseGraph& g, const ContainerParams& params,
                                                  const VertexList& independent);
/// Runs the builder over every supplied independent set (normally all maximal
/// ones) and merges by fingerprint.
ContainerFamily kw_containers(const DenseGraph& g, const ContainerParams& params,
                              const std::vector<VertexList>& independents);

struct ContainerCheck {
  std::string name;
  bool pass = false;
  std::string detail;
  friend bool operator==(const ContainerCheck&, const ContainerCheck&) = default;
};

struct VerifyReport {
  std::vector<ContainerCheck> checks;
  bool pass() const;
  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

/// Coverage of every supplied set of size >= f, |C| <= R + f, sampled
/// 2e(S) >= beta |S|^2 for |S| >= R, and the sum_{i <= ceil f} C(n,i) envelope.
VerifyReport verify_containers(const ContainerFamily& fam, const DenseGraph& g, const ContainerParams& params,
                               const std::vector<VertexList>& independents, std::uint64_t samples = 10'000,
                               std::uint64_t seed = 1);

/// max{576 q u/m, 18 c1 (u/m)^{1/2}}.
double st_tau(double u, double m, double q, const ContainerConstants& k = {});
/// Delta_2/(d tau) + 1/(2 d tau^2), compared against 1/288 by the caller.
double codegree_condition(double delta2, double avg_deg, double tau);

struct StCertificate {
  unsigned r = 0, q = 0;
  double u = 0, m = 0, tau = 0, lhs = 0;
  bool tau_ok = false, lhs_ok = false;
  bool pass() const { return tau_ok && lhs_ok; }
  friend bool operator==(const StCertificate&, const StCertificate&) = default;
};
/// The codegree certificate for U = V(H_q) from the closed-form aggregates.
StCertificate st_certificate(unsigned r, unsigned q, const ContainerConstants& k = {});

struct StBookkeeping {
  double s = 0;
  std::vector<double> m_schedule;  // (12/11)^i e0 for 0 <= i < s
  std::vector<double> f_schedule;  // f at each m
  double f_sum = 0;
  double tau_star = 0;
  double fingerprint_cap = 0;  // c (s+1) tau* n
  double count_cap = 0;        // c sum f, a bound on ln |C|
  friend bool operator==(const StBookkeeping&, const StBookkeeping&) = default;
};
/// s = ln(e_H/e0)/ln(12/11); f(m) = u tau ln(1/tau) at the largest admissible
/// u = min(theta, (15 [r]_q m)^{1/3}).
StBookkeeping st_bookkeeping(double e_h, double e0, unsigned r, unsigned q, const ContainerConstants& k = {});

/// Degree-order scythe for a 3-uniform block hypergraph: removes the max-degree
/// live vertex (lowest index on ties) until e(H[C]) <= e0. Vertices of I go to
/// the fingerprint and retire the rest of each block they share with it.
std::pair<VertexList, VertexList> scythe_container_of(const TripleHypergraph& h, double e0, const VertexList& independent,
                                                      const VertexList& start = {});
ContainerFamily scythe_containers_3u(const TripleHypergraph& h, double e0, const std::vector<VertexList>& caps);

/// Coverage of the caps, e(H[C]) <= e0, the edge-to-size corollary for
/// k in {2,4}, |C| <= size_cap (skipped when 0), and family size against
/// exp(count_cap) when count_cap > 0.
VerifyReport verify_scythe(const ContainerFamily& fam, const TripleHypergraph& h, double e0, unsigned r,
                           const std::vector<VertexList>& caps, std::size_t size_cap, double count_cap = 0);

/// Re-runs the scythe inside every container with target (1+g)^2 g/12 [3]_q^2.
/// GammaRange unless 0 < g <= 1/10. Containers already under target are kept.
ContainerFamily gamma_refinement(const TripleHypergraph& h, const ContainerFamily& fam, const Rational& gamma,
                                 const std::vector<VertexList>& caps);
double gamma_target(const Rational& gamma, unsigned q);

/// ln C(x, m) for real x >= m (DomainError otherwise).
double binom_real(double x, double m);

struct CountVsBound {
  double ln_count = 0, ln_bound = 0;
  bool holds = false;
};
/// ln(count) against ln C((1+gamma) alpha, m).
CountVsBound count_vs_bound(const BigInt& count, double alpha, double gamma, std::uint64_t m);

}  // namespace fg
