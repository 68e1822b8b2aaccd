#include "fg/spectra.hpp"

#include "fg/error.hpp"
#include "fg/projective.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <random>

namespace fg {

SpectralSummary spectrum(const DenseGraph& g) {
  require(g.size() <= 4000, Errc::Guard, "spectrum above 4000 vertices");
  SpectralSummary s;
  s.n = g.size();
  s.d = g.regular_degree();
  if (s.n == 0) return s;

  const DenseMatrix<double> a = adjacency_matrix<double>(g);
  require(a.isApprox(a.transpose(), 0.0), Errc::Precondition, "adjacency matrix is not symmetric");
  Eigen::SelfAdjointEigenSolver<DenseMatrix<double>> es(a);
  DenseMatrix<double> vecs;
  if (es.info() == Eigen::Success) {
    vecs = es.eigenvectors();
  } else {
    // Eigen 3.4's implicit QR can stall on highly degenerate 0/1 matrices
    // (the PG(5,2) plane graph). A fixed random orthogonal similarity breaks
    // the tridiagonal structure without changing the spectrum.
    std::mt19937_64 eng(0x5eed);
    std::normal_distribution<double> nd;
    DenseMatrix<double> r(a.rows(), a.cols());
    for (Eigen::Index j = 0; j < r.cols(); ++j)
      for (Eigen::Index i = 0; i < r.rows(); ++i) r(i, j) = nd(eng);
    const DenseMatrix<double> q = Eigen::HouseholderQR<DenseMatrix<double>>(r).householderQ();
    DenseMatrix<double> b = q * a * q.transpose();
    b = (b + b.transpose()) / 2;
    es.compute(b);
    require(es.info() == Eigen::Success, Errc::Precondition, "eigensolver did not converge");
    vecs = q.transpose() * es.eigenvectors();
  }

  // Eigen returns ascending order.
  const auto& ev = es.eigenvalues();
  s.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  std::reverse(s.eigenvalues.begin(), s.eigenvalues.end());
  s.lambda_min = s.eigenvalues.back();
  s.lambda2 = s.n > 1 ? s.eigenvalues[1] : s.eigenvalues[0];

  for (double x : s.eigenvalues) {
    if (!s.spectrum.empty() && std::abs(s.spectrum.back().first - x) <= 1e-6)
      ++s.spectrum.back().second;
    else
      s.spectrum.emplace_back(x, 1);
  }
  // Report cluster representatives rounded to the nearest integer when they
  // are that close; geometric graphs have integral spectra.
  for (auto& [x, m] : s.spectrum)
    if (std::abs(x - std::round(x)) <= 1e-6) x = std::round(x);

  const Eigen::Index last = ev.size() - 1;
  for (Eigen::Index i : {Eigen::Index{0}, last}) {
    const Eigen::VectorXd v = vecs.col(i);
    s.max_residual = std::max(s.max_residual, (a * v - ev[i] * v).norm());
  }
  double tr = 0, sq = 0;
  for (double x : s.eigenvalues) {
    tr += x;
    sq += x * x;
  }
  s.trace_error = std::abs(tr);
  s.frobenius_error = std::abs(sq - 2.0 * static_cast<double>(g.edge_count()));
  return s;
}

std::string kind_name(GraphKind k) {
  switch (k) {
    case GraphKind::Collinearity: return "collinearity";
    case GraphKind::Oppositeness: return "oppositeness";
    case GraphKind::Lines: return "lines";
    case GraphKind::Planes: return "planes";
  }
  return "?";
}

GraphKind parse_kind(const std::string& s) {
  if (s == "collinearity") return GraphKind::Collinearity;
  if (s == "oppositeness" || s == "opp") return GraphKind::Oppositeness;
  if (s == "lines" || s == "line-graph") return GraphKind::Lines;
  if (s == "planes" || s == "plane-graph") return GraphKind::Planes;
  throw Error(Errc::UnsupportedFamily, "unknown graph kind '" + s + "'");
}

ClosedFormParams closed_form_params(GraphKind kind, unsigned r, TypeExponent t, unsigned q) {
  require(q >= 2, Errc::Precondition, "q must be at least 2");
  ClosedFormParams c{kind, 0, 0, 0, {}, false};
  const BigInt Q = q;
  const int tw = t.twice;
  switch (kind) {
    case GraphKind::Collinearity: {
      require(r >= 2, Errc::UnsupportedFamily, "polar rank must be >= 2");
      const BigInt gr = (ipow(Q, r) - 1) / (q - 1);
      const BigInt grm = (ipow(Q, r) - q) / (q - 1);
      c.n = gr * (half_power(q, 2 * (static_cast<int>(r) - 1) + tw) + 1);
      c.d = grm * (half_power(q, 2 * (static_cast<int>(r) - 2) + tw) + 1);
      c.lambda = -half_power(q, 2 * (static_cast<int>(r) - 2) + tw) - 1;
      break;
    }
    case GraphKind::Oppositeness: {
      require(r >= 2, Errc::UnsupportedFamily, "polar rank must be >= 2");
      const int ri = static_cast<int>(r);
      c.n = polar_flag_count_closed_form(r, t, q);
      // exponents doubled: r(r+t-1) and (r-1)(r+t-1)
      c.d = half_power(q, ri * (2 * ri - 2 + tw));
      const BigInt first = -half_power(q, (ri - 1) * (2 * ri - 2 + tw));
      const BigInt second = ipow(Q, r * (r - 1));
      c.lambda_candidates = {std::min(first, second), std::min(first, BigInt(-second))};
      c.lambda_ambiguous = c.lambda_candidates[0] != c.lambda_candidates[1];
      c.lambda = c.lambda_candidates[1];
      break;
    }
    case GraphKind::Lines: {
      require(r >= 3, Errc::UnsupportedFamily, "line graph needs vector dimension >= 3");
      c.n = gaussian_binomial(r, 2, q);
      c.d = (q + 1) * (gaussian_binomial(r - 1, 1, q) - 1);
      c.lambda = -BigInt(q) - 1;
      break;
    }
    case GraphKind::Planes: {
      require(r == 6, Errc::UnsupportedFamily, "plane graph is defined for PG(5,q) only (vector dimension 6)");
      c.n = gaussian_binomial(6, 3, q);
      c.d = c.n - ipow(Q, 9) - 1;
      // complement eigenvalues q^9, q^4, -q^3, -q^6 map to -1 - mu
      c.lambda = -ipow(Q, 4) - 1;
      break;
    }
  }
  return c;
}

Rational dh_bound(const BigInt& n, const BigInt& d, const BigInt& lambda) {
  require(lambda < 0, Errc::SignError, "Delsarte-Hoffman bound needs lambda < 0");
  require(d > 0, Errc::SignError, "Delsarte-Hoffman bound needs d > 0");
  return Rational(-lambda * n, d - lambda);
}

Rational quotient_mu(const DenseGraph& g, const Bitset& s) {
  const auto n = g.size();
  const auto k = s.count();
  require(k > 0 && k < n, Errc::BadPartition, "quotient needs 0 < |S| < n");
  const auto d = g.regular_degree();
  require(d.has_value(), Errc::Precondition, "quotient_mu needs a regular graph");
  const Rational avg(2 * induced_edge_count(g, s), k);
  return avg - Rational(k, n - k) * (Rational(*d) - avg);
}

ThresholdKind parse_threshold_kind(const std::string& s) {
  if (s == "ovoid") return ThresholdKind::Ovoid;
  if (s == "ekr") return ThresholdKind::Ekr;
  if (s == "linespread") return ThresholdKind::LineSpread;
  if (s == "planespread") return ThresholdKind::PlaneSpread;
  if (s == "generic") return ThresholdKind::Generic;
  throw Error(Errc::Precondition, "unknown threshold kind '" + s + "'");
}

double threshold_m(ThresholdKind kind, unsigned r, TypeExponent t, unsigned q, double n, double d) {
  const double l4 = std::pow(std::log(static_cast<double>(q)), 4);
  const double rr = r, tt = t.twice / 2.0;
  switch (kind) {
    case ThresholdKind::Ovoid: return 4 * std::pow(2 * rr + tt - 1, 4) * q * l4;
    case ThresholdKind::Ekr: return 64 * std::pow(rr, 4) * std::pow(rr + tt - 1, 4) * l4;
    case ThresholdKind::LineSpread:
      require(r >= 4, Errc::Precondition, "line spread threshold needs r >= 4");
      return 1024 * std::pow(rr - 2, 4) * std::pow(q, rr - 3) * l4;
    case ThresholdKind::PlaneSpread: return 28.0 * q * q * l4;
    case ThresholdKind::Generic:
      require(n > 1 && d > 0, Errc::Precondition, "generic threshold needs n > 1, d > 0");
      return 2 * (n / d) * std::pow(std::log(n), 4);
  }
  return 0;
}

}  // namespace fg
