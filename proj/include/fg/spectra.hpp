#pragma once

#include "fg/graph.hpp"
#include "fg/numeric.hpp"
#include "fg/polar.hpp"

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fg {

template <class Scalar = double>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// 0/1 adjacency matrix in any Eigen scalar type.
template <class Scalar = double>
DenseMatrix<Scalar> adjacency_matrix(const DenseGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.size());
  DenseMatrix<Scalar> a = DenseMatrix<Scalar>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    g.row(static_cast<std::size_t>(i)).for_each([&](std::size_t j) { a(i, static_cast<Eigen::Index>(j)) = Scalar(1); });
  return a;
}

struct SpectralSummary {
  std::size_t n = 0;
  std::optional<std::size_t> d;  // empty for irregular graphs
  double lambda_min = 0;
  double lambda2 = 0;
  std::vector<double> eigenvalues;                       // descending
  std::vector<std::pair<double, std::size_t>> spectrum;  // distinct values (1e-6 clusters), descending
  double max_residual = 0;                               // over the extremal eigenpairs
  double trace_error = 0;                                // |sum lambda|
  double frobenius_error = 0;                            // |sum lambda^2 - 2|E||
  friend bool operator==(const SpectralSummary&, const SpectralSummary&) = default;
};

/// Full symmetric eigendecomposition. Guard above 4000 vertices.
SpectralSummary spectrum(const DenseGraph& g);

enum class GraphKind { Collinearity, Oppositeness, Lines, Planes };
std::string kind_name(GraphKind k);
GraphKind parse_kind(const std::string& s);

/// Exact (n, d, lambda) of the geometric graph families.
///
/// Collinearity and oppositeness take the polar parameters (r, t). Lines take
/// r = vector dimension of the ambient space, so PG(3,q) is r = 4. Planes are
/// only defined for PG(5,q).
struct ClosedFormParams {
  GraphKind kind;
  BigInt n, d, lambda;
  /// The oppositeness lambda min{-q^{(r-1)(r+t-1)}, (-1)^? q^{r(r-1)}} has an
  /// undetermined sign; both readings are listed and lambda_ambiguous is set
  /// unless they agree (t >= 1).
  std::vector<BigInt> lambda_candidates;
  bool lambda_ambiguous = false;
  friend bool operator==(const ClosedFormParams&, const ClosedFormParams&) = default;
};
ClosedFormParams closed_form_params(GraphKind kind, unsigned r, TypeExponent t, unsigned q);

/// -lambda n / (d - lambda). SignError unless d > 0 > lambda.
Rational dh_bound(const BigInt& n, const BigInt& d, const BigInt& lambda);

/// Second eigenvalue of the quotient matrix of the partition {S, V \ S} of a
/// d-regular graph. BadPartition if S is empty or everything.
Rational quotient_mu(const DenseGraph& g, const Bitset& s);

enum class ThresholdKind { Ovoid, Ekr, LineSpread, PlaneSpread, Generic };
ThresholdKind parse_threshold_kind(const std::string& s);

/// Smallest m for which the counting propositions apply. Generic uses (n, d);
/// the others use (r, t, q), where r for line spreads is the vector dimension.
double threshold_m(ThresholdKind kind, unsigned r, TypeExponent t, unsigned q, double n = 0, double d = 0);

}  // namespace fg
