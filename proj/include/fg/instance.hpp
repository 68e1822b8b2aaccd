#pragma once

#include "fg/graph.hpp"
#include "fg/polar.hpp"
#include "fg/projective.hpp"
#include "fg/spectra.hpp"

#include <memory>
#include <string>

namespace fg {

/// A named test object: a polar space or PG(r,q) plus the graph or
/// hypergraph built on it. Notation: W(3,2), Q(4,3), Q+(3,2), Q-(5,2),
/// H(3,4), H(4,4), PG(3,3), optionally followed by /opp (flags of a polar
/// space), /lines, /planes or /caps (PG only; /caps is the default there).
struct Instance {
  enum class Object { Points, Flags, Lines, Planes, Caps };

  bool projective = false;
  PolarFamily family = PolarFamily::Symplectic;
  bool odd_hermitian = false;
  unsigned rank = 0;  // polar rank
  unsigned r = 0;     // projective dimension of the ambient space
  unsigned q = 0;
  Object object = Object::Points;

  std::string name() const;
  bool is_hypergraph() const { return object == Object::Caps; }
  TypeExponent t() const;
};

/// Parse on bad syntax; the field order is checked when the instance is built.
Instance parse_instance(const std::string& text);
/// From the long flags: family in {symplectic, parabolic, hyperbolic, elliptic,
/// hermitian, pg}; rank for polar spaces, r for PG; object in {points, flags,
/// lines, planes, cap}.
Instance make_instance(const std::string& family, unsigned rank_or_r, unsigned q, const std::string& object,
                       bool odd_hermitian = false);

std::shared_ptr<const PolarSpace> instance_polar(const Instance& in);
ProjSpacePtr instance_pg(const Instance& in);

/// Collinearity, oppositeness, line or plane graph (Precondition for /caps).
DenseGraph instance_graph(const Instance& in);
/// Collinear-triple hypergraph of PG(r,q).
TripleHypergraph instance_hypergraph(const Instance& in);
/// Closed-form (n, d, lambda) for graph instances.
ClosedFormParams instance_closed_form(const Instance& in);

}  // namespace fg
