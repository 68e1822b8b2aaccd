#pragma once

#include "fg/bitset.hpp"
#include "fg/numeric.hpp"
#include "fg/projective.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace fg {

enum class PolarFamily { Symplectic, Parabolic, Hyperbolic, Elliptic, Hermitian };

std::string family_name(PolarFamily f);
PolarFamily parse_family(const std::string& name);

/// Type exponent t stored doubled, so t in {0, 1/2, 1, 3/2, 2} becomes 0..4.
struct TypeExponent {
  int twice = 0;
  Rational value() const { return Rational(twice, 2); }
  friend bool operator==(TypeExponent, TypeExponent) = default;
};

/// Form data of a classical polar space embedded in PG(dim-1, q).
///
/// Symplectic and hermitian spaces carry a Gram matrix; quadrics carry the
/// upper-triangular coefficients of Q(x) = sum_{i<=j} c_ij x_i x_j.
struct PolarSpaceSpec {
  PolarFamily family = PolarFamily::Symplectic;
  unsigned rank = 2;
  FieldPtr field;
  TypeExponent t;
  unsigned vector_dim = 4;
  std::vector<std::vector<Elem>> gram;  // dim x dim

  /// Standard forms: symplectic blocks ((0,1),(-1,0)); parabolic x0^2 + hyperbolic
  /// pairs; hyperbolic pairs; elliptic irreducible binary form + pairs; hermitian
  /// identity Gram. Hermitian spaces need rank 2 and odd_hermitian picks
  /// H(4,q) (t = 3/2) over H(3,q) (t = 1/2).
  static PolarSpaceSpec standard(PolarFamily family, unsigned rank, FieldPtr field, bool odd_hermitian = false);

  /// Conventional name such as W(3,2), Q-(5,2), H(3,4).
  std::string name() const;
};

/// ((q^r-1)/(q-1)) (q^{r+t-1}+1) computed exactly; q must be a square when t is
/// a half-integer.
BigInt polar_point_count_closed_form(unsigned rank, TypeExponent t, unsigned q);
/// prod_{i=1..r} (q^{r+t-i}+1) [i choose 1]_q.
BigInt polar_flag_count_closed_form(unsigned rank, TypeExponent t, unsigned q);
/// q^{x/2} for an integer x (exact; requires q square when x is odd).
BigInt half_power(unsigned q, int twice_exponent);

/// A maximal flag: subspace indices for vector dimensions 1..rank.
using Flag = std::vector<std::uint32_t>;

/// Points, totally isotropic subspaces and collinearity of a polar space.
class PolarSpace {
 public:
  static constexpr std::size_t kMaxPoints = 20'000;

  explicit PolarSpace(PolarSpaceSpec spec);

  const PolarSpaceSpec& spec() const noexcept { return spec_; }
  const ProjSpace& ambient() const noexcept { return *pg_; }
  unsigned rank() const noexcept { return spec_.rank; }
  unsigned q() const noexcept { return spec_.field->q(); }
  std::size_t point_count() const noexcept { return points_.size(); }
  /// Ambient PG index of polar point i.
  PointId ambient_point(std::size_t i) const noexcept { return points_[i]; }
  /// Local index of an ambient point, or -1 when it is not in the space.
  std::int64_t local_point(PointId ambient) const noexcept { return local_[ambient]; }

  /// Form evaluation on ambient coordinates.
  bool is_singular(std::span<const Elem> x) const;
  Elem form(std::span<const Elem> x, std::span<const Elem> y) const;

  /// True iff the line PQ is totally isotropic/singular. Throws Precondition for P == Q.
  bool collinear(std::size_t p, std::size_t q) const;
  /// Collinearity row of p (excluding p).
  const Bitset& collinear_row(std::size_t p) const noexcept { return coll_[p]; }

  /// Totally isotropic subspaces of vector dimension k (1..rank), each a sorted
  /// list of local point indices, sorted lexicographically.
  const std::vector<std::vector<std::uint32_t>>& subspaces(unsigned k) const { return subspaces_.at(k); }
  const std::vector<std::vector<std::uint32_t>>& lines() const { return subspaces(2); }
  const std::vector<std::vector<std::uint32_t>>& generators() const { return subspaces(rank()); }

  /// Opposite in the polar sense: no point of one is collinear with every point
  /// of the other (and symmetrically). Throws TypeMismatch on unequal types.
  bool opposite_subspaces(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) const;
  bool opposite_subspaces(unsigned k, std::size_t a, std::size_t b) const;
  bool opposite_flags(const Flag& f1, const Flag& f2) const;

  /// All maximal flags in lexicographic index order. Guard: rank <= 3 and
  /// at most 10^6 flags.
  std::vector<Flag> maximal_flags() const;

 private:
  bool collinear_vectors(std::span<const Elem> x, std::span<const Elem> y) const;
  void build_subspaces();
  const std::vector<Bitset>& opposition(unsigned k) const;

  PolarSpaceSpec spec_;
  ProjSpacePtr pg_;
  std::vector<PointId> points_;
  std::vector<std::int64_t> local_;
  std::vector<Bitset> coll_;
  std::vector<Bitset> coll_closed_;  // row plus the point itself
  std::vector<std::vector<std::vector<std::uint32_t>>> subspaces_;
  mutable std::vector<std::optional<std::vector<Bitset>>> opposition_;
};

/// Builds the space and checks the point count against the closed form
/// (FormInconsistent on mismatch; hermitian spaces are checked only by enumeration).
std::shared_ptr<const PolarSpace> build_polar_space(const PolarSpaceSpec& spec);

}  // namespace fg
