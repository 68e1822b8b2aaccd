#pragma once

#include "fg/field.hpp"
#include "fg/numeric.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace fg {

using PointId = std::uint32_t;

/// Number of b-dimensional subspaces of GF(q)^a (product formula).
BigInt gaussian_binomial(unsigned a, unsigned b, unsigned q);

/// Same value via the q-Pascal recursion; kept as an independent cross-check.
BigInt gaussian_binomial_pascal(unsigned a, unsigned b, unsigned q);

/// theta_r = (q^{r+1}-1)/(q-1), the number of points of PG(r,q).
inline std::uint64_t pg_point_count(unsigned r, unsigned q) {
  std::uint64_t s = 0, t = 1;
  for (unsigned i = 0; i <= r; ++i, t *= q) s += t;
  return s;
}

/// Reduced row echelon basis of a subspace, rows of length r+1.
struct Echelon {
  std::vector<std::vector<Elem>> rows;
  std::vector<unsigned> pivots;
};

/// PG(r,q): normalized points (first nonzero coordinate 1), indexed in
/// lexicographic order of their coordinate vectors. Lines are indexed by their
/// reduced-echelon basis (pivot pair, then free entries read as a base-q
/// number) and are materialized only when small enough.
class ProjSpace {
 public:
  static constexpr std::uint64_t kMaxPoints = 1'000'000;
  static constexpr std::uint64_t kMaxLineStorage = 8'000'000;

  enum class Lines { Auto, Always, Never };

  ProjSpace(unsigned r, FieldPtr field, Lines mode = Lines::Auto);

  const Field& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  unsigned dimension() const noexcept { return r_; }
  unsigned q() const noexcept { return field_->q(); }
  std::size_t point_count() const noexcept { return point_count_; }
  std::uint64_t line_count() const noexcept { return line_count_; }
  unsigned points_per_line() const noexcept { return q() + 1; }

  std::span<const Elem> coords(PointId i) const noexcept {
    return {coords_.data() + static_cast<std::size_t>(i) * (r_ + 1), r_ + 1};
  }
  /// Index of a vector that is already normalized.
  PointId index_of_normalized(std::span<const Elem> x) const noexcept;
  /// Scales x so its first nonzero entry is 1; x must be nonzero.
  void normalize(std::span<Elem> x) const noexcept;
  PointId index_of(std::span<const Elem> x) const;

  bool lines_materialized() const noexcept { return !line_points_.empty(); }
  /// Sorted points of a materialized line.
  std::span<const PointId> line(std::uint64_t l) const noexcept {
    return {line_points_.data() + l * points_per_line(), points_per_line()};
  }
  /// Lines through a point (materialized mode only), ascending.
  std::span<const std::uint32_t> lines_through(PointId p) const noexcept {
    return {incidence_.data() + incidence_start_[p], incidence_start_[p + 1] - incidence_start_[p]};
  }

  /// Index of the line through two distinct points; never needs storage.
  std::uint64_t line_index(PointId a, PointId b) const;
  /// Sorted points on the line through a and b, computed from coordinates.
  std::vector<PointId> line_through(PointId a, PointId b) const;
  /// Sorted points of line l, computed from its echelon basis.
  std::vector<PointId> compute_line(std::uint64_t l) const;

  /// Reduced echelon form of the span of the given points.
  Echelon echelon(std::span<const PointId> pts) const;
  /// All points of the subspace spanned by an echelon basis, sorted.
  std::vector<PointId> span_points(const Echelon& e) const;

 private:
  std::uint64_t echelon_line_rank(const Echelon& e) const;
  void materialize_lines();

  FieldPtr field_;
  unsigned r_;
  std::size_t point_count_;
  std::uint64_t line_count_;
  std::vector<Elem> coords_;
  std::vector<std::uint64_t> point_block_offset_;  // by pivot position
  std::vector<std::uint64_t> line_block_offset_;   // by pivot pair (i*(r+1)+j)
  std::vector<PointId> line_points_;
  std::vector<std::uint32_t> incidence_;
  std::vector<std::size_t> incidence_start_;
};

using ProjSpacePtr = std::shared_ptr<const ProjSpace>;

/// Builds PG(r,q). Throws Guard when the point count exceeds 10^6.
ProjSpacePtr build_pg(unsigned r, FieldPtr field, ProjSpace::Lines mode = ProjSpace::Lines::Auto);

/// All (k-1)-dimensional projective subspaces of pg (vector dimension k), in
/// echelon order, each as a sorted point list.
std::vector<std::vector<PointId>> enumerate_subspaces(const ProjSpace& pg, unsigned k);

}  // namespace fg
