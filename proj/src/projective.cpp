#include "fg/projective.hpp"

#include "fg/error.hpp"

#include <algorithm>
#include <string>

namespace fg {

BigInt gaussian_binomial(unsigned a, unsigned b, unsigned q) {
  require(b <= a, Errc::Precondition, "gaussian_binomial needs b <= a");
  BigInt num = 1, den = 1;
  for (unsigned i = 0; i < b; ++i) {
    num *= ipow(BigInt(q), a - i) - 1;
    den *= ipow(BigInt(q), i + 1) - 1;
  }
  return num / den;
}

BigInt gaussian_binomial_pascal(unsigned a, unsigned b, unsigned q) {
  require(b <= a, Errc::Precondition, "gaussian_binomial needs b <= a");
  // row[j] holds [n choose j]_q for the current n.
  std::vector<BigInt> row(b + 1, 0);
  row[0] = 1;
  for (unsigned n = 1; n <= a; ++n)
    for (unsigned j = std::min(n, b); j >= 1; --j) row[j] = row[j - 1] + ipow(BigInt(q), j) * row[j];
  return row[b];
}

namespace {

void odometer_rows(const Field& f, unsigned width, const std::vector<unsigned>& pivots,
                   const std::vector<std::vector<unsigned>>& free_pos, std::vector<unsigned>& digits,
                   std::vector<std::vector<Elem>>& rows) {
  rows.assign(pivots.size(), std::vector<Elem>(width, 0));
  std::size_t d = 0;
  for (std::size_t t = 0; t < pivots.size(); ++t) {
    rows[t][pivots[t]] = f.one();
    for (unsigned pos : free_pos[t]) rows[t][pos] = digits[d++];
  }
}

bool advance(std::vector<unsigned>& digits, unsigned q) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < q) return true;
    digits[i] = 0;
  }
  return false;
}

std::vector<std::vector<unsigned>> free_positions(const std::vector<unsigned>& pivots, unsigned width) {
  std::vector<std::vector<unsigned>> fp(pivots.size());
  for (std::size_t t = 0; t < pivots.size(); ++t)
    for (unsigned pos = pivots[t] + 1; pos < width; ++pos)
      if (std::find(pivots.begin(), pivots.end(), pos) == pivots.end()) fp[t].push_back(pos);
  return fp;
}

}  // namespace

ProjSpace::ProjSpace(unsigned r, FieldPtr field, Lines mode) : field_(std::move(field)), r_(r) {
  require(r >= 1, Errc::Precondition, "projective dimension must be >= 1");
  const unsigned q = field_->q();
  const std::uint64_t theta = pg_point_count(r, q);
  require(theta <= kMaxPoints, Errc::Guard, "PG(" + std::to_string(r) + "," + std::to_string(q) + ") has " +
                                                std::to_string(theta) + " points (> 10^6)");
  point_count_ = static_cast<std::size_t>(theta);
  line_count_ = gaussian_binomial(r + 1, 2, q).convert_to<std::uint64_t>();

  point_block_offset_.assign(r + 1, 0);
  for (unsigned i = 0; i <= r; ++i) point_block_offset_[i] = (ipow_u64(q, r - i) - 1) / (q - 1);

  coords_.assign(point_count_ * (r + 1), 0);
  std::size_t idx = 0;
  for (unsigned i = r + 1; i-- > 0;) {
    const std::uint64_t block = ipow_u64(q, r - i);
    for (std::uint64_t t = 0; t < block; ++t, ++idx) {
      Elem* x = coords_.data() + idx * (r + 1);
      x[i] = 1;
      std::uint64_t v = t;
      for (unsigned pos = r; pos > i; --pos) {
        x[pos] = static_cast<Elem>(v % q);
        v /= q;
      }
    }
  }

  line_block_offset_.assign(static_cast<std::size_t>(r + 1) * (r + 1), 0);
  std::uint64_t off = 0;
  for (unsigned i = 0; i <= r; ++i)
    for (unsigned j = i + 1; j <= r; ++j) {
      line_block_offset_[i * (r + 1) + j] = off;
      off += ipow_u64(q, (r - i - 1) + (r - j));
    }

  const bool fits = line_count_ * (q + 1) <= kMaxLineStorage;
  if (mode == Lines::Always || (mode == Lines::Auto && fits)) materialize_lines();
}

PointId ProjSpace::index_of_normalized(std::span<const Elem> x) const noexcept {
  unsigned i = 0;
  while (x[i] == 0) ++i;
  std::uint64_t v = 0;
  const unsigned q = field_->q();
  for (unsigned pos = i + 1; pos <= r_; ++pos) v = v * q + x[pos];
  return static_cast<PointId>(point_block_offset_[i] + v);
}

void ProjSpace::normalize(std::span<Elem> x) const noexcept {
  unsigned i = 0;
  while (i < x.size() && x[i] == 0) ++i;
  if (i == x.size() || x[i] == 1) return;
  const Elem s = field_->inv(x[i]);
  for (unsigned pos = i; pos < x.size(); ++pos) x[pos] = field_->mul(x[pos], s);
}

PointId ProjSpace::index_of(std::span<const Elem> x) const {
  std::vector<Elem> y(x.begin(), x.end());
  require(std::any_of(y.begin(), y.end(), [](Elem e) { return e != 0; }), Errc::Precondition,
          "zero vector is not a projective point");
  normalize(y);
  return index_of_normalized(y);
}

Echelon ProjSpace::echelon(std::span<const PointId> pts) const {
  const Field& f = *field_;
  const unsigned width = r_ + 1;
  std::vector<std::vector<Elem>> m;
  m.reserve(pts.size());
  for (PointId p : pts) {
    auto c = coords(p);
    m.emplace_back(c.begin(), c.end());
  }
  Echelon e;
  std::size_t row = 0;
  for (unsigned col = 0; col < width && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    const Elem s = f.inv(m[row][col]);
    for (auto& v : m[row]) v = f.mul(v, s);
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k == row || m[k][col] == 0) continue;
      const Elem c = m[k][col];
      for (unsigned j = 0; j < width; ++j) m[k][j] = f.sub(m[k][j], f.mul(c, m[row][j]));
    }
    e.pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  e.rows = std::move(m);
  return e;
}

std::vector<PointId> ProjSpace::span_points(const Echelon& e) const {
  const Field& f = *field_;
  const unsigned q = f.q();
  const std::size_t k = e.rows.size();
  const unsigned width = r_ + 1;
  std::vector<PointId> out;
  std::vector<Elem> v(width);
  for (std::size_t lead = 0; lead < k; ++lead) {
    std::vector<unsigned> coef(k - 1 - lead, 0);
    do {
      v = e.rows[lead];
      for (std::size_t t = 0; t < coef.size(); ++t) {
        const Elem c = coef[t];
        if (c == 0) continue;
        const auto& row = e.rows[lead + 1 + t];
        for (unsigned j = 0; j < width; ++j) v[j] = f.add(v[j], f.mul(c, row[j]));
      }
      out.push_back(index_of_normalized(v));
    } while (advance(coef, q));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t ProjSpace::echelon_line_rank(const Echelon& e) const {
  require(e.rows.size() == 2, Errc::Precondition, "line needs two distinct points");
  const unsigned i = e.pivots[0], j = e.pivots[1];
  const unsigned q = field_->q();
  std::uint64_t v = 0;
  for (unsigned pos = i + 1; pos <= r_; ++pos)
    if (pos != j) v = v * q + e.rows[0][pos];
  for (unsigned pos = j + 1; pos <= r_; ++pos) v = v * q + e.rows[1][pos];
  return line_block_offset_[i * (r_ + 1) + j] + v;
}

std::uint64_t ProjSpace::line_index(PointId a, PointId b) const {
  const PointId pts[2] = {a, b};
  return echelon_line_rank(echelon(pts));
}

std::vector<PointId> ProjSpace::line_through(PointId a, PointId b) const {
  const PointId pts[2] = {a, b};
  return span_points(echelon(pts));
}

std::vector<PointId> ProjSpace::compute_line(std::uint64_t l) const {
  require(l < line_count_, Errc::Precondition, "line index out of range");
  const unsigned q = field_->q();
  unsigned bi = 0, bj = 1;
  for (unsigned i = 0; i <= r_; ++i)
    for (unsigned j = i + 1; j <= r_; ++j)
      if (line_block_offset_[i * (r_ + 1) + j] <= l) {
        bi = i;
        bj = j;
      }
  const std::vector<unsigned> pivots{bi, bj};
  const auto fp = free_positions(pivots, r_ + 1);
  std::vector<unsigned> digits(fp[0].size() + fp[1].size());
  std::uint64_t v = l - line_block_offset_[bi * (r_ + 1) + bj];
  for (std::size_t d = digits.size(); d-- > 0;) {
    digits[d] = static_cast<unsigned>(v % q);
    v /= q;
  }
  Echelon e;
  e.pivots = pivots;
  odometer_rows(*field_, r_ + 1, pivots, fp, digits, e.rows);
  return span_points(e);
}

void ProjSpace::materialize_lines() {
  const auto lines = enumerate_subspaces(*this, 2);
  const unsigned ppl = points_per_line();
  line_points_.reserve(lines.size() * ppl);
  std::vector<std::size_t> deg(point_count_ + 1, 0);
  for (const auto& l : lines) {
    line_points_.insert(line_points_.end(), l.begin(), l.end());
    for (PointId p : l) ++deg[p + 1];
  }
  incidence_start_.assign(point_count_ + 1, 0);
  for (std::size_t p = 0; p < point_count_; ++p) incidence_start_[p + 1] = incidence_start_[p] + deg[p + 1];
  incidence_.assign(incidence_start_.back(), 0);
  std::vector<std::size_t> fill(incidence_start_.begin(), incidence_start_.end() - 1);
  for (std::size_t l = 0; l < lines.size(); ++l)
    for (PointId p : lines[l]) incidence_[fill[p]++] = static_cast<std::uint32_t>(l);
}

ProjSpacePtr build_pg(unsigned r, FieldPtr field, ProjSpace::Lines mode) {
  return std::make_shared<const ProjSpace>(r, std::move(field), mode);
}

std::vector<std::vector<PointId>> enumerate_subspaces(const ProjSpace& pg, unsigned k) {
  const unsigned width = pg.dimension() + 1;
  require(k >= 1 && k <= width, Errc::Precondition, "subspace dimension out of range");
  const BigInt total = gaussian_binomial(width, k, pg.q());
  require(total * pg_point_count(k - 1, pg.q()) <= BigInt(50'000'000), Errc::Guard,
          "too many subspaces to enumerate");
  std::vector<std::vector<PointId>> out;
  out.reserve(total.convert_to<std::size_t>());
  std::vector<unsigned> pivots(k);
  for (unsigned t = 0; t < k; ++t) pivots[t] = t;
  Echelon e;
  while (true) {
    const auto fp = free_positions(pivots, width);
    std::size_t nd = 0;
    for (const auto& v : fp) nd += v.size();
    std::vector<unsigned> digits(nd, 0);
    e.pivots = pivots;
    do {
      odometer_rows(pg.field(), width, pivots, fp, digits, e.rows);
      out.push_back(pg.span_points(e));
    } while (advance(digits, pg.q()));
    // next k-combination in lexicographic order
    int t = static_cast<int>(k) - 1;
    while (t >= 0 && pivots[t] == width - k + t) --t;
    if (t < 0) break;
    ++pivots[t];
    for (unsigned u = t + 1; u < k; ++u) pivots[u] = pivots[u - 1] + 1;
  }
  return out;
}

}  // namespace fg
