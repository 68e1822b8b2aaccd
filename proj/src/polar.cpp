#include "fg/polar.hpp"

#include "fg/error.hpp"

#include <algorithm>
#include <map>

namespace fg {

std::string family_name(PolarFamily f) {
  switch (f) {
    case PolarFamily::Symplectic: return "symplectic";
    case PolarFamily::Parabolic: return "parabolic";
    case PolarFamily::Hyperbolic: return "hyperbolic";
    case PolarFamily::Elliptic: return "elliptic";
    case PolarFamily::Hermitian: return "hermitian";
  }
  return "?";
}

PolarFamily parse_family(const std::string& name) {
  static const std::map<std::string, PolarFamily> names{
      {"symplectic", PolarFamily::Symplectic}, {"W", PolarFamily::Symplectic},
      {"parabolic", PolarFamily::Parabolic},   {"parabolic-quadric", PolarFamily::Parabolic},
      {"Q", PolarFamily::Parabolic},           {"hyperbolic", PolarFamily::Hyperbolic},
      {"hyperbolic-quadric", PolarFamily::Hyperbolic}, {"Q+", PolarFamily::Hyperbolic},
      {"elliptic", PolarFamily::Elliptic},     {"elliptic-quadric", PolarFamily::Elliptic},
      {"Q-", PolarFamily::Elliptic},           {"hermitian", PolarFamily::Hermitian},
      {"H", PolarFamily::Hermitian}};
  auto it = names.find(name);
  require(it != names.end(), Errc::UnsupportedFamily, "unknown polar family '" + name + "'");
  return it->second;
}

BigInt half_power(unsigned q, int twice_exponent) {
  require(twice_exponent >= 0, Errc::Precondition, "negative exponent");
  if (twice_exponent % 2 == 0) return ipow(BigInt(q), static_cast<unsigned>(twice_exponent / 2));
  unsigned s = 1;
  while (s * s < q) ++s;
  require(s * s == q, Errc::NotSquareOrder, "q^{k/2} needs a square q, got " + std::to_string(q));
  return ipow(BigInt(s), static_cast<unsigned>(twice_exponent));
}

BigInt polar_point_count_closed_form(unsigned rank, TypeExponent t, unsigned q) {
  const BigInt theta = (ipow(BigInt(q), rank) - 1) / (q - 1);
  return theta * (half_power(q, 2 * static_cast<int>(rank) + t.twice - 2) + 1);
}

BigInt polar_flag_count_closed_form(unsigned rank, TypeExponent t, unsigned q) {
  BigInt n = 1;
  for (unsigned i = 1; i <= rank; ++i)
    n *= (half_power(q, 2 * static_cast<int>(rank - i) + t.twice) + 1) * ((ipow(BigInt(q), i) - 1) / (q - 1));
  return n;
}

PolarSpaceSpec PolarSpaceSpec::standard(PolarFamily family, unsigned rank, FieldPtr field, bool odd_hermitian) {
  require(rank >= 2, Errc::Precondition, "polar rank must be >= 2");
  const Field& f = *field;
  PolarSpaceSpec s;
  s.family = family;
  s.rank = rank;
  s.field = field;
  auto square = [](unsigned dim) { return std::vector<std::vector<Elem>>(dim, std::vector<Elem>(dim, 0)); };
  switch (family) {
    case PolarFamily::Symplectic:
      s.t.twice = 2;
      s.vector_dim = 2 * rank;
      s.gram = square(s.vector_dim);
      for (unsigned i = 0; i < rank; ++i) {
        s.gram[2 * i][2 * i + 1] = f.one();
        s.gram[2 * i + 1][2 * i] = f.neg(f.one());
      }
      break;
    case PolarFamily::Parabolic:
      s.t.twice = 2;
      s.vector_dim = 2 * rank + 1;
      s.gram = square(s.vector_dim);
      s.gram[0][0] = 1;
      for (unsigned i = 1; i <= rank; ++i) s.gram[2 * i - 1][2 * i] = 1;
      break;
    case PolarFamily::Hyperbolic:
      s.t.twice = 0;
      s.vector_dim = 2 * rank;
      s.gram = square(s.vector_dim);
      for (unsigned i = 0; i < rank; ++i) s.gram[2 * i][2 * i + 1] = 1;
      break;
    case PolarFamily::Elliptic: {
      s.t.twice = 4;
      s.vector_dim = 2 * rank + 2;
      s.gram = square(s.vector_dim);
      // least (a, b) with x^2 + a x + b irreducible
      bool found = false;
      for (Elem a = 0; a < f.q() && !found; ++a)
        for (Elem b = 1; b < f.q() && !found; ++b) {
          bool root = false;
          for (Elem x = 0; x < f.q() && !root; ++x)
            root = f.add(f.add(f.mul(x, x), f.mul(a, x)), b) == 0;
          if (!root) {
            s.gram[0][0] = 1;
            s.gram[0][1] = a;
            s.gram[1][1] = b;
            found = true;
          }
        }
      for (unsigned i = 1; i <= rank; ++i) s.gram[2 * i][2 * i + 1] = 1;
      break;
    }
    case PolarFamily::Hermitian:
      require(f.has_conjugation(), Errc::NotSquareOrder, "hermitian spaces need a square field order");
      require(rank == 2, Errc::Unsupported, "hermitian spaces are limited to rank 2");
      s.t.twice = odd_hermitian ? 3 : 1;
      s.vector_dim = odd_hermitian ? 5 : 4;
      s.gram = square(s.vector_dim);
      for (unsigned i = 0; i < s.vector_dim; ++i) s.gram[i][i] = 1;
      break;
  }
  return s;
}

std::string PolarSpaceSpec::name() const {
  const std::string q = std::to_string(field->q());
  const std::string n = std::to_string(vector_dim - 1);
  switch (family) {
    case PolarFamily::Symplectic: return "W(" + n + "," + q + ")";
    case PolarFamily::Parabolic: return "Q(" + n + "," + q + ")";
    case PolarFamily::Hyperbolic: return "Q+(" + n + "," + q + ")";
    case PolarFamily::Elliptic: return "Q-(" + n + "," + q + ")";
    case PolarFamily::Hermitian: return "H(" + n + "," + q + ")";
  }
  return "?";
}

PolarSpace::PolarSpace(PolarSpaceSpec spec) : spec_(std::move(spec)) {
  pg_ = build_pg(spec_.vector_dim - 1, spec_.field, ProjSpace::Lines::Never);
  local_.assign(pg_->point_count(), -1);
  for (PointId p = 0; p < pg_->point_count(); ++p)
    if (is_singular(pg_->coords(p))) {
      local_[p] = static_cast<std::int64_t>(points_.size());
      points_.push_back(p);
    }
  require(points_.size() <= kMaxPoints, Errc::Guard, spec_.name() + " has too many points");

  const std::size_t n = points_.size();
  coll_.assign(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (collinear_vectors(pg_->coords(points_[i]), pg_->coords(points_[j]))) {
        coll_[i].set(j);
        coll_[j].set(i);
      }
  coll_closed_ = coll_;
  for (std::size_t i = 0; i < n; ++i) coll_closed_[i].set(i);
  build_subspaces();
  opposition_.resize(spec_.rank + 1);
}

bool PolarSpace::is_singular(std::span<const Elem> x) const {
  const Field& f = *spec_.field;
  switch (spec_.family) {
    case PolarFamily::Symplectic: return true;
    case PolarFamily::Hermitian: return form(x, x) == 0;
    default: {
      Elem v = 0;
      for (unsigned i = 0; i < spec_.vector_dim; ++i) {
        if (x[i] == 0) continue;
        for (unsigned j = i; j < spec_.vector_dim; ++j)
          if (spec_.gram[i][j] != 0 && x[j] != 0) v = f.add(v, f.mul(spec_.gram[i][j], f.mul(x[i], x[j])));
      }
      return v == 0;
    }
  }
}

Elem PolarSpace::form(std::span<const Elem> x, std::span<const Elem> y) const {
  const Field& f = *spec_.field;
  const unsigned dim = spec_.vector_dim;
  Elem v = 0;
  if (spec_.family == PolarFamily::Symplectic || spec_.family == PolarFamily::Hermitian) {
    const bool herm = spec_.family == PolarFamily::Hermitian;
    for (unsigned i = 0; i < dim; ++i)
      for (unsigned j = 0; j < dim; ++j)
        if (spec_.gram[i][j] != 0)
          v = f.add(v, f.mul(spec_.gram[i][j], f.mul(x[i], herm ? f.conjugate(y[j]) : y[j])));
    return v;
  }
  // polarization of the quadratic form: B(x,y) = sum_{i<=j} c_ij (x_i y_j + x_j y_i)
  for (unsigned i = 0; i < dim; ++i)
    for (unsigned j = i; j < dim; ++j)
      if (spec_.gram[i][j] != 0)
        v = f.add(v, f.mul(spec_.gram[i][j], f.add(f.mul(x[i], y[j]), f.mul(x[j], y[i]))));
  return v;
}

bool PolarSpace::collinear_vectors(std::span<const Elem> x, std::span<const Elem> y) const {
  if (spec_.family == PolarFamily::Symplectic) return form(x, y) == 0;
  // every point of the line must be singular (uniform in all characteristics)
  const Field& f = *spec_.field;
  if (!is_singular(x) || !is_singular(y)) return false;
  std::vector<Elem> z(x.size());
  for (Elem c = 1; c < f.q(); ++c) {
    for (std::size_t i = 0; i < z.size(); ++i) z[i] = f.add(x[i], f.mul(c, y[i]));
    if (!is_singular(z)) return false;
  }
  return true;
}

bool PolarSpace::collinear(std::size_t p, std::size_t q) const {
  require(p != q, Errc::Precondition, "collinear() needs distinct points");
  return coll_[p].test(q);
}

void PolarSpace::build_subspaces() {
  subspaces_.assign(spec_.rank + 1, {});
  const std::size_t n = points_.size();
  for (std::size_t i = 0; i < n; ++i) subspaces_[1].push_back({static_cast<std::uint32_t>(i)});
  for (unsigned k = 2; k <= spec_.rank; ++k) {
    std::vector<std::vector<std::uint32_t>> found;
    for (const auto& s : subspaces_[k - 1]) {
      Bitset cand(n);
      cand.set_all();
      for (auto p : s) cand &= coll_[p];
      std::vector<PointId> amb;
      for (auto p : s) amb.push_back(points_[p]);
      for (std::size_t x = cand.next(s.back() + 1); x < n; x = cand.next(x + 1)) {
        amb.push_back(points_[x]);
        const auto span = pg_->span_points(pg_->echelon(amb));
        amb.pop_back();
        std::vector<std::uint32_t> key;
        key.reserve(span.size());
        for (PointId a : span) {
          require(local_[a] >= 0, Errc::FormInconsistent, "span of collinear points left the polar space");
          key.push_back(static_cast<std::uint32_t>(local_[a]));
        }
        found.push_back(std::move(key));
      }
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    subspaces_[k] = std::move(found);
  }
}

namespace {

Bitset point_set(std::size_t n, const std::vector<std::uint32_t>& s) { return Bitset::from_indices(n, s); }

}  // namespace

bool PolarSpace::opposite_subspaces(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) const {
  require(a.size() == b.size(), Errc::TypeMismatch, "opposition needs subspaces of equal type");
  const std::size_t n = points_.size();
  Bitset perp_a(n), perp_b(n);
  perp_a.set_all();
  perp_b.set_all();
  for (auto p : a) perp_a &= coll_closed_[p];
  for (auto p : b) perp_b &= coll_closed_[p];
  return !point_set(n, a).intersects(perp_b) && !point_set(n, b).intersects(perp_a);
}

const std::vector<Bitset>& PolarSpace::opposition(unsigned k) const {
  auto& slot = opposition_.at(k);
  if (slot) return *slot;
  const auto& subs = subspaces(k);
  const std::size_t n = points_.size(), m = subs.size();
  std::vector<Bitset> sets, perps;
  sets.reserve(m);
  perps.reserve(m);
  for (const auto& s : subs) {
    sets.push_back(point_set(n, s));
    Bitset perp(n);
    perp.set_all();
    for (auto p : s) perp &= coll_closed_[p];
    perps.push_back(std::move(perp));
  }
  std::vector<Bitset> opp(m, Bitset(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!sets[i].intersects(perps[j]) && !sets[j].intersects(perps[i])) {
        opp[i].set(j);
        opp[j].set(i);
      }
  slot = std::move(opp);
  return *slot;
}

bool PolarSpace::opposite_subspaces(unsigned k, std::size_t a, std::size_t b) const {
  return opposition(k)[a].test(b);
}

bool PolarSpace::opposite_flags(const Flag& f1, const Flag& f2) const {
  require(f1.size() == rank() && f2.size() == rank(), Errc::Precondition, "flags must be maximal");
  for (unsigned k = 1; k <= rank(); ++k)
    if (!opposite_subspaces(k, f1[k - 1], f2[k - 1])) return false;
  return true;
}

std::vector<Flag> PolarSpace::maximal_flags() const {
  require(rank() <= 3, Errc::Guard, "maximal flags are limited to rank <= 3");
  require(polar_flag_count_closed_form(rank(), spec_.t, q()) <= 1'000'000 ||
              spec_.family == PolarFamily::Hermitian,
          Errc::Guard, "more than 10^6 maximal flags");
  // children[k][T] = indices of type-(k-1) subspaces inside type-k subspace T
  std::vector<std::vector<std::vector<std::uint32_t>>> children(rank() + 1);
  for (unsigned k = 2; k <= rank(); ++k) {
    const auto& lower = subspaces(k - 1);
    std::vector<std::vector<std::uint32_t>> by_min(points_.size());
    for (std::size_t i = 0; i < lower.size(); ++i) by_min[lower[i].front()].push_back(static_cast<std::uint32_t>(i));
    const auto& upper = subspaces(k);
    children[k].resize(upper.size());
    for (std::size_t t = 0; t < upper.size(); ++t) {
      for (auto y : upper[t])
        for (auto s : by_min[y])
          if (std::includes(upper[t].begin(), upper[t].end(), lower[s].begin(), lower[s].end()))
            children[k][t].push_back(s);
      std::sort(children[k][t].begin(), children[k][t].end());
    }
  }
  std::vector<Flag> flags;
  Flag chain(rank());
  auto descend = [&](auto&& self, unsigned k, std::uint32_t idx) -> void {
    chain[k - 1] = idx;
    if (k == 1) {
      flags.push_back(chain);
      require(flags.size() <= 1'000'000, Errc::Guard, "more than 10^6 maximal flags");
      return;
    }
    for (auto c : children[k][idx]) self(self, k - 1, c);
  };
  for (std::size_t g = 0; g < generators().size(); ++g) descend(descend, rank(), static_cast<std::uint32_t>(g));
  std::sort(flags.begin(), flags.end());
  return flags;
}

std::shared_ptr<const PolarSpace> build_polar_space(const PolarSpaceSpec& spec) {
  auto space = std::make_shared<const PolarSpace>(spec);
  if (spec.family != PolarFamily::Hermitian) {
    const BigInt expected = polar_point_count_closed_form(spec.rank, spec.t, spec.field->q());
    require(BigInt(space->point_count()) == expected, Errc::FormInconsistent,
            spec.name() + ": " + std::to_string(space->point_count()) + " singular points, expected " +
                expected.str());
  }
  return space;
}

}  // namespace fg
