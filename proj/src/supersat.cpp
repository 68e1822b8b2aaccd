#include "fg/supersat.hpp"

#include "fg/error.hpp"
#include "fg/parallel.hpp"
#include "fg/rng.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace fg {

Rational interlacing_edge_bound(const BigInt& n, const BigInt& d, const BigInt& lambda, std::uint64_t s) {
  const BigInt S = s;
  return Rational(d - lambda, n) * S * S + Rational(lambda * S);
}

Rational epsilon_supersat_bound(const BigInt& n, const BigInt& d, const BigInt& lambda, const Rational& eps,
                                std::uint64_t s) {
  require(eps > 0, Errc::EpsilonRange, "epsilon must be positive");
  const Rational alpha(-lambda * n, d - lambda);
  require(Rational(s) >= (1 + eps) * alpha, Errc::PreconditionSize, "subset below (1+eps) alpha");
  const BigInt S = s;
  return eps / (1 + eps) * Rational(d - lambda, n) * S * S;
}

BigInt jensen_min(std::uint64_t s, std::uint64_t y) {
  require(s >= 1 && y >= 1, Errc::Precondition, "jensen_min needs s, y >= 1");
  auto c2 = [](std::uint64_t w) { return BigInt(w) * (w == 0 ? 0 : w - 1) / 2; };
  return (s - 1) * c2(y) + c2(y - 1);
}

BigInt exact_composition_min(unsigned s, unsigned total) {
  require(s >= 1, Errc::Precondition, "need at least one part");
  require(std::uint64_t{s} * total <= 4096, Errc::Guard, "s * total too large for exhaustive search");
  // The objective is symmetric, so nonincreasing parts cover every composition.
  std::uint64_t best = ~std::uint64_t{0};
  std::function<void(unsigned, unsigned, unsigned, std::uint64_t)> rec = [&](unsigned part, unsigned left, unsigned cap,
                                                                             std::uint64_t acc) {
    if (acc >= best) return;
    if (part + 1 == s) {
      if (left <= cap) best = std::min<std::uint64_t>(best, acc + std::uint64_t{left} * (left ? left - 1 : 0) / 2);
      return;
    }
    const unsigned rest = s - part - 1;
    for (unsigned w = std::min(cap, left); w + std::uint64_t{rest} * w >= left; --w) {
      rec(part + 1, left - w, w, acc + std::uint64_t{w} * (w ? w - 1 : 0) / 2);
      if (w == 0) break;
    }
  };
  rec(0, total, total, 0);
  return best;
}

Rational triples_lower_bound(std::uint64_t p_size, unsigned r, unsigned q, TripleForm form, bool enforce_guard) {
  const BigInt g = (ipow(BigInt(q), r) - 1) / (q - 1);
  const BigInt P = p_size;
  if (form == TripleForm::K) {
    require(P % g == 0, Errc::NonIntegralK, "|P| is not an integer multiple of [r]_q");
    const BigInt k = P / g;
    require(k > 1, Errc::NonIntegralK, "k must exceed 1");
    return Rational(k * k * (k - 1) * g * g, 6) - Rational(k * (k - 1) * g, 3);
  }
  require(P >= 2 * g, Errc::PreconditionSize, "cubic form needs |P| >= 2 [r]_q");
  if (enforce_guard) require(g >= 6, Errc::GuardCubic, "cubic form needs [r]_q >= 6");
  return Rational(P * P * P, 15 * g);
}

std::uint64_t plane_pairs_set_size(const Rational& eps, unsigned q) {
  const BigInt q3 = ipow(BigInt(q), 3);
  return floor_of((1 + eps) * Rational(q3 + 1)).convert_to<std::uint64_t>();
}

Rational plane_pairs_bound(const Rational& eps, unsigned q) {
  require(eps >= 0, Errc::EpsilonRange, "epsilon must be nonnegative");
  if (eps > 0)
    require(plane_pairs_set_size(eps, q) >= ipow(BigInt(q), 3) + 2, Errc::PreconditionSize,
            "plane set below q^3 + 2");
  const BigInt Q = q;
  return eps * Rational(Q * Q * Q * Q + Q * Q + 1);
}

namespace {

// Edge-count oracle shared by the graph and hypergraph searches: gain(v, chosen)
// is the number of edges v closes with already chosen vertices.
template <class Gain, class Count>
MinEdgesResult min_edges_impl(std::size_t n, std::uint64_t s, bool exact, std::uint64_t trials, std::uint64_t seed,
                              Gain gain, Count count) {
  MinEdgesResult res;
  res.s = s;
  res.exact = exact;
  if (s <= 1 || s > n) {
    require(s <= n, Errc::Precondition, "subset larger than vertex set");
    res.witness.resize(s);
    std::iota(res.witness.begin(), res.witness.end(), 0u);
    res.trials = 1;
    return res;
  }
  if (exact) {
    require(binomial(static_cast<unsigned>(n), static_cast<unsigned>(s)) <= 10'000'000, Errc::Guard,
            "exact mode needs C(n,s) <= 10^7");
    std::uint64_t best = ~std::uint64_t{0};
    std::vector<std::uint32_t> cur, best_set;
    Bitset chosen(n);
    std::uint64_t visited = 0;
    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t from, std::uint64_t e) {
      if (e >= best) return;  // edges only accumulate
      if (cur.size() == s) {
        ++visited;
        best = e;
        best_set = cur;
        return;
      }
      for (std::size_t v = from; v + (s - cur.size()) <= n; ++v) {
        const std::uint64_t add = gain(v, chosen);
        cur.push_back(static_cast<std::uint32_t>(v));
        chosen.set(v);
        rec(v + 1, e + add);
        chosen.reset(v);
        cur.pop_back();
        if (best == 0) return;
      }
    };
    rec(0, 0);
    res.min_edges = best;
    res.witness = best_set;
    res.trials = visited;
    return res;
  }
  require(trials >= 1, Errc::Guard, "sampled mode needs at least one trial");
  std::vector<std::uint64_t> vals(trials);
  std::vector<std::vector<std::uint32_t>> sets(trials);
  parallel_for(trials, [&](std::size_t t) {
    auto eng = trial_engine(seed, t);
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    for (std::size_t i = 0; i < s; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, n - 1);
      std::swap(perm[i], perm[pick(eng)]);
    }
    perm.resize(s);
    std::sort(perm.begin(), perm.end());
    vals[t] = count(Bitset::from_indices(n, perm));
    sets[t] = std::move(perm);
  });
  const auto it = std::min_element(vals.begin(), vals.end());
  res.min_edges = *it;
  res.witness = sets[static_cast<std::size_t>(it - vals.begin())];
  res.trials = trials;
  return res;
}

}  // namespace

MinEdgesResult min_induced_edges(const DenseGraph& g, std::uint64_t s, bool exact, std::uint64_t trials,
                                 std::uint64_t seed) {
  return min_edges_impl(
      g.size(), s, exact, trials, seed, [&](std::size_t v, const Bitset& c) { return g.row(v).and_count(c); },
      [&](const Bitset& u) { return induced_edge_count(g, u); });
}

MinEdgesResult min_induced_edges(const TripleHypergraph& h, std::uint64_t s, bool exact, std::uint64_t trials,
                                 std::uint64_t seed) {
  return min_edges_impl(
      h.size(), s, exact, trials, seed,
      [&](std::size_t v, const Bitset& c) {
        std::uint64_t add = 0;
        for (auto b : h.blocks_through(v)) {
          const std::uint64_t k = h.block_mask(b).and_count(c);
          add += k * (k - (k ? 1 : 0)) / 2;
        }
        return add;
      },
      [&](const Bitset& u) { return hyper_induced_edge_count(h, u); });
}

}  // namespace fg
