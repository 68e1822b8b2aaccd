#include "fg/enumerate.hpp"

#include "fg/error.hpp"
#include "fg/geom_graphs.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>

namespace fg {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

class MisSearch {
 public:
  MisSearch(const DenseGraph& g, const SolveOptions& opt) : opt_(opt), n_(g.size()) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0u);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return g.degree(a) > g.degree(b); });
    std::vector<std::uint32_t> pos(n_);
    for (std::size_t i = 0; i < n_; ++i) pos[order_[i]] = static_cast<std::uint32_t>(i);
    adj_.assign(n_, Bitset(n_));
    free_.assign(n_, Bitset(n_));
    for (std::size_t i = 0; i < n_; ++i) {
      g.row(order_[i]).for_each([&](std::size_t j) { adj_[i].set(pos[j]); });
      free_[i].set_all();
      free_[i].subtract(adj_[i]);
      free_[i].reset(i);
    }
  }

  SolveResult run() {
    const auto t0 = Clock::now();
    Bitset p(n_);
    p.set_all();
    expand(p);
    SolveResult r;
    r.alpha = best_.size();
    for (auto v : best_) r.witness.push_back(order_[v]);
    std::sort(r.witness.begin(), r.witness.end());
    r.nodes = nodes_;
    r.timeout = timeout_;
    r.stopped_at_bound = !timeout_ && opt_.known_upper_bound && best_.size() >= *opt_.known_upper_bound;
    r.elapsed_ms = ms_since(t0);
    return r;
  }

 private:
  bool done() const {
    return timeout_ || (opt_.known_upper_bound && best_.size() >= *opt_.known_upper_bound);
  }

  void expand(Bitset p) {
    if (++nodes_ > opt_.budget) {
      timeout_ = true;
      return;
    }
    if (cur_.size() > best_.size()) best_ = cur_;
    if (p.none() || done()) return;

    // Greedy cover of the candidates by cliques of G: one vertex per clique at most.
    std::vector<std::uint32_t> verts;
    std::vector<std::size_t> bound;
    Bitset u = p;
    std::size_t k = 0;
    while (u.any()) {
      ++k;
      Bitset q = u;
      for (std::size_t v = q.first(); v < n_; v = q.first()) {
        u.reset(v);
        q.reset(v);
        q &= adj_[v];
        verts.push_back(static_cast<std::uint32_t>(v));
        bound.push_back(k);
      }
    }
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (cur_.size() + bound[i] <= best_.size()) return;
      const auto v = verts[i];
      cur_.push_back(v);
      expand(p & free_[v]);
      cur_.pop_back();
      if (done()) return;
      p.reset(v);
    }
  }

  SolveOptions opt_;
  std::size_t n_;
  std::vector<std::uint32_t> order_;
  std::vector<Bitset> adj_, free_;
  std::vector<std::uint32_t> cur_, best_;
  std::uint64_t nodes_ = 0;
  bool timeout_ = false;
};

// Branch and bound over caps. conf[x] holds the candidates y whose block with x
// already contains a chosen vertex, so x and y exclude each other.
class CapSearch {
 public:
  enum class Mode { Maximum, AllOfSize };

  CapSearch(const TripleHypergraph& h, Mode mode, std::size_t target, const SolveOptions& opt)
      : h_(h), mode_(mode), target_(target), opt_(opt), n_(h.size()), chosen_(h.size()) {}

  void run() {
    Bitset p(n_);
    p.set_all();
    expand(p, std::vector<Bitset>(n_, Bitset(n_)));
  }

  std::vector<std::uint32_t> best;
  std::vector<std::vector<std::uint32_t>> found;
  std::size_t max_results = 1'000'000;
  std::uint64_t nodes = 0;
  bool timeout = false;

  bool at_bound() const { return opt_.known_upper_bound && best.size() >= *opt_.known_upper_bound; }

 private:
  bool done() const { return timeout || (mode_ == Mode::Maximum && at_bound()); }

  // Lower-is-better floor for pruning: a branch must be able to beat it.
  std::size_t floor_size() const { return mode_ == Mode::Maximum ? best.size() : target_ - 1; }

  void cover(const Bitset& p, const std::vector<Bitset>& conf, std::vector<std::uint32_t>& verts,
             std::vector<std::size_t>& bound) const {
    Bitset r = p;
    std::size_t total = 0;
    std::vector<std::uint32_t> clique;
    for (std::size_t v = r.first(); v < n_; v = r.first()) {
      clique.assign(1, static_cast<std::uint32_t>(v));
      Bitset cand = conf[v] & r;
      for (std::size_t w = cand.first(); w < n_; w = cand.first()) {
        clique.push_back(static_cast<std::uint32_t>(w));
        cand &= conf[w];
      }
      std::int64_t best_block = -1;
      std::size_t best_k = 0;
      for (auto b : h_.blocks_through(v)) {
        if (h_.block_mask(b).intersects(chosen_)) continue;
        const auto k = h_.block_mask(b).and_count(r);
        if (k > best_k) {
          best_k = k;
          best_block = b;
        }
      }
      if (best_k >= 3 && best_k > 2 * clique.size()) {
        total += 2;
        Bitset cls = h_.block_mask(static_cast<std::size_t>(best_block)) & r;
        cls.for_each([&](std::size_t x) {
          verts.push_back(static_cast<std::uint32_t>(x));
          bound.push_back(total);
        });
        r.subtract(cls);
      } else {
        total += 1;
        for (auto x : clique) {
          verts.push_back(x);
          bound.push_back(total);
          r.reset(x);
        }
      }
    }
  }

  // A candidate with no conflict left and at most one other candidate on each
  // chosen-free block can join every cap of the branch.
  bool is_free(std::size_t v, const Bitset& p, const std::vector<Bitset>& conf) const {
    if (conf[v].intersects(p)) return false;
    for (auto b : h_.blocks_through(v))
      if (!h_.block_mask(b).intersects(chosen_) && h_.block_mask(b).and_count(p) >= 3) return false;
    return true;
  }

  void expand(Bitset p, const std::vector<Bitset>& conf) {
    if (++nodes > opt_.budget) {
      timeout = true;
      return;
    }
    std::size_t forced = 0;
    if (mode_ == Mode::Maximum) {
      Bitset fr(n_);
      p.for_each([&](std::size_t v) {
        if (is_free(v, p, conf)) fr.set(v);
      });
      fr.for_each([&](std::size_t v) {
        cur_.push_back(static_cast<std::uint32_t>(v));
        chosen_.set(v);
        ++forced;
      });
      p.subtract(fr);
    }
    branch(p, conf);
    for (; forced > 0; --forced) {
      chosen_.reset(cur_.back());
      cur_.pop_back();
    }
  }

  void branch(Bitset p, const std::vector<Bitset>& conf) {
    if (mode_ == Mode::Maximum) {
      if (cur_.size() > best.size()) best = cur_;
    } else if (cur_.size() == target_) {
      auto s = cur_;
      std::sort(s.begin(), s.end());
      found.push_back(std::move(s));
      require(found.size() <= max_results, Errc::Guard, "too many caps to list");
      return;
    }
    if (p.none() || done()) return;

    std::vector<std::uint32_t> verts;
    std::vector<std::size_t> bound;
    cover(p, conf, verts, bound);
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (cur_.size() + bound[i] <= floor_size()) return;
      const auto v = verts[i];
      Bitset np = p;
      np.reset(v);
      np.subtract(conf[v]);
      std::vector<Bitset> nconf = conf;
      for (auto b : h_.blocks_through(v)) {
        Bitset k = h_.block_mask(b) & np;
        if (k.count() < 2) continue;
        k.for_each([&](std::size_t x) {
          nconf[x] |= k;
          nconf[x].reset(x);
        });
      }
      cur_.push_back(v);
      chosen_.set(v);
      expand(std::move(np), nconf);
      chosen_.reset(v);
      cur_.pop_back();
      if (done()) return;
      p.reset(v);
    }
  }

  const TripleHypergraph& h_;
  Mode mode_;
  std::size_t target_;
  SolveOptions opt_;
  std::size_t n_;
  Bitset chosen_;
  std::vector<std::uint32_t> cur_;
};

}  // namespace

SolveResult max_independent_set(const DenseGraph& g, const SolveOptions& opt) {
  require(g.size() <= 5000, Errc::Guard, "max_independent_set above 5000 vertices");
  return MisSearch(g, opt).run();
}

SolveResult max_cap(const TripleHypergraph& h, const SolveOptions& opt) {
  require(h.size() <= 2000, Errc::Guard, "max_cap above 2000 points");
  const auto t0 = Clock::now();
  CapSearch s(h, CapSearch::Mode::Maximum, 0, opt);
  s.run();
  SolveResult r;
  r.alpha = s.best.size();
  r.witness = s.best;
  std::sort(r.witness.begin(), r.witness.end());
  r.nodes = s.nodes;
  r.timeout = s.timeout;
  r.stopped_at_bound = !s.timeout && s.at_bound();
  r.elapsed_ms = ms_since(t0);
  return r;
}

std::vector<std::vector<std::uint32_t>> caps_of_size(const TripleHypergraph& h, std::size_t m,
                                                      std::size_t max_results) {
  require(h.size() <= 2000, Errc::Guard, "caps_of_size above 2000 points");
  if (m == 0) return {{}};
  SolveOptions opt;
  opt.budget = ~std::uint64_t{0};
  CapSearch s(h, CapSearch::Mode::AllOfSize, m, opt);
  s.max_results = max_results;
  s.run();
  std::sort(s.found.begin(), s.found.end());
  return std::move(s.found);
}

namespace {

// Ordered DFS; at the last level the remaining candidates are counted in bulk.
// extend(v, p) returns the candidates after v is added.
template <class Extend>
CountResult count_impl(std::size_t n, std::uint64_t m, std::uint64_t budget, Extend extend) {
  CountResult res;
  res.m = m;
  if (m == 0) {
    res.count = 1;
    return res;
  }
  std::uint64_t acc = 0;
  auto flush = [&] {
    res.count += acc;
    acc = 0;
  };
  std::function<void(const Bitset&, std::uint64_t)> rec = [&](const Bitset& p, std::uint64_t depth) {
    require(++res.nodes <= budget, Errc::Guard, "count_independent_sets exceeded its node budget");
    if (depth + 1 == m) {
      acc += p.count();
      if (acc > (std::uint64_t{1} << 62)) flush();
      return;
    }
    p.for_each([&](std::size_t v) {
      Bitset np = extend(v, p);
      // only later vertices, so each set is produced once
      for (std::size_t i = 0; i <= v; ++i) np.reset(i);
      if (np.count() + depth + 1 >= m) rec(np, depth + 1);
    });
  };
  Bitset all(n);
  all.set_all();
  rec(all, 0);
  flush();
  return res;
}

}  // namespace

CountResult count_independent_sets(const DenseGraph& g, std::uint64_t m, std::uint64_t budget) {
  return count_impl(g.size(), m, budget, [&](std::size_t v, const Bitset& p) {
    Bitset np = p;
    np.subtract(g.row(v));
    return np;
  });
}

CountResult count_independent_sets(const TripleHypergraph& h, std::uint64_t m, std::uint64_t budget) {
  // Candidates must stay compatible with every chosen vertex, so the chosen
  // set travels with the recursion through a stack.
  std::vector<std::uint32_t> stack;
  CountResult res;
  res.m = m;
  if (m == 0) {
    res.count = 1;
    return res;
  }
  std::uint64_t acc = 0;
  std::function<void(const Bitset&)> rec = [&](const Bitset& p) {
    require(++res.nodes <= budget, Errc::Guard, "count_independent_sets exceeded its node budget");
    if (stack.size() + 1 == m) {
      acc += p.count();
      if (acc > (std::uint64_t{1} << 62)) {
        res.count += acc;
        acc = 0;
      }
      return;
    }
    p.for_each([&](std::size_t v) {
      Bitset np(h.size());
      for (std::size_t w = p.next(v + 1); w < h.size(); w = p.next(w + 1)) np.set(w);
      for (auto c : stack) {
        const auto b = h.block_of(c, static_cast<std::uint32_t>(v));
        if (b >= 0) np.subtract(h.block_mask(static_cast<std::size_t>(b)));
      }
      if (np.count() + stack.size() + 1 < m) return;
      stack.push_back(static_cast<std::uint32_t>(v));
      rec(np);
      stack.pop_back();
    });
  };
  Bitset all(h.size());
  all.set_all();
  rec(all);
  res.count += acc;
  return res;
}

std::vector<std::vector<std::uint32_t>> list_maximal_independent_sets(const DenseGraph& g, std::size_t min_size) {
  const std::size_t n = g.size();
  std::vector<Bitset> free(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    free[i].set_all();
    free[i].subtract(g.row(i));
    free[i].reset(i);
  }
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> r;
  // Bron-Kerbosch on the complement: P candidates, X excluded.
  std::function<void(Bitset, Bitset)> bk = [&](Bitset p, Bitset x) {
    if (p.none()) {
      if (x.none() && r.size() >= min_size) {
        out.push_back(r);
        std::sort(out.back().begin(), out.back().end());
        require(out.size() <= 1'000'000, Errc::Guard, "more than 10^6 maximal independent sets");
      }
      return;
    }
    if (r.size() + p.count() < min_size) return;
    // pivot maximizing |P ∩ free(u)|
    std::size_t pivot = n, best = 0;
    auto consider = [&](std::size_t u) {
      const auto c = p.and_count(free[u]);
      if (pivot == n || c > best) {
        pivot = u;
        best = c;
      }
    };
    p.for_each(consider);
    x.for_each(consider);
    Bitset branch = p;
    branch.subtract(free[pivot]);
    branch.for_each([&](std::size_t v) {
      r.push_back(static_cast<std::uint32_t>(v));
      bk(p & free[v], x & free[v]);
      r.pop_back();
      p.reset(v);
      x.set(v);
    });
  };
  Bitset p(n), x(n);
  p.set_all();
  bk(p, x);
  std::sort(out.begin(), out.end());
  return out;
}

SolveResult max_partial_ovoid(const PolarSpace& space, const SolveOptions& opt) {
  return max_independent_set(collinearity_graph(space), opt);
}

SolveResult max_partial_spread(const ProjSpace& pg, unsigned k, const SolveOptions& opt) {
  return max_independent_set(subspace_intersection_graph(pg, k), opt);
}

SolveResult max_ekr_set(const PolarSpace& space, const SolveOptions& opt) {
  return max_independent_set(oppositeness_graph(space), opt);
}

}  // namespace fg
