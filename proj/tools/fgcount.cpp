// fgcount: command-line front end for the finite-geometry library.
//
// Exit codes: 0 success, 1 usage or input error, 2 guard or timeout.

#include "fg/containers.hpp"
#include "fg/enumerate.hpp"
#include "fg/error.hpp"
#include "fg/field.hpp"
#include "fg/geom_graphs.hpp"
#include "fg/instance.hpp"
#include "fg/parallel.hpp"
#include "fg/polar.hpp"
#include "fg/projective.hpp"
#include "fg/random_caps.hpp"
#include "fg/rng.hpp"
#include "fg/serialize.hpp"
#include "fg/spectra.hpp"
#include "fg/supersat.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

using namespace fg;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitGuard = 2;

// A result that hit a guard or budget: written out, then exit 2.
struct GuardExit : std::runtime_error {
  GuardExit(const std::string& what, json payload) : std::runtime_error(what), payload(std::move(payload)) {}
  json payload;
};

// JSON config: top-level keys are global options, objects named after a
// subcommand hold its options, and any other flat key is applied to the
// subcommand given on the command line.
class JsonConfig : public CLI::Config {
 public:
  JsonConfig(std::set<std::string> globals, std::string active) : globals_(std::move(globals)), active_(std::move(active)) {}

  std::string to_config(const CLI::App*, bool, bool, std::string) const override { return "{}"; }

  std::vector<CLI::ConfigItem> from_config(std::istream& is) const override {
    json j;
    try {
      j = json::parse(is);
    } catch (const json::parse_error& e) {
      throw CLI::ConversionError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw CLI::ConversionError("config must be a JSON object");
    std::vector<CLI::ConfigItem> items;
    for (const auto& [key, val] : j.items()) {
      if (val.is_object()) {
        for (const auto& [k2, v2] : val.items()) items.push_back(item({key}, k2, v2));
      } else if (globals_.count(key) || active_.empty()) {
        items.push_back(item({}, key, val));
      } else {
        items.push_back(item({active_}, key, val));
      }
    }
    return items;
  }

 private:
  static CLI::ConfigItem item(std::vector<std::string> parents, const std::string& name, const json& v) {
    CLI::ConfigItem it;
    it.parents = std::move(parents);
    it.name = name;
    auto str = [](const json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
    if (v.is_array())
      for (const auto& x : v) it.inputs.push_back(str(x));
    else
      it.inputs.push_back(str(v));
    return it;
  }
  std::set<std::string> globals_;
  std::string active_;
};

struct InstanceOpts {
  std::string instance, family, object;
  unsigned rank = 0, q = 0;
  bool odd_hermitian = false;
};

void add_instance_opts(CLI::App* sub, InstanceOpts& o) {
  sub->add_option("--instance,-i", o.instance, "instance such as W(3,2), Q-(5,2), PG(3,3)/lines, PG(3,3)");
  sub->add_option("--family,--geometry", o.family, "symplectic|parabolic|hyperbolic|elliptic|hermitian|pg");
  sub->add_option("--rank,--r", o.rank, "polar rank, or projective dimension for pg");
  sub->add_option("--q", o.q, "field order");
  sub->add_option("--object", o.object, "points|flags|lines|planes|cap");
  sub->add_flag("--odd-hermitian", o.odd_hermitian, "H(4,q) instead of H(3,q)");
}

Instance resolve(const InstanceOpts& o) {
  if (!o.instance.empty()) {
    auto in = parse_instance(o.instance);
    make_field_of_order(in.q);
    return in;
  }
  if (o.q) make_field_of_order(o.q);
  if (o.family.empty() || o.q == 0)
    throw CLI::ValidationError("instance", "give --instance or --family/--geometry with --rank/--r and --q");
  if (o.rank == 0) throw CLI::ValidationError("--rank", "give --rank (polar) or --r (pg)");
  make_field_of_order(o.q);
  return make_instance(o.family, o.rank, o.q, o.object, o.odd_hermitian);
}

std::string graph_key(const Instance& in) {
  std::string k = in.name();
  for (auto& c : k)
    if (c == '(' || c == ')' || c == ',' || c == '/') c = '_';
  return k;
}

DenseGraph load_graph(const Instance& in) {
  return cached_graph(graph_key(in), [&] { return instance_graph(in); });
}

struct Output {
  std::string path;
  void write(const std::string& text) const {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw Error(Errc::Precondition, "cannot write " + path);
    out << text;
  }
  void write(const json& j) const { write(j.dump(2) + "\n"); }
};

// ---- geom ---------------------------------------------------------------

json run_geom(const Instance& in) {
  json r{{"instance", in.name()}, {"q", in.q}};
  const auto f = make_field_of_order(in.q);
  r["field"] = {{"p", f->p()}, {"e", f->e()}, {"modulus", f->modulus()}};
  if (in.projective) {
    const auto pg = build_pg(in.r, f, ProjSpace::Lines::Never);
    r["r"] = in.r;
    r["points"] = pg->point_count();
    r["lines"] = pg->line_count();
    json sub = json::array();
    for (unsigned k = 1; k <= in.r; ++k) sub.push_back(to_json_value(gaussian_binomial(in.r + 1, k, in.q)));
    r["subspaces_by_vector_dimension"] = sub;
  } else {
    const auto sp = instance_polar(in);
    r["family"] = family_name(in.family);
    r["rank"] = in.rank;
    r["t"] = to_string(in.t().value());
    r["points"] = sp->point_count();
    r["points_closed_form"] = to_json_value(polar_point_count_closed_form(in.rank, in.t(), in.q));
    json sub = json::array();
    for (unsigned k = 1; k <= in.rank; ++k) sub.push_back(sp->subspaces(k).size());
    r["subspaces_by_vector_dimension"] = sub;
    r["flags_closed_form"] = to_json_value(polar_flag_count_closed_form(in.rank, in.t(), in.q));
  }
  return envelope("geom", r);
}

// ---- graph --------------------------------------------------------------

json run_graph(const Instance& in, const std::string& adjacency) {
  json r{{"instance", in.name()}};
  if (in.is_hypergraph()) {
    const auto h = instance_hypergraph(in);
    r["n"] = h.size();
    r["blocks"] = h.block_count();
    r["edges"] = h.edge_count();
    const auto agg = cap_aggregates(in.r, in.q);
    r["edges_closed_form"] = to_json_value(agg.e);
    Bitset all(h.size());
    all.set_all();
    r["delta2"] = delta2(h, all);
    r["delta2_closed_form"] = agg.delta2;
    if (!adjacency.empty()) {
      std::ofstream out(adjacency, std::ios::binary);
      write_hypergraph_binary(h, out);
    }
    return envelope("graph", r);
  }
  const auto g = load_graph(in);
  r["n"] = g.size();
  r["edges"] = g.edge_count();
  const auto d = g.regular_degree();
  r["degree"] = d ? json(*d) : json(nullptr);
  r["meta"] = g.meta;
  if (!adjacency.empty()) {
    std::ofstream out(adjacency, std::ios::binary);
    write_graph_binary(g, out);
  }
  return envelope("graph", r);
}

// ---- spectrum -----------------------------------------------------------

json run_spectrum(const Instance& in) {
  const auto g = load_graph(in);
  const auto s = spectrum(g);
  const auto cf = instance_closed_form(in);
  bool lam = false;
  for (const auto& c : cf.lambda_candidates.empty() ? std::vector<BigInt>{cf.lambda} : cf.lambda_candidates)
    lam = lam || std::abs(s.lambda_min - to_double(c)) <= 1e-6;
  const bool match = BigInt(s.n) == cf.n && s.d && BigInt(*s.d) == cf.d && lam;
  json r{{"instance", in.name()},
         {"n", s.n},
         {"d", s.d ? json(*s.d) : json(nullptr)},
         {"lambda_min", s.lambda_min},
         {"match", match},
         {"closed_form", cf},
         {"summary", s}};
  return envelope("spectrum", r);
}

// ---- bound --------------------------------------------------------------

struct BoundOpts {
  std::string threshold;
  std::uint64_t triples = 0;
  std::string form = "k";
  std::string plane_pairs;
};

json run_bound(const Instance& in, const BoundOpts& o) {
  json r{{"instance", in.name()}};
  if (in.is_hypergraph()) {
    const auto agg = cap_aggregates(in.r, in.q);
    r["aggregates"] = {{"n", to_json_value(agg.n)}, {"e", to_json_value(agg.e)}, {"delta2", agg.delta2}};
    if (o.triples) {
      const auto form = o.form == "cubic" ? TripleForm::Cubic : TripleForm::K;
      r["triples_lower_bound"] = to_json_value(triples_lower_bound(o.triples, in.r, in.q, form));
      r["set_size"] = o.triples;
    }
    r["st_certificate"] = st_certificate(in.r, in.q);
  } else {
    const auto cf = instance_closed_form(in);
    r["closed_form"] = cf;
    const auto dh = dh_bound(cf.n, cf.d, cf.lambda);
    r["dh_bound"] = to_json_value(dh);
    r["dh_floor"] = to_json_value(floor_of(dh));
    if (!o.threshold.empty()) {
      const auto kind = parse_threshold_kind(o.threshold);
      r["threshold"] = {{"kind", o.threshold},
                        {"m", threshold_m(kind, in.projective ? in.r + 1 : in.rank, in.t(), in.q, to_double(cf.n),
                                          to_double(cf.d))}};
    }
  }
  if (!o.plane_pairs.empty()) {
    const auto eps = rational_from_json(o.plane_pairs);
    r["plane_pairs"] = {{"epsilon", to_string(eps)},
                        {"set_size", plane_pairs_set_size(eps, in.q)},
                        {"bound", to_json_value(plane_pairs_bound(eps, in.q))}};
  }
  return envelope("bound", r);
}

// ---- enumerate ----------------------------------------------------------

json run_enumerate(const Instance& in, std::uint64_t budget, bool use_dh) {
  SolveOptions opt;
  opt.budget = budget;
  json r{{"instance", in.name()}};
  SolveResult res;
  if (in.is_hypergraph()) {
    res = max_cap(instance_hypergraph(in), opt);
  } else {
    const auto cf = instance_closed_form(in);
    const auto dh = dh_bound(cf.n, cf.d, cf.lambda);
    r["dh_bound"] = to_json_value(dh);
    if (use_dh) opt.known_upper_bound = floor_of(dh).convert_to<std::size_t>();
    res = max_independent_set(load_graph(in), opt);
  }
  r["solve"] = res;
  r["alpha"] = res.alpha;
  r["exact"] = !res.timeout;
  if (res.timeout) throw GuardExit("search budget exhausted; alpha is a lower bound", envelope("enumerate", r));
  return envelope("enumerate", r);
}

// ---- count --------------------------------------------------------------

struct CountOpts {
  std::uint64_t m = 0, m_max = 0;
  std::uint64_t budget = 1'000'000'000;
  double bound_alpha = 0, gamma = 0;
};

json run_count(const Instance& in, const CountOpts& o) {
  if (!o.m && !o.m_max) throw CLI::ValidationError("--m", "give --m or --m-max");
  std::optional<DenseGraph> g;
  std::optional<TripleHypergraph> h;
  if (in.is_hypergraph())
    h = instance_hypergraph(in);
  else
    g = load_graph(in);
  const auto n = h ? h->size() : g->size();
  const double alpha = o.bound_alpha > 0 ? o.bound_alpha : static_cast<double>(n);
  auto one = [&](std::uint64_t m) { return h ? count_independent_sets(*h, m, o.budget) : count_independent_sets(*g, m, o.budget); };
  json r{{"instance", in.name()}};
  if (o.m_max == 0) {
    const auto c = one(o.m);
    r["m"] = c.m;
    r["count"] = to_json_value(c.count);
    r["nodes"] = c.nodes;
    return envelope("count", r);
  }
  json series = json::array();
  for (std::uint64_t m = 1; m <= o.m_max; ++m) {
    const auto c = one(m);
    json row{{"m", m}, {"count", to_json_value(c.count)}, {"nodes", c.nodes}};
    if (static_cast<double>(m) <= (1 + o.gamma) * alpha) {
      const auto cb = count_vs_bound(c.count, alpha, o.gamma, m);
      row["ln_count"] = cb.ln_count > -1e300 ? json(cb.ln_count) : json(nullptr);
      row["ln_bound"] = cb.ln_bound;
      row["holds"] = cb.holds;
    }
    series.push_back(row);
  }
  r["alpha"] = alpha;
  r["gamma"] = o.gamma;
  r["series"] = series;
  return envelope("count", r);
}

// ---- supersat -----------------------------------------------------------

json run_supersat(const Instance& in, std::uint64_t s, bool exact, std::uint64_t trials, std::uint64_t seed) {
  if (!exact && trials == 0) throw CLI::ValidationError("--trials", "give --exact or --trials N");
  SupersatReport rep;
  rep.instance = in.name();
  rep.s = s;
  MinEdgesResult res;
  json r{{"instance", in.name()}};
  if (in.is_hypergraph()) {
    const auto h = instance_hypergraph(in);
    res = min_induced_edges(h, s, exact, trials, seed);
    rep.statement = "triple supersaturation (K form)";
    try {
      rep.bound_value = triples_lower_bound(s, in.r, in.q, TripleForm::K);
    } catch (const Error& e) {
      r["bound_error"] = e.what();
    }
  } else {
    const auto cf = instance_closed_form(in);
    res = min_induced_edges(load_graph(in), s, exact, trials, seed);
    rep.statement = "interlacing edge bound";
    rep.bound_value = interlacing_edge_bound(cf.n, cf.d, cf.lambda, s);
  }
  rep.min_observed = res.min_edges;
  rep.exact = res.exact;
  rep.trials = res.trials;
  rep.holds = Rational(res.min_edges) >= rep.bound_value;
  r["min_edges"] = res;
  r["report"] = rep;
  return envelope("supersat", r);
}

// ---- containers ---------------------------------------------------------

struct ContainerOpts {
  std::string epsilon, gamma;
  double e0 = 0;
  std::string verify_with = "maximal";
  std::size_t cap_size = 0, size_cap = 0;
  std::string family_out;
  std::uint64_t seed = 1;
  bool certificate_only = false;
};

std::vector<VertexList> sampled_sets(std::size_t n, std::uint64_t count, std::uint64_t seed,
                                     const std::function<bool(const VertexList&, std::uint32_t)>& fits) {
  std::vector<VertexList> out(count);
  parallel_for(count, [&](std::size_t t) {
    auto eng = trial_engine(seed, t);
    VertexList order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<std::uint32_t>(i);
    std::shuffle(order.begin(), order.end(), eng);
    VertexList s;
    for (auto v : order)
      if (fits(s, v)) s.push_back(v);
    std::sort(s.begin(), s.end());
    out[t] = std::move(s);
  });
  return out;
}

std::uint64_t parse_sampled(const std::string& spec) {
  if (spec.rfind("sampled:", 0) != 0) return 0;
  return std::stoull(spec.substr(8));
}

json run_containers(const Instance& in, const ContainerOpts& o) {
  json r{{"instance", in.name()}};
  const Output fam_out{o.family_out};
  if (!in.is_hypergraph()) {
    if (o.epsilon.empty()) throw CLI::ValidationError("--epsilon", "graph containers need --epsilon");
    const auto g = load_graph(in);
    const auto cf = instance_closed_form(in);
    const auto params = graph_container_params(cf.n, cf.d, cf.lambda, rational_from_json(o.epsilon));
    std::vector<VertexList> sets;
    if (o.verify_with == "maximal") {
      sets = list_maximal_independent_sets(g, 0);
    } else if (const auto k = parse_sampled(o.verify_with)) {
      sets = sampled_sets(g.size(), k, o.seed, [&](const VertexList& s, std::uint32_t v) {
        return std::none_of(s.begin(), s.end(), [&](std::uint32_t u) { return g.adjacent(u, v); });
      });
    } else {
      throw CLI::ValidationError("--verify-with", "maximal or sampled:N");
    }
    const auto fam = kw_containers(g, params, sets);
    r["params"] = {{"epsilon", to_string(params.epsilon)}, {"alpha", to_string(params.alpha)},
                   {"R", to_string(params.R)},             {"beta", to_string(params.beta)},
                   {"f", params.f},                        {"f_cap", params.f_cap}};
    r["independent_sets"] = sets.size();
    r["family_size"] = fam.entries.size();
    r["max_container"] = fam.max_container();
    r["max_fingerprint"] = fam.max_fingerprint();
    r["verify"] = verify_containers(fam, g, params, sets);
    if (!o.family_out.empty()) {
      std::ostringstream os;
      write_family_jsonl(fam, os, [&](const VertexList& c) { return induced_edge_count(g, Bitset::from_indices(g.size(), c)); });
      fam_out.write(os.str());
    }
    return envelope("containers", r);
  }

  const unsigned q = in.q, rr = in.r;
  const double theta_r = static_cast<double>(pg_point_count(rr - 1, q));
  const double e0 = o.e0 > 0 ? o.e0 : 4 * theta_r * theta_r;
  const double e_h = to_double(cap_aggregates(rr, q).e);
  r["e0"] = e0;
  r["e_H"] = e_h;
  r["st_certificate"] = st_certificate(rr, q);
  if (e0 <= e_h) r["st_bookkeeping"] = st_bookkeeping(e_h, e0, rr, q);
  if (o.certificate_only) return envelope("containers", r);

  const auto h = instance_hypergraph(in);
  std::vector<VertexList> caps;
  if (o.verify_with == "maximal" || o.verify_with.rfind("caps", 0) == 0) {
    if (!o.cap_size) throw CLI::ValidationError("--cap-size", "hypergraph verification needs --cap-size");
    caps = caps_of_size(h, o.cap_size);
  } else if (const auto k = parse_sampled(o.verify_with)) {
    caps = sampled_sets(h.size(), k, o.seed, [&](const VertexList& s, std::uint32_t v) {
      for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
          const auto b = h.block_of(s[i], s[j]);
          if (b >= 0) {
            const auto& pts = h.block(static_cast<std::size_t>(b));
            if (std::binary_search(pts.begin(), pts.end(), v)) return false;
          }
        }
      return true;
    });
  } else {
    throw CLI::ValidationError("--verify-with", "maximal, caps or sampled:N");
  }
  const auto fam = scythe_containers_3u(h, e0, caps);
  r["caps"] = caps.size();
  r["family_size"] = fam.entries.size();
  r["max_container"] = fam.max_container();
  r["max_fingerprint"] = fam.max_fingerprint();
  r["verify"] = verify_scythe(fam, h, e0, rr, caps, o.size_cap);
  auto edges = [&](const VertexList& c) { return hyper_induced_edge_count(h, Bitset::from_indices(h.size(), c)); };
  if (!o.gamma.empty()) {
    const auto gamma = rational_from_json(o.gamma);
    const auto refined = gamma_refinement(h, fam, gamma, caps);
    const auto bound = floor_of((1 + gamma) * Rational(pg_point_count(2, q))).convert_to<std::size_t>();
    r["gamma"] = {{"gamma", to_string(gamma)},
                  {"target", gamma_target(gamma, q)},
                  {"family_size", refined.entries.size()},
                  {"max_container", refined.max_container()},
                  {"size_bound", bound},
                  {"pass", refined.max_container() <= bound}};
    if (!o.family_out.empty()) {
      std::ostringstream os;
      write_family_jsonl(refined, os, edges);
      fam_out.write(os.str());
    }
  } else if (!o.family_out.empty()) {
    std::ostringstream os;
    write_family_jsonl(fam, os, edges);
    fam_out.write(os.str());
  }
  return envelope("containers", r);
}

// ---- random-sweep -------------------------------------------------------

struct SweepOpts {
  unsigned r = 3, q = 0;
  double pmin = 0, pmax = 1;
  std::size_t points = 12;
  std::uint64_t trials = 50, seed = 1, budget = 50'000;
  std::string out;
  bool no_timing = false;
};

void run_sweep(const SweepOpts& o) {
  if (o.q == 0) throw CLI::ValidationError("--q", "required");
  make_field_of_order(o.q);
  const double pmin = o.pmin > 0 ? o.pmin : std::pow(static_cast<double>(o.q), -static_cast<double>(o.r));
  const auto t = sweep(o.r, o.q, {pmin, o.pmax, o.points}, o.trials, o.seed, o.budget);
  std::ostringstream csv;
  write_sweep_csv(t, csv, !o.no_timing);
  const auto side = envelope("random-sweep", sweep_sidecar(t));
  if (o.out.empty()) {
    std::cout << csv.str();
    std::cerr << side.dump(2) << "\n";
    return;
  }
  Output{o.out + ".csv"}.write(csv.str());
  Output{o.out + ".json"}.write(side);
}

// ---- report -------------------------------------------------------------

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

std::string verdict(bool ok) { return ok ? "pass" : "FAIL"; }

void report_row(std::ostringstream& md, const std::string& file, const std::string& inst, const std::string& stmt,
                const std::string& bound, const std::string& value, const std::string& v) {
  auto cell = [](std::string s) {
    for (std::size_t i = s.find('|'); i != std::string::npos; i = s.find('|', i + 2)) s.insert(i, "\\");
    return s;
  };
  md << "| " << cell(file) << " | " << cell(inst) << " | " << cell(stmt) << " | " << cell(bound) << " | " << cell(value)
     << " | " << cell(v) << " |\n";
}

void report_sweep(std::ostringstream& regimes, const SweepTable& t) {
  regimes << "\n### Random sweep r=" << t.r << ", q=" << t.q << " (" << t.trials << " trials per p)\n\n";
  regimes << "Boundaries: sparse q^-(r+1)/2 = " << fmt(t.sparse_boundary)
          << ", dense q^-(r-1)/2 ln^2 q = " << fmt(t.dense_boundary) << "\n\n";
  regimes << "| p | regime | mean v | mean e | median alpha | median alpha/v | exact trials |\n|---|---|---|---|---|---|---|\n";
  for (const auto& a : t.aggregates) {
    const char* regime = a.p < t.sparse_boundary ? "sparse" : a.p < t.dense_boundary ? "middle" : "dense";
    regimes << "| " << fmt(a.p) << " | " << regime << " | " << fmt(a.mean_v) << " | " << fmt(a.mean_e) << " | "
            << fmt(a.median_alpha) << " | " << fmt(a.median_ratio) << " | " << a.exact_trials << " |\n";
  }
}

std::string run_report(const std::vector<std::string>& files) {
  std::ostringstream md, regimes;
  md << "# Verification report\n\n| artifact | instance | statement | bound | computed | verdict |\n"
     << "|---|---|---|---|---|---|\n";
  for (const auto& path : files) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::Parse, "cannot read " + path);
    const auto name = std::filesystem::path(path).filename().string();
    if (path.size() > 4 && path.substr(path.size() - 4) == ".csv") {
      SweepTable t;
      t.records = read_sweep_csv(in);
      if (t.records.empty()) continue;
      t.r = t.records[0].r;
      t.q = t.records[0].q;
      t.seed = t.records[0].seed;
      std::map<double, std::size_t> per_p;
      for (const auto& rec : t.records) ++per_p[rec.p];
      for (const auto& [p, c] : per_p) t.grid.push_back(p);
      t.trials = per_p.begin()->second;
      std::stable_sort(t.records.begin(), t.records.end(), [](const auto& a, const auto& b) {
        return a.p < b.p || (a.p == b.p && a.trial < b.trial);
      });
      std::tie(t.sparse_boundary, t.dense_boundary) = regime_boundaries(t.r, t.q);
      t.aggregates = aggregate(t);
      bool deletion = true;
      for (const auto& rec : t.records) deletion = deletion && rec.alpha + rec.e >= rec.v;
      report_row(md, name, "PG(" + std::to_string(t.r) + "," + std::to_string(t.q) + ")", "deletion bound alpha >= v - e",
                 "every trial", std::to_string(t.records.size()) + " trials", verdict(deletion));
      report_sweep(regimes, t);
      continue;
    }
    json j;
    try {
      j = json::parse(in);
    } catch (const json::parse_error& e) {
      throw Error(Errc::Parse, path + ": " + e.what());
    }
    check_schema(j);
    const auto kind = j.at("kind").get<std::string>();
    const auto& r = j.at("result");
    const std::string inst = r.value("instance", "-");
    if (kind == "spectrum") {
      const auto cf = r.at("closed_form").get<ClosedFormParams>();
      report_row(md, name, inst, "closed-form (n, d, lambda)",
                 "(" + cf.n.str() + ", " + cf.d.str() + ", " + cf.lambda.str() + ")",
                 "(" + r.at("n").dump() + ", " + r.at("d").dump() + ", " + fmt(r.at("lambda_min").get<double>()) + ")",
                 verdict(r.at("match").get<bool>()));
    } else if (kind == "enumerate") {
      const auto alpha = r.at("alpha").get<std::size_t>();
      if (r.contains("dh_bound")) {
        const auto dh = rational_from_json(r.at("dh_bound"));
        report_row(md, name, inst, "alpha <= Delsarte-Hoffman", to_string(dh), std::to_string(alpha),
                   verdict(Rational(alpha) <= dh) + (Rational(alpha) == dh ? " (tight)" : ""));
      } else {
        report_row(md, name, inst, "maximum cap", "-", std::to_string(alpha), r.at("exact").get<bool>() ? "exact" : "lower bound");
      }
    } else if (kind == "count") {
      if (r.contains("series")) {
        bool ok = true;
        for (const auto& row : r.at("series")) ok = ok && row.value("holds", true);
        report_row(md, name, inst, "count <= C((1+g) alpha, m)", "every m", std::to_string(r.at("series").size()) + " sizes",
                   verdict(ok));
      } else {
        report_row(md, name, inst, "independent " + r.at("m").dump() + "-sets", "-", r.at("count").dump(), "-");
      }
    } else if (kind == "supersat") {
      const auto rep = r.at("report").get<SupersatReport>();
      report_row(md, name, inst, rep.statement + ", s=" + std::to_string(rep.s), to_string(rep.bound_value),
                 std::to_string(rep.min_observed), verdict(rep.holds));
    } else if (kind == "containers") {
      if (r.contains("verify")) {
        const auto v = r.at("verify").get<VerifyReport>();
        for (const auto& c : v.checks) report_row(md, name, inst, c.name, "-", c.detail, verdict(c.pass));
      }
      if (r.contains("gamma"))
        report_row(md, name, inst, "gamma-refined |C|", r.at("gamma").at("size_bound").dump(),
                   r.at("gamma").at("max_container").dump(), verdict(r.at("gamma").at("pass").get<bool>()));
      if (r.contains("st_certificate")) {
        const auto c = r.at("st_certificate").get<StCertificate>();
        report_row(md, name, inst, "codegree certificate tau < 1/2, LHS <= 1/288", "-",
                   "tau=" + fmt(c.tau) + ", LHS=" + fmt(c.lhs), verdict(c.pass()));
      }
    } else if (kind == "bound") {
      if (r.contains("dh_bound")) report_row(md, name, inst, "Delsarte-Hoffman bound", "-", r.at("dh_bound").dump(), "-");
      if (r.contains("triples_lower_bound"))
        report_row(md, name, inst, "triple supersaturation bound", "-", r.at("triples_lower_bound").dump(), "-");
    } else if (kind == "random-sweep") {
      report_sweep(regimes, sweep_from_sidecar(r));
    } else if (kind == "geom") {
      report_row(md, name, inst, "point count", r.value("points_closed_form", r.at("points")).dump(), r.at("points").dump(),
                 "-");
    } else if (kind == "graph") {
      report_row(md, name, inst, "vertices / edges", "-", r.at("n").dump() + " / " + r.at("edges").dump(), "-");
    } else {
      throw Error(Errc::Schema, path + ": unknown artifact kind '" + kind + "'");
    }
  }
  return md.str() + regimes.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fgcount: finite geometry workbench"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned threads = 0;
  std::string out_path;
  app.add_option("--threads", threads, "worker thread cap (0 = all cores)");
  app.add_option("--out,-o", out_path, "output file (default stdout)");
  app.set_config("--config", "", "JSON config file");
  app.allow_config_extras(CLI::config_extras_mode::error);

  InstanceOpts iopt;
  auto* geom = app.add_subcommand("geom", "point and subspace counts");
  add_instance_opts(geom, iopt);

  std::string adjacency;
  auto* graph = app.add_subcommand("graph", "build a graph or hypergraph");
  add_instance_opts(graph, iopt);
  graph->add_option("--adjacency", adjacency, "write the binary adjacency cache here");

  auto* spec = app.add_subcommand("spectrum", "eigenvalues against the closed forms");
  add_instance_opts(spec, iopt);

  BoundOpts bopt;
  auto* bound = app.add_subcommand("bound", "closed-form bounds");
  add_instance_opts(bound, iopt);
  bound->add_option("--threshold", bopt.threshold, "ovoid|ekr|linespread|planespread|generic");
  bound->add_option("--triples", bopt.triples, "set size for the triple supersaturation bound");
  bound->add_option("--form", bopt.form, "k|cubic")->check(CLI::IsMember({"k", "cubic"}));
  bound->add_option("--plane-pairs", bopt.plane_pairs, "epsilon for the plane-pair bound");

  std::uint64_t budget = 100'000'000;
  bool use_dh = false;
  auto* enumerate = app.add_subcommand("enumerate", "exact maximum independent set or cap");
  add_instance_opts(enumerate, iopt);
  enumerate->add_option("--budget", budget, "node budget");
  enumerate->add_flag("--use-dh-bound", use_dh, "stop once the Delsarte-Hoffman bound is reached");

  CountOpts copt;
  auto* count = app.add_subcommand("count", "count independent sets or caps of size m");
  add_instance_opts(count, iopt);
  count->add_option("--m", copt.m, "set size");
  count->add_option("--m-max", copt.m_max, "count every size 1..m-max and compare with the binomial bound");
  count->add_option("--budget", copt.budget, "node budget");
  count->add_option("--bound-alpha", copt.bound_alpha, "alpha in C((1+gamma) alpha, m) (default: vertex count)");
  count->add_option("--gamma", copt.gamma, "gamma in C((1+gamma) alpha, m)");

  std::uint64_t s = 0, trials = 0, seed = 1;
  bool exact = false;
  auto* supersat = app.add_subcommand("supersat", "minimum induced edges against the lemmas");
  add_instance_opts(supersat, iopt);
  supersat->add_option("--s", s, "subset size")->required();
  supersat->add_flag("--exact", exact, "enumerate all subsets");
  supersat->add_option("--trials", trials, "sampled subsets");
  supersat->add_option("--seed", seed, "sampling seed");

  ContainerOpts kopt;
  auto* containers = app.add_subcommand("containers", "build and verify container families");
  add_instance_opts(containers, iopt);
  containers->add_option("--epsilon", kopt.epsilon, "graph containers: epsilon as a rational");
  containers->add_option("--gamma", kopt.gamma, "hypergraph: gamma refinement as a rational");
  containers->add_option("--e0", kopt.e0, "hypergraph: edge target (default 4 [r]^2)");
  containers->add_option("--verify-with", kopt.verify_with, "maximal | caps | sampled:N");
  containers->add_option("--cap-size", kopt.cap_size, "hypergraph: cover every cap of this size");
  containers->add_option("--size-cap", kopt.size_cap, "hypergraph: assert |C| <= this");
  containers->add_option("--family-out", kopt.family_out, "write the family as JSON lines");
  containers->add_option("--seed", kopt.seed, "seed for sampled verification");
  containers->add_flag("--certificate-only", kopt.certificate_only, "closed-form certificate and bookkeeping only");

  SweepOpts sopt;
  auto* rsweep = app.add_subcommand("random-sweep", "p-random subsets of PG(r,q)");
  rsweep->add_option("--r", sopt.r, "projective dimension");
  rsweep->add_option("--q", sopt.q, "field order")->required();
  rsweep->add_option("--pmin", sopt.pmin, "smallest p (default q^-r)");
  rsweep->add_option("--pmax", sopt.pmax, "largest p");
  rsweep->add_option("--points", sopt.points, "number of log-spaced p values");
  rsweep->add_option("--trials", sopt.trials, "trials per p");
  rsweep->add_option("--seed", sopt.seed, "seed");
  rsweep->add_option("--budget", sopt.budget, "branch-and-bound nodes per exact measurement");
  rsweep->add_option("--prefix", sopt.out, "write PREFIX.csv and PREFIX.json");
  rsweep->add_flag("--no-timing", sopt.no_timing, "write elapsed_ms as 0 for byte-stable output");

  std::vector<std::string> artifacts;
  auto* report = app.add_subcommand("report", "markdown summary of JSON/CSV artifacts");
  report->add_option("artifacts", artifacts, "artifact files")->required()->check(CLI::ExistingFile);

  std::string active;
  for (int i = 1; i < argc; ++i)
    for (const auto* sub : app.get_subcommands({}))
      if (sub->get_name() == argv[i] && active.empty()) active = argv[i];
  app.config_formatter(std::make_shared<JsonConfig>(std::set<std::string>{"threads", "out"}, active));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  thread_limit() = threads;
  const Output out{out_path};
  try {
    if (*geom) out.write(run_geom(resolve(iopt)));
    else if (*graph) out.write(run_graph(resolve(iopt), adjacency));
    else if (*spec) out.write(run_spectrum(resolve(iopt)));
    else if (*bound) out.write(run_bound(resolve(iopt), bopt));
    else if (*enumerate) out.write(run_enumerate(resolve(iopt), budget, use_dh));
    else if (*count) out.write(run_count(resolve(iopt), copt));
    else if (*supersat) out.write(run_supersat(resolve(iopt), s, exact, trials, seed));
    else if (*containers) out.write(run_containers(resolve(iopt), kopt));
    else if (*rsweep) {
      if (sopt.out.empty() && !out_path.empty()) sopt.out = out_path;
      run_sweep(sopt);
    } else if (*report) out.write(run_report(artifacts));
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GuardExit& e) {
    out.write(e.payload);
    std::cerr << e.what() << "\n";
    return kExitGuard;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_guard() ? kExitGuard : kExitUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
