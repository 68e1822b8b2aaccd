#include "fg/serialize.hpp"

#include "fg/error.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

namespace fg {

json envelope(const std::string& kind, json result) {
  return json{{"schema_version", kSchemaVersion}, {"kind", kind}, {"result", std::move(result)}};
}

void check_schema(const json& j) {
  require(j.is_object() && j.contains("schema_version") && j["schema_version"].is_string(), Errc::Schema,
          "missing schema_version");
  const auto v = j["schema_version"].get<std::string>();
  const auto dot = v.find('.');
  int major = 0;
  try {
    major = std::stoi(v.substr(0, dot));
  } catch (const std::logic_error&) {
    throw Error(Errc::Schema, "malformed schema_version '" + v + "'");
  }
  require(major <= kSchemaMajor, Errc::Schema, "schema_version " + v + " is newer than this reader");
}

json to_json_value(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return x.str();
}
json to_json_value(const Rational& x) { return to_string(x); }

BigInt big_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  try {
    return BigInt(j.get<std::string>());
  } catch (const std::exception&) {
    throw Error(Errc::Parse, "expected an integer, got " + j.dump());
  }
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  const auto s = j.get<std::string>();
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw Error(Errc::Parse, "expected a rational, got '" + s + "'");
  }
}

void to_json(json& j, const GraphMeta& m) {
  j = {{"kind", m.kind}, {"family", m.family}, {"r", m.r}, {"t_twice", m.t_twice}, {"p", m.p}, {"e", m.e}};
}
void from_json(const json& j, GraphMeta& m) {
  j.at("kind").get_to(m.kind);
  j.at("family").get_to(m.family);
  j.at("r").get_to(m.r);
  j.at("t_twice").get_to(m.t_twice);
  j.at("p").get_to(m.p);
  j.at("e").get_to(m.e);
}

void to_json(json& j, const SpectralSummary& s) {
  json spec = json::array();
  for (const auto& [v, m] : s.spectrum) spec.push_back({v, m});
  j = {{"n", s.n},
       {"d", s.d ? json(*s.d) : json(nullptr)},
       {"lambda_min", s.lambda_min},
       {"lambda2", s.lambda2},
       {"eigenvalues", s.eigenvalues},
       {"spectrum", spec},
       {"max_residual", s.max_residual},
       {"trace_error", s.trace_error},
       {"frobenius_error", s.frobenius_error}};
}
void from_json(const json& j, SpectralSummary& s) {
  j.at("n").get_to(s.n);
  s.d = j.at("d").is_null() ? std::nullopt : std::optional<std::size_t>(j.at("d").get<std::size_t>());
  j.at("lambda_min").get_to(s.lambda_min);
  j.at("lambda2").get_to(s.lambda2);
  j.at("eigenvalues").get_to(s.eigenvalues);
  s.spectrum.clear();
  for (const auto& e : j.at("spectrum")) s.spectrum.emplace_back(e.at(0).get<double>(), e.at(1).get<std::size_t>());
  j.at("max_residual").get_to(s.max_residual);
  j.at("trace_error").get_to(s.trace_error);
  j.at("frobenius_error").get_to(s.frobenius_error);
}

void to_json(json& j, const ClosedFormParams& c) {
  json cands = json::array();
  for (const auto& x : c.lambda_candidates) cands.push_back(to_json_value(x));
  j = {{"kind", kind_name(c.kind)},
       {"n", to_json_value(c.n)},
       {"d", to_json_value(c.d)},
       {"lambda", to_json_value(c.lambda)},
       {"lambda_candidates", cands},
       {"lambda_ambiguous", c.lambda_ambiguous}};
}
void from_json(const json& j, ClosedFormParams& c) {
  c.kind = parse_kind(j.at("kind").get<std::string>());
  c.n = big_from_json(j.at("n"));
  c.d = big_from_json(j.at("d"));
  c.lambda = big_from_json(j.at("lambda"));
  c.lambda_candidates.clear();
  for (const auto& x : j.at("lambda_candidates")) c.lambda_candidates.push_back(big_from_json(x));
  j.at("lambda_ambiguous").get_to(c.lambda_ambiguous);
}

void to_json(json& j, const SolveResult& r) {
  j = {{"alpha", r.alpha},     {"witness", r.witness}, {"nodes", r.nodes},
       {"elapsed_ms", r.elapsed_ms}, {"timeout", r.timeout}, {"stopped_at_bound", r.stopped_at_bound}};
}
void from_json(const json& j, SolveResult& r) {
  j.at("alpha").get_to(r.alpha);
  j.at("witness").get_to(r.witness);
  j.at("nodes").get_to(r.nodes);
  j.at("elapsed_ms").get_to(r.elapsed_ms);
  j.at("timeout").get_to(r.timeout);
  j.at("stopped_at_bound").get_to(r.stopped_at_bound);
}

void to_json(json& j, const CountResult& r) {
  j = {{"m", r.m}, {"count", to_json_value(r.count)}, {"nodes", r.nodes}};
}
void from_json(const json& j, CountResult& r) {
  j.at("m").get_to(r.m);
  r.count = big_from_json(j.at("count"));
  j.at("nodes").get_to(r.nodes);
}

void to_json(json& j, const MinEdgesResult& r) {
  j = {{"s", r.s}, {"min_edges", r.min_edges}, {"witness", r.witness}, {"exact", r.exact}, {"trials", r.trials}};
}
void from_json(const json& j, MinEdgesResult& r) {
  j.at("s").get_to(r.s);
  j.at("min_edges").get_to(r.min_edges);
  j.at("witness").get_to(r.witness);
  j.at("exact").get_to(r.exact);
  j.at("trials").get_to(r.trials);
}

void to_json(json& j, const SupersatReport& r) {
  j = {{"instance", r.instance},
       {"statement", r.statement},
       {"s", r.s},
       {"bound_value", to_json_value(r.bound_value)},
       {"min_observed", r.min_observed},
       {"exact", r.exact},
       {"trials", r.trials},
       {"holds", r.holds}};
}
void from_json(const json& j, SupersatReport& r) {
  j.at("instance").get_to(r.instance);
  j.at("statement").get_to(r.statement);
  j.at("s").get_to(r.s);
  r.bound_value = rational_from_json(j.at("bound_value"));
  j.at("min_observed").get_to(r.min_observed);
  j.at("exact").get_to(r.exact);
  j.at("trials").get_to(r.trials);
  j.at("holds").get_to(r.holds);
}

void to_json(json& j, const ContainerCheck& c) { j = {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}}; }
void from_json(const json& j, ContainerCheck& c) {
  j.at("name").get_to(c.name);
  j.at("pass").get_to(c.pass);
  j.at("detail").get_to(c.detail);
}

void to_json(json& j, const VerifyReport& r) { j = {{"pass", r.pass()}, {"checks", r.checks}}; }
void from_json(const json& j, VerifyReport& r) { j.at("checks").get_to(r.checks); }

void to_json(json& j, const StCertificate& c) {
  j = {{"r", c.r},     {"q", c.q},           {"u", c.u},           {"m", c.m},
       {"tau", c.tau}, {"lhs", c.lhs},       {"tau_ok", c.tau_ok}, {"lhs_ok", c.lhs_ok},
       {"pass", c.pass()}};
}
void from_json(const json& j, StCertificate& c) {
  j.at("r").get_to(c.r);
  j.at("q").get_to(c.q);
  j.at("u").get_to(c.u);
  j.at("m").get_to(c.m);
  j.at("tau").get_to(c.tau);
  j.at("lhs").get_to(c.lhs);
  j.at("tau_ok").get_to(c.tau_ok);
  j.at("lhs_ok").get_to(c.lhs_ok);
}

void to_json(json& j, const StBookkeeping& b) {
  j = {{"s", b.s},
       {"m_schedule", b.m_schedule},
       {"f_schedule", b.f_schedule},
       {"f_sum", b.f_sum},
       {"tau_star", b.tau_star},
       {"fingerprint_cap", b.fingerprint_cap},
       {"count_cap", b.count_cap}};
}
void from_json(const json& j, StBookkeeping& b) {
  j.at("s").get_to(b.s);
  j.at("m_schedule").get_to(b.m_schedule);
  j.at("f_schedule").get_to(b.f_schedule);
  j.at("f_sum").get_to(b.f_sum);
  j.at("tau_star").get_to(b.tau_star);
  j.at("fingerprint_cap").get_to(b.fingerprint_cap);
  j.at("count_cap").get_to(b.count_cap);
}

void to_json(json& j, const TrialRecord& r) {
  j = {{"r", r.r},         {"q", r.q},         {"p", r.p},         {"seed", r.seed},
       {"trial", r.trial}, {"v", r.v},         {"e", r.e},         {"alpha", r.alpha},
       {"alpha_kind", alpha_kind_name(r.kind)}, {"elapsed_ms", r.elapsed_ms}};
}
void from_json(const json& j, TrialRecord& r) {
  j.at("r").get_to(r.r);
  j.at("q").get_to(r.q);
  j.at("p").get_to(r.p);
  j.at("seed").get_to(r.seed);
  j.at("trial").get_to(r.trial);
  j.at("v").get_to(r.v);
  j.at("e").get_to(r.e);
  j.at("alpha").get_to(r.alpha);
  r.kind = parse_alpha_kind(j.at("alpha_kind").get<std::string>());
  j.at("elapsed_ms").get_to(r.elapsed_ms);
}

void to_json(json& j, const SweepAggregate& a) {
  j = {{"p", a.p},
       {"median_alpha", a.median_alpha},
       {"min_alpha", a.min_alpha},
       {"max_alpha", a.max_alpha},
       {"mean_v", a.mean_v},
       {"mean_e", a.mean_e},
       {"median_ratio", a.median_ratio},
       {"middle_ratio", a.middle_ratio},
       {"exact_trials", a.exact_trials}};
}
void from_json(const json& j, SweepAggregate& a) {
  j.at("p").get_to(a.p);
  j.at("median_alpha").get_to(a.median_alpha);
  j.at("min_alpha").get_to(a.min_alpha);
  j.at("max_alpha").get_to(a.max_alpha);
  j.at("mean_v").get_to(a.mean_v);
  j.at("mean_e").get_to(a.mean_e);
  j.at("median_ratio").get_to(a.median_ratio);
  j.at("middle_ratio").get_to(a.middle_ratio);
  j.at("exact_trials").get_to(a.exact_trials);
}

json sweep_sidecar(const SweepTable& t) {
  return {{"r", t.r},
          {"q", t.q},
          {"seed", t.seed},
          {"trials", t.trials},
          {"budget", t.budget},
          {"grid", t.grid},
          {"aggregates", t.aggregates},
          {"boundaries", {{"sparse", t.sparse_boundary}, {"dense", t.dense_boundary}}},
          {"sparse_cut", std::pow(static_cast<double>(t.q), -2.25)},
          {"csv_header", kSweepCsvHeader}};
}

SweepTable sweep_from_sidecar(const json& j) {
  SweepTable t;
  j.at("r").get_to(t.r);
  j.at("q").get_to(t.q);
  j.at("seed").get_to(t.seed);
  j.at("trials").get_to(t.trials);
  j.at("budget").get_to(t.budget);
  j.at("grid").get_to(t.grid);
  j.at("aggregates").get_to(t.aggregates);
  j.at("boundaries").at("sparse").get_to(t.sparse_boundary);
  j.at("boundaries").at("dense").get_to(t.dense_boundary);
  return t;
}

void write_family_jsonl(const ContainerFamily& fam, std::ostream& os,
                        const std::function<std::uint64_t(const VertexList&)>& edges) {
  for (const auto& [f, c] : fam.entries)
    os << json{{"fingerprint", f}, {"container", c}, {"edges", edges(c)}}.dump() << '\n';
}

ContainerFamily read_family_jsonl(std::istream& is) {
  ContainerFamily fam;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw Error(Errc::Parse, e.what());
    }
    fam.entries.emplace(j.at("fingerprint").get<VertexList>(), j.at("container").get<VertexList>());
  }
  return fam;
}

namespace {

constexpr std::array<char, 8> kGraphMagic{'F', 'G', 'G', 'R', 'A', 'P', 'H', '\0'};
constexpr std::array<char, 8> kHyperMagic{'F', 'G', 'H', 'Y', 'P', 'E', 'R', '\0'};
constexpr std::uint32_t kBinaryVersion = 1;

template <class T>
void put(std::ostream& os, T x) {
  unsigned char b[sizeof(T)];
  for (std::size_t i = 0; i < sizeof(T); ++i) b[i] = static_cast<unsigned char>(static_cast<std::uint64_t>(x) >> (8 * i));
  os.write(reinterpret_cast<const char*>(b), sizeof(T));
}

template <class T>
T get(std::istream& is) {
  unsigned char b[sizeof(T)];
  is.read(reinterpret_cast<char*>(b), sizeof(T));
  require(static_cast<bool>(is), Errc::Parse, "truncated binary cache");
  std::uint64_t x = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) x |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return static_cast<T>(x);
}

void put_header(std::ostream& os, const std::array<char, 8>& magic) {
  os.write(magic.data(), 8);
  put<std::uint32_t>(os, kBinaryVersion);
}

void check_header(std::istream& is, const std::array<char, 8>& magic) {
  std::array<char, 8> m{};
  is.read(m.data(), 8);
  require(static_cast<bool>(is) && m == magic, Errc::Parse, "bad cache magic");
  require(get<std::uint32_t>(is) == kBinaryVersion, Errc::Schema, "unsupported cache version");
}

}  // namespace

void write_graph_binary(const DenseGraph& g, std::ostream& os) {
  put_header(os, kGraphMagic);
  const auto meta = json(g.meta).dump();
  put<std::uint64_t>(os, meta.size());
  os.write(meta.data(), static_cast<std::streamsize>(meta.size()));
  put<std::uint64_t>(os, g.size());
  for (const auto& row : g.rows())
    for (auto w : row.words()) put<std::uint64_t>(os, w);
}

DenseGraph read_graph_binary(std::istream& is) {
  check_header(is, kGraphMagic);
  const auto len = get<std::uint64_t>(is);
  require(len < (1u << 20), Errc::Parse, "oversized graph metadata");
  std::string meta(len, '\0');
  is.read(meta.data(), static_cast<std::streamsize>(len));
  const auto n = get<std::uint64_t>(is);
  require(n <= 1'000'000, Errc::Parse, "oversized graph");
  std::vector<Bitset> rows(n, Bitset(n));
  for (auto& row : rows)
    for (auto& w : row.words()) w = get<std::uint64_t>(is);
  return DenseGraph::from_rows(std::move(rows), json::parse(meta).get<GraphMeta>());
}

void write_hypergraph_binary(const TripleHypergraph& h, std::ostream& os) {
  put_header(os, kHyperMagic);
  put<std::uint64_t>(os, h.size());
  put<std::uint64_t>(os, h.block_count());
  for (std::size_t b = 0; b < h.block_count(); ++b) {
    put<std::uint32_t>(os, static_cast<std::uint32_t>(h.block(b).size()));
    for (auto v : h.block(b)) put<std::uint32_t>(os, v);
  }
}

TripleHypergraph read_hypergraph_binary(std::istream& is) {
  check_header(is, kHyperMagic);
  const auto n = get<std::uint64_t>(is);
  const auto nb = get<std::uint64_t>(is);
  require(n <= 1'000'000 && nb <= 100'000'000, Errc::Parse, "oversized hypergraph");
  std::vector<std::vector<std::uint32_t>> blocks(nb);
  for (auto& b : blocks) {
    b.resize(get<std::uint32_t>(is));
    for (auto& v : b) v = get<std::uint32_t>(is);
  }
  return TripleHypergraph(n, std::move(blocks));
}

std::optional<std::filesystem::path> cache_dir() {
  const char* d = std::getenv("FG_CACHE_DIR");
  if (!d || !*d) return std::nullopt;
  return std::filesystem::path(d);
}

DenseGraph cached_graph(const std::string& key, const std::function<DenseGraph()>& build) {
  const auto dir = cache_dir();
  if (!dir) return build();
  const auto path = *dir / (key + ".graph");
  if (std::ifstream in(path, std::ios::binary); in) {
    try {
      return read_graph_binary(in);
    } catch (const Error&) {
      // stale or corrupt entry: rebuild below
    }
  }
  auto g = build();
  std::filesystem::create_directories(*dir);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    write_graph_binary(g, out);
  }
  std::filesystem::rename(tmp, path);
  return g;
}

}  // namespace fg
