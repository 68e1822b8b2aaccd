#pragma once

#include "fg/containers.hpp"
#include "fg/enumerate.hpp"
#include "fg/graph.hpp"
#include "fg/random_caps.hpp"
#include "fg/spectra.hpp"
#include "fg/supersat.hpp"

#include <filesystem>
#include <functional>
#include <iosfwd>
#include "json.hpp"
#include <optional>
#include <string>

namespace fg {

using json = nlohmann::json;

inline constexpr int kSchemaMajor = 1;
inline constexpr const char* kSchemaVersion = "1.0";

/// {"schema_version", "kind", "result"} plus whatever else the caller adds.
json envelope(const std::string& kind, json result);
/// Schema error when the version is missing, malformed or of a newer major.
void check_schema(const json& j);

// Integers outside int64 travel as decimal strings, rationals as "a/b".
json to_json_value(const BigInt& x);
json to_json_value(const Rational& x);
BigInt big_from_json(const json& j);
Rational rational_from_json(const json& j);

void to_json(json& j, const GraphMeta& m);
void from_json(const json& j, GraphMeta& m);
void to_json(json& j, const SpectralSummary& s);
void from_json(const json& j, SpectralSummary& s);
void to_json(json& j, const ClosedFormParams& c);
void from_json(const json& j, ClosedFormParams& c);
void to_json(json& j, const SolveResult& r);
void from_json(const json& j, SolveResult& r);
void to_json(json& j, const CountResult& r);
void from_json(const json& j, CountResult& r);
void to_json(json& j, const MinEdgesResult& r);
void from_json(const json& j, MinEdgesResult& r);
void to_json(json& j, const SupersatReport& r);
void from_json(const json& j, SupersatReport& r);
void to_json(json& j, const ContainerCheck& c);
void from_json(const json& j, ContainerCheck& c);
void to_json(json& j, const VerifyReport& r);
void from_json(const json& j, VerifyReport& r);
void to_json(json& j, const StCertificate& c);
void from_json(const json& j, StCertificate& c);
void to_json(json& j, const StBookkeeping& b);
void from_json(const json& j, StBookkeeping& b);
void to_json(json& j, const TrialRecord& r);
void from_json(const json& j, TrialRecord& r);
void to_json(json& j, const SweepAggregate& a);
void from_json(const json& j, SweepAggregate& a);

/// Sweep metadata, aggregates and regime boundaries (records live in the CSV).
json sweep_sidecar(const SweepTable& t);
/// Rebuilds everything but the records.
SweepTable sweep_from_sidecar(const json& j);

/// One JSON object per line: fingerprint, container, edge count (the count is
/// supplied by the caller since it depends on the graph or hypergraph).
void write_family_jsonl(const ContainerFamily& fam, std::ostream& os,
                        const std::function<std::uint64_t(const VertexList&)>& edges);
ContainerFamily read_family_jsonl(std::istream& is);

// Binary caches: 8-byte magic, uint32 version, then little-endian payload.
void write_graph_binary(const DenseGraph& g, std::ostream& os);
DenseGraph read_graph_binary(std::istream& is);
void write_hypergraph_binary(const TripleHypergraph& h, std::ostream& os);
/// The result has no pg attached.
TripleHypergraph read_hypergraph_binary(std::istream& is);

/// Directory named by FG_CACHE_DIR, if set.
std::optional<std::filesystem::path> cache_dir();
/// Loads key.graph from the cache directory or builds and stores it.
DenseGraph cached_graph(const std::string& key, const std::function<DenseGraph()>& build);

}  // namespace fg
