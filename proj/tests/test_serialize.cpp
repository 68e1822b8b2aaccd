#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fg/field.hpp"
#include "fg/geom_graphs.hpp"
#include "fg/instance.hpp"
#include "fg/serialize.hpp"

#include "test_util.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace fg;
using fg::test::code_of;

namespace {

template <class T>
T round_trip(const T& x) {
  const json j = x;
  return json::parse(j.dump()).get<T>();
}

}  // namespace

TEST_CASE("result types survive a JSON round trip") {
  const auto g = instance_graph(parse_instance("W(3,2)"));
  CHECK(round_trip(g.meta) == g.meta);
  const auto spec = spectrum(g);
  CHECK(round_trip(spec) == spec);
  const auto cf = closed_form_params(GraphKind::Oppositeness, 2, TypeExponent{2}, 2);
  CHECK(round_trip(cf) == cf);

  SolveResult sr{5, {0, 3, 7, 9, 12}, 77, 1.25, false, true};
  CHECK(round_trip(sr) == sr);
  CountResult big{40, BigInt("123456789012345678901234567890"), 9};
  CHECK(round_trip(big) == big);
  CHECK(json(big)["count"].is_string());
  CHECK(json(CountResult{3, 234, 1})["count"] == 234);
  MinEdgesResult me{6, 4, {0, 1, 2, 3, 4, 5}, true, 12};
  CHECK(round_trip(me) == me);
  SupersatReport rep{"PG(2,2)", "k-form", 6, Rational(24, 5), 4, true, 0, false};
  CHECK(round_trip(rep) == rep);
  CHECK(json(rep)["bound_value"] == "24/5");

  VerifyReport vr{{{"coverage", true, "ok"}, {"|C| <= 26", false, "max 40"}}};
  CHECK(round_trip(vr) == vr);
  const auto cert = st_certificate(3, 23);
  CHECK(round_trip(cert) == cert);
  const auto book = st_bookkeeping(16120, 3844, 3, 5);
  CHECK(round_trip(book) == book);
  TrialRecord tr{3, 31, 1e-3, 1, 2, 30, 0, 30, AlphaKind::Exact, 0.5};
  CHECK(round_trip(tr) == tr);
  SweepAggregate ag{0.1, 12.5, 10, 15, 13.2, 0.4, 0.97, 1.3, 50};
  CHECK(round_trip(ag) == ag);
}

TEST_CASE("numbers and rationals") {
  CHECK(to_json_value(BigInt(-7)) == -7);
  CHECK(big_from_json(json("99999999999999999999")) == BigInt("99999999999999999999"));
  CHECK(rational_from_json(json("-3/4")) == Rational(-3, 4));
  CHECK(rational_from_json(json(5)) == 5);
  CHECK(code_of([] { rational_from_json(json("1/x")); }) == Errc::Parse);
}

TEST_CASE("schema version handling") {
  auto e = envelope("spectrum", json{{"n", 15}});
  CHECK(e["schema_version"] == kSchemaVersion);
  CHECK(e["kind"] == "spectrum");
  check_schema(e);
  e["schema_version"] = "1.7";
  check_schema(e);
  e["schema_version"] = "2.0";
  CHECK(code_of([&] { check_schema(e); }) == Errc::Schema);
  e.erase("schema_version");
  CHECK(code_of([&] { check_schema(e); }) == Errc::Schema);
}

TEST_CASE("sweep sidecar") {
  const auto t = sweep(2, 3, GridSpec{0.2, 1, 3}, 2, 5);
  const auto j = sweep_sidecar(t);
  CHECK(j["csv_header"] == kSweepCsvHeader);
  CHECK(j["boundaries"]["sparse"].get<double>() == t.sparse_boundary);
  const auto back = sweep_from_sidecar(json::parse(j.dump()));
  CHECK(back.grid == t.grid);
  CHECK(back.aggregates == t.aggregates);
  CHECK(back.seed == 5);
  CHECK(back.records.empty());
}

TEST_CASE("container family JSON lines") {
  ContainerFamily fam;
  fam.entries[{1, 4}] = {1, 2, 4, 8};
  fam.entries[{}] = {0, 1, 2};
  std::ostringstream os;
  write_family_jsonl(fam, os, [](const VertexList& c) { return c.size(); });
  std::istringstream is(os.str());
  CHECK(read_family_jsonl(is).entries == fam.entries);
  std::size_t lines = 0;
  std::istringstream again(os.str());
  for (std::string line; std::getline(again, line); ++lines) CHECK(json::parse(line).contains("edges"));
  CHECK(lines == 2);
}

TEST_CASE("binary caches") {
  const auto g = instance_graph(parse_instance("Q(4,3)"));
  std::stringstream ss;
  write_graph_binary(g, ss);
  const auto bytes = ss.str();
  CHECK(bytes.substr(0, 8) == std::string("FGGRAPH\0", 8));
  const auto back = read_graph_binary(ss);
  CHECK(back.rows() == g.rows());
  CHECK(back.meta == g.meta);

  std::string bad = bytes;
  bad[0] = 'X';
  std::istringstream bs(bad);
  CHECK(code_of([&] { read_graph_binary(bs); }) == Errc::Parse);
  std::istringstream cut(bytes.substr(0, bytes.size() / 2));
  CHECK(code_of([&] { read_graph_binary(cut); }) == Errc::Parse);

  const auto h = cap_hypergraph(build_pg(3, make_field(3, 1)));
  std::stringstream hs;
  write_hypergraph_binary(h, hs);
  const auto hb = read_hypergraph_binary(hs);
  CHECK(hb.size() == h.size());
  CHECK(hb.edge_count() == h.edge_count());
  CHECK(hb.edges() == h.edges());
}

TEST_CASE("graph cache directory") {
  const auto dir = std::filesystem::temp_directory_path() / "fg_cache_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  ::setenv("FG_CACHE_DIR", dir.c_str(), 1);
  int builds = 0;
  auto build = [&] {
    ++builds;
    return instance_graph(parse_instance("W(3,2)"));
  };
  const auto a = cached_graph("w32", build);
  const auto b = cached_graph("w32", build);
  CHECK(builds == 1);
  CHECK(a.rows() == b.rows());
  CHECK(std::filesystem::exists(dir / "w32.graph"));
  ::unsetenv("FG_CACHE_DIR");
  CHECK_FALSE(cache_dir());
  std::filesystem::remove_all(dir);
}
