#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "json.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(FGCOUNT_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch() {
  const auto dir = fs::temp_directory_path() / "fgcount_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("spectrum of W(3,2)") {
  const auto r = run("spectrum --family symplectic --rank 2 --q 2");
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["schema_version"] == "1.0");
  CHECK(j["result"]["n"] == 15);
  CHECK(j["result"]["d"] == 6);
  CHECK(j["result"]["lambda_min"].get<double>() == doctest::Approx(-3).epsilon(1e-9));
  CHECK(j["result"]["match"] == true);
}

TEST_CASE("count caps of size 3 in PG(2,3)") {
  const auto r = run("count --geometry pg --r 2 --q 3 --object cap --m 3");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["result"]["count"] == 234);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run("spectrum --q 6").code == 1);
  CHECK(run("").code == 1);
  CHECK(run("frobnicate").code == 1);
  CHECK(run("spectrum -i 'W(3,2)' --no-such-flag").code == 1);
  CHECK(run("spectrum -i 'X(3,2)'").code == 1);
}

TEST_CASE("guards and timeouts exit 2 and still write the result") {
  const auto r = run("enumerate -i 'Q(4,3)' --budget 3");
  CHECK(r.code == 2);
  const auto j = json::parse(r.out);
  CHECK(j["result"]["solve"]["timeout"] == true);
  CHECK(run("enumerate -i 'Q(4,3)'").code == 0);
}

TEST_CASE("geometry counts and output file") {
  const auto out = scratch() / "geom.json";
  fs::remove(out);
  REQUIRE(run("--out " + out.string() + " geom -i 'PG(3,2)'").code == 0);
  const auto j = json::parse(slurp(out));
  CHECK(j["result"]["points"] == 15);
  CHECK(j["result"]["lines"] == 35);
}

TEST_CASE("JSON config") {
  const auto cfg = scratch() / "cfg.json";
  {
    std::ofstream(cfg) << R"j({"threads": 1, "count": {"instance": "PG(2,3)", "m": 2}})j";
  }
  const auto r = run("--config " + cfg.string() + " count");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["result"]["count"] == 78);
  {
    std::ofstream(cfg) << R"j({"count": {"instance": "PG(2,3)", "m": 2, "colour": "red"}})j";
  }
  CHECK(run("--config " + cfg.string() + " count").code == 1);
}

TEST_CASE("random sweep output is independent of the thread count") {
  const auto dir = scratch();
  const std::string common = " random-sweep --r 2 --q 5 --pmin 0.05 --pmax 1 --points 5 --trials 4 --seed 3 --no-timing";
  REQUIRE(run("--threads 1" + common + " --prefix " + (dir / "a").string()).code == 0);
  REQUIRE(run("--threads 3" + common + " --prefix " + (dir / "b").string()).code == 0);
  const auto a = slurp(dir / "a.csv");
  CHECK(a == slurp(dir / "b.csv"));
  CHECK(a.rfind("r,q,p,seed,trial,v,e,alpha,alpha_kind,elapsed_ms\n", 0) == 0);
  const auto side = json::parse(slurp(dir / "a.json"));
  CHECK(side["schema_version"] == "1.0");
  CHECK(side["result"].contains("boundaries"));

  const auto rep = run("report " + (dir / "a.json").string() + " " + (dir / "a.csv").string());
  CHECK(rep.code == 0);
  CHECK(rep.out.find('|') != std::string::npos);
}

TEST_CASE("containers certificate") {
  const auto r = run("containers -i 'PG(3,23)' --certificate-only");
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["result"]["st_certificate"]["tau_ok"] == true);
}
