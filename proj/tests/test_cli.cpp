#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <string>
#include <vector>

#include "json.hpp"

#include "platjones/cli.hpp"

using namespace platjones::cli;
using nlohmann::json;

namespace {

const std::string kTrefoil = "strands=4 colors=1/2,1/2,1/2,1/2 word=2 2 2";

RunResult call(std::vector<std::string> args) { return run_args(args); }

json parsed(const RunResult& r) { return json::parse(r.output); }

}  // namespace

TEST_CASE("circuit-info reports the register size and gate counts") {
  const auto r = call({"--mode", "circuit-info", "--k", "3", "--braid",
                       "strands=6 colors=1/2,1/2,1/2,1/2,1/2,1/2 word=2"});
  REQUIRE(r.exit_code == kExitOk);
  const json j = parsed(r);
  CHECK(j["register_qubits"] == 18);
  CHECK(j["register_qubits"] == j["expected_register_qubits"]);
  CHECK(j["moves_per_duality"] == j["expected_moves_per_duality"]);
  CHECK(j["gates"]["q6j"] == 8);
  CHECK(j["gates"]["phase"] == 1);
}

TEST_CASE("exact mode on the trivial two-strand plat") {
  const auto r = call({"--mode", "exact", "--k", "2", "--braid", "strands=2 colors=1/2,1/2 word="});
  REQUIRE(r.exit_code == kExitOk);
  CHECK(parsed(r)["value"]["abs"].get<double>() == doctest::Approx(1.41421356237).epsilon(1e-9));
}

TEST_CASE("compare agrees with the bracket on the trefoil") {
  const auto r = call({"--mode", "compare", "--k", "3", "--braid", kTrefoil});
  REQUIRE(r.exit_code == kExitOk);
  const json j = parsed(r);
  CHECK(j["pass"] == true);
  CHECK(j["difference"].get<double>() < 1e-9);
}

TEST_CASE("sampled output is reproducible for a fixed seed") {
  const std::vector<std::string> args{"--mode", "sampled", "--k", "3", "--braid", kTrefoil,
                                      "--delta", "0.3", "--seed", "11"};
  const auto a = call(args);
  const auto b = call(args);
  REQUIRE(a.exit_code == kExitOk);
  CHECK(a.output == b.output);
  auto other = args;
  other.back() = "12";
  CHECK(call(other).output != a.output);
}

TEST_CASE("sampled trials report a success rate") {
  const auto r = call({"--mode", "sampled", "--k", "3", "--braid", kTrefoil, "--delta", "0.5", "--seed", "3",
                       "--trials", "5"});
  REQUIRE(r.exit_code == kExitOk);
  const json j = parsed(r);
  CHECK(j["trials"].size() == 5);
  CHECK(j["success_rate"].get<double>() >= 0.0);
  CHECK(j["success_rate"].get<double>() <= 1.0);
}

TEST_CASE("csv trace starts with its header") {
  const auto r = call({"--mode", "sampled", "--k", "3", "--braid", kTrefoil, "--samples", "100", "--seed", "5",
                       "--format", "csv"});
  REQUIRE(r.exit_code == kExitOk);
  CHECK(r.output.rfind("sample_index,mean_re,mean_im\n", 0) == 0);
  CHECK(r.output.find("\n100,") != std::string::npos);
}

TEST_CASE("text format flattens keys") {
  const auto r = call({"--mode", "exact", "--k", "2", "--braid", "strands=2 colors=1/2,1/2 word=", "--format",
                       "text"});
  REQUIRE(r.exit_code == kExitOk);
  CHECK(r.output.find("value.abs: ") != std::string::npos);
}

TEST_CASE("errors map to exit codes") {
  SUBCASE("malformed braid") {
    const auto r = call({"--mode", "exact", "--k", "3", "--braid", "strands=3 colors=1/2,1/2,1/2 word=1"});
    CHECK(r.exit_code == kExitConfig);
    CHECK(parsed(r)["error"]["code"] == "SyntaxError");
  }
  SUBCASE("generator out of range carries a position") {
    const auto r = call({"--mode", "exact", "--k", "3", "--braid", "strands=4 colors=1/2,1/2,1/2,1/2 word=5"});
    CHECK(r.exit_code == kExitConfig);
    const json e = parsed(r)["error"];
    CHECK(e["code"] == "IndexError");
    CHECK(e["position"].is_number());
  }
  SUBCASE("cap colors disagree") {
    const auto r = call({"--mode", "exact", "--k", "3", "--braid", "strands=4 colors=1/2,1,1/2,1/2 word="});
    CHECK(r.exit_code == kExitAdmissibility);
  }
  SUBCASE("color above the level") {
    const auto r = call({"--mode", "exact", "--k", "1", "--braid", "strands=2 colors=1,1 word="});
    CHECK(r.exit_code == kExitAdmissibility);
    CHECK(parsed(r)["error"]["code"] == "TruncationError");
  }
  SUBCASE("register too large") {
    const auto r = call({"--mode", "sampled", "--k", "7", "--delta", "1", "--braid",
                         "strands=12 colors=1/2,1/2,1/2,1/2,1/2,1/2,1/2,1/2,1/2,1/2,1/2,1/2 word=2"});
    CHECK(r.exit_code == kExitSizeGuard);
    CHECK(parsed(r)["error"]["code"] == "SizeGuard");
  }
  SUBCASE("unknown mode") {
    const auto r = call({"--mode", "bogus", "--k", "3", "--braid", kTrefoil});
    CHECK(r.exit_code == kExitConfig);
    CHECK(parsed(r)["error"]["code"] == "ConfigError");
  }
  SUBCASE("both braid sources") {
    const auto r = call({"--mode", "exact", "--k", "3", "--braid", kTrefoil, "--braid-file", "x.txt"});
    CHECK(r.exit_code == kExitConfig);
  }
  SUBCASE("missing braid file") {
    const auto r = call({"--mode", "exact", "--k", "3", "--braid-file", "/nonexistent/braid.txt"});
    CHECK(r.exit_code == kExitConfig);
  }
}

TEST_CASE("run never throws on a bad level") {
  RunConfig c;
  c.k = 0;
  c.braid_text = kTrefoil;
  const auto r = run(c);
  CHECK(r.exit_code != kExitOk);
  CHECK(parsed(r).contains("error"));
}
