#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(FLOWSG_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe))
    out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string fixture(const std::string& name) {
  return std::string(FLOWSG_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("analyze text output", "[cli]") {
  auto r = run("analyze " + fixture("k4.edges") + " --all-defects");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.out.find("G_1 ≅ S3 (order 6)") != std::string::npos);
  REQUIRE(r.out.find("G_2 ≅ S2 (order 2)") != std::string::npos);
  REQUIRE(r.out.find("G_3 ≅ 1 (order 1)") != std::string::npos);

  auto c5 = run("analyze " + fixture("c5.edges") + " --defect 2");
  REQUIRE(c5.exit_code == 0);
  REQUIRE(c5.out.find("G_2 ≅ Z3") != std::string::npos);
  REQUIRE(c5.out.find("G_1") == std::string::npos);

  auto bow = run("analyze " + fixture("bowtie.edges") + " --defect 1");
  REQUIRE(bow.out.find("(order 4)") != std::string::npos);
}

TEST_CASE("analyze JSON is deterministic modulo timing", "[cli]") {
  auto a = run("analyze " + fixture("bowtie.edges") + " --all-defects --json");
  auto b = run("analyze " + fixture("bowtie.edges") + " --all-defects --json");
  REQUIRE(a.exit_code == 0);
  auto ja = nlohmann::json::parse(a.out);
  auto jb = nlohmann::json::parse(b.out);
  ja.erase("timing_ms");
  jb.erase("timing_ms");
  REQUIRE(ja.dump() == jb.dump());
  REQUIRE(ja["input"]["n"] == 5);
  REQUIRE(ja["defect_groups"].size() == 4);
}

TEST_CASE("analyze on digraphs", "[cli]") {
  auto r = run("analyze " + fixture("dicycle3.edges") + " --defect 1 --json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["input"]["directed"] == true);
  REQUIRE(j["defect_groups"][0]["descriptor"] == "Z2");

  auto dag = run("analyze " + fixture("dag3.edges") + " --defect 1");
  REQUIRE(dag.exit_code == 0);
  REQUIRE(dag.out.find("G_1 ≅ 1") != std::string::npos);
}

TEST_CASE("exit codes", "[cli]") {
  SECTION("parse error is 2") {
    auto r = run("analyze /nonexistent.edges");
    REQUIRE(r.exit_code == 2);
    auto bad = run("membership " + fixture("k4.edges") + " v0 v1");
    REQUIRE(bad.exit_code == 2);  // graph where digraph required
  }
  SECTION("usage error is 2") {
    REQUIRE(run("definitely-not-a-command").exit_code == 2);
    REQUIRE(run("check").exit_code == 2);
  }
  SECTION("cap exceeded is 3") {
    auto r = run("oracle " + fixture("k5.edges") + " --defect 1 --cap 50");
    REQUIRE(r.exit_code == 3);
    REQUIRE(r.out.find("oracle too large") != std::string::npos);
  }
  SECTION("FLOWSG_ORACLE_CAP sets the default cap") {
    RunResult r;
    {
      std::string cmd = "FLOWSG_ORACLE_CAP=50 " + std::string(FLOWSG_CLI_PATH) +
                        " oracle " + fixture("k5.edges") + " --defect 1 2>&1";
      FILE* pipe = popen(cmd.c_str(), "r");
      REQUIRE(pipe != nullptr);
      std::array<char, 4096> buf;
      while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe))
        r.out.append(buf.data(), got);
      r.exit_code = WEXITSTATUS(pclose(pipe));
    }
    REQUIRE(r.exit_code == 3);
  }
  SECTION("success is 0") {
    REQUIRE(run("complexity " + fixture("k4.edges")).exit_code == 0);
  }
}

TEST_CASE("oracle command", "[cli]") {
  auto r = run("oracle " + fixture("c5.edges") + " --defect 2");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.out.find("order 3") != std::string::npos);
  REQUIRE(r.out.find("Z3") != std::string::npos);

  auto named = run("oracle " + fixture("bowtie.edges") +
                   " --defect-set w --json");
  REQUIRE(named.exit_code == 0);
  auto j = nlohmann::json::parse(named.out);
  REQUIRE(j["oracle"]["order"] == 4);
  REQUIRE(j["oracle"]["orbit_sizes"] == nlohmann::json::array({2, 2}));
}

TEST_CASE("membership command", "[cli]") {
  auto direct = run("membership " + fixture("dicycle3.edges") + " a b");
  REQUIRE(direct.exit_code == 0);
  REQUIRE(direct.out.find("is in the flow semigroup") != std::string::npos);
  REQUIRE(direct.out.find("direct edge") != std::string::npos);

  auto reversed = run("membership " + fixture("dicycle3.edges") + " b a");
  REQUIRE(reversed.exit_code == 0);
  REQUIRE(reversed.out.find("witness:") != std::string::npos);
  REQUIRE(reversed.out.find("verified") != std::string::npos);

  auto no = run("membership " + fixture("ditwocycle_sink.edges") + " c a");
  REQUIRE(no.exit_code == 0);
  REQUIRE(no.out.find("not in the flow semigroup") != std::string::npos);
}

TEST_CASE("complexity command", "[cli]") {
  auto k4 = run("complexity " + fixture("k4.edges"));
  REQUIRE(k4.out.find("cpx = 2 (exact)") != std::string::npos);
  auto bow = run("complexity " + fixture("bowtie.edges"));
  REQUIRE(bow.out.find("cpx in [2, 3] (exact value open)") !=
          std::string::npos);
  auto d5 = run("complexity " + fixture("dicycle5.edges"));
  REQUIRE(d5.out.find("cpx = 3 (exact)") != std::string::npos);
}

TEST_CASE("check command over the corpus", "[cli]") {
  // small fixtures only, to keep this test quick; acceptance covers the rest
  auto r = run("check --corpus " + std::string(FLOWSG_FIXTURE_DIR) +
               " --max-n 5");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.out.find("all checks passed") != std::string::npos);
  REQUIRE(r.out.find("MISMATCH") == std::string::npos);
  REQUIRE(r.out.find("bowtie k=1 OK") != std::string::npos);

  auto one = run("check " + fixture("c6.edges") + " --all-defect-sets");
  REQUIRE(one.exit_code == 0);
  REQUIRE(one.out.find("defect-set independence OK") != std::string::npos);
}
