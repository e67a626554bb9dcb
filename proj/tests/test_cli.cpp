#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "strange/catalog.hpp"

using namespace strange;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(SDWB_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string trimmed(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("dual lookup") {
    auto r = run("dual E13");
    CHECK(r.status == 0);
    CHECK(trimmed(r.out) == "Z11");
  }

  TEST_CASE("verify all") {
    auto r = run("verify all");
    CHECK(r.status == 0);
    CHECK(r.out.find("0 failures") != std::string::npos);
    auto list = run("verify --list");
    CHECK(list.status == 0);
    for (const char* suite : {"arnold", "extension", "lattices", "frames", "eta", "kobayashi", "moonshine"})
      CHECK(list.out.find(suite) != std::string::npos);
  }

  TEST_CASE("lattice subcommands") {
    CHECK(trimmed(run("lattice det --graph star:2,3,7+U").out) == "1");
    CHECK(trimmed(run("lattice snf --graph star:2,2,2,3").out) == "1 1 1 1 2 2");
    CHECK(trimmed(run("lattice sig --graph K24").out) == "(4,20,0)");
    CHECK(trimmed(run("coxeter-root A11+D7+E6").out) == "2^2*3*12^3/1^3*4*6^2");
    CHECK(trimmed(run("frame-dual 2*3*30/1*6*15").out) == "2*5*30/1*10*15");
  }

  TEST_CASE("usage errors exit with 2") {
    CHECK(run("show X99").status == 2);
    CHECK(run("").status == 2);
    CHECK(run("no-such-command").status == 2);
    CHECK(run("frame-dual 1^0").status == 2);
    CHECK(run("kobayashi --weights 2,4,5,6 --degree 8,10 --dual-weights 2,4,5,6 --dual-degree 8,10 --convention x").status == 2);
  }

  TEST_CASE("verification failure exits with 1") {
    auto r = run("eta-check E12 --tol 0");
    CHECK(r.status == 1);
  }

  TEST_CASE("json show round-trips through the record loader") {
    for (const auto& rec : Catalog::builtin().records()) {
      auto r = run("--format json show \"" + rec.name + "\"");
      REQUIRE(r.status == 0);
      auto j = nlohmann::json::parse(r.out);
      CHECK(record_to_json(record_from_json(j)) == record_to_json(rec));
    }
  }

  TEST_CASE("json verify report") {
    auto r = run("--format json verify arnold");
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.contains("checks"));
    CHECK(j["checks"].size() > 0);
  }

  TEST_CASE("json moonshine") {
    auto j = nlohmann::json::parse(run("--format json moonshine --max-n 119").out);
    CHECK(j["count"] == 25);
    CHECK(j["shapes"].size() == 25);
  }

  TEST_CASE("generalized square listing matches the golden file") {
    auto r = run("--format json kobayashi --weights 2,4,5,6 --degree 8,10 --dual-weights 2,4,5,6 --dual-degree 8,10 "
                 "--all-squares");
    CHECK(r.status == 0);
    std::ifstream in(std::string(GOLDEN_DIR) + "/jp20_square4x4.json");
    REQUIRE(in);
    auto golden = nlohmann::json::parse(in);
    CHECK(nlohmann::json::parse(r.out) == golden);
  }

  TEST_CASE("kobayashi dual of E14") {
    auto r = run("kobayashi --weights 3,8,12 --degree 24");
    CHECK(r.status == 0);
    CHECK(r.out.find("6,8,9;24") != std::string::npos);
  }

  TEST_CASE("external catalog file") {
    auto r = run(std::string("--catalog ") + CATALOG_PATH + " dual W1,0");
    CHECK(r.status == 0);
    CHECK(r.out.find("K'10") != std::string::npos);
    CHECK(run("--catalog /nonexistent.json dual E13").status == 2);
  }
}
