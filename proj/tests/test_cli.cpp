#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

#ifndef COMINIMAL_CLI_PATH
#error "COMINIMAL_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(COMINIMAL_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  std::array<char, 512> buf;
  while (fgets(buf.data(), buf.size(), pipe)) res.output += buf.data();
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace

TEST_CASE("generate emits windowed sets") {
  RunResult r = run("generate --family I:3 --window=-20..-1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("[-15,-10]") != std::string::npos);

  r = run("generate --family V --window=-8..8");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("[-8,-4,-2,-1,1,2,4,8]") != std::string::npos);

  r = run("generate --family J:0 --window 0..4");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"elements\":[1]") != std::string::npos);

  r = run("generate --family I:3 --window=-20..-1 --format runs");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"runs\"") != std::string::npos);

  // Identical invocations produce identical bytes.
  RunResult again = run("generate --family SS:64 --window=-256..-1");
  RunResult once = run("generate --family SS:64 --window=-256..-1");
  CHECK(again.exit_code == 0);
  CHECK(again.output == once.output);
}

TEST_CASE("usage and io failures use distinct exit codes") {
  CHECK(run("generate --family QQQ --window 0..4").exit_code == 2);
  CHECK(run("generate --family S").exit_code == 2);
  CHECK(run("nonsense").exit_code == 2);
  CHECK(run("generate --family S --window=-8..-1 --out /nonexistent_dir/x.json").exit_code == 3);
}

TEST_CASE("verify suites report and exit by verdict") {
  RunResult r = run("verify --suite st-claims --n 3..8");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"holds\":true") != std::string::npos);
  // Every emitted line is standalone JSON with the schema marker.
  size_t start = 0;
  int lines = 0;
  while (start < r.output.size()) {
    size_t end = r.output.find('\n', start);
    if (end == std::string::npos) end = r.output.size();
    std::string line = r.output.substr(start, end - start);
    if (!line.empty()) {
      auto j = nlohmann::json::parse(line, nullptr, false);
      CHECK_FALSE(j.is_discarded());
      CHECK(j.at("schema") == "1");
      ++lines;
    }
    start = end + 1;
  }
  CHECK(lines > 0);

  r = run("verify --suite uv-finiteness --n 4..8");
  CHECK(r.exit_code == 0);

  r = run("verify --suite complement --window=-1024..1024");
  CHECK(r.exit_code == 0);

  r = run("verify --suite complement --pair uv --window=-1024..1024");
  CHECK(r.exit_code == 0);

  // The symmetric claim suite contains the one defective instance at n=5.
  r = run("verify --suite uv-claims --n 5..5");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("\"counterexample\":-35") != std::string::npos);

  r = run("verify --suite uv-claims --n 6..8");
  CHECK(r.exit_code == 0);
}

TEST_CASE("minimality suites witness every default removable element") {
  RunResult r = run("verify --suite minimality --window=-4096..4096");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("unverified-in-window") == std::string::npos);
  // The symmetric pair needs the positive part of the window: the witness
  // for removing 2 is the target 1.
  r = run("verify --suite minimality --pair uv --window=-4096..4096");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("unverified-in-window") == std::string::npos);
}

TEST_CASE("refine reports retained and removed prefixes") {
  RunResult r = run("refine --base S --budget 64");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"retained\":[") != std::string::npos);
  CHECK(r.output.find("-2") != std::string::npos);
  CHECK(r.output.find("\"certification\":\"window+tail\"") != std::string::npos);
}

TEST_CASE("lift verifies lattice pairs") {
  RunResult r = run("lift --matrix [[0,1],[1,0]] --box=-48..48,-48..48");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"pass\":true") != std::string::npos);

  r = run("lift --quadrant 1 --box=-48..48,-48..48");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"in_quadrant\":true") != std::string::npos);

  CHECK(run("lift --box=-8..8,-8..8").exit_code == 2);
}

TEST_CASE("config overrides are honored") {
  {
    std::ofstream out("/tmp/cominimal_cli_cfg.json");
    out << R"({"claim_trunc": 16})";
  }
  CHECK(run("--config /tmp/cominimal_cli_cfg.json verify --suite st-claims --n 3..6").exit_code ==
        0);
  CHECK(run("--config /nonexistent.json selftest").exit_code == 3);
}

TEST_CASE("selftest passes") {
  RunResult r = run("selftest");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("all checks passed") != std::string::npos);
}
