// Copyright 2026 The qcat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("QCAT_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "QCAT_BIN must point at the CLI binary");
  std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buffer[4096];
  size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    output.append(buffer, got);
  }
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, output};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("codes show steane reports [[7,1,3]]") {
  RunResult r = run_cli("codes show steane");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("[[7,1,3]]") != std::string::npos);
  CHECK(r.stdout_text.find("generators: 6") != std::string::npos);
}

TEST_CASE("codes show rm15 reports [[15,1,3]]") {
  RunResult r = run_cli("codes show rm15");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("[[15,1,3]]") != std::string::npos);
  CHECK(r.stdout_text.find("distance-x: 7") != std::string::npos);
  CHECK(r.stdout_text.find("distance-z: 3") != std::string::npos);
}

TEST_CASE("codes show concat reports n=105 k=1 and refuses the distance") {
  RunResult r = run_cli("codes show concat");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("n=105 k=1") != std::string::npos);
  CHECK(r.stdout_text.find("not computed") != std::string::npos);
  CHECK(r.stdout_text.find("upper bound: 9") != std::string::npos);
}

TEST_CASE("unknown code name exits 2") {
  RunResult r = run_cli("codes show bogus");
  CHECK(r.exit_code == 2);
}

TEST_CASE("unknown gadget exits 2") {
  RunResult r = run_cli("verify --gate BOGUS --faults 1");
  CHECK(r.exit_code == 2);
}

TEST_CASE("check transversal matches the claim table") {
  struct Row {
    const char* code;
    const char* gate;
    bool transversal;
  };
  for (const Row& row : {Row{"rm15", "T", true}, Row{"rm15", "H", false},
                         Row{"steane", "S", true}, Row{"steane", "T", false},
                         Row{"steane", "CNOT", true}, Row{"rm15", "CNOT", true}}) {
    RunResult r = run_cli(std::string("check transversal --code ") + row.code + " --gate " +
                          row.gate);
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.stdout_text);
    CHECK(j["transversal"] == row.transversal);
    CHECK(j["match"] == true);
    CHECK(j["oracle_consistent"] == true);
  }
}

TEST_CASE("verify EC campaign emits a clean JSON report") {
  RunResult r = run_cli("verify --gate EC --faults 1");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.stdout_text);
  CHECK(j["gadget"] == "EC");
  CHECK(j["failures"].empty());
  CHECK(j["cases"] == j["passes"]);
  CHECK(j["config_hash"].is_string());
}

TEST_CASE("verify T pair search emits a witness with exit 0") {
  RunResult r = run_cli("verify --gate T --faults 2 --budget 100000");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.stdout_text);
  CHECK(j["failures"].size() == 1);
}

TEST_CASE("verify H runs the block-error campaign") {
  RunResult r = run_cli("verify --gate H --faults 1 --jobs 2");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.stdout_text);
  CHECK(j["cases"] == 458752);
  CHECK(j["failures"].empty());
}

TEST_CASE("identical invocations produce identical reports") {
  RunResult a = run_cli("verify --gate T --faults 1 --jobs 1");
  RunResult b = run_cli("verify --gate T --faults 1 --jobs 2");
  CHECK(a.exit_code == 0);
  CHECK(a.stdout_text == b.stdout_text);
}

TEST_CASE("gadget show serializes the plan") {
  RunResult r = run_cli("gadget show --gate T");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("GADGET T") == 0);
  CHECK(r.stdout_text.find("SCHEDULE inner") != std::string::npos);
}

TEST_CASE("tables export emits one line per syndrome") {
  RunResult r = run_cli("tables export --code steane");
  CHECK(r.exit_code == 0);
  size_t lines = 0;
  std::istringstream in(r.stdout_text);
  std::string line;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 64);
}

}  // TEST_SUITE
