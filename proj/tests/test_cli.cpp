/* Copyright (C) 2026 the chainforge authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string binary() {
  const char* b = std::getenv("CHAINFORGE_BIN");
  REQUIRE(b != nullptr);
  return b;
}

std::string golden_dir() {
  const char* d = std::getenv("CHAINFORGE_GOLDEN");
  REQUIRE(d != nullptr);
  return d;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
  std::string cmd = binary() + " " + args;
  if (merge_stderr)
    cmd += " 2>&1";
  else
    cmd += " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WEXITSTATUS(status);
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("golden outputs are byte-identical across repeated runs") {
  struct Case {
    const char* args;
    const char* file;
  } cases[] = {
      {"omega --q 3 --n 20 --method both", "omega_3_20.json"},
      {"selfdual --ring gr:2,2,1 --n 7 --list", "selfdual_gr221_7.json"},
      {"cosets --q 2 --n 1", "cosets_2_1.json"},
  };
  for (const auto& c : cases) {
    std::string expect = slurp(golden_dir() + "/" + c.file);
    RunResult first = run(c.args);
    RunResult second = run(c.args);
    CHECK(first.exit_code == 0);
    CHECK(first.out == expect);
    CHECK(second.out == expect);
  }
}

TEST_CASE("domain errors exit 1 with a JSON error object") {
  RunResult r = run("cosets --q 2 --n 6", /*merge_stderr=*/true);
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("\"code\":\"NotCoprime\"") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("cosets --q 2").exit_code == 2);         // missing --n
  CHECK(run("nonsense").exit_code == 2);             // unknown subcommand
  CHECK(run("omega --q 2 --n 3 --method x").exit_code == 2);
}

TEST_CASE("omega --method both exits nonzero only on disagreement") {
  CHECK(run("omega --q 2 --n 341 --method both").exit_code == 0);
  CHECK(run("omega --q 5 --n 1024 --method both").exit_code == 0);
}

TEST_CASE("census writes deterministic JSONL") {
  std::string path1 = std::string(std::getenv("CHAINFORGE_TMP")
                                      ? std::getenv("CHAINFORGE_TMP")
                                      : "/tmp") +
                      "/census_a.jsonl";
  std::string path2 = path1 + ".again";
  CHECK(run("census --q 2 --t 2 --n-from 1 --n-to 20 --out " + path1)
            .exit_code == 0);
  CHECK(run("census --q 2 --t 2 --n-from 1 --n-to 20 --out " + path2)
            .exit_code == 0);
  std::string a = slurp(path1), b = slurp(path2);
  CHECK(a == b);
  CHECK(a.find("\"q\":2,\"n\":7,\"t\":2,\"omega\":1,\"delta_half\":1,"
               "\"selfdual_count\":\"3\",\"nontrivial\":true") !=
        std::string::npos);
  // only coprime lengths appear
  CHECK(a.find("\"n\":4,") == std::string::npos);
  std::remove(path1.c_str());
  std::remove(path2.c_str());
}

TEST_CASE("verify subcommand reports a passing battery") {
  RunResult r = run("verify --ring fqu:2,1,2 --n 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"pass\":false") == std::string::npos);
  CHECK(r.out.find("selfdual_census") != std::string::npos);
}
