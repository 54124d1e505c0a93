// This file is part of pointlike-lab, a workbench for pointlike sets of
// finite semigroups.
//
// Copyright 2026 the pointlike-lab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end tests of the plab binary.  PLAB_BINARY and PLAB_DATA_DIR are
// injected by the build; commands run through popen with stderr dropped.

#include <array>
#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <nlohmann/json.hpp>

#ifndef PLAB_BINARY
#error "PLAB_BINARY must point at the built plab executable"
#endif
#ifndef PLAB_DATA_DIR
#error "PLAB_DATA_DIR must point at the sample data directory"
#endif

namespace {

using nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + PLAB_BINARY + " " +
                    args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.out.append(buf.data(), got);
  }
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) {
  return std::string(PLAB_DATA_DIR) + "/" + name;
}

json result_of(const RunResult& r) {
  json rep = json::parse(r.out);
  REQUIRE(rep["schema"] == "1");
  return rep["result"];
}

}  // namespace

TEST_CASE("validate accepts the sample files") {
  for (const char* name : {"z2.sgp", "z3.sgp", "z4.sgp", "sl2.sgp",
                           "lz2.sgp", "rz2.sgp", "n2.sgp", "b2.sgp",
                           "t2.sgp", "triv.sgp"}) {
    RunResult r = run("validate " + data(name));
    INFO(name);
    CHECK(r.exit_code == 0);
    CHECK(result_of(r)["ok"] == true);
  }
}

TEST_CASE("info reports structure") {
  RunResult r = run("info " + data("b2.sgp"));
  REQUIRE(r.exit_code == 0);
  json res = result_of(r);
  CHECK(res["order"] == 5);
  CHECK(res["idempotents"] == json::parse("[0,1,4]"));
  CHECK(res["green"]["j"].size() == 2);
  CHECK(res["pseudovarieties"]["aperiodic"] == true);
  CHECK(res["pseudovarieties"]["jtrivial"] == false);
}

TEST_CASE("certify pins the pointlikes of Z2 for aperiodics") {
  RunResult r = run("certify --pv aperiodic --modulus grp --bound 3 " +
                    data("z2.sgp"));
  REQUIRE(r.exit_code == 0);
  json res = result_of(r);
  CHECK(res["exact"] == true);
  CHECK(res["value"]["max_faces"] == json::parse("[[0,1]]"));
}

TEST_CASE("points answers membership") {
  RunResult r = run("points prinj " + data("z2.sgp"));
  REQUIRE(r.exit_code == 0);
  CHECK(result_of(r)["member"] == false);
  RunResult r2 = run("points grp " + data("sl2.sgp"));
  CHECK(result_of(r2)["member"] == true);
}

TEST_CASE("enumerate counts match the frozen sequence") {
  CHECK(result_of(run("enumerate --order 2 --dedup iso"))["count"] == 5);
  CHECK(result_of(run("enumerate --order 3 --dedup raw"))["count"] == 113);
  CHECK(result_of(run("enumerate --order 3 --dedup iso-anti"))["count"] ==
        18);
  json filtered =
      result_of(run("enumerate --order 2 --filter commutative --emit"));
  CHECK(filtered["count"] == 3);
  CHECK(filtered["tables"].size() == 3);
}

TEST_CASE("nerve consumes .rel files") {
  RunResult r = run("nerve --dom " + data("z2.sgp") + " --cod " +
                    data("triv.sgp") + " --graph " +
                    data("z2_onto_triv.rel"));
  REQUIRE(r.exit_code == 0);
  json res = result_of(r);
  CHECK(res["division"] == false);
  CHECK(res["nerve"]["max_faces"] == json::parse("[[0,1]]"));
}

TEST_CASE("modulus and complete report values and traces") {
  json m = result_of(run("modulus grp " + data("z4.sgp")));
  CHECK(m["family"] == json::parse("[[0],[0,1,2,3],[0,2]]"));
  CHECK(m["value"]["max_faces"] == json::parse("[[0,1,2,3]]"));

  json c = result_of(run("complete jcl " + data("b2.sgp")));
  CHECK(c["levels"] == 1);
  CHECK(c["trace"] == json::parse("[5,31]"));
  CHECK(c["value"]["face_count"] == 31);
}

TEST_CASE("oracle labels its answer as an upper bound") {
  json res = result_of(run("oracle --pv aperiodic --bound 3 " +
                           data("z3.sgp")));
  CHECK(res["approximate"] == true);
  CHECK(res["upper"]["max_faces"] == json::parse("[[0,1,2]]"));
  CHECK(res["witness"].is_object());
}

TEST_CASE("reverse-check passes on the samples") {
  RunResult r = run("reverse-check --pv jtrivial --bound 2 " +
                    data("b2.sgp"));
  CHECK(r.exit_code == 0);
  CHECK(result_of(r)["ok"] == true);
}

TEST_CASE("check-laws runs a named suite") {
  RunResult r = run("check-laws --order 2 --suite io-roundtrip");
  REQUIRE(r.exit_code == 0);
  json res = result_of(r);
  CHECK(res["ok"] == true);
  REQUIRE(res["suites"].size() == 1);
  CHECK(res["suites"][0]["name"] == "io-roundtrip");
  CHECK(res["suites"][0]["failures"] == 0);
}

TEST_CASE("exit codes distinguish usage from domain errors") {
  CHECK(run("no-such-command").exit_code == 2);
  CHECK(run("validate").exit_code == 2);  // missing required argument
  RunResult missing = run("validate /no/such/file.sgp");
  CHECK(missing.exit_code == 1);
  CHECK(json::parse(missing.out)["error"]["kind"] == "ParseError");
  RunResult bad = run("certify --pv groups --modulus jcl --bound 2 " +
                      data("z2.sgp"));
  CHECK(bad.exit_code == 1);
  CHECK(json::parse(bad.out)["error"]["kind"] == "PointsMismatch");
}

TEST_CASE("byte-identical output across runs") {
  std::string cmd = "certify --pv aperiodic --modulus grp --bound 2 " +
                    data("z2.sgp");
  CHECK(run(cmd).out == run(cmd).out);
  std::string laws = "check-laws --order 2 --suite composition-laws";
  CHECK(run(laws).out == run(laws).out);
}

TEST_CASE("the environment variable lowers the enumeration cap") {
  RunResult capped =
      run("enumerate --order 3", "POINTLIKE_LAB_MAX_ORDER=2");
  CHECK(capped.exit_code == 1);
  CHECK(json::parse(capped.out)["error"]["kind"] == "SizeCap");
  // The cap cannot be raised beyond the hard limit.
  RunResult raised =
      run("enumerate --order 6", "POINTLIKE_LAB_MAX_ORDER=9");
  CHECK(raised.exit_code == 1);
}
