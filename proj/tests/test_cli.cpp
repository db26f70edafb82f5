// Copyright 2026 The ppzeta Authors
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

#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "ppzeta/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = ppz::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("relations subcommand") {
  const Result z = run({"relations", "--weight", "12", "--kind", "zeta", "--format", "text"});
  CHECK(z.code == 0);
  CHECK(z.out == "14 Z(9,3) + 75 Z(7,5) + 84 Z(5,7) ≡ 0 (mod Z(12))\n");
  const Result b = run({"relations", "--weight", "16"});
  CHECK(b.out == "2 {f3, f13} - 7 {f5, f11} + 11 {f7, f9} ≡ 0 (mod depth 3)\n");
  const Result empty = run({"relations", "--weight", "14", "--kind", "zeta"});
  CHECK(empty.code == 0);
  CHECK(empty.out.empty());
  const Result ej = run({"relations", "--weight", "14", "--kind", "zeta", "--format", "json"});
  CHECK(nlohmann::json::parse(ej.out) == nlohmann::json::array());
  const Result j = run({"relations", "--weight", "24", "--kind", "zeta", "--format", "json"});
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed.size() == 2);
  CHECK(parsed[0]["kind"] == "double_zeta");
  const Result csv = run({"relations", "--weight", "12", "--format", "csv"});
  CHECK(csv.out.rfind("weight,kind,index,r,s,coeff\n", 0) == 0);
}

TEST_CASE("matrix subcommand") {
  const Result a = run({"matrix", "--which", "A", "--weight", "12", "--format", "csv"});
  CHECK(a.code == 0);
  CHECK(a.out == "1,6,15,28\n0,1,15,42\n0,0,-14,-42\n0,-6,-15,-27\n");
  const Result m = run({"matrix", "--which", "M", "--weight", "12", "--format", "csv"});
  CHECK(m.out == "1,0,0,0\n0,1,0,0\n-28,-21,-27,-9\n-42,-15,-42,-14\n");
  const Result t = run({"matrix", "--which", "tADB", "--weight", "12", "--format", "json"});
  CHECK(nlohmann::json::parse(t.out)[0][0] == "1/45");
  const Result text = run({"matrix", "--which", "S", "--weight", "12"});
  CHECK(text.out == " 0   0   0  -1\n 0   0  -1   0\n 0  -1   0   0\n-1   0   0   0\n");
  for (const char* w : {"Asym", "T", "D", "B"}) {
    CHECK(run({"matrix", "--which", w, "--weight", "12"}).code == 0);
  }
}

TEST_CASE("other subcommands") {
  CHECK(run({"period-basis", "--weight", "16"}).out ==
        "2(X^2 - X^12) - 7(X^4 - X^10) + 11(X^6 - X^8)\n");
  const Result c = run({"check", "--weight", "12", "--digits", "30"});
  CHECK(c.code == 0);
  CHECK(c.out.find("scalar   = 5197/1382") != std::string::npos);
  CHECK(c.out.find("PASS") != std::string::npos);
  const Result cj = run({"check", "--weight", "12", "--format", "json"});
  CHECK(nlohmann::json::parse(cj.out)[0]["scalar_estimate"] == "5197/1382");
  const Result r = run({"report", "--from", "12", "--to", "16"});
  CHECK(r.code == 0);
  CHECK(r.out.find("k=12 ") == 0);
  CHECK(r.out.find("k=16 ") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  const Result ds = run({"ds-solve", "--weight", "4"});
  CHECK(ds.out == "dim 0\n");
  CHECK(run({"ds-solve", "--weight", "3"}).out.rfind("dim 1\n", 0) == 0);
  CHECK(run({"regularize", "--word", "yxy"}).out == "-2 Z(2,1)\n");
  CHECK(run({"regularize", "--word", "yy", "--star"}).out == "-1/2 Z(2)\n");
  CHECK(run({"regularize", "--word", "x"}).out == "0\n");
  CHECK(run({"fz-dim", "--weight", "4"}).out == "1\n");
}

TEST_CASE("usage errors exit with 2") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"relations"},
           {"relations", "--weight", "12", "--bogus"},
           {"relations", "--weight", "12", "--kind", "other"},
           {"relations", "--weight", "13"},
           {"matrix", "--which", "Q", "--weight", "12"},
           {"regularize", "--word", "xzy"},
           {"regularize", "--word", "yx", "--star"},
           {"fz-dim", "--weight", "9"},
       }) {
    const Result r = run(args);
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"report", "--from", "12", "--to", "20", "--format", "json"};
  const Result a = run(args);
  const Result b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const std::vector<std::string> chk{"check", "--weight", "16", "--digits", "25"};
  CHECK(run(chk).out == run(chk).out);
}
