#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "burchlab/cli.hpp"
#include "burchlab/errors.hpp"
#include "burchlab/families.hpp"
#include "burchlab/session.hpp"

using namespace burchlab;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_session(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("burchlab_test_" + name + ".txt");
  std::ofstream(path) << text;
  return path.string();
}

const char* kCubes =
    "ring GF(101)[x,y,z]\n"
    "ideal I = x^4, x^3*y, x^3*z, y^4, x*y^3, y^3*z, z^4, x*z^3, y*z^3\n"
    "quotient R = S/I\n"
    "module M = R/(x*y*z)\n";

const char* kAB =
    "ring GF(101)[a,b]\n"
    "ideal I = a^2, a*b^2, b^4\n"
    "quotient R = S/I\n"
    "module M = R/(a, b^2)\n";

}  // namespace

TEST_CASE("session parsing") {
  Session s = parse_session("ring GF(101)[x,y,z]\nideal I = x^4, x^3*y");
  CHECK(s.ideals.size() == 1);
  CHECK(s.ideal("I").generators().size() == 2);
  CHECK(s.ring->nvars() == 3);

  Session full = parse_session(
      "# comment\n"
      "set cap=25 steps=4 seed=3 trials=7\n"
      "ring T = GF(7)[u, v]\n"
      "ideal J = u^2, v^2   # trailing comment\n"
      "ideal Z = 0\n"
      "quotient Q = T/J\n"
      "module M = Q/(u)\n"
      "module F = Q^{0, 1} / (v^2, u), (u*v, 0)\n"
      "module N = T^2 / (u, v)\n");
  CHECK(full.ring_name == "T");
  CHECK(full.ring->characteristic() == 7);
  CHECK(full.ring->degree_cap() == 25);
  CHECK(full.options.steps == 4);
  CHECK(full.options.seed == 3);
  CHECK(full.options.trials == 7);
  CHECK(full.ideal("Z").is_zero());
  CHECK(full.module("M").over_quotient());
  CHECK(full.module("F").rank() == 2);
  CHECK(full.module("F").target_shifts() == std::vector<int>{0, 1});
  CHECK(full.module("F").columns().size() == 2);
  CHECK_FALSE(full.module("N").over_quotient());
  CHECK(full.module("N").rank() == 2);
  CHECK(parse_session("set cap=10\nring GF(101)[x]\n", 40).ring->degree_cap() == 40);
}

TEST_CASE("session errors") {
  CHECK_THROWS_AS(parse_session("ring GF(101)[x]\nideal I = x\nideal I = x^2\n"), ParseError);
  CHECK_THROWS_AS(parse_session("ring GF(101)[x]\nring GF(101)[y]\n"), ParseError);
  CHECK_THROWS_AS(parse_session("ideal I = x\n"), ParseError);
  CHECK_THROWS_AS(parse_session("ring GF(100)[x]\n"), ParseError);
  CHECK_THROWS_AS(parse_session("ring GF(101)[x]\nmodule M = R/(x)\n"), ParseError);
  CHECK_THROWS_AS(parse_session("ring GF(101)[x]\nfrobnicate\n"), ParseError);
  CHECK_THROWS_AS(parse_session(""), ParseError);
  CHECK_THROWS_AS(parse_session("ring GF(101)[x]\nideal I = x^40\n"), DegreeCapExceeded);
  try {
    parse_session("ring GF(101)[x]\nideal I = x^2+x\n");
    FAIL("accepted");
  } catch (const ParseError& e) {
    std::string what = e.what();
    CHECK(what.find("x^2+x") != std::string::npos);
    CHECK(what.find("line 2") != std::string::npos);
  }
}

TEST_CASE("burch command") {
  std::string cubes = write_session("cubes", kCubes);
  Run r = run({"burch", "I", "--file", cubes});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("burch.index=3\n") != std::string::npos);
  CHECK(r.out.find("burch.method=exact\n") != std::string::npos);

  std::string hyper = write_session("hyper", "ring GF(101)[x,y]\nideal I = x^2\nideal Z = 0\n");
  Run h = run({"burch", "I", "--file", hyper, "--trials", "20", "--seed", "7"});
  CHECK(h.code == kExitOk);
  CHECK(h.out.find("burch.index=1\nburch.method=sampled:trials=20,seed=7\n") != std::string::npos);
  CHECK(run({"burch", "Z", "--file", hyper}).out.find("burch.index=0\n") != std::string::npos);
  CHECK(run({"burch", "I", "--file", hyper, "--exact-depth0"}).code == kExitMath);
  CHECK(run({"burch", "Q", "--file", hyper}).code == kExitUsage);
  Run human = run({"--format", "human", "burch", "I", "--file", cubes});
  CHECK(human.out.find("Burch index of S/I: 3") != std::string::npos);
}

TEST_CASE("resolution front ends") {
  std::string cubes = write_session("cubes", kCubes);
  std::string ab = write_session("ab", kAB);
  CHECK(run({"summands", "M", "--steps", "9", "--file", cubes}).out.find(
            "summands=false false false false true true true true true\n") != std::string::npos);
  CHECK(run({"summands", "M", "--steps", "8", "--file", ab, "--format", "human"}).out ==
        "false false false false false false false false\n");
  std::string lin = write_session("lin", "ring GF(101)[x,y,z]\nideal I = x^3, y^3, z^3, x^2*y, y^2*z, z^2*x\n");
  CHECK(run({"lin", "I", "--steps", "2", "--file", lin}).out.find("lin=3 3\n") != std::string::npos);
  Run res = run({"resolve", "I", "--file", ab});
  CHECK(res.code == kExitOk);
  CHECK(res.out.find("projdim=2\n") != std::string::npos);
  CHECK(res.out.find("beta.1.2=1\n") != std::string::npos);
  CHECK(run({"depth", "I", "--file", lin}).out.find("depth=0\n") != std::string::npos);
  CHECK(run({"gb", "I", "--file", ab}).out.find("gb.size=3\n") != std::string::npos);

  std::string open = write_session("open", "ring GF(101)[x,y]\nideal I = x^2\nquotient R = S/I\nmodule M = R/(y)\n");
  CHECK(run({"summands", "M", "--file", open}).code == kExitUsage);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"burch", "I"}).code == kExitUsage);
  CHECK(run({"burch", "I", "--file", "/nonexistent/file"}).code == kExitUsage);
  std::string bad = write_session("bad", "ring GF(101)[x]\nideal I = x^2+x\n");
  Run b = run({"gb", "I", "--file", bad});
  CHECK(b.code == kExitUsage);
  CHECK(b.err.find("x^2+x") != std::string::npos);
  std::string cubes = write_session("cubes", kCubes);
  setenv("BURCHLAB_CAP", "3", 1);
  CHECK(run({"resolve", "M", "--file", cubes}).code == kExitCap);
  setenv("BURCHLAB_CAP", "6", 1);
  CHECK(run({"summands", "M", "--file", cubes}).code == kExitCap);
  setenv("BURCHLAB_CAP", "lots", 1);
  CHECK(run({"burch", "I", "--file", cubes}).code == kExitUsage);
  unsetenv("BURCHLAB_CAP");
}

TEST_CASE("verify-paper") {
  Run ok = run({"verify-paper"});
  CHECK(ok.code == kExitOk);
  CHECK(ok.out.find("fail") == std::string::npos);
  Run broken = run({"verify-paper", "--inject-fault", "broken-colon"});
  CHECK(broken.code == kExitMath);
  CHECK(broken.out.find("mismatch.ab2-square=Burch ideal of (a,b^2)^2: expected (a, b^2)") != std::string::npos);
  Run one = run({"verify-paper", "--only", "cubes-times-maximal"});
  CHECK(one.code == kExitOk);
  CHECK(one.out.find("passed=1/1\n") != std::string::npos);
  CHECK(run({"verify-paper", "--only", "nope"}).code == kExitUsage);
  CHECK(run({"verify-paper", "--inject-fault", "nope"}).code == kExitUsage);
  // the fault is gone afterwards
  CHECK(run({"verify-paper", "--only", "ab2-square"}).code == kExitOk);
}

TEST_CASE("random families") {
  Run torind = run({"random", "--family", "torind", "--trials", "10", "--seed", "1"});
  CHECK(torind.code == kExitOk);
  CHECK(torind.out.find("passed=10/10\n") != std::string::npos);
  Run points = run({"random", "--family", "points", "--trials", "1", "--seed", "1", "--points", "5"});
  CHECK(points.code == kExitOk);
  CHECK(points.out.find("index 2") != std::string::npos);
  Run dim2 = run({"random", "--family", "dim2", "--trials", "25", "--seed", "3"});
  CHECK(dim2.out.find("passed=25/25\n") != std::string::npos);
  CHECK(run({"random", "--family", "nope"}).code == kExitUsage);
  // the fibre family reports its known failures with a reproducing session
  Run fibre = run({"random", "--family", "fibre", "--trials", "10", "--seed", "1"});
  CHECK(fibre.code == kExitMath);
  CHECK(fibre.out.find("# ring S = GF(101)") != std::string::npos);
}

TEST_CASE("machine output is deterministic") {
  std::string cubes = write_session("cubes", kCubes);
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"burch", "I", "--file", cubes},
           {"summands", "M", "--file", cubes, "--steps", "6"},
           {"random", "--family", "mainthm", "--trials", "3", "--seed", "4"},
           {"random", "--family", "points", "--trials", "2", "--seed", "4", "--points", "6"}}) {
    CHECK(run(args).out == run(args).out);
  }
}

TEST_CASE("family generators emit homogeneous ideals") {
  for (Family f : {Family::kJn, Family::kTorind, Family::kDim2, Family::kMainthm, Family::kExtension}) {
    CHECK(parse_family(family_name(f)) == f);
    for (std::size_t t = 1; t <= 3; ++t) {
      TrialResult result = run_trial(f, 11, t);
      CHECK_FALSE(result.reports.empty());
      for (const auto& report : result.reports) {
        for (const auto& g : report.ideal.generators()) CHECK(g.is_homogeneous());
        CHECK(report.index + static_cast<std::size_t>(report.depth) <= report.ideal.ring()->nvars());
      }
    }
  }
}
