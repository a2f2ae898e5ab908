#include <doctest.h>

#include <sstream>

#include "tanglelab/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = tanglelab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string data = TEST_DATA_DIR;

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("documented examples") {
  CHECK(run({"tri", "--braid", "2: 1 1 1"}).out == "tri = 9\n");
  CHECK(run({"lagrangians", "--p", "3", "--n", "4", "--count-only"}).out == "1120\n");
  const Result r = run({"burnside", "eval", "-r", "4", "--word-file", data + "/chen_P.txt"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("NONTRIVIAL\n", 0) == 0);
}

TEST_CASE("color") {
  CHECK(run({"color", "--diagram", data + "/figure_eight.txt", "--mod", "5"}).out ==
        "modulus = 5\ncount = 25\ndimension = 2\n");
  CHECK(run({"color", "--braid", "2: 1 1 1", "--mod", "7", "--abf", "3"}).out ==
        "modulus = 7\nt = 3\ncount = 49\ndimension = 2\n");
  CHECK(run({"color", "--braid", "2: 1 1 1", "--mod", "9"}).out ==
        "modulus = 9\ncount = 27\ninvariant_factors = 1 3 0\n");
  CHECK(run({"color", "--conway", "T(2,3)", "--closure", "num", "--mod", "7"}).out ==
        "modulus = 7\ncount = 49\ndimension = 2\n");
}

TEST_CASE("boundary") {
  CHECK(run({"boundary", "--conway", "(r(3)*r(-3))", "--virtual"}).out == "n = 2\nvirtual_index = 3\n");
  CHECK(run({"boundary", "--conway", "T(3,2)", "--p", "3"}).out ==
        "n = 2\np = 3\npsi.dim = 2\npsi.row = 1 1 0 0\npsi.row = 0 0 1 1\n"
        "psi_hat.dim = 1\npsi_hat.row = 1 0\nisotropic = yes\nlagrangian = yes\n");
  CHECK(run({"boundary", "--braid", "2: 1 1 1", "--p", "3"}).code == 2);
}

TEST_CASE("lagrangians and census") {
  CHECK(run({"lagrangians", "--p", "3", "--n", "2", "--realize"}).out ==
        "p = 3\nn = 2\nformula = 4\nenumerated = 4\nrealized = 4\nunrealized = 0\ncandidates = 4\n"
        "witness [(0 1)] = 0\nwitness [(1 0)] = inf\nwitness [(1 1)] = -1\nwitness [(1 2)] = 1\n");
  CHECK(run({"lagrangians", "--p", "13", "--n", "6", "--count-only", "--formula"}).out == "55476773037482720\n");
  CHECK(run({"lagrangians", "--p", "13", "--n", "6", "--count-only"}).code == 3);
  CHECK(run({"lagrangians", "--p", "4", "--n", "2"}).code == 2);
  CHECK(run({"census", "--n", "4"}).out ==
        "n = 4\ncensus = 105\nproduct_2i_plus_1 = 105\nproduct_2_pow_i_plus_1 = 135\n"
        "matches = 2i+1\nbelow_lagrangian_count = yes\n");
}

TEST_CASE("reduce and slope") {
  CHECK(run({"reduce", "--p", "13", "--fraction", "1/5"}).out ==
        "p = 13\nfraction = 1/5\nrepresentative = -5\ntarget = -5\ncircles = 0\nstart = (0*r(-5))\nmoves = 1\n"
        "MOVE 26/5 AT root VIA T(3,1,-2,6)\n  MOVE 13/3 AT 1.0.1.0\n  MOVE 13/3 AT 1.0\n  MOVE 13/2 AT root\n"
        "final = -5\nreplay = ok\n");
  CHECK(run({"reduce", "--p", "5", "--family"}).out == "p = 5\nfamily = -2 -1 0 1 2 inf\n");
  CHECK(run({"slope", "--mq", "2,3", "--shift", "5/2"}).out ==
        "mq_fraction = 7/3\nshift_minus = 5/3\nshift_plus = -5/7\n");
  CHECK(run({"slope", "--conway", "T(2,3,2)"}).out ==
        "expression = T(2,3,2)\ncrossings = 7\nrational = yes\nslope = 16/7\nterms = 2 3 2\n");
  const Result bad = run({"slope", "--conway", "(1*"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("position") != std::string::npos);
}

TEST_CASE("move-check") {
  CHECK(run({"move-check", "--braid", "2: 1 1 1", "--p", "3", "--fraction", "3", "--sites", "10"}).out ==
        "p = 3\nfraction = 3\nsites = 10\ncount = 9\nchanged = 0\n");
  CHECK(run({"move-check", "--braid", "2: 1 1 1", "--p", "3", "--fraction", "2"}).code == 2);
}

TEST_CASE("burnside, obstruct and braid-quotient") {
  CHECK(run({"burnside", "order", "-r", "3"}).out == "order = 2187\n");
  CHECK(run({"burnside", "enumerate", "-r", "2"}).out == "elements = 27\n");
  CHECK(run({"burnside", "quotient", "-r", "2", "--relator", "1", "--relator", "2"}).out ==
        "rank = 2\nrelators = 2\nquotient_order = 1\n");
  CHECK(run({"burnside", "eval", "-r", "2", "1 1 1"}).out.rfind("TRIVIAL\n", 0) == 0);
  const Result chen = run({"obstruct", "--chen"});
  CHECK(chen.code == 0);
  CHECK(chen.out.find("verdict = OBSTRUCTED\n") != std::string::npos);
  CHECK(run({"obstruct", "--braid", "2: 1 1 1", "--kill", "2"}).out ==
        "braid = 2: 1 1 1\nrank = 1\ntri = 9\ncomponents = 1\nkill 2 = INCONCLUSIVE\n"
        "kill 2 words_checked = yes\nverdict = INCONCLUSIVE\n");
  CHECK(run({"braid-quotient", "--n", "3", "--k", "4", "--w1", "1 2 1 2 1 2 1 2 1 2 1 2", "--w2",
             "1 -2 1 -2 1 -2"})
            .out == "generators = 2\nrelators = 3\norder = 96\nequal = yes\n");
  CHECK(run({"braid-quotient", "--presentation", data + "/b3_cube.pres", "--strategy", "hlt"}).out ==
        "generators = 2\nrelators = 3\norder = 24\n");
  CHECK(run({"braid-quotient", "--n", "3", "--k", "4", "--budget", "20"}).code == 3);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"tri"}).code == 2);
  CHECK(run({"tri", "--braid", "2: 3"}).code == 2);
  CHECK(run({"tri", "--braid", "2: 1", "--conway", "1"}).code == 2);
  CHECK(run({"color", "--braid", "2: 1", "--mod", "1"}).code == 2);
  CHECK(run({"tri", "--diagram", "/nonexistent"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("reports are deterministic") {
  const std::vector<std::vector<std::string>> cmds{
      {"lagrangians", "--p", "3", "--n", "3", "--realize"},
      {"lagrangians", "--p", "5", "--n", "3", "--sample", "20", "--formula"},
      {"move-check", "--braid", "3: 1 -2 1 -2", "--p", "5", "--fraction", "5/2", "--sites", "25", "--seed", "9"},
      {"braid-quotient", "--n", "3", "--k", "4", "--classes"},
      {"obstruct", "--braid", "3: 1 -2 1 -2 1 -2", "--relators", "--quotient"},
  };
  for (const auto& c : cmds) {
    const Result a = run(c), b = run(c);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

}  // TEST_SUITE
