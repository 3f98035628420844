#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "fuzzy/io.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "fuzzy");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out;
  std::ostringstream err;
  const int code = fuzzy::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(FUZZY_DATA_DIR) + "/" + name; }

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("foset commands") {
  CHECK(cli({"foset", "verify", data("chain3.json")}).out == "valid fuzzy order\n");
  CHECK(cli({"foset", "sup", data("chain3.json"), "a", "b"}).out == "b\n");
  CHECK(cli({"foset", "inf", data("chain3.json"), "b", "c"}).out == "b\n");
  CHECK(cli({"foset", "sup", data("antichain2.json"), "a", "b"}).out == "none\n");
  CHECK(cli({"foset", "lattice", data("chain3.json")}).out == "true\n");
  CHECK(cli({"foset", "join", data("chain3.json"), "a", "c"}).out == "c\n");
  CHECK(cli({"foset", "meet", data("chain3.json"), "a", "c"}).out == "a\n");

  const Result broken = cli({"foset", "verify", data("reflexivity-broken.json")});
  CHECK(broken.code == 1);
  CHECK(contains(broken.out, "reflexivity violation: a"));

  const Result unknown = cli({"foset", "sup", data("chain3.json"), "a", "zz"});
  CHECK(unknown.code == 2);
  CHECK(contains(unknown.err, "UnknownElement"));
}

TEST_CASE("space commands") {
  CHECK(cli({"space", "abs", data("pointwise3.json"), "(1,-2,0)"}).out == "(1, 2, 0)\n");
  CHECK(cli({"space", "decompose", data("pointwise2.json"), "(3,0)", "(2,1)", "(2,-1)"}).out ==
        "(2, 0) + (1, 0)\n");
  CHECK(cli({"space", "archimedean", data("lex.json")}).out == "false; witness x=(0, 1) bounded by (1, 0)\n");
  CHECK(cli({"space", "archimedean", data("pointwise3.json")}).out == "true\n");
  CHECK(cli({"space", "mu", data("pointwise2.json"), "(0,0)", "(1,2)"}).out == "2/3\n");
  CHECK(cli({"space", "join", data("lex.json"), "(-1,100)", "(1,-100)"}).out == "(1, -100)\n");
  CHECK(cli({"space", "mu", R"({"family":"lex","dimension":2,"grade_c":"3/4"})", "(-1,100)", "(0,0)"}).out ==
        "3/4\n");

  const Result dim = cli({"space", "abs", data("pointwise3.json"), "(1,2)"});
  CHECK(dim.code == 2);
  CHECK(contains(dim.err, "DimensionError"));
  const Result dom = cli({"space", "decompose", data("pointwise2.json"), "(3,3)", "(1,0)", "(0,1)"});
  CHECK(dom.code == 2);
  CHECK(contains(dom.err, "NotDominated"));
}

TEST_CASE("ideal and band commands") {
  CHECK(cli({"band", "generate", data("pointwise3.json"), "(1,0,0)", "(0,0,2)"}).out == "pointwise support {1,3}\n");
  CHECK(cli({"band", "project", data("pointwise3.json"), "{1,3}", "(5,7,2)"}).out == "(5, 0, 2)\n");
  CHECK(cli({"band", "complement", data("pointwise3.json"), "{1,3}"}).out == "pointwise support {2}\n");
  CHECK(cli({"band", "complement", data("lex.json"), "axis"}).out == "lex zero\n");
  CHECK(cli({"band", "principal", data("pointwise2.json"), "(1,0)", "(3,5)"}).out.starts_with("(3, 0)"));
  CHECK(cli({"band", "contains", data("pointwise2.json"), "(2,1)", "(3,5)"}).out.starts_with("true; stabilizes at n=5"));
  CHECK(cli({"ideal", "generate", data("lex.json"), "(0,5)"}).out == "lex axis\n");
  CHECK(cli({"ideal", "contains", data("pointwise3.json"), "{1,3}", "(3,0,-1)"}).out == "true\n");
  CHECK(cli({"ideal", "sum", data("pointwise3.json"), "{1}", "{2}"}).out == "pointwise support {1,2}\n");
  CHECK(cli({"ideal", "dense", data("lex.json"), "axis"}).out == "true\n");
  CHECK(cli({"ideal", "contains", data("pointwise3.json"), R"({"family":"pointwise","support":[2]})", "(0,1,0)"}).out ==
        "true\n");

  const Result axis = cli({"band", "project", data("lex.json"), "axis", "(1,1)"});
  CHECK(axis.code == 2);
  CHECK(contains(axis.err, "not a projection band"));
  const Result json = cli({"--json", "band", "project", data("lex.json"), "axis", "(1,1)"});
  CHECK(json.code == 2);
  const fuzzy::Json error = fuzzy::parse_json(json.out)["error"];
  CHECK(error["code"] == "NotProjectionBand");
  CHECK(contains(error["message"].get<std::string>(), "not a projection band"));
}

TEST_CASE("project commands") {
  CHECK(cli({"project", "matrix", data("pointwise2.json"), "{2}"}).out == "[[0, 0], [0, 1]]\n");
  CHECK(cli({"project", "apply", data("pointwise3.json"), "{1,3}", "(5,7,2)"}).out == "(5, 0, 2)\n");
  CHECK(cli({"project", "positive", data("pointwise2.json"), data("pointwise2.json"), "[[1,0],[-1,1]]"}).out ==
        "false; witness x=(1, 0) maps to (1, -1)\n");
  const Result gap = cli({"project", "monotone", R"({"family":"pointwise","dimension":1,"grade_c":"4/5"})",
                          R"({"family":"pointwise","dimension":1,"grade_c":"2/3"})", "[[1]]"});
  CHECK(gap.code == 0);
  CHECK(contains(gap.out, "mu=4/5 but nu=2/3"));
  CHECK(cli({"project", "compare", data("pointwise3.json"), "{1}", "{1,3}"}).out ==
        "included true, absorbing true, ordered true\n");
  CHECK(contains(cli({"project", "classify", data("pointwise2.json"), "[[1,1],[0,0]]"}).out, "not a band projection"));
}

TEST_CASE("theorem runs, certificates and exit codes") {
  const Result run = cli({"--cases", "20", "theorems", "projections"});
  CHECK(run.code == 0);
  CHECK(contains(run.out, "projection.complement-identity"));
  CHECK(contains(run.out, "projection.intersection-product"));
  CHECK(contains(run.out, "projection.sum-formula"));
  CHECK(contains(run.out, "total failures: 0"));

  const Result a = cli({"--json", "--seed", "9", "--cases", "20", "theorems", "riesz"});
  const Result b = cli({"--json", "--seed", "9", "--cases", "20", "theorems", "riesz"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const fuzzy::Json j = fuzzy::parse_json(a.out);
  CHECK(j["seed"] == 9);
  CHECK(j["failures"] == 0);

  CHECK(cli({"certify", data("certificate-harmonic.json")}).code == 0);
  const Result rejected = cli({"certify", data("certificate-offset.json")});
  CHECK(rejected.code == 1);
  CHECK(contains(rejected.out, "first violation at n=2"));

  CHECK(cli({"theorems", "bogus"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"--help"}).code == 0);
  const Result missing = cli({"--json", "foset", "verify", "/nonexistent.json"});
  CHECK(missing.code == 2);
  CHECK(fuzzy::parse_json(missing.out)["error"]["code"] == "ParseError");
}
