#include <doctest.h>

#include "fuzzy/error.hpp"
#include "fuzzy/io.hpp"

using namespace fuzzy;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::SpecError;
}

}  // namespace

TEST_CASE("rationals parse exactly and serialize as strings") {
  CHECK(parse_rational("-1.25") == Rational(-5, 4));
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(format_rational(parse_rational("4/2")) == "2");
  CHECK(code_of([] { parse_rational("1/0"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_grade("3/2"); }) == ErrorCode::InvalidGrade);
  CHECK(to_json(Rational(2, 3)) == Json("2/3"));
  CHECK(rational_from_json(Json(3)) == Rational(3));
  CHECK(to_json(RationalVector{Rational(1), Rational(-1, 2)}).dump() == R"(["1","-1/2"])");
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_json("{\n  \"a\": ,\n}");
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK(code_of([] { read_json_file("/nonexistent/file.json"); }) == ErrorCode::ParseError);
}

TEST_CASE("foset round trip") {
  const Json j = parse_json(R"({"elements": ["a", "b"], "grades": [["a", "b", "2/3"]]})");
  const MembershipMatrix m = foset_from_json(j);
  CHECK(m.grade(0, 1) == Grade(Rational(2, 3)));
  CHECK(foset_from_json(to_json(m)) == m);
  CHECK(code_of([] { foset_from_json(parse_json(R"({"elements": ["a"], "grades": [["a", "q", "1"]]})")); }) ==
        ErrorCode::UnknownElement);
}

TEST_CASE("space and handle encodings") {
  const SpaceSpec s = space_from_json(parse_json(R"({"family": "pointwise", "dimension": 3, "grade_c": "3/4"})"));
  CHECK(s == SpaceSpec::pointwise(3, Rational(3, 4)));
  CHECK(space_from_json(to_json(s)) == s);
  CHECK(code_of([] { space_from_json(parse_json(R"({"family": "lex", "dimension": 3, "grade_c": "2/3"})")); }) ==
        ErrorCode::InvalidSpace);

  const Handle h = handle_from_json(parse_json(R"({"family": "pointwise", "support": [3, 1]})"), s);
  CHECK(h == Handle::pointwise(3, {1, 3}));
  CHECK(handle_from_json(to_json(h), s) == h);
  const SpaceSpec lex = SpaceSpec::lex();
  CHECK(handle_from_json(parse_json(R"({"family": "lex", "kind": "axis"})"), lex) == Handle::lex(LexKind::Axis));
  CHECK(code_of([&] { handle_from_json(parse_json(R"({"family": "lex", "kind": "axis"})"), s); }) ==
        ErrorCode::InvalidHandle);
}

TEST_CASE("operators, families, sequences and certificates") {
  const OperatorMatrix T = operator_from_json(parse_json(R"([["1", "1/2"], [0, 1]])"));
  CHECK(T(0, 1) == Rational(1, 2));
  CHECK(operator_from_json(to_json(T)) == T);
  CHECK(code_of([] { operator_from_json(parse_json(R"([["1"], ["1", "2"]])")); }) == ErrorCode::ParseError);

  const DominatingFamily f = family_from_json(parse_json(
      R"([{"kind": "harmonic", "base": ["1", "0"]}, {"kind": "geometric", "base": ["0", "2"], "ratio": "1/2", "coefficient": "3"}])"));
  CHECK(f.at(1) == RationalVector{Rational(1), Rational(3)});
  CHECK(family_from_json(to_json(f)).at(5) == f.at(5));

  const Json cert = parse_json(R"({
    "space": {"family": "pointwise", "dimension": 2, "grade_c": "2/3"},
    "sequence": {"kind": "closed_form", "base": ["1", "0"], "direction": ["1", "0"], "coefficient": "constant"},
    "limit": ["1", "0"],
    "family": {"kind": "harmonic", "base": ["1", "0"]}
  })");
  const CertificateInput in = certificate_from_json(cert, 16);
  CHECK(in.horizon == 16);
  const CertificateReport r = check_convergence_certificate(in.space, in.sequence, in.limit, in.family, in.horizon);
  const Json out = to_json(r);
  CHECK(out["accepted"] == false);
  CHECK(out["violations"][0]["n"] == 2);
}

TEST_CASE("every error code has a distinct name") {
  std::vector<std::string_view> names;
  for (int c = 0; c <= static_cast<int>(ErrorCode::CertificateRejected); ++c) {
    const auto name = to_string(static_cast<ErrorCode>(c));
    CHECK(std::find(names.begin(), names.end(), name) == names.end());
    names.push_back(name);
  }
  CHECK(names.size() == 20);
}
