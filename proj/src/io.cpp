#include "fuzzy/io.hpp"

#include <fstream>
#include <sstream>

#include "fuzzy/error.hpp"

namespace fuzzy {

namespace {

[[noreturn]] void bad(const std::string& message) { fail(ErrorCode::ParseError, message); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object with field \"") + key + "\"");
  const auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) bad(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

std::size_t count_field(const Json& v, const char* what) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    bad(std::string(what) + " must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    bad("invalid JSON at line " + std::to_string(line) + ", column " + std::to_string(column));
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open \"" + path + "\"");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_json(text.str());
  } catch (const Error& e) {
    bad(path + ": " + e.what());
  }
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.dump());
  bad("expected a rational string such as \"2/3\", got " + j.dump());
}

Json to_json(const Rational& r) { return format_rational(r); }

RationalVector vector_from_json(const Json& j) {
  if (!j.is_array()) bad("expected a vector (array of rationals), got " + j.dump());
  std::vector<Rational> coords;
  for (const auto& c : j) coords.push_back(rational_from_json(c));
  return RationalVector(std::move(coords));
}

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& c : v.coordinates()) out.push_back(format_rational(c));
  return out;
}

MembershipMatrix foset_from_json(const Json& j) {
  const Json& elements = field(j, "elements");
  if (!elements.is_array()) bad("\"elements\" must be an array of labels");
  std::vector<std::string> labels;
  for (const auto& e : elements) {
    if (!e.is_string()) bad("element labels must be strings");
    labels.push_back(e.get<std::string>());
  }
  std::vector<GradeEntry> entries;
  if (j.contains("grades")) {
    const Json& grades = j["grades"];
    if (!grades.is_array()) bad("\"grades\" must be an array of [from, to, grade] triples");
    for (const auto& g : grades) {
      if (!g.is_array() || g.size() != 3 || !g[0].is_string() || !g[1].is_string()) {
        bad("grade entry " + g.dump() + " must be [from, to, grade]");
      }
      entries.push_back({g[0].get<std::string>(), g[1].get<std::string>(), Grade(rational_from_json(g[2]))});
    }
  }
  return MembershipMatrix(std::move(labels), entries);
}

Json to_json(const MembershipMatrix& m) {
  Json grades = Json::array();
  for (std::size_t x = 0; x < m.size(); ++x) {
    for (std::size_t y = 0; y < m.size(); ++y) {
      const bool default_grade = x == y ? m.grade(x, y) == Grade::one() : m.grade(x, y).is_zero();
      if (!default_grade) grades.push_back(Json::array({m.label(x), m.label(y), format_grade(m.grade(x, y))}));
    }
  }
  return Json{{"elements", m.elements()}, {"grades", grades}};
}

SpaceSpec space_from_json(const Json& j) {
  const std::string family = string_field(j, "family");
  Family f;
  if (family == "pointwise") {
    f = Family::Pointwise;
  } else if (family == "lex") {
    f = Family::Lex;
  } else {
    bad("unknown space family \"" + family + "\"");
  }
  const std::size_t dimension = j.contains("dimension") ? count_field(j["dimension"], "dimension")
                                                        : (f == Family::Lex ? 2 : 0);
  const Rational c = j.contains("grade_c") ? rational_from_json(j["grade_c"]) : Rational(2, 3);
  return SpaceSpec(f, dimension, c);
}

Json to_json(const SpaceSpec& s) {
  return Json{{"family", std::string(to_string(s.family()))},
              {"dimension", s.dimension()},
              {"grade_c", format_rational(s.grade_c())}};
}

Handle handle_from_json(const Json& j, const SpaceSpec& s) {
  const std::string family = string_field(j, "family");
  Handle h = Handle::zero(s);
  if (family == "lex") {
    const std::string kind = string_field(j, "kind");
    if (kind == "zero") h = Handle::lex(LexKind::Zero);
    else if (kind == "axis") h = Handle::lex(LexKind::Axis);
    else if (kind == "full") h = Handle::lex(LexKind::Full);
    else bad("unknown lex handle kind \"" + kind + "\"");
  } else if (family == "pointwise") {
    const Json& support = field(j, "support");
    if (!support.is_array()) bad("\"support\" must be an array of 1-based indices");
    std::vector<std::size_t> indices;
    for (const auto& i : support) indices.push_back(count_field(i, "support index"));
    const std::size_t dimension = j.contains("dimension") ? count_field(j["dimension"], "dimension") : s.dimension();
    h = Handle::pointwise(dimension, std::move(indices));
  } else {
    bad("unknown handle family \"" + family + "\"");
  }
  check_handle(s, h);
  return h;
}

Json to_json(const Handle& h) {
  if (h.family() == Family::Lex) return Json{{"family", "lex"}, {"kind", std::string(to_string(h.kind()))}};
  return Json{{"family", "pointwise"}, {"dimension", h.dimension()}, {"support", h.support()}};
}

OperatorMatrix operator_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("operator must be a nonempty array of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  std::vector<Rational> entries;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols || cols == 0) bad("operator rows must be arrays of equal length");
    for (const auto& e : row) entries.push_back(rational_from_json(e));
  }
  return OperatorMatrix(j.size(), cols, std::move(entries));
}

Json to_json(const OperatorMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(format_rational(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

DominatingFamily family_term_from_json(const Json& j) {
  const std::string kind = string_field(j, "kind");
  RationalVector base = vector_from_json(field(j, "base"));
  DominatingFamily f;
  if (kind == "harmonic") {
    f = DominatingFamily::harmonic(std::move(base));
  } else if (kind == "geometric") {
    f = DominatingFamily::geometric(std::move(base), rational_from_json(field(j, "ratio")));
  } else {
    bad("unknown dominating family kind \"" + kind + "\"");
  }
  if (j.contains("coefficient")) {
    const Rational c = rational_from_json(j["coefficient"]);
    if (sgn(c) <= 0) bad("family coefficients must be positive");
    f = f.scaled(c);
  }
  return f;
}

}  // namespace

DominatingFamily family_from_json(const Json& j) {
  if (!j.is_array()) return family_term_from_json(j);
  if (j.empty()) bad("a dominating family needs at least one term");
  DominatingFamily out = family_term_from_json(j[0]);
  for (std::size_t i = 1; i < j.size(); ++i) out = out + family_term_from_json(j[i]);
  return out;
}

Json to_json(const DominatingFamily& f) {
  Json out = Json::array();
  for (const auto& t : f.terms()) {
    Json term{{"kind", t.kind == DominatingFamily::Kind::Geometric ? "geometric" : "harmonic"},
              {"base", to_json(t.base)}};
    if (t.kind == DominatingFamily::Kind::Geometric) term["ratio"] = format_rational(t.ratio);
    if (t.coefficient != 1) term["coefficient"] = format_rational(t.coefficient);
    out.push_back(std::move(term));
  }
  return out;
}

SequenceSpec sequence_from_json(const Json& j) {
  const std::string kind = string_field(j, "kind");
  if (kind == "prefix") {
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) bad("\"terms\" must be an array of vectors");
    std::vector<RationalVector> prefix;
    for (const auto& t : terms) prefix.push_back(vector_from_json(t));
    std::optional<RationalVector> tail;
    if (j.contains("tail")) tail = vector_from_json(j["tail"]);
    return SequenceSpec::prefix(std::move(prefix), std::move(tail));
  }
  if (kind == "closed_form") {
    const std::string coefficient = string_field(j, "coefficient");
    CoefficientKind c;
    if (coefficient == "geometric") c = CoefficientKind::Geometric;
    else if (coefficient == "harmonic") c = CoefficientKind::Harmonic;
    else if (coefficient == "alternating_harmonic") c = CoefficientKind::AlternatingHarmonic;
    else if (coefficient == "alternating") c = CoefficientKind::Alternating;
    else if (coefficient == "constant") c = CoefficientKind::Constant;
    else bad("unknown coefficient \"" + coefficient + "\"");
    const Rational ratio = j.contains("ratio") ? rational_from_json(j["ratio"]) : Rational(1, 2);
    return SequenceSpec::closed_form(vector_from_json(field(j, "base")), vector_from_json(field(j, "direction")), c,
                                     ratio);
  }
  if (kind == "combination") {
    return SequenceSpec::combination(rational_from_json(field(j, "a")), sequence_from_json(field(j, "first")),
                                     rational_from_json(field(j, "b")), sequence_from_json(field(j, "second")));
  }
  if (kind == "pos" || kind == "neg" || kind == "abs") {
    const UnaryOp op = kind == "pos" ? UnaryOp::PositivePart
                                     : (kind == "neg" ? UnaryOp::NegativePart : UnaryOp::Absolute);
    return SequenceSpec::unary(op, sequence_from_json(field(j, "of")));
  }
  if (kind == "join" || kind == "meet") {
    return SequenceSpec::binary(kind == "join" ? BinaryOp::Join : BinaryOp::Meet,
                                sequence_from_json(field(j, "first")), sequence_from_json(field(j, "second")));
  }
  bad("unknown sequence kind \"" + kind + "\"");
}

CertificateInput certificate_from_json(const Json& j, std::size_t default_horizon) {
  const std::size_t horizon = j.contains("horizon") ? count_field(j["horizon"], "horizon") : default_horizon;
  return CertificateInput{space_from_json(field(j, "space")), sequence_from_json(field(j, "sequence")),
                          vector_from_json(field(j, "limit")), family_from_json(field(j, "family")), horizon};
}

Json to_json(const CertificateReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) violations.push_back(Json{{"n", v.n}, {"grade", format_grade(v.grade)}});
  Json out{{"accepted", r.accepted()},
           {"verified_horizon", r.verified_horizon},
           {"monotone_ok", r.monotone_ok},
           {"violations", violations},
           {"inf_zero_status", std::string(to_string(r.inf_zero_status))}};
  if (r.monotone_failure) out["monotone_failure"] = *r.monotone_failure;
  return out;
}

}  // namespace fuzzy
