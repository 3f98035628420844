#include "commands.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "fuzzy/checks/suite.hpp"
#include "fuzzy/error.hpp"
#include "fuzzy/io.hpp"
#include "fuzzy/projections.hpp"

namespace fuzzy::cli {

namespace {

struct RunConfig {
  bool json = false;
  std::uint64_t seed = 42;
  std::size_t cases = 500;
  std::size_t horizon = kDefaultHorizon;
};

struct Outcome {
  std::string text;
  Json json;
  int code = kSuccess;
};

[[noreturn]] void usage(const std::string& message) { fail(ErrorCode::ParseError, message); }

void need(const std::vector<std::string>& args, std::size_t count, const std::string& what) {
  if (args.size() != count) usage(what);
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\n");
  if (begin == std::string::npos) return "";
  return s.substr(begin, s.find_last_not_of(" \t\n") - begin + 1);
}

// Inline JSON when the argument starts with '{' or '[', a file path otherwise.
Json load_json(const std::string& arg) {
  const std::string t = trim(arg);
  if (!t.empty() && (t.front() == '{' || t.front() == '[')) return parse_json(t);
  return read_json_file(arg);
}

SpaceSpec load_space(const std::string& arg) { return space_from_json(load_json(arg)); }

bool looks_like_handle(const std::string& arg) {
  const std::string t = trim(arg);
  return t == "zero" || t == "full" || t == "axis" || (!t.empty() && t.front() == '{') ||
         (t.size() > 5 && t.ends_with(".json"));
}

// "zero", "full", "axis", a support set "{1,3}", an inline JSON handle or a
// JSON file.
Handle load_handle(const SpaceSpec& s, const std::string& arg) {
  const std::string t = trim(arg);
  if (t == "zero") return Handle::zero(s);
  if (t == "full") return Handle::full(s);
  if (t == "axis") {
    const Handle h = Handle::lex(LexKind::Axis);
    check_handle(s, h);
    return h;
  }
  if (!t.empty() && t.front() == '{' && t.find('"') == std::string::npos) {
    if (t.back() != '}') usage("support set \"" + t + "\" must be written {i,j,...}");
    std::vector<std::size_t> support;
    std::string body = t.substr(1, t.size() - 2);
    std::size_t pos = 0;
    while (pos < body.size()) {
      const std::size_t comma = std::min(body.find(',', pos), body.size());
      const std::string item = trim(body.substr(pos, comma - pos));
      if (!item.empty()) {
        if (item.find_first_not_of("0123456789") != std::string::npos) usage("bad support index \"" + item + "\"");
        support.push_back(std::stoul(item));
      }
      pos = comma + 1;
    }
    if (s.family() == Family::Lex) fail(ErrorCode::InvalidHandle, "lex handles are zero, axis or full");
    Handle h = Handle::pointwise(s.dimension(), std::move(support));
    check_handle(s, h);
    return h;
  }
  return handle_from_json(load_json(arg), s);
}

RationalVector load_vector(const SpaceSpec& s, const std::string& arg) {
  RationalVector v = parse_vector(arg);
  check_dimension(s, v);
  return v;
}

std::vector<RationalVector> load_vectors(const SpaceSpec& s, const std::vector<std::string>& args,
                                         std::size_t from = 0) {
  std::vector<RationalVector> out;
  for (std::size_t i = from; i < args.size(); ++i) out.push_back(load_vector(s, args[i]));
  return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

Outcome boolean(bool b) { return {yes_no(b), Json{{"value", b}}}; }

Outcome vector_outcome(const RationalVector& v) { return {format_vector(v), Json{{"vector", to_json(v)}}}; }

Outcome handle_outcome(const Handle& h) {
  return {format_handle(h), Json{{"handle", to_json(h)}, {"description", format_handle(h)}}};
}

// foset

Outcome run_foset(const std::string& action, const std::string& file, const std::vector<std::string>& args) {
  const MembershipMatrix m = foset_from_json(load_json(file));
  if (action == "verify") {
    const AxiomReport r = validate_fuzzy_order(m);
    Json refl = Json::array();
    Json anti = Json::array();
    Json trans = Json::array();
    std::string text = r.is_fuzzy_order() ? "valid fuzzy order" : "not a fuzzy order";
    for (auto x : r.reflexivity_violations) {
      refl.push_back(m.label(x));
      text += "\nreflexivity violation: " + m.label(x) + " (mu = " + format_grade(m.grade(x, x)) + ")";
    }
    for (const auto& v : r.antisymmetry_violations) {
      anti.push_back(Json{{"x", m.label(v.x)}, {"y", m.label(v.y)}, {"grade_sum", format_rational(v.grade_sum)}});
      text += "\nantisymmetry violation: " + m.label(v.x) + ", " + m.label(v.y) + " (grade sum " +
              format_rational(v.grade_sum) + ")";
    }
    for (const auto& v : r.transitivity_violations) {
      trans.push_back(Json{{"x", m.label(v.x)},
                           {"y", m.label(v.y)},
                           {"z", m.label(v.z)},
                           {"required", format_grade(v.required)},
                           {"actual", format_grade(v.actual)}});
      text += "\ntransitivity violation: " + m.label(v.x) + " -> " + m.label(v.y) + " -> " + m.label(v.z) +
              " requires " + format_grade(v.required) + ", has " + format_grade(v.actual);
    }
    return {text,
            Json{{"valid", r.is_fuzzy_order()}, {"reflexivity", refl}, {"antisymmetry", anti}, {"transitivity", trans}},
            r.is_fuzzy_order() ? kSuccess : kCheckFailure};
  }
  if (action == "sup" || action == "inf" || action == "join" || action == "meet") {
    if ((action == "join" || action == "meet") && args.size() != 2) usage(action + " needs exactly two elements");
    const ElementSet subset = m.indices_of(args);
    const bool up = action == "sup" || action == "join";
    const auto found = up ? supremum(m, subset) : infimum(m, subset);
    const std::string label = found ? m.label(*found) : "none";
    return {label, Json{{"element", found ? Json(label) : Json(nullptr)}}};
  }
  if (action == "lattice") return boolean(is_lattice(m));
  if (action == "directed") {
    const ElementSet subset = m.indices_of(args);
    const bool right = is_directed(m, subset, Direction::Right);
    const bool left = is_directed(m, subset, Direction::Left);
    return {"right " + yes_no(right) + ", left " + yes_no(left), Json{{"right", right}, {"left", left}}};
  }
  if (action == "closure") {
    const MembershipMatrix closed = max_min_closure(m);
    const Json j = to_json(closed);
    return {j.dump(), j};
  }
  usage("unknown foset action \"" + action + "\"");
}

// space

Outcome run_space(const RunConfig& cfg, const std::string& action, const std::string& spec,
                  const std::vector<std::string>& args) {
  const SpaceSpec s = load_space(spec);
  if (action == "mu") {
    need(args, 2, "mu needs two vectors");
    const Grade g = mu(s, load_vector(s, args[0]), load_vector(s, args[1]));
    return {format_grade(g), Json{{"grade", format_grade(g)}, {"holds", g.holds()}}};
  }
  if (action == "join" || action == "meet") {
    need(args, 2, action + " needs two vectors");
    const RationalVector x = load_vector(s, args[0]);
    const RationalVector y = load_vector(s, args[1]);
    return vector_outcome(action == "join" ? join(s, x, y) : meet(s, x, y));
  }
  if (action == "abs" || action == "pos" || action == "neg") {
    need(args, 1, action + " needs one vector");
    const RationalVector x = load_vector(s, args[0]);
    return vector_outcome(action == "abs" ? abs(s, x) : (action == "pos" ? pos_part(s, x) : neg_part(s, x)));
  }
  if (action == "disjoint") {
    need(args, 2, "disjoint needs two vectors");
    return boolean(is_disjoint(s, load_vector(s, args[0]), load_vector(s, args[1])));
  }
  if (action == "decompose") {
    if (args.size() < 2) usage("decompose needs x and at least one y");
    const DecompositionResult r = riesz_decompose(s, load_vector(s, args[0]), load_vectors(s, args, 1));
    std::string text;
    Json parts = Json::array();
    for (std::size_t i = 0; i < r.parts.size(); ++i) {
      text += (i ? " + " : "") + format_vector(r.parts[i]);
      parts.push_back(to_json(r.parts[i]));
    }
    return {text, Json{{"parts", parts}}};
  }
  if (action == "archimedean") {
    const SpaceProperties p = space_properties(s);
    Json j{{"archimedean", p.archimedean}, {"dedekind_note", p.dedekind_note}};
    std::string text = yes_no(p.archimedean);
    if (p.witness) {
      text += "; witness x=" + format_vector(p.witness->first) + " bounded by " + format_vector(p.witness->second);
      j["witness"] = Json{{"x", to_json(p.witness->first)}, {"bound", to_json(p.witness->second)}};
    }
    return {text, j};
  }
  if (action == "bounded") {
    need(args, 2, "bounded needs x and a bound y");
    const BoundednessReport r = is_nx_bounded(s, load_vector(s, args[0]), load_vector(s, args[1]), cfg.horizon);
    Json j{{"horizon", r.horizon}, {"all_checks_pass", r.all_checks_pass},
           {"first_failure", r.first_failure ? Json(*r.first_failure) : Json(nullptr)},
           {"closed_form_bounded", r.closed_form_bounded}};
    std::string text = yes_no(r.all_checks_pass) + " up to n=" + std::to_string(r.horizon);
    if (r.first_failure) text += "; first failure at n=" + std::to_string(*r.first_failure);
    text += "; bounded in closed form: " + yes_no(r.closed_form_bounded);
    return {text, j};
  }
  usage("unknown space action \"" + action + "\"");
}

// ideal and band

Outcome complement_outcome(const SpaceSpec& s, const std::vector<std::string>& args) {
  if (args.size() == 1 && looks_like_handle(args[0])) return handle_outcome(disjoint_complement(s, load_handle(s, args[0])));
  const std::vector<RationalVector> D = load_vectors(s, args);
  return handle_outcome(disjoint_complement(s, std::span<const RationalVector>(D)));
}

Outcome run_ideal(const RunConfig& cfg, const std::string& action, const std::string& spec,
                  const std::vector<std::string>& args) {
  const SpaceSpec s = load_space(spec);
  if (action == "generate") return handle_outcome(ideal_generated(s, load_vectors(s, args)));
  if (action == "contains") {
    need(args, 2, "contains needs a handle and a vector");
    return boolean(ideal_contains(s, load_handle(s, args[0]), load_vector(s, args[1])));
  }
  if (action == "complement") return complement_outcome(s, args);
  if (action == "dense") {
    need(args, 1, "dense needs a handle");
    return boolean(is_order_dense(s, load_handle(s, args[0])));
  }
  if (action == "sum" || action == "intersect") {
    need(args, 2, action + " needs two handles");
    const Handle a = load_handle(s, args[0]);
    const Handle b = load_handle(s, args[1]);
    return handle_outcome(action == "sum" ? ideal_sum(s, a, b) : ideal_intersection(s, a, b));
  }
  if (action == "hull") {
    if (args.empty()) usage("hull needs x followed by the members of A");
    return boolean(solid_hull_contains(s, load_vectors(s, args, 1), load_vector(s, args[0])));
  }
  if (action == "solid") {
    const SolidityReport r = is_solid(s, load_vectors(s, args));
    Json j{{"solid", r.solid}};
    std::string text = yes_no(r.solid);
    if (r.witness) {
      text += "; witness x=" + format_vector(r.witness->first) + " dominated by " + format_vector(r.witness->second);
      j["witness"] = Json{{"x", to_json(r.witness->first)}, {"member", to_json(r.witness->second)}};
    }
    return {text, j};
  }
  if (action == "subspace") {
    const SubspaceReport r = is_riesz_subspace(s, load_vectors(s, args), 256, cfg.seed);
    Json j{{"closed", r.closed}, {"closed_form", r.closed_form}};
    std::string text = yes_no(r.closed) + (r.closed_form ? " (closed form)" : " (sampled)");
    if (r.witness) {
      text += "; witness x=" + format_vector(r.witness->x) + ", y=" + format_vector(r.witness->y) + " with " +
              format_vector(r.witness->join) + " outside the span";
      j["witness"] = Json{{"x", to_json(r.witness->x)}, {"y", to_json(r.witness->y)},
                          {"lattice_value", to_json(r.witness->join)}};
    }
    return {text, j};
  }
  if (action == "list") {
    std::string text;
    Json list = Json::array();
    for (const Handle& h : all_handles(s)) {
      text += (text.empty() ? "" : "\n") + format_handle(h);
      list.push_back(to_json(h));
    }
    return {text, Json{{"handles", list}}};
  }
  usage("unknown ideal action \"" + action + "\"");
}

Outcome run_band(const std::string& action, const std::string& spec, const std::vector<std::string>& args) {
  const SpaceSpec s = load_space(spec);
  if (action == "generate") return handle_outcome(band_generated(s, load_vectors(s, args)));
  if (action == "contains") {
    need(args, 2, "contains needs a generator x and a vector y");
    const StabilizationTrace t = principal_band_contains(s, load_vector(s, args[0]), load_vector(s, args[1]));
    Json seq = Json::array();
    for (const auto& m : t.sequence) seq.push_back(to_json(m));
    Json j{{"contained", t.contained},
           {"stabilization_index", t.stabilization_index ? Json(*t.stabilization_index) : Json(nullptr)},
           {"bound", t.bound},
           {"stable_value", to_json(t.stable_value)},
           {"sequence", seq},
           {"note", t.note}};
    std::string text = yes_no(t.contained);
    if (t.stabilization_index) {
      text += "; stabilizes at n=" + std::to_string(*t.stabilization_index) + " (bound " + std::to_string(t.bound) +
              ") with value " + format_vector(t.stable_value);
    }
    if (!t.note.empty()) text += "; " + t.note;
    return {text, j};
  }
  if (action == "complement") return complement_outcome(s, args);
  if (action == "project") {
    need(args, 2, "project needs a handle and a vector");
    const Handle b = load_handle(s, args[0]);
    return vector_outcome(band_projection_operator(s, b).apply(load_vector(s, args[1])));
  }
  if (action == "principal") {
    need(args, 2, "principal needs x and y");
    const PrincipalProjection p = principal_projection(s, load_vector(s, args[0]), load_vector(s, args[1]));
    return {format_vector(p.value) + "; stabilizes at n=" + std::to_string(p.positive_index) + " and n=" +
                std::to_string(p.negative_index) + " (bound " + std::to_string(p.bound) + ")",
            Json{{"vector", to_json(p.value)},
                 {"positive_index", p.positive_index},
                 {"negative_index", p.negative_index},
                 {"bound", p.bound}}};
  }
  if (action == "projection-band") {
    need(args, 1, "projection-band needs a handle");
    return boolean(is_projection_band(s, load_handle(s, args[0])));
  }
  usage("unknown band action \"" + action + "\"");
}

// project

OperatorMatrix load_operator(const std::string& arg) { return operator_from_json(load_json(arg)); }

Outcome run_project(const RunConfig& cfg, const std::string& action, const std::vector<std::string>& args) {
  if (args.empty()) usage("project " + action + " needs a space");
  const SpaceSpec s = load_space(args[0]);
  if (action == "apply" || action == "sup") {
    need(args, 3, action + " needs a space, a handle and a vector");
    const Handle b = load_handle(s, args[1]);
    const RationalVector x = load_vector(s, args[2]);
    return vector_outcome(action == "apply" ? band_projection_operator(s, b).apply(x)
                                            : projection_by_interval_sup(s, b, x));
  }
  if (action == "matrix") {
    need(args, 2, "matrix needs a space and a handle");
    const OperatorMatrix P = band_projection_operator(s, load_handle(s, args[1]));
    return {format_matrix(P), Json{{"matrix", to_json(P)}}};
  }
  if (action == "classify") {
    need(args, 2, "classify needs a space and an operator");
    const BandProjectionVerdict v = classify_band_projection(s, load_operator(args[1]), 64, cfg.seed);
    Json j{{"band_projection", v.is_mask},   {"idempotent", v.idempotent},
           {"positive", v.positive},         {"below_identity", v.below_identity},
           {"disjoint_ranges", v.disjoint_ranges}, {"agree", v.agree()}};
    if (v.band) j["band"] = to_json(*v.band);
    std::string text = std::string(v.is_mask ? "band projection onto " + format_handle(*v.band) : "not a band projection") +
                       "\nidempotent " + yes_no(v.idempotent) + ", positive " + yes_no(v.positive) +
                       ", below identity " + yes_no(v.below_identity) + ", disjoint ranges " +
                       yes_no(v.disjoint_ranges);
    if (v.range_witness) {
      text += "\nrange witness x=" + format_vector(v.range_witness->first) + ", y=" +
              format_vector(v.range_witness->second);
    }
    return {text, j};
  }
  if (action == "positive" || action == "monotone") {
    need(args, 3, action + " needs an input space, an output space and an operator");
    const SpaceSpec out = load_space(args[1]);
    const OperatorMatrix T = load_operator(args[2]);
    if (action == "positive") {
      const PositivityReport r = is_fuzzy_positive(s, out, T);
      Json j{{"positive", r.positive}};
      std::string text = yes_no(r.positive);
      if (r.witness) {
        text += "; witness x=" + format_vector(*r.witness) + " maps to " + format_vector(T.apply(*r.witness));
        j["witness"] = to_json(*r.witness);
      }
      return {text, j};
    }
    const GradeMonotoneReport r = is_grade_monotone_positive(s, out, T, 256, cfg.seed);
    Json j{{"monotone", r.monotone}};
    std::string text = yes_no(r.monotone);
    if (r.witness) {
      text += "; witness x=" + format_vector(r.witness->x) + ", y=" + format_vector(r.witness->y) + ": mu=" +
              format_grade(r.witness->input_grade) + " but nu=" + format_grade(r.witness->output_grade);
      j["witness"] = Json{{"x", to_json(r.witness->x)},
                          {"y", to_json(r.witness->y)},
                          {"input_grade", format_grade(r.witness->input_grade)},
                          {"output_grade", format_grade(r.witness->output_grade)}};
    }
    return {text, j};
  }
  if (action == "precedes") {
    need(args, 3, "precedes needs a space and two operators");
    return boolean(operator_precedes(s, load_operator(args[1]), load_operator(args[2])));
  }
  if (action == "compare") {
    need(args, 3, "compare needs a space and two handles");
    const ProjectionComparison c = compare_projections(s, load_handle(s, args[1]), load_handle(s, args[2]));
    return {"included " + yes_no(c.included) + ", absorbing " + yes_no(c.absorbing) + ", ordered " + yes_no(c.ordered),
            Json{{"included", c.included}, {"absorbing", c.absorbing}, {"ordered", c.ordered}}};
  }
  usage("unknown project action \"" + action + "\"");
}

// theorems and certify

Outcome run_theorems(const RunConfig& cfg, const std::string& which) {
  checks::SuiteOptions options{cfg.seed, cfg.cases, cfg.horizon};
  std::vector<std::string> names;
  if (which == "all") {
    names = checks::suite_names();
  } else {
    names.push_back(which);
  }
  Json suites = Json::array();
  std::string text;
  std::size_t failures = 0;
  for (const auto& name : names) {
    const checks::SuiteResult r = checks::run_suite(name, options);
    failures += r.failures();
    suites.push_back(checks::to_json(r));
    text += checks::format_suite(r);
  }
  text += "total failures: " + std::to_string(failures);
  Json j{{"seed", cfg.seed}, {"cases", cfg.cases}, {"horizon", cfg.horizon}, {"failures", failures},
         {"suites", suites}};
  return {text, j, failures == 0 ? kSuccess : kCheckFailure};
}

Outcome run_certify(const RunConfig& cfg, const std::string& file) {
  const CertificateInput in = certificate_from_json(load_json(file), cfg.horizon);
  const CertificateReport r = check_convergence_certificate(in.space, in.sequence, in.limit, in.family, in.horizon);
  std::string text = std::string(r.accepted() ? "accepted" : "rejected") + " up to n=" +
                     std::to_string(r.verified_horizon);
  if (!r.violations.empty()) {
    text += "; first violation at n=" + std::to_string(r.violations.front().n) + " (grade " +
            format_grade(r.violations.front().grade) + "), " + std::to_string(r.violations.size()) + " in total";
  }
  if (r.monotone_failure) text += "; family not decreasing at n=" + std::to_string(*r.monotone_failure);
  text += "; infimum zero: " + std::string(to_string(r.inf_zero_status));
  return {text, to_json(r), r.accepted() ? kSuccess : kCheckFailure};
}

int report_error(const RunConfig& cfg, std::string_view code, const std::string& message, std::ostream& out,
                 std::ostream& err) {
  if (cfg.json) {
    out << Json{{"error", Json{{"code", code}, {"message", message}}}}.dump(2) << "\n";
  } else {
    err << "error [" << code << "]: " << message << "\n";
  }
  return kInputError;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact computations and theorem checks for fuzzy ordered sets and fuzzy Riesz spaces", "fuzzy"};
  app.fallthrough();
  app.require_subcommand(1, 1);
  app.allow_extras();
  app.add_flag("--json", cfg.json, "Emit machine-readable JSON");
  app.add_option("--seed", cfg.seed, "Seed for every randomized sampling step")->capture_default_str();
  app.add_option("--cases", cfg.cases, "Random cases per randomized theorem check")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--horizon", cfg.horizon, "Horizon for sequence certificates and boundedness checks")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  std::string action;
  std::string target;
  std::vector<std::string> args;

  auto* foset = app.add_subcommand("foset", "Finite fuzzy ordered sets: verify|sup|inf|join|meet|lattice|directed|closure");
  foset->add_option("action", action)->required()->check(
      CLI::IsMember({"verify", "sup", "inf", "join", "meet", "lattice", "directed", "closure"}));
  foset->add_option("file", target, "Foset JSON file or inline JSON")->required();
  foset->footer("Remaining arguments: element labels.");

  auto* space = app.add_subcommand("space", "Vector operations: mu|join|meet|abs|pos|neg|disjoint|decompose|archimedean|bounded");
  space->add_option("action", action)->required()->check(CLI::IsMember(
      {"mu", "join", "meet", "abs", "pos", "neg", "disjoint", "decompose", "archimedean", "bounded"}));
  space->add_option("spec", target, "Space JSON file or inline JSON")->required();
  space->footer("Remaining arguments: vectors such as \"(1, -2/3, 0)\".");

  auto* ideal = app.add_subcommand("ideal", "Ideals: generate|contains|complement|dense|sum|intersect|hull|solid|subspace|list");
  ideal->add_option("action", action)->required()->check(CLI::IsMember(
      {"generate", "contains", "complement", "dense", "sum", "intersect", "hull", "solid", "subspace", "list"}));
  ideal->add_option("spec", target, "Space JSON file or inline JSON")->required();
  ideal->footer("Remaining arguments: handles ({1,3}, zero, axis, full or JSON) and vectors.");

  auto* band = app.add_subcommand("band", "Bands: generate|contains|complement|project|principal|projection-band");
  band->add_option("action", action)->required()->check(
      CLI::IsMember({"generate", "contains", "complement", "project", "principal", "projection-band"}));
  band->add_option("spec", target, "Space JSON file or inline JSON")->required();
  band->footer("Remaining arguments: handles and vectors.");

  auto* project = app.add_subcommand("project", "Operators: apply|sup|matrix|classify|positive|monotone|precedes|compare");
  project->add_option("action", action)->required()->check(CLI::IsMember(
      {"apply", "sup", "matrix", "classify", "positive", "monotone", "precedes", "compare"}));
  project->footer("Remaining arguments: spaces, handles, operators ([[1,0],[0,1]]) and vectors.");

  auto* theorems = app.add_subcommand("theorems", "Run the theorem check suites");
  std::string suite = "all";
  std::vector<std::string> suite_choices{"all"};
  for (const auto& n : checks::suite_names()) suite_choices.push_back(n);
  theorems->add_option("suite", suite)->check(CLI::IsMember(suite_choices))->capture_default_str();

  auto* certify = app.add_subcommand("certify", "Check a convergence certificate from JSON");
  certify->add_option("file", target, "Certificate JSON file or inline JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    return report_error(cfg, "UsageError", e.what(), out, err);
  }

  // Extras bypass CLI11's splitting of bracketed values such as "[1,2]".
  args = app.remaining();
  if (!args.empty() && (theorems->parsed() || certify->parsed())) {
    return report_error(cfg, "UsageError", "unexpected argument \"" + args.front() + "\"", out, err);
  }

  try {
    Outcome o;
    if (foset->parsed()) o = run_foset(action, target, args);
    else if (space->parsed()) o = run_space(cfg, action, target, args);
    else if (ideal->parsed()) o = run_ideal(cfg, action, target, args);
    else if (band->parsed()) o = run_band(action, target, args);
    else if (project->parsed()) o = run_project(cfg, action, args);
    else if (theorems->parsed()) o = run_theorems(cfg, suite);
    else o = run_certify(cfg, target);
    if (cfg.json) {
      out << o.json.dump(2) << "\n";
    } else {
      out << o.text << "\n";
    }
    return o.code;
  } catch (const Error& e) {
    return report_error(cfg, to_string(e.code()), e.what(), out, err);
  }
}

}  // namespace fuzzy::cli
