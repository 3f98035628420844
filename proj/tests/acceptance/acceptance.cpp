// Acceptance gate: one PASS/FAIL line per criterion, exit 1 when any fails.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fuzzy/checks/suite.hpp"
#include "fuzzy/error.hpp"
#include "fuzzy/projections.hpp"

using namespace fuzzy;
using namespace fuzzy::checks;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Timed {
  SuiteResult result;
  double seconds;
};

Timed timed_suite(const std::string& name, const SuiteOptions& options) {
  const auto start = Clock::now();
  SuiteResult r = run_suite(name, options);
  return {std::move(r), seconds_since(start)};
}

struct Command {
  int exit_code = -1;
  std::string out;
  double seconds = 0;
};

Command shell(const std::string& command) {
  Command c;
  const auto start = Clock::now();
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return c;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) c.out.append(buffer, n);
  const int status = pclose(pipe);
  c.seconds = seconds_since(start);
  c.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return c;
}

class Gate {
 public:
  void criterion(const std::string& name, const std::function<bool(std::ostringstream&)>& body) {
    std::ostringstream detail;
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail << "exception: " << e.what();
    }
    failed_ += ok ? 0 : 1;
    std::cout << (ok ? "PASS  " : "FAIL  ") << name << "  " << detail.str() << std::endl;
  }
  int exit_code() const { return failed_ == 0 ? 0 : 1; }

 private:
  int failed_ = 0;
};

// The check exists, ran at least `min_cases` cases and had no failures.
bool clean(std::ostringstream& d, const SuiteResult& suite, const std::string& tag, std::size_t min_cases) {
  const CheckResult* c = suite.find(tag);
  if (!c) {
    d << tag << " missing; ";
    return false;
  }
  d << tag << " " << c->cases << "/" << c->failures << "; ";
  if (c->first_counterexample) d << "counterexample " << *c->first_counterexample << "; ";
  return c->cases >= min_cases && c->failures == 0;
}

std::size_t handle_count_up_to(std::size_t n) {
  std::size_t total = 3;  // lex
  for (std::size_t d = 1; d <= n; ++d) total += std::size_t{1} << d;
  return total;
}

std::size_t handle_pairs_up_to(std::size_t n) {
  std::size_t total = 4;  // lex zero and full
  for (std::size_t d = 1; d <= n; ++d) total += std::size_t{1} << (2 * d);
  return total;
}

}  // namespace

int main() {
  Gate gate;
  const std::uint64_t seed = 42;

  const Timed foset = timed_suite("foset", {seed, 500, kDefaultHorizon});
  const Timed riesz = timed_suite("riesz", {seed, 1000, kDefaultHorizon});
  const Timed ideals = timed_suite("ideals", {seed, 1000, kDefaultHorizon});
  const Timed bands = timed_suite("bands", {seed, 1000, kDefaultHorizon});
  const Timed projections = timed_suite("projections", {seed, 1000, kDefaultHorizon});
  const Timed convergence = timed_suite("convergence", {seed, 500, 128});

  gate.criterion("foset axiom suite", [&](auto& d) {
    bool ok = clean(d, foset.result, "foset.generated-orders-validate", 500);
    ok = clean(d, foset.result, "foset.mutations-detected", 500) && ok;
    d << foset.seconds << " s";
    return ok && foset.seconds < 5.0;
  });
  gate.criterion("supremum and infimum uniqueness", [&](auto& d) {
    return clean(d, foset.result, "foset.extremum-unique", 200);
  });
  gate.criterion("lattice pair identities", [&](auto& d) {
    return clean(d, foset.result, "foset.lattice-identities", 1);
  });
  gate.criterion("riesz-space law suite", [&](auto& d) {
    bool ok = true;
    for (const char* tag : {"riesz.grade-definition", "riesz.order-compatibility", "riesz.positive-cone",
                            "riesz.join-is-supremum", "riesz.scaled-extrema", "riesz.translated-suprema",
                            "riesz.part-identities", "riesz.absolute-value-laws", "riesz.part-subadditivity",
                            "riesz.join-plus-meet", "riesz.disjoint-combinations", "riesz.archimedean-evidence"}) {
      ok = clean(d, riesz.result, tag, 2000) && ok;  // 1000 per family
    }
    d << riesz.seconds << " s";
    return ok && riesz.seconds < 10.0;
  });
  gate.criterion("riesz decomposition", [&](auto& d) { return clean(d, riesz.result, "riesz.decomposition", 1000); });
  gate.criterion("ideal and band oracle agreement", [&](auto& d) {
    const std::size_t needed = 1000 * handle_count_up_to(6);
    bool ok = clean(d, ideals.result, "ideals.generated-membership", needed);
    return clean(d, bands.result, "bands.generated-membership", needed) && ok;
  });
  gate.criterion("complement laws and order density on every handle", [&](auto& d) {
    bool ok = clean(d, ideals.result, "ideals.complement-laws", handle_count_up_to(6));
    return clean(d, ideals.result, "ideals.order-density", handle_count_up_to(6)) && ok;
  });
  gate.criterion("archimedean dichotomy", [&](auto& d) {
    bool ok = clean(d, bands.result, "bands.double-complement", handle_count_up_to(6));
    for (std::size_t n = 1; n <= 6; ++n) {
      const SpaceSpec s = SpaceSpec::pointwise(n);
      ok = ok && space_properties(s).archimedean;
      for (const Handle& h : all_handles(s)) ok = ok && disjoint_complement(s, disjoint_complement(s, h)) == h;
    }
    const SpaceSpec lex = SpaceSpec::lex();
    const SpaceProperties p = space_properties(lex);
    const RationalVector up{Rational(0), Rational(1)};
    const RationalVector right{Rational(1), Rational(0)};
    const bool witness = p.witness && p.witness->first == up && p.witness->second == right;
    const Handle axis = Handle::lex(LexKind::Axis);
    const Handle axis_dd = disjoint_complement(lex, disjoint_complement(lex, axis));
    d << "lex archimedean " << p.archimedean << ", axis^dd " << format_handle(axis_dd);
    return ok && !p.archimedean && witness && axis_dd == Handle::full(lex) && !(axis_dd == axis);
  });
  gate.criterion("projection calculus", [&](auto& d) {
    const std::size_t pairs = handle_pairs_up_to(6);
    bool ok = clean(d, projections.result, "projection.complement-identity", handle_count_up_to(6) - 1);
    ok = clean(d, projections.result, "projection.intersection-product", pairs) && ok;
    ok = clean(d, projections.result, "projection.sum-formula", pairs) && ok;
    ok = clean(d, projections.result, "projection.order-equivalence", pairs) && ok;
    ok = clean(d, projections.result, "projection.interval-supremum", 1000) && ok;
    d << projections.seconds << " s";
    return ok && projections.seconds < 30.0;
  });
  gate.criterion("principal projection stabilization", [&](auto& d) {
    return clean(d, projections.result, "projection.principal-supremum", 1000);
  });
  gate.criterion("positive but not grade monotone across grade levels", [&](auto& d) {
    const SpaceSpec in = SpaceSpec::pointwise(1, Rational(4, 5));
    const SpaceSpec out = SpaceSpec::pointwise(1, Rational(2, 3));
    const OperatorMatrix I = OperatorMatrix::identity(1);
    const bool positive = is_fuzzy_positive(in, out, I).positive;
    const GradeMonotoneReport r = is_grade_monotone_positive(in, out, I);
    const bool grades = r.witness && r.witness->input_grade == Grade(Rational(4, 5)) &&
                        r.witness->output_grade == Grade(Rational(2, 3));
    if (r.witness) d << "witness grades " << r.witness->input_grade << " vs " << r.witness->output_grade << "; ";
    return clean(d, projections.result, "projection.grade-monotone-gap", 1) && positive && !r.monotone && grades;
  });
  gate.criterion("convergence suite at horizon 128", [&](auto& d) {
    bool ok = true;
    for (const char* tag : {"convergence.certificates-accepted", "convergence.limit-unique", "convergence.monotone-limit",
                            "convergence.sandwich", "convergence.limit-laws", "convergence.constant-offset-rejected"}) {
      ok = clean(d, convergence.result, tag, 500) && ok;
    }
    return clean(d, convergence.result, "convergence.band-closed", handle_count_up_to(4)) && ok;
  });
  gate.criterion("mutation sensitivity", [&](auto& d) {
    const Command c = shell(std::string("'") + FUZZY_MUTANT_CLI + "' --json --cases 200 theorems all");
    const Json j = parse_json(c.out);
    std::size_t failing = 0;
    for (const auto& suite : j["suites"]) {
      for (const auto& check : suite["checks"]) {
        if (check["failures"].get<std::size_t>() > 0) {
          ++failing;
          d << check["tag"].get<std::string>() << " ";
        }
      }
    }
    d << "(" << failing << " failing checks, exit " << c.exit_code << ")";
    return failing >= 3 && c.exit_code == 1;
  });
  gate.criterion("full theorem run", [&](auto& d) {
    const std::string command = std::string("'") + FUZZY_CLI + "' --json --seed 42 theorems all";
    const Command first = shell(command);
    const Command second = shell(command);
    d << first.seconds << " s and " << second.seconds << " s, exit " << first.exit_code << "/" << second.exit_code
      << (first.out == second.out ? ", identical output" : ", outputs differ");
    return first.exit_code == 0 && second.exit_code == 0 && first.seconds < 60.0 && second.seconds < 60.0 &&
           first.out == second.out && !first.out.empty();
  });
  return gate.exit_code();
}
