#pragma once

// JSON encodings of the library types. Rationals are always strings ("2/3")
// so no value passes through floating point; plain JSON integers are also
// accepted on input. Every malformed input raises Error{ParseError}.

#include <cstddef>
#include <string>
#include <string_view>

#include <json.hpp>

#include "fuzzy/convergence.hpp"
#include "fuzzy/foset.hpp"
#include "fuzzy/ideals.hpp"
#include "fuzzy/matrix.hpp"
#include "fuzzy/riesz.hpp"

namespace fuzzy {

using Json = nlohmann::ordered_json;

/// Parse errors report "line L, column C".
Json parse_json(std::string_view text);
Json read_json_file(const std::string& path);

Rational rational_from_json(const Json& j);
Json to_json(const Rational& r);

RationalVector vector_from_json(const Json& j);
Json to_json(const RationalVector& v);

/// { "elements": [...], "grades": [["a", "b", "2/3"], ...] }
MembershipMatrix foset_from_json(const Json& j);
Json to_json(const MembershipMatrix& m);

/// { "family": "pointwise"|"lex", "dimension": n, "grade_c": "2/3" }
SpaceSpec space_from_json(const Json& j);
Json to_json(const SpaceSpec& s);

/// { "family": "pointwise", "support": [1,3] } or { "family": "lex", "kind": "axis" }.
/// The dimension comes from `s`; throws InvalidHandle on a family mismatch.
Handle handle_from_json(const Json& j, const SpaceSpec& s);
Json to_json(const Handle& h);

/// Array of rows, each an array of rationals.
OperatorMatrix operator_from_json(const Json& j);
Json to_json(const OperatorMatrix& m);

/// { "kind": "harmonic", "base": [...] } or { "kind": "geometric", "base": [...], "ratio": "1/2" };
/// an array of such objects (each with an optional "coefficient") is their sum.
DominatingFamily family_from_json(const Json& j);
Json to_json(const DominatingFamily& f);

/// Kinds: "prefix" (terms, optional tail), "closed_form" (base, direction,
/// coefficient: geometric|harmonic|alternating_harmonic|alternating|constant,
/// optional ratio), "combination" (a, first, b, second), "pos"/"neg"/"abs"
/// (of), "join"/"meet" (first, second).
SequenceSpec sequence_from_json(const Json& j);

struct CertificateInput {
  SpaceSpec space;
  SequenceSpec sequence;
  RationalVector limit;
  DominatingFamily family;
  std::size_t horizon = kDefaultHorizon;
};

/// { "space": ..., "sequence": ..., "limit": [...], "family": ..., "horizon": 128 }
/// A missing horizon falls back to `default_horizon`.
CertificateInput certificate_from_json(const Json& j, std::size_t default_horizon = kDefaultHorizon);
Json to_json(const CertificateReport& r);

}  // namespace fuzzy
