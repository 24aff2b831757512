#pragma once

// JSON forms of every input and report. Rationals always travel as "p/q"
// strings; objects use insertion-ordered keys so output is byte-stable.

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ordercheck/certificate.hpp"
#include "ordercheck/convexfn.hpp"
#include "ordercheck/core.hpp"
#include "ordercheck/integral.hpp"
#include "ordercheck/search.hpp"
#include "ordercheck/stoploss.hpp"
#include "ordercheck/theorem.hpp"

namespace ordercheck::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Accepts "p/q" strings, decimal strings, and JSON numbers. With
/// exact_only, non-integral JSON numbers are rejected (they would carry
/// binary rounding into an exact pipeline).
Rational rational_from_json(const Json& j, bool exact_only);
Json to_json(const Rational& q);
std::vector<Rational> rationals_from_json(const Json& j, bool exact_only);
Json to_json(const std::vector<Rational>& values);

struct SequenceInput {
  std::vector<Rational> alpha;
  std::optional<ArithmeticMode> mode;  // from the "policy" field, if present
};

/// `[...]` or `{"alpha": [...], "policy": "exact"|"approx"}`.
SequenceInput sequence_from_json(const Json& j, bool exact_only);
Json sequence_to_json(const OrderedZeroSumSequence& seq);

/// `{"entries": [...]}` or a bare array.
NonnegMultiset multiset_from_json(const Json& j, bool exact_only);
Json to_json(const NonnegMultiset& m);

/// `{"linear": c, "plus": [[w, t], ...],
///   "analytic": [["sinh", w], ["exp_diff", w], ["monomial", degree, w]]}`.
/// Also accepts the PL form `{"s0": ..., "breakpoints": [[k, ds], ...]}`.
OddConvexCombination phi_from_json(const Json& j);
Json to_json(const OddConvexCombination& phi);

/// `{"s0": ..., "breakpoints": [[knot, increment], ...]}`.
PLIncreasingConvexFn pl_fn_from_json(const Json& j);
Json to_json(const PLIncreasingConvexFn& f);

/// `{"breaks": [...], "levels": [...]}`.
StepFn step_fn_from_json(const Json& j);
Json to_json(const MonotoneFunctionSpec& f);

Json to_json(const Evaluation& e);
Evaluation evaluation_from_json(const Json& j);

Json to_json(const OrderWitness& w);
OrderWitness order_witness_from_json(const Json& j);

Json to_json(const Lemma1Certificate& cert);
Lemma1Certificate certificate_from_json(const Json& j);
Json to_json(const CertificateCheck& check);

Json to_json(const VerifyReport& r);
VerifyReport verify_report_from_json(const Json& j);

Json to_json(const KaramataResult& r);
KaramataResult karamata_from_json(const Json& j);

Json to_json(const MarginReport& r);

Json to_json(const std::vector<ConvergenceRow>& rows);
std::vector<ConvergenceRow> convergence_from_json(const Json& j);
std::string convergence_to_csv(const std::vector<ConvergenceRow>& rows);

Json to_json(const ScanReport& r);
ScanReport scan_report_from_json(const Json& j);
std::string scan_to_csv(const ScanReport& r);

/// Parses text that is either inline JSON (starts with '[' or '{') or a
/// path to a JSON file. Throws InputError(Parse).
Json load_json_argument(const std::string& text);

}  // namespace ordercheck::io
