#include "ordercheck/json_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "ordercheck/error.hpp"

namespace ordercheck::io {
namespace {

[[noreturn]] void bad(const std::string& what) { throw InputError(ErrorCode::kParse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::int64_t int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

std::optional<std::int64_t> opt_int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (v.is_null()) return std::nullopt;
  if (!v.is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

double double_from_json(const Json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  if (!j.is_number()) bad("expected a number");
  return j.get<double>();
}

Json opt_rational(const std::optional<Rational>& q) {
  return q ? to_json(*q) : Json(nullptr);
}

std::optional<Rational> opt_rational_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return rational_from_json(j, true);
}

Json finding_to_json(const ScanFinding& f) {
  Json j;
  j["instance"] = f.instance_index;
  j["phi_index"] = f.phi_index;
  j["alpha"] = to_json(f.alpha);
  j["margin"] = f.margin;
  j["scale"] = f.scale;
  j["exact_margin"] = opt_rational(f.exact_margin);
  j["evidence"] = f.evidence;
  return j;
}

ScanFinding finding_from_json(const Json& j) {
  ScanFinding f;
  f.instance_index = field(j, "instance").get<std::size_t>();
  f.phi_index = field(j, "phi_index").get<std::size_t>();
  f.alpha = rationals_from_json(field(j, "alpha"), true);
  f.margin = double_from_json(field(j, "margin"));
  f.scale = double_from_json(field(j, "scale"));
  f.exact_margin = opt_rational_from(field(j, "exact_margin"));
  f.evidence = field(j, "evidence").get<std::string>();
  return f;
}

std::string csv_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

Rational rational_from_json(const Json& j, bool exact_only) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(mpz_class(std::to_string(j.get<std::uint64_t>())));
    return Rational(mpz_class(std::to_string(j.get<std::int64_t>())));
  }
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (exact_only && v != std::floor(v)) {
      bad("non-integral number " + j.dump() + " in exact mode; write it as a \"p/q\" string");
    }
    return from_double(v);
  }
  bad("expected a rational, got " + j.dump());
}

Json to_json(const Rational& q) { return to_string(q); }

std::vector<Rational> rationals_from_json(const Json& j, bool exact_only) {
  if (!j.is_array()) bad("expected an array of numbers");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(rational_from_json(v, exact_only));
  return out;
}

Json to_json(const std::vector<Rational>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(to_json(v));
  return arr;
}

SequenceInput sequence_from_json(const Json& j, bool exact_only) {
  SequenceInput in;
  if (j.is_array()) {
    in.alpha = rationals_from_json(j, exact_only);
    return in;
  }
  if (j.is_object() && j.contains("policy")) {
    const std::string p = j.at("policy").get<std::string>();
    if (p == "exact") {
      in.mode = ArithmeticMode::kExact;
    } else if (p == "approx") {
      in.mode = ArithmeticMode::kApprox;
    } else {
      bad("policy must be \"exact\" or \"approx\"");
    }
  }
  const bool exact = exact_only || in.mode == ArithmeticMode::kExact;
  in.alpha = rationals_from_json(field(j, "alpha"), exact);
  return in;
}

Json sequence_to_json(const OrderedZeroSumSequence& seq) {
  Json j;
  j["alpha"] = to_json(seq.values());
  j["policy"] = seq.mode() == ArithmeticMode::kExact ? "exact" : "approx";
  return j;
}

NonnegMultiset multiset_from_json(const Json& j, bool exact_only) {
  if (j.is_array()) return NonnegMultiset(rationals_from_json(j, exact_only));
  return NonnegMultiset(rationals_from_json(field(j, "entries"), exact_only));
}

Json to_json(const NonnegMultiset& m) {
  Json j;
  j["entries"] = to_json(m.entries());
  return j;
}

OddConvexCombination phi_from_json(const Json& j) {
  if (!j.is_object()) bad("function descriptor must be an object");
  if (j.contains("s0") || j.contains("breakpoints")) {
    PLIncreasingConvexFn f = pl_fn_from_json(j);
    OddConvexCombination phi;
    phi.add_linear(f.initial_slope());
    for (const auto& bp : f.breakpoints()) phi.add_plus(bp.increment, bp.knot);
    return phi;
  }
  OddConvexCombination phi;
  if (j.contains("linear")) phi.add_linear(rational_from_json(j.at("linear"), true));
  if (j.contains("plus")) {
    for (const auto& atom : j.at("plus")) {
      if (!atom.is_array() || atom.size() != 2) bad("plus atoms are [weight, knot] pairs");
      phi.add_plus(rational_from_json(atom[0], true), rational_from_json(atom[1], true));
    }
  }
  if (j.contains("analytic")) {
    for (const auto& atom : j.at("analytic")) {
      if (!atom.is_array() || atom.empty() || !atom[0].is_string()) {
        bad("analytic atoms are [\"kind\", ...] arrays");
      }
      const std::string kind = atom[0].get<std::string>();
      if (kind == "sinh" && atom.size() == 2) {
        phi.add_analytic(AnalyticAtom::sinh(rational_from_json(atom[1], true)));
      } else if (kind == "exp_diff" && atom.size() == 2) {
        phi.add_analytic(AnalyticAtom::exp_diff(rational_from_json(atom[1], true)));
      } else if (kind == "monomial" && atom.size() == 3 && atom[1].is_number_integer()) {
        phi.add_analytic(AnalyticAtom::monomial(atom[1].get<int>(),
                                                rational_from_json(atom[2], true)));
      } else {
        bad("unknown analytic atom " + atom.dump());
      }
    }
  }
  return phi;
}

Json to_json(const OddConvexCombination& phi) {
  Json j;
  j["linear"] = to_json(phi.linear_coeff());
  Json plus = Json::array();
  for (const auto& p : phi.plus_atoms()) plus.push_back(Json::array({to_json(p.weight), to_json(p.knot)}));
  j["plus"] = std::move(plus);
  Json analytic = Json::array();
  for (const auto& a : phi.analytic_atoms()) {
    switch (a.kind) {
      case AtomKind::kSinh: analytic.push_back(Json::array({"sinh", to_json(a.weight)})); break;
      case AtomKind::kExpDiff: analytic.push_back(Json::array({"exp_diff", to_json(a.weight)})); break;
      case AtomKind::kMonomial:
        analytic.push_back(Json::array({"monomial", a.degree, to_json(a.weight)}));
        break;
    }
  }
  j["analytic"] = std::move(analytic);
  return j;
}

PLIncreasingConvexFn pl_fn_from_json(const Json& j) {
  Rational s0 = j.contains("s0") ? rational_from_json(j.at("s0"), true) : Rational(0);
  std::vector<SlopeIncrement> bps;
  if (j.contains("breakpoints")) {
    for (const auto& bp : j.at("breakpoints")) {
      if (!bp.is_array() || bp.size() != 2) bad("breakpoints are [knot, increment] pairs");
      bps.push_back({rational_from_json(bp[0], true), rational_from_json(bp[1], true)});
    }
  }
  return PLIncreasingConvexFn(std::move(s0), std::move(bps));
}

Json to_json(const PLIncreasingConvexFn& f) {
  Json j;
  j["s0"] = to_json(f.initial_slope());
  Json bps = Json::array();
  for (const auto& bp : f.breakpoints()) {
    bps.push_back(Json::array({to_json(bp.knot), to_json(bp.increment)}));
  }
  j["breakpoints"] = std::move(bps);
  return j;
}

StepFn step_fn_from_json(const Json& j) {
  StepFn f;
  f.breaks = rationals_from_json(field(j, "breaks"), true);
  f.levels = rationals_from_json(field(j, "levels"), true);
  return f;
}

Json to_json(const MonotoneFunctionSpec& f) {
  Json j;
  if (const auto* s = std::get_if<StepFn>(&f.function())) {
    j["kind"] = "step";
    j["breaks"] = to_json(s->breaks);
    j["levels"] = to_json(s->levels);
    return j;
  }
  const auto& a = std::get<AnalyticFn>(f.function());
  switch (a.family) {
    case AnalyticFamily::kAffine: j["kind"] = "affine"; break;
    case AnalyticFamily::kPower: j["kind"] = "power"; break;
    case AnalyticFamily::kExponential: j["kind"] = "exp"; break;
  }
  j["param"] = a.param;
  j["scale"] = to_json(a.scale);
  j["shift"] = to_json(a.shift);
  return j;
}

Json to_json(const Evaluation& e) {
  Json j;
  j["value"] = e.value;
  j["scale"] = e.scale;
  j["exact"] = opt_rational(e.exact);
  return j;
}

Evaluation evaluation_from_json(const Json& j) {
  Evaluation e;
  e.value = double_from_json(field(j, "value"));
  e.scale = double_from_json(field(j, "scale"));
  e.exact = opt_rational_from(field(j, "exact"));
  return e;
}

Json to_json(const OrderWitness& w) {
  Json j;
  j["dominates"] = w.dominates;
  j["violating_t"] = opt_rational(w.violating_t);
  Json margins = Json::array();
  for (const auto& m : w.margins) {
    Json row;
    row["t"] = to_json(m.t);
    row["margin"] = to_json(m.margin);
    margins.push_back(std::move(row));
  }
  j["margins"] = std::move(margins);
  return j;
}

OrderWitness order_witness_from_json(const Json& j) {
  OrderWitness w;
  w.dominates = field(j, "dominates").get<bool>();
  w.violating_t = opt_rational_from(field(j, "violating_t"));
  for (const auto& row : field(j, "margins")) {
    w.margins.push_back({rational_from_json(field(row, "t"), true),
                         rational_from_json(field(row, "margin"), true)});
  }
  return w;
}

Json to_json(const Lemma1Certificate& cert) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["t"] = to_json(cert.t);
  j["n"] = cert.n;
  j["K"] = cert.K;
  j["B"] = to_json(cert.B);
  j["A"] = to_json(cert.A);
  j["l"] = cert.l ? Json(*cert.l) : Json(nullptr);
  j["case"] = std::string(proof_case_name(cert.proof_case));
  j["M"] = cert.M ? Json(*cert.M) : Json(nullptr);
  Json chain = Json::array();
  for (const auto& s : cert.bound_chain) {
    Json step;
    step["step"] = s.name;
    step["lhs"] = to_json(s.lhs);
    step["rhs"] = to_json(s.rhs);
    step["holds"] = s.holds;
    chain.push_back(std::move(step));
  }
  j["bound_chain"] = std::move(chain);
  return j;
}

Lemma1Certificate certificate_from_json(const Json& j) {
  Lemma1Certificate c;
  c.t = rational_from_json(field(j, "t"), true);
  c.n = int_field(j, "n");
  c.K = int_field(j, "K");
  c.B = rational_from_json(field(j, "B"), true);
  c.A = rational_from_json(field(j, "A"), true);
  c.l = opt_int_field(j, "l");
  c.proof_case = parse_proof_case(field(j, "case").get<std::string>());
  c.M = opt_int_field(j, "M");
  for (const auto& s : field(j, "bound_chain")) {
    c.bound_chain.push_back({field(s, "step").get<std::string>(),
                             rational_from_json(field(s, "lhs"), true),
                             rational_from_json(field(s, "rhs"), true),
                             field(s, "holds").get<bool>()});
  }
  return c;
}

Json to_json(const CertificateCheck& check) {
  Json j;
  j["valid"] = check.ok;
  j["failing_step"] = check.ok ? Json(nullptr) : Json(check.failing_step);
  j["detail"] = check.detail;
  return j;
}

Json to_json(const VerifyReport& r) {
  Json j;
  j["value"] = to_json(r.value);
  j["split_value"] = to_json(r.split_value);
  j["nonnegative"] = r.nonnegative;
  j["P"] = to_json(r.split.positive);
  j["Q"] = to_json(r.split.negative);
  j["order"] = to_json(r.order);
  return j;
}

VerifyReport verify_report_from_json(const Json& j) {
  VerifyReport r;
  r.value = evaluation_from_json(field(j, "value"));
  r.split_value = evaluation_from_json(field(j, "split_value"));
  r.nonnegative = field(j, "nonnegative").get<bool>();
  r.split.positive = multiset_from_json(field(j, "P"), true);
  r.split.negative = multiset_from_json(field(j, "Q"), true);
  r.order = order_witness_from_json(field(j, "order"));
  return r;
}

Json to_json(const KaramataResult& r) {
  Json j;
  j["sum_a"] = to_json(r.sum_a);
  j["sum_b"] = to_json(r.sum_b);
  j["verdict"] = r.verdict == KaramataVerdict::kHolds ? "holds" : "hypothesis-failed";
  j["order"] = to_json(r.order);
  Json terms = Json::array();
  for (const auto& t : r.terms) {
    Json row;
    row["knot"] = to_json(t.knot);
    row["weight"] = to_json(t.weight);
    row["order_margin"] = to_json(t.order_margin);
    row["contribution"] = to_json(t.contribution);
    terms.push_back(std::move(row));
  }
  j["terms"] = std::move(terms);
  return j;
}

KaramataResult karamata_from_json(const Json& j) {
  KaramataResult r;
  r.sum_a = rational_from_json(field(j, "sum_a"), true);
  r.sum_b = rational_from_json(field(j, "sum_b"), true);
  const std::string verdict = field(j, "verdict").get<std::string>();
  if (verdict == "holds") {
    r.verdict = KaramataVerdict::kHolds;
  } else if (verdict == "hypothesis-failed") {
    r.verdict = KaramataVerdict::kHypothesisFailed;
  } else {
    bad("unknown karamata verdict '" + verdict + "'");
  }
  r.order = order_witness_from_json(field(j, "order"));
  for (const auto& row : field(j, "terms")) {
    r.terms.push_back({rational_from_json(field(row, "knot"), true),
                       rational_from_json(field(row, "weight"), true),
                       rational_from_json(field(row, "order_margin"), true),
                       rational_from_json(field(row, "contribution"), true)});
  }
  return r;
}

Json to_json(const MarginReport& r) {
  Json j;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["margin"] = r.margin;
  j["cross_check"] = r.cross_check;
  j["nonnegative"] = r.nonnegative;
  j["consistent"] = r.consistent;
  return j;
}

Json to_json(const std::vector<ConvergenceRow>& rows) {
  Json arr = Json::array();
  for (const auto& row : rows) {
    Json j;
    j["n"] = row.n;
    j["discrete_sum"] = to_json(row.discrete_sum);
    j["riemann_sum"] = to_json(row.riemann);
    j["sample_mean"] = to_json(row.sample_mean);
    arr.push_back(std::move(j));
  }
  return arr;
}

std::vector<ConvergenceRow> convergence_from_json(const Json& j) {
  if (!j.is_array()) bad("convergence table must be an array");
  std::vector<ConvergenceRow> rows;
  for (const auto& r : j) {
    ConvergenceRow row;
    row.n = int_field(r, "n");
    row.discrete_sum = evaluation_from_json(field(r, "discrete_sum"));
    row.riemann = evaluation_from_json(field(r, "riemann_sum"));
    row.sample_mean = rational_from_json(field(r, "sample_mean"), true);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string convergence_to_csv(const std::vector<ConvergenceRow>& rows) {
  std::ostringstream os;
  os << "n,discrete_sum,discrete_sum_exact,riemann_sum,sample_mean\n";
  for (const auto& r : rows) {
    os << r.n << ',' << csv_double(r.discrete_sum.value) << ','
       << (r.discrete_sum.exact ? to_string(*r.discrete_sum.exact) : "") << ','
       << csv_double(r.riemann.value) << ',' << to_string(r.sample_mean) << '\n';
  }
  return os.str();
}

Json to_json(const ScanReport& r) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["seed"] = r.seed;
  j["source"] = r.source;
  j["instances_tested"] = r.instances_tested;
  j["evaluations"] = r.evaluations;
  j["min_margin"] = r.min_margin ? finding_to_json(*r.min_margin) : Json(nullptr);
  Json violations = Json::array();
  for (const auto& v : r.violations) violations.push_back(finding_to_json(v));
  j["violations"] = std::move(violations);
  j["tolerance_events"] = r.tolerance_events;
  Json near = Json::array();
  for (const auto& ne : r.shrunk_near_equality) {
    Json e;
    e["found"] = finding_to_json(ne.found);
    e["shrunk"] = to_json(ne.shrunk);
    e["shrunk_margin"] = ne.shrunk_margin;
    near.push_back(std::move(e));
  }
  j["shrunk_near_equality"] = std::move(near);
  Json per_phi = Json::array();
  for (const auto& s : r.per_phi) {
    Json e;
    e["phi"] = s.phi;
    e["evaluations"] = s.evaluations;
    e["min_margin"] = s.min_margin;
    e["min_margin_exact"] = opt_rational(s.min_margin_exact);
    e["min_index"] = s.min_index;
    e["violations"] = s.violations;
    e["tolerance_events"] = s.tolerance_events;
    per_phi.push_back(std::move(e));
  }
  j["per_phi"] = std::move(per_phi);
  return j;
}

ScanReport scan_report_from_json(const Json& j) {
  ScanReport r;
  r.seed = field(j, "seed").get<std::uint64_t>();
  r.source = field(j, "source").get<std::string>();
  r.instances_tested = field(j, "instances_tested").get<std::size_t>();
  r.evaluations = field(j, "evaluations").get<std::size_t>();
  if (!field(j, "min_margin").is_null()) r.min_margin = finding_from_json(j.at("min_margin"));
  for (const auto& v : field(j, "violations")) r.violations.push_back(finding_from_json(v));
  r.tolerance_events = field(j, "tolerance_events").get<std::size_t>();
  for (const auto& e : field(j, "shrunk_near_equality")) {
    NearEquality ne;
    ne.found = finding_from_json(field(e, "found"));
    ne.shrunk = rationals_from_json(field(e, "shrunk"), true);
    ne.shrunk_margin = double_from_json(field(e, "shrunk_margin"));
    r.shrunk_near_equality.push_back(std::move(ne));
  }
  for (const auto& e : field(j, "per_phi")) {
    PhiSummary s;
    s.phi = field(e, "phi").get<std::string>();
    s.evaluations = field(e, "evaluations").get<std::size_t>();
    s.min_margin = double_from_json(field(e, "min_margin"));
    s.min_margin_exact = opt_rational_from(field(e, "min_margin_exact"));
    s.min_index = field(e, "min_index").get<std::size_t>();
    s.violations = field(e, "violations").get<std::size_t>();
    s.tolerance_events = field(e, "tolerance_events").get<std::size_t>();
    r.per_phi.push_back(std::move(s));
  }
  return r;
}

std::string scan_to_csv(const ScanReport& r) {
  std::ostringstream os;
  os << "phi,evaluations,min_margin,min_margin_exact,min_index,violations,tolerance_events\n";
  for (const auto& s : r.per_phi) {
    os << '"' << s.phi << "\"," << s.evaluations << ',' << csv_double(s.min_margin) << ','
       << (s.min_margin_exact ? to_string(*s.min_margin_exact) : "") << ',' << s.min_index
       << ',' << s.violations << ',' << s.tolerance_events << '\n';
  }
  return os.str();
}

Json load_json_argument(const std::string& text) {
  std::string body = text;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) bad("empty JSON argument");
  if (text[first] != '[' && text[first] != '{') {
    std::ifstream in(text);
    if (!in) bad("cannot read file '" + text + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  try {
    return Json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace ordercheck::io
