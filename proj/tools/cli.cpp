#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "ordercheck/certificate.hpp"
#include "ordercheck/error.hpp"
#include "ordercheck/json_io.hpp"
#include "ordercheck/search.hpp"
#include "ordercheck/stoploss.hpp"
#include "ordercheck/theorem.hpp"

namespace ordercheck::cli {
namespace {

using io::Json;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  std::istringstream in(text);
  while (std::getline(in, current, sep)) parts.push_back(current);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& p : split(text, ',')) out.push_back(parse_rational(p));
  return out;
}

std::pair<std::string, std::string> split_kind(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) return {spec, ""};
  return {spec.substr(0, colon), spec.substr(colon + 1)};
}

std::string upto_first_non_space(const std::string& s) {
  auto p = s.find_first_not_of(" \t");
  return p == std::string::npos ? "" : s.substr(p, 1);
}

ScalarPolicy make_policy(ArithmeticMode mode, const RunConfig& c) {
  return mode == ArithmeticMode::kExact ? ScalarPolicy::exact()
                                        : ScalarPolicy::approximate(c.abs_tol, c.rel_tol);
}

ReportFormat resolve_format(const RunConfig& c, ReportFormat fallback) {
  if (c.format) return *c.format;
  if (c.report == "json") return ReportFormat::kJson;
  if (c.report == "csv") return ReportFormat::kCsv;
  if (c.report == "human") return ReportFormat::kHuman;
  if (c.report.size() > 4 && c.report.ends_with(".csv")) return ReportFormat::kCsv;
  if (c.report.size() > 4 && c.report.ends_with(".txt")) return ReportFormat::kHuman;
  return fallback;
}

void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
  const bool is_path = !c.report.empty() && c.report != "json" && c.report != "csv" &&
                       c.report != "human";
  if (!is_path) {
    out << text;
    return;
  }
  std::ofstream file(c.report);
  if (!file) throw InputError(ErrorCode::kInvalidArgument, "cannot write '" + c.report + "'");
  file << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string human_chain(const Lemma1Certificate& cert) {
  std::ostringstream os;
  os << "t = " << to_string(cert.t) << "  n = " << cert.n << "  K = " << cert.K
     << "  case = " << proof_case_name(cert.proof_case) << "\n";
  os << "A = " << to_string(cert.A) << "  B = " << to_string(cert.B);
  if (cert.l) os << "  l = " << *cert.l;
  if (cert.M) os << "  M = " << *cert.M;
  os << "\n";
  std::size_t w_name = 4;
  std::size_t w_lhs = 3;
  std::size_t w_rhs = 3;
  for (const auto& s : cert.bound_chain) {
    w_name = std::max(w_name, s.name.size());
    w_lhs = std::max(w_lhs, to_string(s.lhs).size());
    w_rhs = std::max(w_rhs, to_string(s.rhs).size());
  }
  os << std::left << std::setw(static_cast<int>(w_name)) << "step" << "  " << std::right
     << std::setw(static_cast<int>(w_lhs)) << "lhs" << "  >=  " << std::setw(static_cast<int>(w_rhs))
     << "rhs" << "  ok\n";
  for (const auto& s : cert.bound_chain) {
    os << std::left << std::setw(static_cast<int>(w_name)) << s.name << "  " << std::right
       << std::setw(static_cast<int>(w_lhs)) << to_string(s.lhs) << "  >=  "
       << std::setw(static_cast<int>(w_rhs)) << to_string(s.rhs) << "  "
       << (s.holds ? "yes" : "NO") << "\n";
  }
  return os.str();
}

std::string human_witness(const OrderWitness& w) {
  std::ostringstream os;
  os << "dominates: " << (w.dominates ? "yes" : "no");
  if (w.violating_t) os << " (first violation at t = " << to_string(*w.violating_t) << ")";
  os << "\n";
  std::size_t width = 1;
  for (const auto& m : w.margins) width = std::max(width, to_string(m.t).size());
  os << std::setw(static_cast<int>(width)) << "t" << "  margin\n";
  for (const auto& m : w.margins) {
    os << std::setw(static_cast<int>(width)) << to_string(m.t) << "  " << to_string(m.margin) << "\n";
  }
  return os.str();
}

OrderedZeroSumSequence load_sequence(const RunConfig& c, bool exact_only,
                                     std::optional<ArithmeticMode>* mode_out = nullptr) {
  const bool exact_literals = exact_only || c.mode == ArithmeticMode::kExact;
  io::SequenceInput in = io::sequence_from_json(io::load_json_argument(c.alpha), exact_literals);
  std::optional<ArithmeticMode> mode = c.mode ? c.mode : in.mode;
  if (exact_only) mode = ArithmeticMode::kExact;
  if (mode_out) *mode_out = mode;
  return make_sequence(in.alpha, make_policy(mode.value_or(ArithmeticMode::kExact), c),
                       c.recenter);
}

Rational load_threshold(const RunConfig& c) {
  if (c.t.empty()) throw InputError(ErrorCode::kInvalidArgument, "--t is required");
  return parse_rational(c.t);
}

int run_verify(const RunConfig& c, std::ostream& out) {
  if (c.phi.size() != 1) throw InputError(ErrorCode::kInvalidArgument, "verify takes one --phi");
  const OddConvexCombination phi = parse_phi_spec(c.phi.front());
  std::optional<ArithmeticMode> declared;
  // Sequence literals are validated in the declared mode; an undeclared mode
  // follows phi: exact when it admits rational evaluation.
  io::SequenceInput in = io::sequence_from_json(io::load_json_argument(c.alpha),
                                                c.mode == ArithmeticMode::kExact);
  declared = c.mode ? c.mode : in.mode;
  const ArithmeticMode mode =
      declared.value_or(phi.is_exact() ? ArithmeticMode::kExact : ArithmeticMode::kApprox);
  if (mode == ArithmeticMode::kExact && !phi.is_exact()) {
    throw InputError(ErrorCode::kInexactFunction,
                     "'" + phi.describe() + "' cannot be evaluated in exact mode");
  }
  const ScalarPolicy policy = make_policy(mode, c);
  const auto seq = make_sequence(in.alpha, policy, c.recenter);
  const VerifyReport report = verify_main(seq, phi, policy);

  const ReportFormat fmt = resolve_format(c, ReportFormat::kJson);
  if (fmt == ReportFormat::kHuman) {
    std::ostringstream os;
    os << "phi: " << phi.describe() << "\n";
    os << "value: " << (report.value.exact ? to_string(*report.value.exact) : "")
       << (report.value.exact ? " (" : "") << std::setprecision(12) << report.value.value
       << (report.value.exact ? ")" : "") << "\n";
    os << "nonnegative: " << (report.nonnegative ? "yes" : "NO") << "\n";
    os << "P: " << io::to_json(report.split.positive)["entries"].dump() << "\n";
    os << "Q: " << io::to_json(report.split.negative)["entries"].dump() << "\n";
    os << human_witness(report.order);
    emit(c, os.str(), out);
  } else {
    Json j;
    j["command"] = "verify";
    j["policy"] = policy.is_exact() ? "exact" : "approx";
    j["phi"] = phi.describe();
    j["alpha"] = io::to_json(seq.values());
    j["report"] = io::to_json(report);
    emit(c, dump(j), out);
  }
  return report.nonnegative ? kExitOk : kExitViolation;
}

int run_order(const RunConfig& c, std::ostream& out) {
  const bool exact = c.mode == ArithmeticMode::kExact;
  const NonnegMultiset a = io::multiset_from_json(io::load_json_argument(c.a), exact);
  const NonnegMultiset b = io::multiset_from_json(io::load_json_argument(c.b), exact);
  const ScalarPolicy policy = make_policy(exact ? ArithmeticMode::kExact : ArithmeticMode::kApprox, c);
  const OrderWitness w = dominates(a, b, policy);
  if (resolve_format(c, ReportFormat::kJson) == ReportFormat::kHuman) {
    emit(c, human_witness(w), out);
  } else {
    Json j;
    j["command"] = "order";
    j["policy"] = exact ? "exact" : "approx";
    j["A"] = io::to_json(a);
    j["B"] = io::to_json(b);
    j["witness"] = io::to_json(w);
    emit(c, dump(j), out);
  }
  return w.dominates ? kExitOk : kExitViolation;
}

int run_certify(const RunConfig& c, std::ostream& out) {
  const auto seq = load_sequence(c, /*exact_only=*/true);
  const Lemma1Certificate cert = certify_lemma1(seq, load_threshold(c));
  if (resolve_format(c, ReportFormat::kJson) == ReportFormat::kHuman) {
    emit(c, human_chain(cert), out);
  } else {
    emit(c, dump(io::to_json(cert)), out);
  }
  return kExitOk;
}

int run_check_cert(const RunConfig& c, std::ostream& out) {
  const auto seq = load_sequence(c, /*exact_only=*/true);
  const Lemma1Certificate cert = io::certificate_from_json(io::load_json_argument(c.cert_path));
  const CertificateCheck check = check_certificate(cert, seq, load_threshold(c));
  if (resolve_format(c, ReportFormat::kJson) == ReportFormat::kHuman) {
    std::ostringstream os;
    os << (check.ok ? "certificate valid\n"
                    : "certificate rejected at '" + check.failing_step + "': " + check.detail + "\n");
    os << human_chain(cert);
    emit(c, os.str(), out);
  } else {
    emit(c, dump(io::to_json(check)), out);
  }
  return check.ok ? kExitOk : kExitViolation;
}

int run_karamata(const RunConfig& c, std::ostream& out) {
  const NonnegMultiset a = io::multiset_from_json(io::load_json_argument(c.a), true);
  const NonnegMultiset b = io::multiset_from_json(io::load_json_argument(c.b), true);
  const PLIncreasingConvexFn f = io::pl_fn_from_json(io::load_json_argument(c.f_pl));
  const KaramataResult r = karamata_compare(a, b, f);
  Json j;
  j["command"] = "karamata";
  j["F"] = io::to_json(f);
  j["result"] = io::to_json(r);
  emit(c, dump(j), out);
  return r.verdict == KaramataVerdict::kHolds ? kExitOk : kExitViolation;
}

std::vector<std::int64_t> parse_n_list(const std::string& spec) {
  std::vector<std::int64_t> out;
  for (const auto& p : split(spec, ',')) {
    Rational q = parse_rational(p);
    if (!is_integer(q) || sgn(q) <= 0 || !q.get_num().fits_slong_p()) {
      throw InputError(ErrorCode::kInvalidArgument, "n values must be positive integers");
    }
    out.push_back(q.get_num().get_si());
  }
  return out;
}

int run_integral(const RunConfig& c, std::ostream& out) {
  if (c.phi.size() != 1) throw InputError(ErrorCode::kInvalidArgument, "integral takes one --phi");
  const MonotoneFunctionSpec f = center(parse_function_spec(c.f_spec));
  const OddConvexCombination phi = parse_phi_spec(c.phi.front());
  const auto n_list = parse_n_list(c.n_spec.empty() ? "10,100,1000" : c.n_spec);
  const auto rows = convergence_study(f, phi, n_list, c.threads);

  bool all_nonnegative = true;
  const ScalarPolicy approx = ScalarPolicy::approximate(c.abs_tol, c.rel_tol);
  for (const auto& r : rows) all_nonnegative = all_nonnegative && r.discrete_sum.nonnegative(approx);

  switch (resolve_format(c, ReportFormat::kJson)) {
    case ReportFormat::kCsv: emit(c, io::convergence_to_csv(rows), out); break;
    case ReportFormat::kHuman: {
      std::ostringstream os;
      os << std::setw(8) << "n" << std::setw(24) << "discrete_sum" << std::setw(24)
         << "riemann_sum" << "  sample_mean\n";
      os << std::setprecision(12);
      for (const auto& r : rows) {
        os << std::setw(8) << r.n << std::setw(24) << r.discrete_sum.value << std::setw(24)
           << r.riemann.value << "  " << to_string(r.sample_mean) << "\n";
      }
      emit(c, os.str(), out);
      break;
    }
    case ReportFormat::kJson: {
      Json j;
      j["command"] = "integral";
      j["f"] = io::to_json(f);
      j["phi"] = phi.describe();
      j["rows"] = io::to_json(rows);
      emit(c, dump(j), out);
      break;
    }
  }
  return all_nonnegative ? kExitOk : kExitViolation;
}

std::pair<std::size_t, std::size_t> parse_n_range(const std::string& spec) {
  auto dots = spec.find("..");
  auto to_size = [](const std::string& s) {
    Rational q = parse_rational(s);
    if (!is_integer(q) || sgn(q) <= 0 || !q.get_num().fits_ulong_p()) {
      throw InputError(ErrorCode::kInvalidArgument, "n range must use positive integers");
    }
    return static_cast<std::size_t>(q.get_num().get_ui());
  };
  if (dots == std::string::npos) {
    auto n = to_size(spec);
    return {n, n};
  }
  auto lo = to_size(spec.substr(0, dots));
  auto hi = to_size(spec.substr(dots + 2));
  if (hi < lo) throw InputError(ErrorCode::kInvalidArgument, "n range is empty");
  return {lo, hi};
}

std::uint64_t resolve_seed(const RunConfig& c) {
  if (c.seed) return *c.seed;
  if (const char* env = std::getenv("ORDERCHECK_SEED")) {
    Rational q = parse_rational(env);
    if (!is_integer(q) || sgn(q) < 0 || !q.get_num().fits_ulong_p()) {
      throw InputError(ErrorCode::kInvalidArgument, "ORDERCHECK_SEED must be a nonnegative integer");
    }
    return q.get_num().get_ui();
  }
  return 0;
}

int run_scan(const RunConfig& c, std::ostream& out) {
  std::vector<OddConvexCombination> phis;
  for (const auto& p : c.phi) phis.push_back(parse_phi_spec(p));
  if (phis.empty()) throw InputError(ErrorCode::kInvalidArgument, "scan needs at least one --phi");
  const auto [n_min, n_max] = parse_n_range(c.n_spec.empty() ? "2..8" : c.n_spec);
  const std::uint64_t seed = resolve_seed(c);

  InstanceSource source = [&] {
    if (c.exhaustive) return InstanceSource::exhaustive(n_min, n_max, c.half_range, c.denominator);
    Distribution d;
    if (c.distribution == "grid") {
      d = Distribution::kUniformGridRational;
    } else if (c.distribution == "gaussian") {
      d = Distribution::kGaussianReal;
    } else {
      throw InputError(ErrorCode::kInvalidArgument, "distribution must be grid or gaussian");
    }
    return InstanceSource::random(n_min, n_max, c.budget, seed, d);
  }();

  ScanOptions options;
  options.budget = c.budget;
  options.seed = seed;
  options.threads = c.threads;
  const ScanReport report = scan(source, phis, options);

  if (resolve_format(c, ReportFormat::kJson) == ReportFormat::kCsv) {
    emit(c, io::scan_to_csv(report), out);
  } else {
    emit(c, dump(io::to_json(report)), out);
  }
  return report.violations.empty() ? kExitOk : kExitViolation;
}

Json error_object(const std::string& code, const std::string& message) {
  Json j;
  j["error"]["code"] = code;
  j["error"]["message"] = message;
  return j;
}

}  // namespace

OddConvexCombination parse_phi_spec(const std::string& spec) {
  if (upto_first_non_space(spec) == "{") return io::phi_from_json(io::load_json_argument(spec));
  const auto [kind, arg] = split_kind(spec);
  if (kind == "sinh" || kind == "exp_diff" || kind == "2sinh") {
    if (!arg.empty()) return OddConvexCombination::exp_diff(parse_rational(arg));
    return OddConvexCombination::exp_diff();
  }
  if (kind == "x" || kind == "identity") return OddConvexCombination::identity();
  if (kind == "plus") return OddConvexCombination::plus(parse_rational(arg));
  if (kind == "poly") return OddConvexCombination::odd_polynomial(parse_rational_list(arg));
  if (kind == "pl") return io::phi_from_json(io::load_json_argument(arg));
  throw InputError(ErrorCode::kParse, "unknown --phi '" + spec + "'");
}

MonotoneFunctionSpec parse_function_spec(const std::string& spec) {
  if (upto_first_non_space(spec) == "{") {
    return MonotoneFunctionSpec(io::step_fn_from_json(io::load_json_argument(spec)));
  }
  const auto [kind, arg] = split_kind(spec);
  if (kind == "step") return MonotoneFunctionSpec(io::step_fn_from_json(io::load_json_argument(arg)));

  const auto params = parse_rational_list(arg);
  AnalyticFn f;
  if (kind == "affine") {
    if (params.empty() || params.size() > 2) {
      throw InputError(ErrorCode::kParse, "affine takes <slope>[,<intercept>]");
    }
    f.family = AnalyticFamily::kAffine;
    f.scale = params[0];
    f.shift = params.size() > 1 ? params[1] : Rational(0);
  } else if (kind == "power" || kind == "exp") {
    if (params.empty() || params.size() > 3) {
      throw InputError(ErrorCode::kParse, kind + " takes <param>[,<scale>[,<shift>]]");
    }
    f.family = kind == "power" ? AnalyticFamily::kPower : AnalyticFamily::kExponential;
    f.param = to_double(params[0]);
    f.scale = params.size() > 1 ? params[1] : Rational(1);
    f.shift = params.size() > 2 ? params[2] : Rational(0);
  } else {
    throw InputError(ErrorCode::kParse, "unknown --f '" + spec + "'");
  }
  return MonotoneFunctionSpec(std::move(f));
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.subcommand) {
      case Subcommand::kVerify: return run_verify(config, out);
      case Subcommand::kOrder: return run_order(config, out);
      case Subcommand::kCertify: return run_certify(config, out);
      case Subcommand::kCheckCert: return run_check_cert(config, out);
      case Subcommand::kKaramata: return run_karamata(config, out);
      case Subcommand::kIntegral: return run_integral(config, out);
      case Subcommand::kScan: return run_scan(config, out);
    }
  } catch (const InputError& e) {
    out << dump(error_object(std::string(error_code_name(e.code())), e.what()));
    err << "ordercheck: " << e.what() << "\n";
    return kExitInputError;
  } catch (const nlohmann::json::exception& e) {
    out << dump(error_object("ParseError", e.what()));
    err << "ordercheck: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Checks index-weighted odd convex inequalities and their stop-loss proofs",
               "ordercheck"};
  app.set_version_flag("--version",
                       std::string("ordercheck ") + kVersion + " (report schema " +
                           std::to_string(io::kSchemaVersion) + ")");
  app.require_subcommand(1);

  RunConfig c;
  auto add_report = [&c](CLI::App* sub) {
    sub->add_option("--report", c.report, "Output path, or json|csv|human to pick a format");
    sub->add_option_function<std::string>(
        "--format",
        [&c](const std::string& f) {
          if (f == "json") c.format = ReportFormat::kJson;
          else if (f == "csv") c.format = ReportFormat::kCsv;
          else if (f == "human") c.format = ReportFormat::kHuman;
          else throw CLI::ValidationError("--format", "must be json, csv, or human");
        },
        "json | csv | human");
  };
  auto add_mode = [&c](CLI::App* sub) {
    sub->add_flag_callback("--exact", [&c] { c.mode = ArithmeticMode::kExact; },
                           "Exact rational arithmetic");
    sub->add_flag_callback("--approx", [&c] { c.mode = ArithmeticMode::kApprox; },
                           "Double precision with tolerances");
    sub->add_option("--abs-tol", c.abs_tol, "Absolute tolerance (approximate mode)");
    sub->add_option("--rel-tol", c.rel_tol, "Relative tolerance (approximate mode)");
  };

  auto* verify = app.add_subcommand("verify", "Evaluate sum phi(k alpha_k) and its P/Q split");
  verify->add_option("--alpha", c.alpha, "Sequence JSON (inline or file)")->required();
  verify->add_option("--phi", c.phi, "Function spec")->required();
  verify->add_flag("--recenter", c.recenter, "Subtract the mean before validation");
  add_mode(verify);
  add_report(verify);

  auto* order = app.add_subcommand("order", "Decide stop-loss dominance of A over B");
  order->add_option("--a", c.a, "Multiset JSON")->required();
  order->add_option("--b", c.b, "Multiset JSON")->required();
  add_mode(order);
  add_report(order);

  auto* certify = app.add_subcommand("certify", "Emit a proof-trace certificate at threshold t");
  certify->add_option("--alpha", c.alpha, "Sequence JSON")->required();
  certify->add_option("--t", c.t, "Threshold as a rational")->required();
  certify->add_option("--out", c.report, "Certificate output path");
  certify->add_flag("--recenter", c.recenter, "Subtract the mean before validation");
  add_report(certify);

  auto* check = app.add_subcommand("check-cert", "Audit a certificate against (alpha, t)");
  check->add_option("certificate", c.cert_path, "Certificate JSON")->required();
  check->add_option("--alpha", c.alpha, "Sequence JSON")->required();
  check->add_option("--t", c.t, "Threshold as a rational")->required();
  check->add_flag("--recenter", c.recenter, "Subtract the mean before validation");
  add_report(check);

  auto* karamata = app.add_subcommand("karamata", "Compare sum F(a) with sum F(b)");
  karamata->add_option("--a", c.a, "Multiset JSON")->required();
  karamata->add_option("--b", c.b, "Multiset JSON")->required();
  karamata->add_option("--F", c.f_pl, "Piecewise-linear F JSON")->required();
  add_report(karamata);

  auto* integral = app.add_subcommand("integral", "Finite-n study of int phi(x f(x)) dx");
  integral->add_option("--f", c.f_spec, "Function spec")->required();
  integral->add_option("--phi", c.phi, "Function spec")->required();
  integral->add_option("--n", c.n_spec, "Comma-separated n values");
  integral->add_option("--threads", c.threads, "Worker threads (0: all)");
  add_mode(integral);
  add_report(integral);

  auto* scan_cmd = app.add_subcommand("scan", "Fuzz the inequality over many instances");
  scan_cmd->add_option("--n", c.n_spec, "Instance sizes, e.g. 2..8");
  scan_cmd->add_option("--phi", c.phi, "Function spec (repeatable)")->required();
  scan_cmd->add_option("--budget", c.budget, "Maximum number of instances");
  scan_cmd->add_option("--seed", c.seed, "Seed (falls back to ORDERCHECK_SEED)");
  scan_cmd->add_option("--distribution", c.distribution, "grid | gaussian");
  scan_cmd->add_flag("--exhaustive", c.exhaustive, "Enumerate a rational grid instead");
  scan_cmd->add_option("--half-range", c.half_range, "Grid numerator bound");
  scan_cmd->add_option("--denominator", c.denominator, "Grid denominator");
  scan_cmd->add_option("--threads", c.threads, "Worker threads (0: all)");
  add_report(scan_cmd);

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("ordercheck");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    out << dump(error_object("UsageError", e.what()));
    return kExitInputError;
  }

  if (verify->parsed()) c.subcommand = Subcommand::kVerify;
  else if (order->parsed()) c.subcommand = Subcommand::kOrder;
  else if (certify->parsed()) c.subcommand = Subcommand::kCertify;
  else if (check->parsed()) c.subcommand = Subcommand::kCheckCert;
  else if (karamata->parsed()) c.subcommand = Subcommand::kKaramata;
  else if (integral->parsed()) c.subcommand = Subcommand::kIntegral;
  else c.subcommand = Subcommand::kScan;

  try {
    return run(c, out, err);
  } catch (const InternalError& e) {
    err << "ordercheck: internal error: " << e.what() << "\n";
    out << dump(error_object("InternalError", e.what()));
    return kExitViolation;
  }
}

}  // namespace ordercheck::cli
