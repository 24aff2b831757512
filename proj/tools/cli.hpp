#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ordercheck/convexfn.hpp"
#include "ordercheck/core.hpp"
#include "ordercheck/integral.hpp"

namespace ordercheck::cli {

inline constexpr const char* kVersion = "1.0.0";

enum class Subcommand { kVerify, kOrder, kCertify, kCheckCert, kKaramata, kIntegral, kScan };
enum class ReportFormat { kJson, kCsv, kHuman };

enum ExitStatus : int {
  kExitOk = 0,         // verified, dominates, certificate valid
  kExitViolation = 1,  // confirmed violation, failed certificate, order fails
  kExitInputError = 2,
};

struct RunConfig {
  Subcommand subcommand = Subcommand::kVerify;
  std::optional<ArithmeticMode> mode;  // forced by --exact / --approx
  double abs_tol = 1e-12;
  double rel_tol = 1e-9;
  bool recenter = false;

  // Inline JSON or file paths.
  std::string alpha;
  std::string a;
  std::string b;
  std::string f_pl;
  std::string cert_path;
  std::string t;
  std::vector<std::string> phi;
  std::string f_spec;
  std::string n_spec;

  std::size_t budget = 100000;
  std::optional<std::uint64_t> seed;
  std::string distribution = "grid";
  bool exhaustive = false;
  std::int64_t half_range = 3;
  std::int64_t denominator = 2;
  int threads = 0;

  std::string report;  // path, or one of json/csv/human
  std::optional<ReportFormat> format;
};

/// CLI flag grammar for phi: sinh | exp_diff (both e^t - e^-t), x,
/// plus:<t>, poly:<a1>,<a3>,..., pl:<json path or inline>, or an inline JSON
/// descriptor.
OddConvexCombination parse_phi_spec(const std::string& spec);

/// affine:<a>,<b> | power:<p>[,<scale>[,<shift>]] | exp:<c>[,<scale>[,<shift>]]
/// | step:<json path or inline> | inline step JSON.
MonotoneFunctionSpec parse_function_spec(const std::string& spec);

/// Executes one parsed configuration; reports go to `out` (or the report
/// file), diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line (without the program name). Parse failures and input
/// errors return kExitInputError with a JSON error object on `out`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordercheck::cli
