#pragma once

// Finite-n machinery behind int_0^1 phi(x f(x)) dx >= 0 for increasing,
// mean-zero f: right-endpoint discretization, Riemann sums and
// convergence tables.

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "ordercheck/convexfn.hpp"
#include "ordercheck/core.hpp"
#include "ordercheck/theorem.hpp"

namespace ordercheck {

enum class AnalyticFamily {
  kAffine,       // scale * x + shift
  kPower,        // scale * x^param + shift,  param >= 1
  kExponential,  // scale * e^{param x} + shift
};

struct AnalyticFn {
  AnalyticFamily family = AnalyticFamily::kAffine;
  double param = 1.0;
  Rational scale = 1;
  Rational shift = 0;

  /// Exact value for affine and integer-power families, nullopt otherwise.
  std::optional<Rational> exact_at(const Rational& x) const;
  double at(double x) const;
  /// Closed-form integral over [0, 1]; exact when exact_at is.
  std::optional<Rational> exact_integral() const;
  double integral() const;
};

/// Left-continuous increasing step function on [0, 1]:
/// f(x) = levels[i] where i = #{breaks < x}. Sampling at k/n therefore
/// reproduces the exact cell averages whenever n is a multiple of every
/// break's denominator.
struct StepFn {
  std::vector<Rational> breaks;  // strictly increasing, inside (0, 1)
  std::vector<Rational> levels;  // breaks.size() + 1, nondecreasing

  Rational at(const Rational& x) const;
  Rational integral() const;
};

/// An increasing function on [0, 1]. Step functions take the exact path;
/// analytic descriptors are exact only where their family allows it.
class MonotoneFunctionSpec {
 public:
  /// Validates monotonicity: exactly for step functions, by sampling 10^3
  /// points for analytic ones. Throws InputError(NotMonotone) or
  /// InputError(MalformedRepresentation).
  explicit MonotoneFunctionSpec(AnalyticFn f);
  explicit MonotoneFunctionSpec(StepFn f);

  bool is_step() const { return std::holds_alternative<StepFn>(fn_); }
  const std::variant<AnalyticFn, StepFn>& function() const { return fn_; }

  std::optional<Rational> exact_at(const Rational& x) const;
  double at(double x) const;
  /// Value at k/n: exact when available, else the double sample taken as an
  /// exact rational.
  Rational sample(std::int64_t k, std::int64_t n) const;
  std::optional<Rational> exact_mean() const;
  double mean() const;
  /// True when every sample is exact.
  bool is_exact() const;

 private:
  std::variant<AnalyticFn, StepFn> fn_;
};

/// f - int_0^1 f. Idempotent; exact for step functions and exact families.
MonotoneFunctionSpec center(const MonotoneFunctionSpec& f);

struct Discretization {
  OrderedZeroSumSequence alpha;  // alpha_k = (f(k/n) - mean_n) / n
  Rational sample_mean;          // mean_n = (1/n) sum f(k/n)
};

/// Samples are rationalized first, so the output is exactly zero-sum and
/// sorted for every monotone f. Throws InputError(EvaluationFailure) on a
/// non-finite sample.
Discretization discretize(const MonotoneFunctionSpec& f, std::int64_t n);

/// (1/n) sum_{k=1}^n phi((k/n) f(k/n)). Exact when both f and phi allow it.
Evaluation riemann_sum(const MonotoneFunctionSpec& f, const OddConvexCombination& phi,
                       std::int64_t n);

/// (1/n) sum_k phi(k alpha_k) for the discretization; nonnegative by the
/// discrete theorem.
Evaluation discrete_theorem_sum(const MonotoneFunctionSpec& f,
                                const OddConvexCombination& phi, std::int64_t n);

struct ConvergenceRow {
  std::int64_t n = 0;
  Evaluation discrete_sum;
  Evaluation riemann;
  Rational sample_mean;

  friend bool operator==(const ConvergenceRow&, const ConvergenceRow&) = default;
};

/// One row per n (n_list must be strictly increasing and positive; throws
/// InputError(InvalidArgument)). Rows are independent; the parallel variant
/// distributes them over OpenMP threads and must agree with the serial one.
std::vector<ConvergenceRow> convergence_study(const MonotoneFunctionSpec& f,
                                              const OddConvexCombination& phi,
                                              std::span<const std::int64_t> n_list,
                                              int threads = 0);
std::vector<ConvergenceRow> convergence_study_serial(const MonotoneFunctionSpec& f,
                                                     const OddConvexCombination& phi,
                                                     std::span<const std::int64_t> n_list);

}  // namespace ordercheck
