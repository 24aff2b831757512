#include "ordercheck/integral.hpp"

#include <cmath>
#include <exception>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ordercheck/error.hpp"

namespace ordercheck {
namespace {

bool integral_power(double p) { return p >= 1.0 && p == std::floor(p) && p <= 64.0; }

Rational rational_pow(const Rational& base, unsigned degree) {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), degree);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), degree);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational frac(std::int64_t k, std::int64_t n) {
  Rational q(mpz_class(static_cast<long>(k)), mpz_class(static_cast<long>(n)));
  q.canonicalize();
  return q;
}

void require_positive(std::int64_t n) {
  if (n <= 0) throw InputError(ErrorCode::kInvalidArgument, "n must be positive");
}

}  // namespace

std::optional<Rational> AnalyticFn::exact_at(const Rational& x) const {
  switch (family) {
    case AnalyticFamily::kAffine: return scale * x + shift;
    case AnalyticFamily::kPower:
      if (!integral_power(param)) return std::nullopt;
      return scale * rational_pow(x, static_cast<unsigned>(param)) + shift;
    case AnalyticFamily::kExponential: return std::nullopt;
  }
  return std::nullopt;
}

double AnalyticFn::at(double x) const {
  const double s = to_double(scale);
  const double c = to_double(shift);
  switch (family) {
    case AnalyticFamily::kAffine: return s * x + c;
    case AnalyticFamily::kPower: return s * std::pow(x, param) + c;
    case AnalyticFamily::kExponential: return s * std::exp(param * x) + c;
  }
  return 0.0;
}

std::optional<Rational> AnalyticFn::exact_integral() const {
  switch (family) {
    case AnalyticFamily::kAffine: return scale / 2 + shift;
    case AnalyticFamily::kPower:
      if (!integral_power(param)) return std::nullopt;
      return scale / (static_cast<long>(param) + 1) + shift;
    case AnalyticFamily::kExponential: return std::nullopt;
  }
  return std::nullopt;
}

double AnalyticFn::integral() const {
  if (auto q = exact_integral()) return to_double(*q);
  const double s = to_double(scale);
  const double c = to_double(shift);
  switch (family) {
    case AnalyticFamily::kAffine: return s / 2 + c;
    case AnalyticFamily::kPower: return s / (param + 1.0) + c;
    case AnalyticFamily::kExponential:
      return (param == 0.0 ? s : s * std::expm1(param) / param) + c;
  }
  return 0.0;
}

Rational StepFn::at(const Rational& x) const {
  std::size_t i = 0;
  while (i < breaks.size() && breaks[i] < x) ++i;
  return levels[i];
}

Rational StepFn::integral() const {
  Rational total = 0;
  Rational left = 0;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    Rational right = i < breaks.size() ? breaks[i] : Rational(1);
    total += levels[i] * (right - left);
    left = right;
  }
  return total;
}

MonotoneFunctionSpec::MonotoneFunctionSpec(AnalyticFn f) : fn_(std::move(f)) {
  const auto& a = std::get<AnalyticFn>(fn_);
  if (a.family == AnalyticFamily::kPower && !(a.param >= 1.0)) {
    throw InputError(ErrorCode::kInvalidArgument, "power family needs exponent >= 1");
  }
  if (!std::isfinite(a.param)) {
    throw InputError(ErrorCode::kInvalidArgument, "non-finite family parameter");
  }
  constexpr int kSamples = 1000;
  double previous = a.at(0.0);
  for (int i = 1; i < kSamples; ++i) {
    double x = static_cast<double>(i) / (kSamples - 1);
    double v = a.at(x);
    if (!std::isfinite(v)) {
      throw InputError(ErrorCode::kEvaluationFailure, "non-finite value at x = " + std::to_string(x));
    }
    if (v < previous) {
      throw InputError(ErrorCode::kNotMonotone,
                       "function decreases near x = " + std::to_string(x));
    }
    previous = v;
  }
}

MonotoneFunctionSpec::MonotoneFunctionSpec(StepFn f) : fn_(std::move(f)) {
  const auto& s = std::get<StepFn>(fn_);
  if (s.levels.size() != s.breaks.size() + 1) {
    throw InputError(ErrorCode::kMalformedRepresentation,
                     "step function needs one more level than breaks");
  }
  for (std::size_t i = 0; i < s.breaks.size(); ++i) {
    if (sgn(s.breaks[i]) <= 0 || s.breaks[i] >= 1 || (i > 0 && s.breaks[i] <= s.breaks[i - 1])) {
      throw InputError(ErrorCode::kMalformedRepresentation,
                       "breaks must be strictly increasing inside (0, 1)");
    }
  }
  for (std::size_t i = 1; i < s.levels.size(); ++i) {
    if (s.levels[i] < s.levels[i - 1]) {
      throw InputError(ErrorCode::kNotMonotone, "step levels must be nondecreasing");
    }
  }
}

std::optional<Rational> MonotoneFunctionSpec::exact_at(const Rational& x) const {
  if (const auto* s = std::get_if<StepFn>(&fn_)) return s->at(x);
  return std::get<AnalyticFn>(fn_).exact_at(x);
}

double MonotoneFunctionSpec::at(double x) const {
  if (const auto* s = std::get_if<StepFn>(&fn_)) return to_double(s->at(from_double(x)));
  return std::get<AnalyticFn>(fn_).at(x);
}

Rational MonotoneFunctionSpec::sample(std::int64_t k, std::int64_t n) const {
  if (auto q = exact_at(frac(k, n))) return *q;
  double v = at(static_cast<double>(k) / static_cast<double>(n));
  if (!std::isfinite(v)) {
    throw InputError(ErrorCode::kEvaluationFailure,
                     "non-finite sample at " + std::to_string(k) + "/" + std::to_string(n));
  }
  return from_double(v);
}

std::optional<Rational> MonotoneFunctionSpec::exact_mean() const {
  if (const auto* s = std::get_if<StepFn>(&fn_)) return s->integral();
  return std::get<AnalyticFn>(fn_).exact_integral();
}

double MonotoneFunctionSpec::mean() const {
  if (auto q = exact_mean()) return to_double(*q);
  return std::get<AnalyticFn>(fn_).integral();
}

bool MonotoneFunctionSpec::is_exact() const { return exact_mean().has_value(); }

MonotoneFunctionSpec center(const MonotoneFunctionSpec& f) {
  if (const auto* s = std::get_if<StepFn>(&f.function())) {
    StepFn out = *s;
    const Rational m = s->integral();
    for (auto& level : out.levels) level -= m;
    return MonotoneFunctionSpec(std::move(out));
  }
  AnalyticFn out = std::get<AnalyticFn>(f.function());
  if (auto m = out.exact_integral()) {
    out.shift -= *m;
  } else {
    out.shift -= from_double(out.integral());
  }
  return MonotoneFunctionSpec(std::move(out));
}

Discretization discretize(const MonotoneFunctionSpec& f, std::int64_t n) {
  require_positive(n);
  std::vector<Rational> samples;
  samples.reserve(static_cast<std::size_t>(n));
  Rational total = 0;
  for (std::int64_t k = 1; k <= n; ++k) {
    samples.push_back(f.sample(k, n));
    total += samples.back();
  }
  const Rational mean = total / static_cast<long>(n);
  for (auto& s : samples) {
    s -= mean;
    s /= static_cast<long>(n);
  }
  return {make_sequence(samples, ScalarPolicy::exact()), mean};
}

Evaluation riemann_sum(const MonotoneFunctionSpec& f, const OddConvexCombination& phi,
                       std::int64_t n) {
  require_positive(n);
  Evaluation out;
  if (f.is_exact() && phi.is_exact()) {
    Rational total = 0;
    for (std::int64_t k = 1; k <= n; ++k) {
      Rational x = frac(k, n);
      Rational v = phi.eval(Rational(x * f.sample(k, n)));
      out.scale += std::fabs(to_double(v));
      total += v;
    }
    total /= static_cast<long>(n);
    out.scale /= static_cast<double>(n);
    out.value = to_double(total);
    out.exact = std::move(total);
    return out;
  }
  for (std::int64_t k = 1; k <= n; ++k) {
    const double x = static_cast<double>(k) / static_cast<double>(n);
    const double v = phi.eval(x * f.at(x));
    out.scale += std::fabs(v);
    out.value += v;
  }
  out.value /= static_cast<double>(n);
  out.scale /= static_cast<double>(n);
  return out;
}

Evaluation discrete_theorem_sum(const MonotoneFunctionSpec& f,
                                const OddConvexCombination& phi, std::int64_t n) {
  const Discretization d = discretize(f, n);
  const ScalarPolicy policy =
      phi.is_exact() ? ScalarPolicy::exact() : ScalarPolicy::approximate();
  Evaluation e = theorem_sum(d.alpha, phi, policy);
  const double dn = static_cast<double>(n);
  e.value /= dn;
  e.scale /= dn;
  if (e.exact) {
    *e.exact /= static_cast<long>(n);
    e.value = to_double(*e.exact);
  }
  return e;
}

namespace {

void validate_n_list(std::span<const std::int64_t> n_list) {
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] <= 0 || (i > 0 && n_list[i] <= n_list[i - 1])) {
      throw InputError(ErrorCode::kInvalidArgument,
                       "n list must be positive and strictly increasing");
    }
  }
}

ConvergenceRow make_row(const MonotoneFunctionSpec& f, const OddConvexCombination& phi,
                        std::int64_t n) {
  ConvergenceRow row;
  row.n = n;
  row.discrete_sum = discrete_theorem_sum(f, phi, n);
  row.riemann = riemann_sum(f, phi, n);
  row.sample_mean = discretize(f, n).sample_mean;
  return row;
}

}  // namespace

std::vector<ConvergenceRow> convergence_study_serial(const MonotoneFunctionSpec& f,
                                                     const OddConvexCombination& phi,
                                                     std::span<const std::int64_t> n_list) {
  validate_n_list(n_list);
  std::vector<ConvergenceRow> rows;
  rows.reserve(n_list.size());
  for (auto n : n_list) rows.push_back(make_row(f, phi, n));
  return rows;
}

std::vector<ConvergenceRow> convergence_study(const MonotoneFunctionSpec& f,
                                              const OddConvexCombination& phi,
                                              std::span<const std::int64_t> n_list,
                                              int threads) {
  validate_n_list(n_list);
#ifdef _OPENMP
  if (threads <= 0) threads = omp_get_max_threads();
#else
  threads = 1;
#endif
  if (threads == 1) return convergence_study_serial(f, phi, n_list);

  std::vector<ConvergenceRow> rows(n_list.size());
  std::exception_ptr failure;
  const auto count = static_cast<std::int64_t>(n_list.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      rows[static_cast<std::size_t>(i)] = make_row(f, phi, n_list[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(ordercheck_convergence_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

}  // namespace ordercheck
