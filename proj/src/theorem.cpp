#include "ordercheck/theorem.hpp"

#include <cmath>
#include <string>

#include "ordercheck/error.hpp"

namespace ordercheck {
namespace {

Evaluation sum_over(std::span<const Rational> args, const OddConvexCombination& phi,
                    const ScalarPolicy& policy, bool negate) {
  Evaluation out;
  if (policy.is_exact()) {
    Rational total = 0;
    for (const auto& a : args) {
      Rational v = phi.eval(a);
      out.scale += std::fabs(to_double(v));
      if (negate) {
        total -= v;
      } else {
        total += v;
      }
    }
    out.value = to_double(total);
    out.exact = std::move(total);
    return out;
  }
  for (const auto& a : args) {
    double v = phi.eval(to_double(a));
    out.scale += std::fabs(v);
    out.value += negate ? -v : v;
  }
  return out;
}

void require_exact_capable(const OddConvexCombination& phi, const ScalarPolicy& policy) {
  if (policy.is_exact() && !phi.is_exact()) {
    throw InputError(ErrorCode::kInexactFunction,
                     "'" + phi.describe() + "' needs approximate mode");
  }
}

}  // namespace

std::vector<Rational> weighted_image(const OrderedZeroSumSequence& seq) {
  std::vector<Rational> out;
  out.reserve(seq.size());
  for (std::size_t k = 1; k <= seq.size(); ++k) {
    out.emplace_back(seq.alpha(k) * static_cast<long>(k));
  }
  return out;
}

Evaluation theorem_sum(const OrderedZeroSumSequence& seq, const OddConvexCombination& phi,
                       const ScalarPolicy& policy) {
  require_exact_capable(phi, policy);
  const auto image = weighted_image(seq);
  return sum_over(image, phi, policy, false);
}

Rational theorem_sum_exact(const OrderedZeroSumSequence& seq,
                           const OddConvexCombination& phi) {
  return *theorem_sum(seq, phi, ScalarPolicy::exact()).exact;
}

VerifyReport verify_main(const OrderedZeroSumSequence& seq, const OddConvexCombination& phi,
                         const ScalarPolicy& policy) {
  VerifyReport report;
  report.value = theorem_sum(seq, phi, policy);
  report.split = split_instance(seq);
  report.order = dominates(report.split.positive, report.split.negative);

  Evaluation p_side = sum_over(report.split.positive.entries(), phi, policy, false);
  Evaluation q_side = sum_over(report.split.negative.entries(), phi, policy, true);
  report.split_value.value = p_side.value + q_side.value;
  report.split_value.scale = p_side.scale + q_side.scale;
  if (p_side.exact && q_side.exact) report.split_value.exact = *p_side.exact + *q_side.exact;

  if (policy.is_exact()) {
    if (*report.split_value.exact != *report.value.exact) {
      throw InternalError("oddness identity failed: direct sum " +
                          to_string(*report.value.exact) + " vs split sum " +
                          to_string(*report.split_value.exact));
    }
  } else {
    double gap = std::fabs(report.split_value.value - report.value.value);
    if (!(gap <= policy.tolerance(report.value.scale))) {
      throw InternalError("oddness identity failed beyond tolerance: gap " +
                          std::to_string(gap));
    }
  }
  report.nonnegative = report.value.nonnegative(policy);
  return report;
}

MarginReport exp_inequality_check(const OrderedZeroSumSequence& seq,
                                  const ScalarPolicy& policy) {
  MarginReport r;
  for (const auto& w : weighted_image(seq)) {
    double x = to_double(w);
    r.lhs += std::exp(x);
    r.rhs += std::exp(-x);
  }
  r.margin = r.lhs - r.rhs;
  const ScalarPolicy approx =
      policy.is_exact() ? ScalarPolicy::approximate() : policy;
  r.cross_check = theorem_sum(seq, OddConvexCombination::exp_diff(), approx).value;
  const double tol = approx.tolerance(r.lhs + r.rhs);
  r.nonnegative = r.margin >= -tol;
  r.consistent = std::fabs(r.margin - r.cross_check) <= tol;
  return r;
}

MarginReport product_form_check(std::span<const double> x, const ScalarPolicy& policy) {
  if (x.empty()) throw InputError(ErrorCode::kEmpty, "product form needs at least one entry");
  const ScalarPolicy approx =
      policy.is_exact() ? ScalarPolicy::approximate() : policy;

  double log_sum = 0.0;
  double log_scale = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !std::isfinite(x[i])) {
      throw InputError(ErrorCode::kNonPositiveEntry,
                       "entry " + std::to_string(i + 1) + " is not a positive number");
    }
    if (i > 0 && x[i] < x[i - 1]) {
      throw InputError(ErrorCode::kNotSorted,
                       "entries not nondecreasing at index " + std::to_string(i + 1));
    }
    double l = std::log(x[i]);
    log_sum += l;
    log_scale += std::fabs(l);
  }
  if (std::fabs(log_sum) > approx.tolerance(log_scale)) {
    throw InputError(ErrorCode::kProductNotOne,
                     "product of entries is " + std::to_string(std::exp(log_sum)));
  }

  MarginReport r;
  std::vector<Rational> alpha;
  alpha.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double k = static_cast<double>(i + 1);
    r.lhs += std::pow(x[i], k);
    r.rhs += std::pow(x[i], -k);
    alpha.push_back(from_double(std::log(x[i])));
  }
  r.margin = r.lhs - r.rhs;
  const double tol = approx.tolerance(r.lhs + r.rhs);
  r.nonnegative = r.margin >= -tol;

  // ln is monotone, but rounding can tie-break the wrong way on equal inputs.
  for (std::size_t i = 1; i < alpha.size(); ++i) {
    if (alpha[i] < alpha[i - 1]) alpha[i] = alpha[i - 1];
  }
  auto seq = make_sequence(alpha, approx, /*recenter=*/true);
  r.cross_check = exp_inequality_check(seq, approx).margin;
  r.consistent = std::fabs(r.margin - r.cross_check) <= tol;
  return r;
}

KaramataResult karamata_compare(const NonnegMultiset& a, const NonnegMultiset& b,
                                const PLIncreasingConvexFn& f) {
  KaramataResult r;
  for (const auto& v : a.entries()) r.sum_a += f(v);
  for (const auto& v : b.entries()) r.sum_b += f(v);

  const StopLossCurve pa(a);
  const StopLossCurve pb(b);
  r.order = dominates(pa, pb);
  r.verdict = r.order.dominates ? KaramataVerdict::kHolds : KaramataVerdict::kHypothesisFailed;

  const PlusDecomposition d = decompose_plus(f);
  Rational rebuilt = 0;
  {
    Rational margin = pa.mass_at_zero() - pb.mass_at_zero();
    Rational contribution = d.initial_slope * margin;
    rebuilt += contribution;
    r.terms.push_back({0, d.initial_slope, std::move(margin), std::move(contribution)});
  }
  for (const auto& atom : d.atoms) {
    Rational margin = pa(atom.knot) - pb(atom.knot);
    Rational contribution = atom.increment * margin;
    rebuilt += contribution;
    r.terms.push_back({atom.knot, atom.increment, std::move(margin), std::move(contribution)});
  }
  if (rebuilt != r.sum_a - r.sum_b) {
    throw InternalError("plus-function decomposition does not reproduce sum F(a) - sum F(b)");
  }
  if (r.verdict == KaramataVerdict::kHolds && r.sum_a < r.sum_b) {
    throw InternalError("dominating pair produced sum F(a) < sum F(b)");
  }
  return r;
}

}  // namespace ordercheck
