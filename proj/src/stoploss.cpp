#include "ordercheck/stoploss.hpp"

#include <algorithm>
#include <iterator>

#include "ordercheck/error.hpp"

namespace ordercheck {

StopLossCurve::StopLossCurve(const NonnegMultiset& multiset)
    : cardinality_(multiset.size()) {
  std::vector<Rational> sorted = multiset.entries();
  std::sort(sorted.begin(), sorted.end());

  knots_ = sorted;
  knots_.erase(std::unique(knots_.begin(), knots_.end()), knots_.end());

  // Suffix sums give pi at each knot: pi(k) = sum_{a > k} a - count_{a > k} * k.
  starts_.clear();
  values_.clear();
  slopes_.clear();

  const Rational total = multiset.total();
  starts_.push_back(0);
  values_.push_back(total);
  slopes_.push_back(-static_cast<long>(std::count_if(
      sorted.begin(), sorted.end(), [](const Rational& a) { return sgn(a) > 0; })));

  Rational above_sum = total;
  std::size_t above_count = sorted.size();
  std::size_t i = 0;
  for (const auto& knot : knots_) {
    while (i < sorted.size() && sorted[i] <= knot) {
      above_sum -= sorted[i];
      --above_count;
      ++i;
    }
    if (sgn(knot) == 0) continue;  // 0 is already the first segment start
    starts_.push_back(knot);
    values_.push_back(above_sum - Rational(static_cast<long>(above_count)) * knot);
    slopes_.push_back(-static_cast<long>(above_count));
  }
}

Rational StopLossCurve::operator()(const Rational& t) const {
  if (sgn(t) < 0) {
    throw InputError(ErrorCode::kNegativeThreshold,
                     "stop-loss threshold " + to_string(t) + " is negative");
  }
  auto it = std::upper_bound(starts_.begin(), starts_.end(), t);
  auto seg = static_cast<std::size_t>(std::distance(starts_.begin(), it)) - 1;
  return values_[seg] + Rational(slopes_[seg]) * (t - starts_[seg]);
}

double StopLossCurve::approx(double t) const {
  if (t < 0.0) {
    throw InputError(ErrorCode::kNegativeThreshold, "stop-loss threshold is negative");
  }
  std::size_t seg = 0;
  while (seg + 1 < starts_.size() && to_double(starts_[seg + 1]) <= t) ++seg;
  return to_double(values_[seg]) +
         static_cast<double>(slopes_[seg]) * (t - to_double(starts_[seg]));
}

StopLossCurve curve_from_multiset(const NonnegMultiset& multiset) {
  return StopLossCurve(multiset);
}

Rational stop_loss_eval(const StopLossCurve& curve, const Rational& t) {
  return curve(t);
}

OrderWitness dominates(const StopLossCurve& a, const StopLossCurve& b,
                       const ScalarPolicy& policy) {
  std::vector<Rational> checkpoints;
  checkpoints.reserve(a.knots().size() + b.knots().size() + 1);
  checkpoints.emplace_back(0);
  std::merge(a.knots().begin(), a.knots().end(), b.knots().begin(), b.knots().end(),
             std::back_inserter(checkpoints));
  std::sort(checkpoints.begin(), checkpoints.end());
  checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()),
                    checkpoints.end());

  OrderWitness witness;
  witness.margins.reserve(checkpoints.size());
  for (const auto& t : checkpoints) {
    Rational pa = a(t);
    Rational pb = b(t);
    Rational margin = pa - pb;
    bool ok = sgn(margin) >= 0;
    if (!ok && !policy.is_exact()) {
      ok = policy.accepts_nonnegative(to_double(margin), to_double(pa + pb));
    }
    if (!ok && witness.dominates) {
      witness.dominates = false;
      witness.violating_t = t;
    }
    witness.margins.push_back({t, std::move(margin)});
  }
  return witness;
}

OrderWitness dominates(const NonnegMultiset& a, const NonnegMultiset& b,
                       const ScalarPolicy& policy) {
  return dominates(StopLossCurve(a), StopLossCurve(b), policy);
}

}  // namespace ordercheck
