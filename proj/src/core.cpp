#include "ordercheck/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ordercheck/error.hpp"

namespace ordercheck {

ScalarPolicy ScalarPolicy::approximate(double abs_tol, double rel_tol) {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
    throw InputError(ErrorCode::kInvalidArgument,
                     "approximate mode needs abs_tol > 0 and rel_tol > 0");
  }
  return {ArithmeticMode::kApprox, abs_tol, rel_tol};
}

OrderedZeroSumSequence make_sequence(std::span<const Rational> raw,
                                     const ScalarPolicy& policy, bool recenter) {
  if (raw.empty()) throw InputError(ErrorCode::kEmpty, "sequence is empty");

  std::vector<Rational> values(raw.begin(), raw.end());
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] < values[i - 1]) {
      throw InputError(ErrorCode::kNotSorted,
                       "sequence not nondecreasing at index " + std::to_string(i + 1));
    }
  }

  Rational sum = 0;
  for (const auto& v : values) sum += v;
  if (recenter && sgn(sum) != 0) {
    Rational mean = sum / static_cast<long>(values.size());
    for (auto& v : values) v -= mean;
    sum = 0;
  }

  if (sgn(sum) != 0) {
    if (policy.is_exact() || std::abs(to_double(sum)) > policy.abs_tol) {
      throw InputError(ErrorCode::kNonZeroSum,
                       "sequence sums to " + to_string(sum) + ", expected 0");
    }
  }

  auto negatives = static_cast<std::size_t>(
      std::count_if(values.begin(), values.end(),
                    [](const Rational& v) { return sgn(v) < 0; }));
  bool any_nonzero = std::any_of(values.begin(), values.end(),
                                 [](const Rational& v) { return sgn(v) != 0; });
  // Tolerated zero sums can still be sign-definite; the split needs both sides.
  if (any_nonzero && (negatives == 0 || negatives == values.size())) {
    throw InputError(ErrorCode::kNonZeroSum,
                     "sequence is sign-definite, cannot sum to zero");
  }
  return OrderedZeroSumSequence(std::move(values), negatives, policy.mode);
}

NonnegMultiset::NonnegMultiset(std::vector<Rational> entries)
    : entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (sgn(e) < 0) {
      throw InputError(ErrorCode::kNegativeEntry,
                       "multiset entry " + to_string(e) + " is negative");
    }
  }
}

Rational NonnegMultiset::total() const {
  Rational sum = 0;
  for (const auto& e : entries_) sum += e;
  return sum;
}

bool NonnegMultiset::same_elements(const NonnegMultiset& other) const {
  if (size() != other.size()) return false;
  auto a = entries_;
  auto b = other.entries_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

InstanceSplit split_instance(const OrderedZeroSumSequence& seq) {
  std::vector<Rational> p;
  std::vector<Rational> q;
  const std::size_t k_neg = seq.negative_count();
  for (std::size_t k = 1; k <= seq.size(); ++k) {
    Rational weighted = seq.alpha(k) * static_cast<long>(k);
    if (k <= k_neg) {
      q.push_back(-weighted);
    } else {
      p.push_back(std::move(weighted));
    }
  }
  return {NonnegMultiset(std::move(p)), NonnegMultiset(std::move(q))};
}

}  // namespace ordercheck
