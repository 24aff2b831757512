#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ordercheck/rational.hpp"

namespace ordercheck {

enum class ArithmeticMode { kExact, kApprox };

/// Exact mode never rounds. Approximate mode relaxes every "x >= 0" check to
/// "x >= -(abs_tol + rel_tol * scale)", where scale is the sum of absolute
/// values of the compared terms.
struct ScalarPolicy {
  ArithmeticMode mode = ArithmeticMode::kExact;
  double abs_tol = 0.0;
  double rel_tol = 0.0;

  static ScalarPolicy exact() { return {}; }
  /// Throws InputError unless both tolerances are positive.
  static ScalarPolicy approximate(double abs_tol = 1e-12, double rel_tol = 1e-9);

  bool is_exact() const { return mode == ArithmeticMode::kExact; }
  double tolerance(double scale) const { return abs_tol + rel_tol * scale; }
  bool accepts_nonnegative(double value, double scale) const {
    return value >= -tolerance(scale);
  }
};

/// alpha_1 <= ... <= alpha_n with zero sum. Immutable once built; obtain
/// through make_sequence.
class OrderedZeroSumSequence {
 public:
  const std::vector<Rational>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  /// 1-based access matching the index weights k * alpha_k.
  const Rational& alpha(std::size_t k) const { return values_[k - 1]; }
  /// Number of strictly negative entries.
  std::size_t negative_count() const { return negative_count_; }
  bool all_zero() const { return negative_count_ == 0; }
  ArithmeticMode mode() const { return mode_; }

  friend bool operator==(const OrderedZeroSumSequence& a,
                         const OrderedZeroSumSequence& b) {
    return a.values_ == b.values_;
  }

 private:
  friend OrderedZeroSumSequence make_sequence(std::span<const Rational>,
                                              const ScalarPolicy&, bool);
  OrderedZeroSumSequence(std::vector<Rational> values, std::size_t negatives,
                         ArithmeticMode mode)
      : values_(std::move(values)), negative_count_(negatives), mode_(mode) {}

  std::vector<Rational> values_;
  std::size_t negative_count_ = 0;
  ArithmeticMode mode_ = ArithmeticMode::kExact;
};

/// Validates order and zero sum. With recenter the mean is subtracted first
/// (exactly). Input is never sorted on the caller's behalf.
/// Errors: Empty, NotSorted, NonZeroSum.
OrderedZeroSumSequence make_sequence(std::span<const Rational> raw,
                                     const ScalarPolicy& policy = ScalarPolicy::exact(),
                                     bool recenter = false);

/// Finite collection of nonnegative values. May be empty.
class NonnegMultiset {
 public:
  NonnegMultiset() = default;
  /// Throws InputError(NegativeEntry) on any entry < 0.
  explicit NonnegMultiset(std::vector<Rational> entries);

  const std::vector<Rational>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  Rational total() const;

  /// Multiset equality (order-insensitive).
  bool same_elements(const NonnegMultiset& other) const;

 private:
  std::vector<Rational> entries_;
};

struct InstanceSplit {
  NonnegMultiset positive;  // P_k = k * alpha_k, k > K
  NonnegMultiset negative;  // Q_k = -k * alpha_k, k <= K
};

InstanceSplit split_instance(const OrderedZeroSumSequence& seq);

}  // namespace ordercheck
