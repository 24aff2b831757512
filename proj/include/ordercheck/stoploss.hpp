#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ordercheck/core.hpp"
#include "ordercheck/rational.hpp"

namespace ordercheck {

/// pi(t) = sum over entries a of (a - t)_+, for t >= 0.
///
/// Stored as the value of pi at each segment start (0 and every distinct
/// entry) together with the integer slope on the segment that follows.
/// Duplicate entries collapse into one knot; their multiplicity shows up in
/// the slope jump.
class StopLossCurve {
 public:
  StopLossCurve() = default;
  explicit StopLossCurve(const NonnegMultiset& multiset);

  /// Throws InputError(NegativeThreshold) when t < 0.
  Rational operator()(const Rational& t) const;
  double approx(double t) const;

  /// Sorted distinct entries.
  const std::vector<Rational>& knots() const { return knots_; }
  /// pi(0) = sum of entries.
  const Rational& mass_at_zero() const { return values_.front(); }
  /// Segment starts: 0 followed by every positive knot.
  const std::vector<Rational>& segment_starts() const { return starts_; }
  /// slopes()[i] applies on [segment_starts()[i], segment_starts()[i+1]);
  /// the last segment has slope 0.
  const std::vector<long>& slopes() const { return slopes_; }
  std::size_t cardinality() const { return cardinality_; }

 private:
  std::vector<Rational> knots_;
  std::vector<Rational> starts_{Rational(0)};
  std::vector<Rational> values_{Rational(0)};
  std::vector<long> slopes_{0};
  std::size_t cardinality_ = 0;
};

StopLossCurve curve_from_multiset(const NonnegMultiset& multiset);

Rational stop_loss_eval(const StopLossCurve& curve, const Rational& t);

struct KnotMargin {
  Rational t;
  Rational margin;  // pi_A(t) - pi_B(t)

  friend bool operator==(const KnotMargin&, const KnotMargin&) = default;
};

struct OrderWitness {
  bool dominates = true;
  std::optional<Rational> violating_t;  // smallest failing checkpoint
  std::vector<KnotMargin> margins;      // at 0 and every knot of A and B

  friend bool operator==(const OrderWitness&, const OrderWitness&) = default;
};

/// Decides pi_A(t) >= pi_B(t) for all t >= 0 by checking t = 0 and every
/// knot of A and B. pi_A - pi_B is piecewise linear with exactly those
/// breakpoints and vanishes past the largest, so the finite check is exact.
/// Ties count as dominance. In approximate mode a checkpoint passes when its
/// margin is at least -tolerance(pi_A(t) + pi_B(t)).
OrderWitness dominates(const NonnegMultiset& a, const NonnegMultiset& b,
                       const ScalarPolicy& policy = ScalarPolicy::exact());

OrderWitness dominates(const StopLossCurve& a, const StopLossCurve& b,
                       const ScalarPolicy& policy = ScalarPolicy::exact());

}  // namespace ordercheck
