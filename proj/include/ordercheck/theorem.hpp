#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ordercheck/convexfn.hpp"
#include "ordercheck/core.hpp"
#include "ordercheck/stoploss.hpp"

namespace ordercheck {

/// A computed quantity. `exact` is present when the whole computation ran in
/// rational arithmetic; `value` is always filled (rounded from `exact` if
/// needed). `scale` is the sum of absolute values of the summed terms and
/// feeds the approximate-mode tolerance.
struct Evaluation {
  double value = 0.0;
  double scale = 0.0;
  std::optional<Rational> exact;

  bool nonnegative(const ScalarPolicy& policy) const {
    if (exact) return sgn(*exact) >= 0;
    return policy.accepts_nonnegative(value, scale);
  }

  friend bool operator==(const Evaluation&, const Evaluation&) = default;
};

/// (1 * alpha_1, 2 * alpha_2, ..., n * alpha_n).
std::vector<Rational> weighted_image(const OrderedZeroSumSequence& seq);

/// sum_j phi(j * alpha_j). Exact when the policy is exact; throws
/// InputError(InexactFunction) if exact mode is requested for a
/// transcendental phi.
Evaluation theorem_sum(const OrderedZeroSumSequence& seq, const OddConvexCombination& phi,
                       const ScalarPolicy& policy);

Rational theorem_sum_exact(const OrderedZeroSumSequence& seq,
                           const OddConvexCombination& phi);

struct VerifyReport {
  Evaluation value;        // direct sum
  Evaluation split_value;  // sum phi(P) - sum phi(Q)
  bool nonnegative = false;
  InstanceSplit split;
  OrderWitness order;
};

/// Runs the direct sum and the P/Q route side by side. Throws InternalError
/// when the oddness identity between them fails (exactly, or beyond
/// tolerance in approximate mode) or when the split is not dominating.
VerifyReport verify_main(const OrderedZeroSumSequence& seq, const OddConvexCombination& phi,
                         const ScalarPolicy& policy);

struct MarginReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  double cross_check = 0.0;  // same margin via an independent route
  bool nonnegative = false;
  bool consistent = false;   // |margin - cross_check| within tolerance
};

/// sum e^{k alpha_k} vs sum e^{-k alpha_k}; cross-checked against
/// theorem_sum with the exp_diff atom.
MarginReport exp_inequality_check(const OrderedZeroSumSequence& seq,
                                  const ScalarPolicy& policy = ScalarPolicy::approximate());

/// sum x_k^k vs sum x_k^{-k} for 0 < x_1 <= ... <= x_n with product 1;
/// cross-checked against exp_inequality_check on alpha_k = ln x_k.
/// Errors: Empty, NonPositiveEntry, NotSorted, ProductNotOne.
MarginReport product_form_check(std::span<const double> x,
                                const ScalarPolicy& policy = ScalarPolicy::approximate());

enum class KaramataVerdict { kHolds, kHypothesisFailed };

struct DecompositionTerm {
  Rational knot;          // 0 for the linear term
  Rational weight;        // s0 or ds_i
  Rational order_margin;  // pi_A(knot) - pi_B(knot)
  Rational contribution;  // weight * order_margin

  friend bool operator==(const DecompositionTerm&, const DecompositionTerm&) = default;
};

struct KaramataResult {
  Rational sum_a;
  Rational sum_b;
  KaramataVerdict verdict = KaramataVerdict::kHolds;
  OrderWitness order;
  std::vector<DecompositionTerm> terms;  // sum of contributions == sum_a - sum_b
};

/// Compares sum F(a) with sum F(b). The difference is rebuilt term by term
/// from the plus-function decomposition of F; a mismatch throws
/// InternalError. When A does not dominate B the sums are still computed and
/// the verdict is kHypothesisFailed.
KaramataResult karamata_compare(const NonnegMultiset& a, const NonnegMultiset& b,
                                const PLIncreasingConvexFn& f);

}  // namespace ordercheck
