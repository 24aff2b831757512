#pragma once

// Proof traces for the truncated-sum comparison
//
//   A(t) = sum_{k>K} (k alpha_k - t)_+  >=  B(t) = sum_{k<=K} (-k alpha_k - t)_+
//
// at a fixed threshold t >= 0. A certificate records every intermediate
// inequality of the two-case argument with exact values so that an
// independent checker can replay it from (alpha, t) alone.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ordercheck/core.hpp"
#include "ordercheck/rational.hpp"

namespace ordercheck {

enum class ProofCase {
  kTrivialBZero,  // B = 0
  kSmallN,        // n <= 3K + 1
  kLargeN,        // n > 3K + 1, tail beyond M = n - 2K - 1
};

std::string_view proof_case_name(ProofCase c);
/// Throws InputError(Parse) for unknown names.
ProofCase parse_proof_case(std::string_view name);

/// One inequality lhs >= rhs in the chain.
///
/// Step names, in chain order:
///   pigeonhole            -l alpha_l - t                  >= B / K
///   prefix_sum            -sum_{k<=l} alpha_k - t         >= -l alpha_l - t
///   zero_sum_transfer     sum_{k>K} alpha_k               >= B / K + t
/// small-n:
///   rearrangement         sum_{k>K} k alpha_k             >= (n+K+1)/2 * sum_{k>K} alpha_k
///   linear_lower_bound    A                               >= sum_{k>K} k alpha_k - (n-K) t
///   combined_bound        sum_{k>K} k alpha_k - (n-K) t   >= (n+K+1)/(2K) B + (3K+1-n)/2 t
///   final_bound           (n+K+1)/(2K) B + (3K+1-n)/2 t   >= B
/// large-n:
///   tail_average          sum_{k>M} alpha_k               >= (n-M)/(n-K) * sum_{k>K} alpha_k
///   tail_rearrangement    sum_{k>M} k alpha_k             >= (n+M+1)/2 * sum_{k>M} alpha_k
///   tail_linear_bound     A                               >= sum_{k>M} k alpha_k - (n-M) t
///   tail_combined_bound   sum_{k>M} k alpha_k - (n-M) t   >= c B + d t
///   coefficient_identity  c = (n+M+1)(n-M)/(2K(n-K))      >= (2K+1)/K   (equality)
///   vanishing_t_term      M + 2K + 1 - n                  >= 0          (equality)
///   final_bound           (2K+1)/K * B                    >= B
/// every case:
///   conclusion            A                               >= B
struct BoundStep {
  std::string name;
  Rational lhs;
  Rational rhs;
  bool holds = false;

  friend bool operator==(const BoundStep&, const BoundStep&) = default;
};

struct Lemma1Certificate {
  Rational t;
  std::int64_t n = 0;
  std::int64_t K = 0;
  Rational B;
  Rational A;
  std::optional<std::int64_t> l;  // absent when B = 0
  ProofCase proof_case = ProofCase::kTrivialBZero;
  std::optional<std::int64_t> M;  // large-n only
  std::vector<BoundStep> bound_chain;

  const BoundStep* step(std::string_view name) const;

  friend bool operator==(const Lemma1Certificate&, const Lemma1Certificate&) = default;
};

/// Builds the trace in exact arithmetic. l is the smallest index attaining
/// max_{k<=K}(-k alpha_k). Throws InputError(NegativeThreshold) for t < 0
/// and InternalError if a step that must hold does not.
Lemma1Certificate certify_lemma1(const OrderedZeroSumSequence& seq, const Rational& t);

struct CertificateCheck {
  bool ok = false;
  std::string failing_step;  // field or step name; empty when ok
  std::string detail;
};

/// Replays the certificate from (seq, t) alone and compares every field and
/// step. Never throws on a bad certificate.
CertificateCheck check_certificate(const Lemma1Certificate& cert,
                                   const OrderedZeroSumSequence& seq, const Rational& t);

struct RearrangementBound {
  Rational lhs;  // sum index * value
  Rational rhs;  // mean(index) * sum value
};

/// Similarly-ordered rearrangement bound. indices must be consecutive and
/// increasing and tail nondecreasing (InputError(InvalidArgument)); sizes
/// must match (InputError(LengthMismatch)).
RearrangementBound rearrangement_lower_bound(std::span<const std::int64_t> indices,
                                             std::span<const Rational> tail);

}  // namespace ordercheck
