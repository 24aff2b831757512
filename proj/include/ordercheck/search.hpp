#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ordercheck/certificate.hpp"
#include "ordercheck/convexfn.hpp"
#include "ordercheck/core.hpp"

namespace ordercheck {

enum class Distribution {
  kUniformGridRational,  // numerators uniform in [-64, 64], denominator 8
  kGaussianReal,         // standard normal draws, centered in double
};

/// Deterministic per (n, seed, distribution). The grid path re-centers
/// inside the lattice (1/8)Z by spreading the integer remainder over the
/// smallest entries, so the sum is exactly zero and order is preserved.
OrderedZeroSumSequence random_instance(std::size_t n, std::uint64_t seed,
                                       Distribution distribution);

/// Every sorted zero-sum tuple with entries in {-half_range..half_range} /
/// denominator, each exactly once, in lexicographic order. Throws
/// InputError(BudgetExceeded) when (2 half_range + 1)^n exceeds 10^8.
std::vector<OrderedZeroSumSequence> exhaustive_grid(std::size_t n, std::int64_t half_range,
                                                    std::int64_t denominator);

/// Random-access instance stream, so that instance i never depends on
/// which thread asks for it.
class InstanceSource {
 public:
  static InstanceSource exhaustive(std::size_t n_min, std::size_t n_max,
                                   std::int64_t half_range, std::int64_t denominator);
  static InstanceSource random(std::size_t n_min, std::size_t n_max, std::size_t count,
                               std::uint64_t seed, Distribution distribution);
  static InstanceSource from_list(std::vector<OrderedZeroSumSequence> instances,
                                  ScalarPolicy policy = ScalarPolicy::exact());

  std::size_t size() const { return size_; }
  OrderedZeroSumSequence at(std::size_t i) const;
  /// Exact for lattice sources, approximate for Gaussian draws.
  const ScalarPolicy& policy() const { return policy_; }
  std::string describe() const { return label_; }

 private:
  InstanceSource() = default;

  std::vector<OrderedZeroSumSequence> list_;
  std::function<OrderedZeroSumSequence(std::size_t)> draw_;
  std::size_t size_ = 0;
  ScalarPolicy policy_;
  std::string label_;
};

struct ScanOptions {
  std::size_t budget = 100000;
  double near_equality_threshold = 1e-6;  // margin <= threshold * scale
  std::size_t max_near_equality = 16;
  std::uint64_t seed = 0;  // recorded in the report
  int threads = 0;         // 0: OpenMP default
};

enum class MarginStatus { kOk, kToleranceEvent, kViolation };

struct MarginOutcome {
  double margin = 0.0;
  double scale = 0.0;
  std::optional<Rational> exact;
  MarginStatus status = MarginStatus::kOk;
  std::string evidence;  // escalation trace for tolerance events / violations

  friend bool operator==(const MarginOutcome&, const MarginOutcome&) = default;
};

/// Evaluates sum phi(k alpha_k) under `policy`. A negative approximate value
/// is escalated: the instance is re-centered exactly, then either evaluated
/// exactly (rational phi) or checked through exact P/Q dominance
/// (transcendental phi). Only an exactly confirmed failure is a violation.
MarginOutcome evaluate_margin(const OrderedZeroSumSequence& seq,
                              const OddConvexCombination& phi, const ScalarPolicy& policy);

struct ScanFinding {
  std::size_t instance_index = 0;
  std::size_t phi_index = 0;
  std::vector<Rational> alpha;
  double margin = 0.0;
  double scale = 0.0;
  std::optional<Rational> exact_margin;
  std::string evidence;

  friend bool operator==(const ScanFinding&, const ScanFinding&) = default;
};

struct NearEquality {
  ScanFinding found;
  std::vector<Rational> shrunk;  // smallest instance that kept the margin small
  double shrunk_margin = 0.0;

  friend bool operator==(const NearEquality&, const NearEquality&) = default;
};

struct PhiSummary {
  std::string phi;
  std::size_t evaluations = 0;
  double min_margin = 0.0;
  std::optional<Rational> min_margin_exact;
  std::size_t min_index = 0;
  std::size_t violations = 0;
  std::size_t tolerance_events = 0;

  friend bool operator==(const PhiSummary&, const PhiSummary&) = default;
};

struct ScanReport {
  std::uint64_t seed = 0;
  std::string source;
  std::size_t instances_tested = 0;
  std::size_t evaluations = 0;
  std::optional<ScanFinding> min_margin;  // empty only when nothing ran
  std::vector<ScanFinding> violations;
  std::size_t tolerance_events = 0;
  std::vector<NearEquality> shrunk_near_equality;
  std::vector<PhiSummary> per_phi;

  friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

/// Accumulates per-instance outcomes. merge() is associative and
/// commutative: minima break ties on (instance, phi) index and lists are
/// kept sorted by index, so the final report does not depend on scheduling.
class ScanAccumulator {
 public:
  ScanAccumulator(std::size_t phi_count, std::size_t near_equality_cap,
                  double near_equality_threshold);

  void add(std::size_t instance_index, const OrderedZeroSumSequence& seq,
           std::span<const MarginOutcome> outcomes);
  void merge(const ScanAccumulator& other);

  std::size_t instances() const { return instances_; }
  const std::optional<ScanFinding>& min_margin() const { return min_; }
  const std::vector<ScanFinding>& violations() const { return violations_; }
  const std::vector<ScanFinding>& near_equality() const { return near_; }
  std::size_t tolerance_events() const { return tolerance_events_; }
  const std::vector<PhiSummary>& per_phi() const { return per_phi_; }

 private:
  std::size_t cap_;
  double threshold_;
  std::size_t instances_ = 0;
  std::size_t tolerance_events_ = 0;
  std::optional<ScanFinding> min_;
  std::vector<ScanFinding> violations_;
  std::vector<ScanFinding> near_;
  std::vector<PhiSummary> per_phi_;
};

/// Parallel over instances with OpenMP; threads == 1 falls back to
/// scan_serial. Both produce identical reports.
ScanReport scan(const InstanceSource& source, std::span<const OddConvexCombination> phi_set,
                const ScanOptions& options);
ScanReport scan_serial(const InstanceSource& source,
                       std::span<const OddConvexCombination> phi_set,
                       const ScanOptions& options);

/// Drops the outer symmetric pair or keeps the middle half, re-centering
/// exactly, for as long as the margin stays within threshold * scale.
std::vector<Rational> shrink_near_equality(const OrderedZeroSumSequence& seq,
                                           const OddConvexCombination& phi,
                                           const ScalarPolicy& policy, double threshold);

struct TightnessRow {
  std::vector<Rational> alpha;
  Rational t;
  Rational ratio;  // A / B
  ProofCase proof_case = ProofCase::kSmallN;
};

struct TightnessReport {
  std::vector<TightnessRow> rows;
  std::optional<TightnessRow> min_small_n;
  std::optional<TightnessRow> min_large_n;
};

/// Row for one (instance, t); nullopt when B = 0.
std::optional<TightnessRow> probe_instance(const OrderedZeroSumSequence& seq,
                                           const Rational& t);

/// Probes every grid instance with 2 <= n <= n_max (entries in
/// {-half_range..half_range}/denominator) at each t in t_grid.
TightnessReport tightness_probe(std::size_t n_max, std::span<const Rational> t_grid,
                                std::int64_t half_range = 3, std::int64_t denominator = 2);

}  // namespace ordercheck
