#include "ordercheck/search.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ordercheck/error.hpp"
#include "ordercheck/stoploss.hpp"
#include "ordercheck/theorem.hpp"

namespace ordercheck {
namespace {

constexpr std::int64_t kGridDenominator = 8;
constexpr std::int64_t kGridNumeratorRange = 64;
constexpr double kMaxRawTuples = 1e8;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rational frac(std::int64_t num, std::int64_t den) {
  Rational q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

bool finding_before(const ScanFinding& a, const ScanFinding& b) {
  if (a.instance_index != b.instance_index) return a.instance_index < b.instance_index;
  return a.phi_index < b.phi_index;
}

// Strictly smaller margin, ties broken by position.
bool smaller_margin(const ScanFinding& a, const ScanFinding& b) {
  if (a.exact_margin && b.exact_margin) {
    if (*a.exact_margin != *b.exact_margin) return *a.exact_margin < *b.exact_margin;
  } else if (a.margin != b.margin) {
    return a.margin < b.margin;
  }
  return finding_before(a, b);
}

void sorted_merge(std::vector<ScanFinding>& into, const std::vector<ScanFinding>& from,
                  std::size_t cap) {
  std::vector<ScanFinding> out;
  out.reserve(into.size() + from.size());
  std::merge(into.begin(), into.end(), from.begin(), from.end(), std::back_inserter(out),
             finding_before);
  if (out.size() > cap) out.resize(cap);
  into = std::move(out);
}

ScalarPolicy evaluation_policy(const ScalarPolicy& source, const OddConvexCombination& phi) {
  if (source.is_exact() && phi.is_exact()) return ScalarPolicy::exact();
  return source.is_exact() ? ScalarPolicy::approximate() : source;
}

int resolve_threads(int threads) {
#ifdef _OPENMP
  return threads > 0 ? threads : omp_get_max_threads();
#else
  (void)threads;
  return 1;
#endif
}

}  // namespace

OrderedZeroSumSequence random_instance(std::size_t n, std::uint64_t seed,
                                       Distribution distribution) {
  if (n == 0) throw InputError(ErrorCode::kEmpty, "instance size must be positive");
  std::mt19937_64 rng(splitmix64(seed));

  if (distribution == Distribution::kUniformGridRational) {
    std::uniform_int_distribution<std::int64_t> draw(-kGridNumeratorRange, kGridNumeratorRange);
    std::vector<std::int64_t> m(n);
    for (auto& v : m) v = draw(rng);
    std::sort(m.begin(), m.end());
    std::int64_t sum = 0;
    for (auto v : m) sum += v;
    const auto count = static_cast<std::int64_t>(n);
    std::int64_t q = sum / count;
    if (sum % count != 0 && sum < 0) --q;  // floor division
    std::int64_t rem = sum - q * count;    // in [0, n)
    for (std::size_t i = 0; i < n; ++i) {
      m[i] -= q;
      if (static_cast<std::int64_t>(i) < rem) m[i] -= 1;
    }
    std::vector<Rational> values;
    values.reserve(n);
    for (auto v : m) values.push_back(frac(v, kGridDenominator));
    return make_sequence(values, ScalarPolicy::exact());
  }

  std::normal_distribution<double> draw(0.0, 1.0);
  std::vector<double> x(n);
  for (auto& v : x) v = draw(rng);
  std::sort(x.begin(), x.end());
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(n);
  std::vector<Rational> values;
  values.reserve(n);
  for (double v : x) values.push_back(from_double(v - mean));
  return make_sequence(values, ScalarPolicy::approximate());
}

std::vector<OrderedZeroSumSequence> exhaustive_grid(std::size_t n, std::int64_t half_range,
                                                    std::int64_t denominator) {
  if (n == 0) throw InputError(ErrorCode::kEmpty, "tuple length must be positive");
  if (half_range < 0 || denominator <= 0) {
    throw InputError(ErrorCode::kInvalidArgument,
                     "half_range must be >= 0 and denominator > 0");
  }
  const double raw = std::pow(static_cast<double>(2 * half_range + 1), static_cast<double>(n));
  if (raw > kMaxRawTuples) {
    throw InputError(ErrorCode::kBudgetExceeded,
                     "grid has " + std::to_string(raw) + " raw tuples, limit is 1e8");
  }

  std::vector<OrderedZeroSumSequence> out;
  std::vector<std::int64_t> current;
  current.reserve(n);
  const auto len = static_cast<std::int64_t>(n);

  // Nondecreasing tuples, pruned by whether the remaining slots can still
  // bring the sum back to zero.
  auto recurse = [&](auto&& self, std::int64_t lowest, std::int64_t sum) -> void {
    const auto placed = static_cast<std::int64_t>(current.size());
    if (placed == len) {
      if (sum == 0) {
        std::vector<Rational> values;
        values.reserve(n);
        for (auto v : current) values.push_back(frac(v, denominator));
        out.push_back(make_sequence(values, ScalarPolicy::exact()));
      }
      return;
    }
    const std::int64_t remaining = len - placed;
    for (std::int64_t v = lowest; v <= half_range; ++v) {
      if (sum + remaining * v > 0) break;
      if (sum + v + (remaining - 1) * half_range < 0) continue;
      current.push_back(v);
      self(self, v, sum + v);
      current.pop_back();
    }
  };
  recurse(recurse, -half_range, 0);
  return out;
}

InstanceSource InstanceSource::exhaustive(std::size_t n_min, std::size_t n_max,
                                          std::int64_t half_range, std::int64_t denominator) {
  if (n_min == 0 || n_max < n_min) {
    throw InputError(ErrorCode::kInvalidArgument, "need 1 <= n_min <= n_max");
  }
  InstanceSource src;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    auto grid = exhaustive_grid(n, half_range, denominator);
    std::move(grid.begin(), grid.end(), std::back_inserter(src.list_));
  }
  src.size_ = src.list_.size();
  src.policy_ = ScalarPolicy::exact();
  src.label_ = "exhaustive n=" + std::to_string(n_min) + ".." + std::to_string(n_max) +
               " entries {-" + std::to_string(half_range) + ".." +
               std::to_string(half_range) + "}/" + std::to_string(denominator);
  return src;
}

InstanceSource InstanceSource::random(std::size_t n_min, std::size_t n_max, std::size_t count,
                                      std::uint64_t seed, Distribution distribution) {
  if (n_min == 0 || n_max < n_min) {
    throw InputError(ErrorCode::kInvalidArgument, "need 1 <= n_min <= n_max");
  }
  InstanceSource src;
  src.size_ = count;
  src.policy_ = distribution == Distribution::kGaussianReal ? ScalarPolicy::approximate()
                                                            : ScalarPolicy::exact();
  src.draw_ = [n_min, n_max, seed, distribution](std::size_t i) {
    const std::uint64_t s = splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(i)));
    const std::size_t n = n_min + static_cast<std::size_t>(s % (n_max - n_min + 1));
    return random_instance(n, s, distribution);
  };
  src.label_ = std::string(distribution == Distribution::kGaussianReal ? "gaussian" : "grid") +
               " n=" + std::to_string(n_min) + ".." + std::to_string(n_max) +
               " seed=" + std::to_string(seed);
  return src;
}

InstanceSource InstanceSource::from_list(std::vector<OrderedZeroSumSequence> instances,
                                         ScalarPolicy policy) {
  InstanceSource src;
  src.list_ = std::move(instances);
  src.size_ = src.list_.size();
  src.policy_ = policy;
  src.label_ = "list of " + std::to_string(src.size_);
  return src;
}

OrderedZeroSumSequence InstanceSource::at(std::size_t i) const {
  if (draw_) return draw_(i);
  return list_.at(i);
}

MarginOutcome evaluate_margin(const OrderedZeroSumSequence& seq,
                              const OddConvexCombination& phi, const ScalarPolicy& policy) {
  MarginOutcome out;
  const ScalarPolicy eval_policy = evaluation_policy(policy, phi);
  Evaluation e = theorem_sum(seq, phi, eval_policy);
  out.margin = e.value;
  out.scale = e.scale;
  out.exact = e.exact;

  if (e.exact) {
    if (sgn(*e.exact) < 0) {
      out.status = MarginStatus::kViolation;
      out.evidence = "exact evaluation gives " + to_string(*e.exact);
    }
    return out;
  }
  if (e.value >= 0.0) return out;

  // Escalate: the theorem is proved, so a negative float is a tolerance
  // artifact until exact arithmetic confirms it.
  const auto exact_seq = make_sequence(seq.values(), ScalarPolicy::exact(), /*recenter=*/true);
  if (phi.is_exact()) {
    Rational exact = theorem_sum_exact(exact_seq, phi);
    if (sgn(exact) < 0) {
      out.status = MarginStatus::kViolation;
      out.exact = exact;
      out.evidence = "exact re-evaluation gives " + to_string(exact);
    } else {
      out.status = MarginStatus::kToleranceEvent;
      out.evidence = "exact re-evaluation gives " + to_string(exact);
    }
    return out;
  }
  const InstanceSplit split = split_instance(exact_seq);
  const OrderWitness w = dominates(split.positive, split.negative);
  if (w.dominates) {
    out.status = MarginStatus::kToleranceEvent;
    out.evidence = "exact P/Q dominance holds";
  } else {
    out.status = MarginStatus::kViolation;
    out.evidence = "exact P/Q dominance fails at t = " + to_string(*w.violating_t);
  }
  return out;
}

ScanAccumulator::ScanAccumulator(std::size_t phi_count, std::size_t near_equality_cap,
                                 double near_equality_threshold)
    : cap_(near_equality_cap), threshold_(near_equality_threshold), per_phi_(phi_count) {}

void ScanAccumulator::add(std::size_t instance_index, const OrderedZeroSumSequence& seq,
                          std::span<const MarginOutcome> outcomes) {
  ++instances_;
  std::vector<ScanFinding> near_here;
  for (std::size_t j = 0; j < outcomes.size(); ++j) {
    const MarginOutcome& o = outcomes[j];
    ScanFinding f{instance_index, j, {}, o.margin, o.scale, o.exact, o.evidence};

    PhiSummary& s = per_phi_[j];
    const bool first = s.evaluations == 0;
    ++s.evaluations;
    ScanFinding current_min{s.min_index, j, {}, s.min_margin, 0.0, s.min_margin_exact, {}};
    if (first || smaller_margin(f, current_min)) {
      s.min_margin = o.margin;
      s.min_margin_exact = o.exact;
      s.min_index = instance_index;
    }

    const bool new_min = !min_ || smaller_margin(f, *min_);
    const bool violation = o.status == MarginStatus::kViolation;
    const bool near = o.margin <= threshold_ * o.scale;
    if (o.status == MarginStatus::kToleranceEvent) {
      ++tolerance_events_;
      ++s.tolerance_events;
    }
    if (violation) ++s.violations;
    if (new_min || violation || (near && near_.size() + near_here.size() < cap_)) {
      f.alpha = seq.values();
    }
    if (new_min) min_ = f;
    if (violation) violations_.push_back(f);
    if (near && near_.size() + near_here.size() < cap_) near_here.push_back(f);
  }
  sorted_merge(near_, near_here, cap_);
}

void ScanAccumulator::merge(const ScanAccumulator& other) {
  instances_ += other.instances_;
  tolerance_events_ += other.tolerance_events_;
  if (other.min_ && (!min_ || smaller_margin(*other.min_, *min_))) min_ = other.min_;
  sorted_merge(violations_, other.violations_, SIZE_MAX);
  sorted_merge(near_, other.near_, cap_);
  for (std::size_t j = 0; j < per_phi_.size(); ++j) {
    PhiSummary& a = per_phi_[j];
    const PhiSummary& b = other.per_phi_[j];
    if (b.evaluations == 0) continue;
    ScanFinding fa{a.min_index, j, {}, a.min_margin, 0.0, a.min_margin_exact, {}};
    ScanFinding fb{b.min_index, j, {}, b.min_margin, 0.0, b.min_margin_exact, {}};
    if (a.evaluations == 0 || smaller_margin(fb, fa)) {
      a.min_margin = b.min_margin;
      a.min_margin_exact = b.min_margin_exact;
      a.min_index = b.min_index;
    }
    a.evaluations += b.evaluations;
    a.violations += b.violations;
    a.tolerance_events += b.tolerance_events;
  }
}

std::vector<Rational> shrink_near_equality(const OrderedZeroSumSequence& seq,
                                           const OddConvexCombination& phi,
                                           const ScalarPolicy& policy, double threshold) {
  std::vector<Rational> current = seq.values();
  auto still_near = [&](const std::vector<Rational>& values)
      -> std::optional<std::vector<Rational>> {
    auto candidate = make_sequence(values, ScalarPolicy::exact(), /*recenter=*/true);
    MarginOutcome o = evaluate_margin(candidate, phi, policy);
    if (o.margin <= threshold * o.scale) return candidate.values();
    return std::nullopt;
  };

  bool progressed = true;
  while (progressed && current.size() > 1) {
    progressed = false;
    const std::size_t n = current.size();
    std::vector<std::vector<Rational>> candidates;
    if (n >= 3) candidates.emplace_back(current.begin() + 1, current.end() - 1);
    const std::size_t half = (n + 1) / 2;
    if (half < n) {
      const std::size_t start = (n - half) / 2;
      candidates.emplace_back(current.begin() + static_cast<std::ptrdiff_t>(start),
                              current.begin() + static_cast<std::ptrdiff_t>(start + half));
    }
    // Prefer the smaller candidate.
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    for (const auto& c : candidates) {
      if (auto kept = still_near(c)) {
        current = std::move(*kept);
        progressed = true;
        break;
      }
    }
  }
  return current;
}

namespace {

std::vector<MarginOutcome> evaluate_all(const OrderedZeroSumSequence& seq,
                                        std::span<const OddConvexCombination> phi_set,
                                        const ScalarPolicy& policy) {
  std::vector<MarginOutcome> outcomes;
  outcomes.reserve(phi_set.size());
  for (const auto& phi : phi_set) outcomes.push_back(evaluate_margin(seq, phi, policy));
  return outcomes;
}

ScanReport finalize(const InstanceSource& source, std::span<const OddConvexCombination> phi_set,
                    const ScanOptions& options, const ScanAccumulator& acc) {
  ScanReport report;
  report.seed = options.seed;
  report.source = source.describe();
  report.instances_tested = acc.instances();
  report.evaluations = acc.instances() * phi_set.size();
  report.min_margin = acc.min_margin();
  report.violations = acc.violations();
  report.tolerance_events = acc.tolerance_events();
  report.per_phi = acc.per_phi();
  for (std::size_t j = 0; j < phi_set.size(); ++j) {
    report.per_phi[j].phi = phi_set[j].describe();
  }
  for (const auto& f : acc.near_equality()) {
    const auto& phi = phi_set[f.phi_index];
    auto seq = make_sequence(f.alpha, source.policy());
    NearEquality ne;
    ne.found = f;
    ne.shrunk = shrink_near_equality(seq, phi, source.policy(),
                                     options.near_equality_threshold);
    auto shrunk_seq = make_sequence(ne.shrunk, ScalarPolicy::exact());
    ne.shrunk_margin = evaluate_margin(shrunk_seq, phi, source.policy()).margin;
    report.shrunk_near_equality.push_back(std::move(ne));
  }
  return report;
}

void validate(std::span<const OddConvexCombination> phi_set, const ScanOptions& options) {
  if (options.budget == 0) throw InputError(ErrorCode::kInvalidArgument, "budget must be >= 1");
  if (phi_set.empty()) throw InputError(ErrorCode::kInvalidArgument, "phi set is empty");
}

}  // namespace

ScanReport scan_serial(const InstanceSource& source,
                       std::span<const OddConvexCombination> phi_set,
                       const ScanOptions& options) {
  validate(phi_set, options);
  const std::size_t count = std::min(options.budget, source.size());
  ScanAccumulator acc(phi_set.size(), options.max_near_equality,
                      options.near_equality_threshold);
  for (std::size_t i = 0; i < count; ++i) {
    const auto seq = source.at(i);
    const auto outcomes = evaluate_all(seq, phi_set, source.policy());
    acc.add(i, seq, outcomes);
  }
  return finalize(source, phi_set, options, acc);
}

ScanReport scan(const InstanceSource& source, std::span<const OddConvexCombination> phi_set,
                const ScanOptions& options) {
  validate(phi_set, options);
  const int threads = resolve_threads(options.threads);
  if (threads == 1) return scan_serial(source, phi_set, options);

  const auto count = static_cast<std::int64_t>(std::min(options.budget, source.size()));
  std::vector<ScanAccumulator> partial(
      static_cast<std::size_t>(threads),
      ScanAccumulator(phi_set.size(), options.max_near_equality,
                      options.near_equality_threshold));
  std::exception_ptr failure;

#pragma omp parallel num_threads(threads)
  {
#ifdef _OPENMP
    ScanAccumulator& mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
#else
    ScanAccumulator& mine = partial[0];
#endif
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        const auto idx = static_cast<std::size_t>(i);
        const auto seq = source.at(idx);
        const auto outcomes = evaluate_all(seq, phi_set, source.policy());
        mine.add(idx, seq, outcomes);
      } catch (...) {
#pragma omp critical(ordercheck_scan_failure)
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);

  for (std::size_t t = 1; t < partial.size(); ++t) partial[0].merge(partial[t]);
  return finalize(source, phi_set, options, partial[0]);
}

std::optional<TightnessRow> probe_instance(const OrderedZeroSumSequence& seq,
                                           const Rational& t) {
  const Lemma1Certificate cert = certify_lemma1(seq, t);
  if (sgn(cert.B) == 0) return std::nullopt;
  return TightnessRow{seq.values(), t, cert.A / cert.B, cert.proof_case};
}

TightnessReport tightness_probe(std::size_t n_max, std::span<const Rational> t_grid,
                                std::int64_t half_range, std::int64_t denominator) {
  TightnessReport report;
  for (std::size_t n = 2; n <= n_max; ++n) {
    for (const auto& seq : exhaustive_grid(n, half_range, denominator)) {
      for (const auto& t : t_grid) {
        auto row = probe_instance(seq, t);
        if (!row) continue;
        auto& slot = row->proof_case == ProofCase::kLargeN ? report.min_large_n
                                                           : report.min_small_n;
        if (!slot || row->ratio < slot->ratio) slot = *row;
        report.rows.push_back(std::move(*row));
      }
    }
  }
  return report;
}

}  // namespace ordercheck
