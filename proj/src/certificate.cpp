#include "ordercheck/certificate.hpp"

#include <algorithm>

#include "ordercheck/error.hpp"

namespace ordercheck {
namespace {

Rational r(std::int64_t v) { return Rational(static_cast<long>(v)); }

Rational frac(std::int64_t num, std::int64_t den) {
  Rational q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

BoundStep make_step(std::string name, Rational lhs, Rational rhs) {
  bool holds = lhs >= rhs;
  return {std::move(name), std::move(lhs), std::move(rhs), holds};
}

}  // namespace

std::string_view proof_case_name(ProofCase c) {
  switch (c) {
    case ProofCase::kTrivialBZero: return "trivial-B-zero";
    case ProofCase::kSmallN: return "small-n";
    case ProofCase::kLargeN: return "large-n";
  }
  return "unknown";
}

ProofCase parse_proof_case(std::string_view name) {
  if (name == "trivial-B-zero") return ProofCase::kTrivialBZero;
  if (name == "small-n") return ProofCase::kSmallN;
  if (name == "large-n") return ProofCase::kLargeN;
  throw InputError(ErrorCode::kParse, "unknown proof case '" + std::string(name) + "'");
}

const BoundStep* Lemma1Certificate::step(std::string_view name) const {
  auto it = std::find_if(bound_chain.begin(), bound_chain.end(),
                         [name](const BoundStep& s) { return s.name == name; });
  return it == bound_chain.end() ? nullptr : &*it;
}

RearrangementBound rearrangement_lower_bound(std::span<const std::int64_t> indices,
                                             std::span<const Rational> tail) {
  if (indices.size() != tail.size()) {
    throw InputError(ErrorCode::kLengthMismatch, "indices and tail differ in length");
  }
  if (indices.empty()) return {0, 0};
  for (std::size_t i = 1; i < indices.size(); ++i) {
    if (indices[i] != indices[i - 1] + 1) {
      throw InputError(ErrorCode::kInvalidArgument, "indices must be consecutive");
    }
    if (tail[i] < tail[i - 1]) {
      throw InputError(ErrorCode::kInvalidArgument, "tail must be nondecreasing");
    }
  }
  RearrangementBound out;
  Rational plain = 0;
  for (std::size_t i = 0; i < tail.size(); ++i) {
    out.lhs += r(indices[i]) * tail[i];
    plain += tail[i];
  }
  Rational mean_index = Rational(r(indices.front() + indices.back())) / 2;
  out.rhs = mean_index * plain;
  return out;
}

Lemma1Certificate certify_lemma1(const OrderedZeroSumSequence& seq, const Rational& t) {
  if (sgn(t) < 0) {
    throw InputError(ErrorCode::kNegativeThreshold, "threshold t must be >= 0");
  }
  const auto n = static_cast<std::int64_t>(seq.size());
  const auto K = static_cast<std::int64_t>(seq.negative_count());
  auto a = [&seq](std::int64_t k) -> const Rational& {
    return seq.alpha(static_cast<std::size_t>(k));
  };

  Lemma1Certificate cert;
  cert.t = t;
  cert.n = n;
  cert.K = K;
  for (std::int64_t k = 1; k <= n; ++k) {
    Rational weighted = r(k) * a(k);
    if (k <= K) {
      cert.B += positive_part(-weighted - t);
    } else {
      cert.A += positive_part(weighted - t);
    }
  }

  auto& chain = cert.bound_chain;
  if (sgn(cert.B) == 0) {
    cert.proof_case = ProofCase::kTrivialBZero;
    chain.push_back(make_step("conclusion", cert.A, cert.B));
    return cert;
  }

  std::int64_t l = 1;
  for (std::int64_t k = 2; k <= K; ++k) {
    if (-r(k) * a(k) > -r(l) * a(l)) l = k;
  }
  cert.l = l;
  const Rational b_over_k = cert.B / r(K);
  const Rational neg_l_term = -r(l) * a(l) - t;
  chain.push_back(make_step("pigeonhole", neg_l_term, b_over_k));
  if (!chain.back().holds) {
    throw InternalError("pigeonhole bound failed for the chosen index l");
  }

  Rational prefix = 0;
  for (std::int64_t k = 1; k <= l; ++k) prefix += a(k);
  chain.push_back(make_step("prefix_sum", -prefix - t, neg_l_term));

  Rational positive_sum = 0;
  for (std::int64_t k = K + 1; k <= n; ++k) positive_sum += a(k);
  chain.push_back(make_step("zero_sum_transfer", positive_sum, b_over_k + t));

  auto tail_bound = [&](std::int64_t from) {
    std::vector<std::int64_t> idx;
    std::vector<Rational> vals;
    for (std::int64_t k = from; k <= n; ++k) {
      idx.push_back(k);
      vals.push_back(a(k));
    }
    return rearrangement_lower_bound(idx, vals);
  };

  if (n <= 3 * K + 1) {
    cert.proof_case = ProofCase::kSmallN;
    RearrangementBound rb = tail_bound(K + 1);
    const Rational weighted_sum = rb.lhs;
    chain.push_back(make_step("rearrangement", rb.lhs, rb.rhs));
    const Rational linear = weighted_sum - r(n - K) * t;
    chain.push_back(make_step("linear_lower_bound", cert.A, linear));
    const Rational bound = Rational(r(n + K + 1)) / r(2 * K) * cert.B +
                           Rational(r(3 * K + 1 - n)) / 2 * t;
    chain.push_back(make_step("combined_bound", linear, bound));
    chain.push_back(make_step("final_bound", bound, cert.B));
  } else {
    cert.proof_case = ProofCase::kLargeN;
    const std::int64_t M = n - 2 * K - 1;
    cert.M = M;
    Rational tail_sum = 0;
    for (std::int64_t k = M + 1; k <= n; ++k) tail_sum += a(k);
    chain.push_back(make_step("tail_average", tail_sum,
                              Rational(r(n - M)) / r(n - K) * positive_sum));
    RearrangementBound rb = tail_bound(M + 1);
    chain.push_back(make_step("tail_rearrangement", rb.lhs, rb.rhs));
    const Rational linear = rb.lhs - r(n - M) * t;
    chain.push_back(make_step("tail_linear_bound", cert.A, linear));
    const Rational coeff = Rational(r((n + M + 1) * (n - M))) / r(2 * K * (n - K));
    const Rational t_coeff = Rational(r((M + 2 * K + 1 - n) * (n - M))) / r(2 * (n - K));
    chain.push_back(make_step("tail_combined_bound", linear, coeff * cert.B + t_coeff * t));
    const Rational target = Rational(r(2 * K + 1)) / r(K);
    chain.push_back(make_step("coefficient_identity", coeff, target));
    chain.push_back(make_step("vanishing_t_term", r(M + 2 * K + 1 - n), 0));
    chain.push_back(make_step("final_bound", target * cert.B, cert.B));
  }
  chain.push_back(make_step("conclusion", cert.A, cert.B));

  for (const auto& s : chain) {
    if (!s.holds) throw InternalError("proof step '" + s.name + "' does not hold");
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Independent replay. Shares no code with certify_lemma1 beyond the
// sequence accessor.

namespace {

struct Replay {
  std::int64_t n = 0;
  std::int64_t K = 0;
  Rational A;
  Rational B;
  ProofCase proof_case = ProofCase::kTrivialBZero;
  std::optional<std::int64_t> l;
  std::optional<std::int64_t> M;
  std::vector<BoundStep> chain;
};

Replay replay(const std::vector<Rational>& alpha, const Rational& t) {
  Replay out;
  out.n = static_cast<std::int64_t>(alpha.size());
  for (const auto& v : alpha) {
    if (sgn(v) < 0) ++out.K;
  }
  std::vector<Rational> w(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    w[i] = alpha[i] * static_cast<long>(i + 1);
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (static_cast<std::int64_t>(i) < out.K) {
      Rational d = -w[i] - t;
      if (sgn(d) > 0) out.B += d;
    } else {
      Rational d = w[i] - t;
      if (sgn(d) > 0) out.A += d;
    }
  }

  auto push = [&out](const char* name, const Rational& lhs, const Rational& rhs) {
    out.chain.push_back({name, lhs, rhs, lhs >= rhs});
  };

  if (sgn(out.B) == 0) {
    out.proof_case = ProofCase::kTrivialBZero;
    push("conclusion", out.A, out.B);
    return out;
  }

  const auto n = out.n;
  const auto K = out.K;
  const auto idx = [](std::int64_t k) { return static_cast<std::size_t>(k - 1); };

  std::int64_t l = 1;
  Rational best = -w[0];
  for (std::int64_t k = 1; k <= K; ++k) {
    if (-w[idx(k)] > best) {
      best = -w[idx(k)];
      l = k;
    }
  }
  out.l = l;
  Rational prefix = 0;
  for (std::int64_t k = 1; k <= l; ++k) prefix += alpha[idx(k)];
  Rational upper = 0;
  for (std::int64_t k = K + 1; k <= n; ++k) upper += alpha[idx(k)];

  push("pigeonhole", best - t, out.B / K);
  push("prefix_sum", -prefix - t, best - t);
  push("zero_sum_transfer", upper, out.B / K + t);

  if (n <= 3 * K + 1) {
    out.proof_case = ProofCase::kSmallN;
    Rational ws = 0;
    for (std::int64_t k = K + 1; k <= n; ++k) ws += w[idx(k)];
    push("rearrangement", ws, frac(n + K + 1, 2) * upper);
    Rational linear = ws - Rational(n - K) * t;
    push("linear_lower_bound", out.A, linear);
    Rational bound = frac(n + K + 1, 2 * K) * out.B + frac(3 * K + 1 - n, 2) * t;
    push("combined_bound", linear, bound);
    push("final_bound", bound, out.B);
  } else {
    out.proof_case = ProofCase::kLargeN;
    const std::int64_t M = n - 2 * K - 1;
    out.M = M;
    Rational tail = 0;
    Rational tail_w = 0;
    for (std::int64_t k = M + 1; k <= n; ++k) {
      tail += alpha[idx(k)];
      tail_w += w[idx(k)];
    }
    push("tail_average", tail, frac(n - M, n - K) * upper);
    push("tail_rearrangement", tail_w, frac(n + M + 1, 2) * tail);
    Rational linear = tail_w - Rational(n - M) * t;
    push("tail_linear_bound", out.A, linear);
    Rational c = frac((n + M + 1) * (n - M), 2 * K * (n - K));
    Rational d = frac((M + 2 * K + 1 - n) * (n - M), 2 * (n - K));
    push("tail_combined_bound", linear, c * out.B + d * t);
    Rational target = frac(2 * K + 1, K);
    push("coefficient_identity", c, target);
    push("vanishing_t_term", Rational(M + 2 * K + 1 - n), Rational(0));
    push("final_bound", target * out.B, out.B);
  }
  push("conclusion", out.A, out.B);
  return out;
}

CertificateCheck reject(std::string step, std::string detail) {
  return {false, std::move(step), std::move(detail)};
}

std::string opt_str(const std::optional<std::int64_t>& v) {
  return v ? std::to_string(*v) : "absent";
}

}  // namespace

CertificateCheck check_certificate(const Lemma1Certificate& cert,
                                   const OrderedZeroSumSequence& seq, const Rational& t) {
  if (sgn(t) < 0) return reject("t", "threshold is negative");
  if (cert.t != t) {
    return reject("t", "certificate t = " + to_string(cert.t) + ", expected " + to_string(t));
  }
  const Replay expected = replay(seq.values(), t);

  if (cert.n != expected.n) return reject("n", "expected n = " + std::to_string(expected.n));
  if (cert.K != expected.K) return reject("K", "expected K = " + std::to_string(expected.K));
  if (cert.B != expected.B) return reject("B", "expected B = " + to_string(expected.B));
  if (cert.A != expected.A) return reject("A", "expected A = " + to_string(expected.A));
  if (cert.proof_case != expected.proof_case) {
    return reject("case_selection",
                  std::string("expected case ") +
                      std::string(proof_case_name(expected.proof_case)) + " for n = " +
                      std::to_string(expected.n) + ", K = " + std::to_string(expected.K));
  }
  if (cert.l != expected.l) return reject("l", "expected l = " + opt_str(expected.l));
  if (cert.M != expected.M) return reject("M", "expected M = " + opt_str(expected.M));

  const std::size_t common = std::min(cert.bound_chain.size(), expected.chain.size());
  for (std::size_t i = 0; i < common; ++i) {
    const BoundStep& got = cert.bound_chain[i];
    const BoundStep& want = expected.chain[i];
    if (got.name != want.name) {
      return reject(want.name, "step " + std::to_string(i + 1) + " is named '" + got.name + "'");
    }
    if (got.lhs != want.lhs) {
      return reject(want.name, "lhs " + to_string(got.lhs) + ", expected " + to_string(want.lhs));
    }
    if (got.rhs != want.rhs) {
      return reject(want.name, "rhs " + to_string(got.rhs) + ", expected " + to_string(want.rhs));
    }
    if (!want.holds) return reject(want.name, "inequality does not hold");
    if (got.holds != want.holds) return reject(want.name, "verdict flag is wrong");
  }
  if (cert.bound_chain.size() != expected.chain.size()) {
    return reject("chain_length", "expected " + std::to_string(expected.chain.size()) +
                                      " steps, got " + std::to_string(cert.bound_chain.size()));
  }
  return {true, "", ""};
}

}  // namespace ordercheck
