#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ordercheck/rational.hpp"

namespace ordercheck {

// ---------------------------------------------------------------------------
// Members of the cone of odd functions that are increasing and convex on
// [0, inf). Every atom is evaluated at |x| and the sign is reapplied, so
// oddness holds by construction.
// ---------------------------------------------------------------------------

enum class AtomKind {
  kSinh,      // sinh(x)
  kExpDiff,   // e^x - e^-x = 2 sinh(x)
  kMonomial,  // x^d, d odd
};

struct AnalyticAtom {
  AtomKind kind = AtomKind::kMonomial;
  int degree = 1;  // monomials only
  Rational weight = 1;

  static AnalyticAtom sinh(Rational weight = 1);
  static AnalyticAtom exp_diff(Rational weight = 1);
  /// Throws InputError(InvalidAtom) for even or nonpositive degree.
  static AnalyticAtom monomial(int degree, Rational weight = 1);

  bool is_exact() const { return kind == AtomKind::kMonomial; }

  friend bool operator==(const AnalyticAtom&, const AnalyticAtom&) = default;
};

/// Odd extension of x -> weight * (x - knot)_+.
struct PlusAtom {
  Rational weight;
  Rational knot;

  friend bool operator==(const PlusAtom&, const PlusAtom&) = default;
};

class OddConvexCombination {
 public:
  OddConvexCombination() = default;

  static OddConvexCombination identity();
  static OddConvexCombination plus(Rational knot, Rational weight = 1);
  static OddConvexCombination sinh(Rational weight = 1);
  static OddConvexCombination exp_diff(Rational weight = 1);
  static OddConvexCombination monomial(int degree, Rational weight = 1);
  /// a_1 x + a_3 x^3 + a_5 x^5 + ...; coefficients given in that order.
  static OddConvexCombination odd_polynomial(const std::vector<Rational>& coeffs);

  // All weights must be >= 0; violations throw InputError(InvalidAtom).
  OddConvexCombination& add_linear(const Rational& weight);
  OddConvexCombination& add_plus(const Rational& weight, const Rational& knot);
  OddConvexCombination& add_analytic(const AnalyticAtom& atom);

  OddConvexCombination& operator+=(const OddConvexCombination& other);
  friend OddConvexCombination operator+(OddConvexCombination a,
                                        const OddConvexCombination& b) {
    return a += b;
  }
  /// Nonnegative scaling; throws InputError(InvalidAtom) for c < 0.
  OddConvexCombination scaled(const Rational& c) const;

  const Rational& linear_coeff() const { return linear_; }
  const std::vector<PlusAtom>& plus_atoms() const { return plus_; }
  const std::vector<AnalyticAtom>& analytic_atoms() const { return analytic_; }

  /// True when no transcendental atom is present.
  bool is_exact() const;
  bool is_piecewise_linear() const { return analytic_.empty(); }

  /// Throws InputError(InexactFunction) if !is_exact().
  Rational eval(const Rational& x) const;
  double eval(double x) const;

  /// Short label used in reports, e.g. "x^3" or "2*sinh + (x-1)_+".
  std::string describe() const;

  friend bool operator==(const OddConvexCombination&,
                         const OddConvexCombination&) = default;

 private:
  Rational linear_ = 0;
  std::vector<PlusAtom> plus_;
  std::vector<AnalyticAtom> analytic_;
};

inline Rational eval_odd(const OddConvexCombination& phi, const Rational& x) {
  return phi.eval(x);
}
inline double eval_odd(const OddConvexCombination& phi, double x) { return phi.eval(x); }

// ---------------------------------------------------------------------------
// Piecewise-linear functions on the whole line, for cone membership tests.
// ---------------------------------------------------------------------------

/// f(0) = value_at_zero; slopes[0] applies left of knots[0], slopes[i] on
/// (knots[i-1], knots[i]), slopes.back() right of knots.back().
class PiecewiseLinear {
 public:
  /// Throws InputError(MalformedRepresentation) unless knots are strictly
  /// increasing and slopes.size() == knots.size() + 1.
  PiecewiseLinear(Rational value_at_zero, std::vector<Rational> knots,
                  std::vector<Rational> slopes);

  static PiecewiseLinear linear(const Rational& slope);
  /// Exact PL form of a combination without analytic atoms; monomials of
  /// degree 1 are folded in. Throws InputError(InexactFunction) otherwise.
  static PiecewiseLinear from_combination(const OddConvexCombination& phi);

  Rational operator()(const Rational& x) const;

  const Rational& value_at_zero() const { return value_at_zero_; }
  const std::vector<Rational>& knots() const { return knots_; }
  const std::vector<Rational>& slopes() const { return slopes_; }

  PiecewiseLinear& operator+=(const PiecewiseLinear& other);
  friend PiecewiseLinear operator+(PiecewiseLinear a, const PiecewiseLinear& b) {
    return a += b;
  }
  PiecewiseLinear scaled(const Rational& c) const;

 private:
  Rational value_at_zero_;
  std::vector<Rational> knots_;
  std::vector<Rational> slopes_;
};

enum class ConeVerdict { kMember, kNotOdd, kNegativeSlope, kConcave };

struct ConeMembership {
  bool member = false;
  ConeVerdict verdict = ConeVerdict::kNotOdd;
  std::string reason;
};

/// Odd (f(0) = 0, f(x) + f(-x) = 0 at every knot and its mirror, equal outer
/// slopes) and nonnegative, nondecreasing slopes on [0, inf).
ConeMembership cone_membership_pl(const PiecewiseLinear& f);

// ---------------------------------------------------------------------------
// Increasing convex F on [0, inf) with F(0) = 0, as a plus-function sum.
// ---------------------------------------------------------------------------

struct SlopeIncrement {
  Rational knot;       // > 0
  Rational increment;  // >= 0

  friend bool operator==(const SlopeIncrement&, const SlopeIncrement&) = default;
};

/// F(x) = s0 * x + sum_i ds_i * (x - k_i)_+ .
class PLIncreasingConvexFn {
 public:
  PLIncreasingConvexFn() = default;
  /// Normalizes: a knot at 0 is folded into the initial slope, repeated
  /// knots merge, zero increments are dropped. Throws
  /// InputError(MalformedRepresentation) for negative slope, negative
  /// increment, or negative knot.
  PLIncreasingConvexFn(Rational initial_slope, std::vector<SlopeIncrement> breakpoints);

  const Rational& initial_slope() const { return initial_slope_; }
  const std::vector<SlopeIncrement>& breakpoints() const { return breakpoints_; }

  /// Throws InputError(NegativeThreshold) for x < 0.
  Rational operator()(const Rational& x) const;
  double approx(double x) const;

  friend bool operator==(const PLIncreasingConvexFn&,
                         const PLIncreasingConvexFn&) = default;

 private:
  Rational initial_slope_ = 0;
  std::vector<SlopeIncrement> breakpoints_;
};

/// Discrete form of F(x) = F'_+(0) x + int (x - t)_+ dF'_+(t): the measure
/// dF'_+ is a finite sum of point masses.
struct PlusDecomposition {
  Rational initial_slope;
  std::vector<SlopeIncrement> atoms;

  friend bool operator==(const PlusDecomposition&, const PlusDecomposition&) = default;
};

PlusDecomposition decompose_plus(const PLIncreasingConvexFn& f);
PLIncreasingConvexFn recompose(const PlusDecomposition& d);

/// Interpolates `sample` at num_knots equally spaced points of
/// [0, domain_max]. The interpolant equals the function at the knots and lies
/// above it in between. Throws InputError(NonConvexSample) when chord slopes
/// decrease and InputError(InvalidArgument) when num_knots < 2,
/// domain_max <= 0, or sample(0) != 0.
PLIncreasingConvexFn pl_approximation(
    const std::function<Rational(const Rational&)>& sample,
    const Rational& domain_max, int num_knots);

/// Uses exact evaluation for exact combinations; sinh-type atoms are sampled
/// in double precision and the samples taken as exact rationals.
PLIncreasingConvexFn pl_approximation(const OddConvexCombination& atom,
                                      const Rational& domain_max, int num_knots);

}  // namespace ordercheck
