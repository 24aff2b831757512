#include "ordercheck/convexfn.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "ordercheck/error.hpp"

namespace ordercheck {
namespace {

void require_nonnegative(const Rational& w, const char* what) {
  if (sgn(w) < 0) {
    throw InputError(ErrorCode::kInvalidAtom,
                     std::string(what) + " weight " + to_string(w) + " is negative");
  }
}

Rational rational_pow(const Rational& base, unsigned degree) {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), degree);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), degree);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string weighted_label(const Rational& w, const std::string& label) {
  if (w == 1) return label;
  return to_string(w) + "*" + label;
}

}  // namespace

AnalyticAtom AnalyticAtom::sinh(Rational weight) {
  require_nonnegative(weight, "sinh");
  return {AtomKind::kSinh, 1, std::move(weight)};
}

AnalyticAtom AnalyticAtom::exp_diff(Rational weight) {
  require_nonnegative(weight, "exp_diff");
  return {AtomKind::kExpDiff, 1, std::move(weight)};
}

AnalyticAtom AnalyticAtom::monomial(int degree, Rational weight) {
  if (degree <= 0 || degree % 2 == 0) {
    throw InputError(ErrorCode::kInvalidAtom,
                     "monomial degree " + std::to_string(degree) +
                         " is not an odd positive integer");
  }
  require_nonnegative(weight, "monomial");
  return {AtomKind::kMonomial, degree, std::move(weight)};
}

OddConvexCombination OddConvexCombination::identity() {
  OddConvexCombination phi;
  phi.add_linear(1);
  return phi;
}

OddConvexCombination OddConvexCombination::plus(Rational knot, Rational weight) {
  OddConvexCombination phi;
  phi.add_plus(weight, knot);
  return phi;
}

OddConvexCombination OddConvexCombination::sinh(Rational weight) {
  OddConvexCombination phi;
  phi.add_analytic(AnalyticAtom::sinh(std::move(weight)));
  return phi;
}

OddConvexCombination OddConvexCombination::exp_diff(Rational weight) {
  OddConvexCombination phi;
  phi.add_analytic(AnalyticAtom::exp_diff(std::move(weight)));
  return phi;
}

OddConvexCombination OddConvexCombination::monomial(int degree, Rational weight) {
  OddConvexCombination phi;
  phi.add_analytic(AnalyticAtom::monomial(degree, std::move(weight)));
  return phi;
}

OddConvexCombination OddConvexCombination::odd_polynomial(
    const std::vector<Rational>& coeffs) {
  OddConvexCombination phi;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    require_nonnegative(coeffs[j], "polynomial");
    if (sgn(coeffs[j]) == 0) continue;
    if (j == 0) {
      phi.add_linear(coeffs[j]);
    } else {
      phi.add_analytic(AnalyticAtom::monomial(static_cast<int>(2 * j + 1), coeffs[j]));
    }
  }
  return phi;
}

OddConvexCombination& OddConvexCombination::add_linear(const Rational& weight) {
  require_nonnegative(weight, "linear");
  linear_ += weight;
  return *this;
}

OddConvexCombination& OddConvexCombination::add_plus(const Rational& weight,
                                                     const Rational& knot) {
  require_nonnegative(weight, "plus-function");
  if (sgn(knot) < 0) {
    throw InputError(ErrorCode::kInvalidAtom,
                     "plus-function knot " + to_string(knot) + " is negative");
  }
  plus_.push_back({weight, knot});
  return *this;
}

OddConvexCombination& OddConvexCombination::add_analytic(const AnalyticAtom& atom) {
  if (atom.kind == AtomKind::kMonomial) {
    // Re-validate: the struct is an aggregate and may be built by hand.
    analytic_.push_back(AnalyticAtom::monomial(atom.degree, atom.weight));
  } else {
    require_nonnegative(atom.weight, "analytic");
    analytic_.push_back(atom);
  }
  return *this;
}

OddConvexCombination& OddConvexCombination::operator+=(const OddConvexCombination& other) {
  linear_ += other.linear_;
  plus_.insert(plus_.end(), other.plus_.begin(), other.plus_.end());
  analytic_.insert(analytic_.end(), other.analytic_.begin(), other.analytic_.end());
  return *this;
}

OddConvexCombination OddConvexCombination::scaled(const Rational& c) const {
  require_nonnegative(c, "scale");
  OddConvexCombination out = *this;
  out.linear_ *= c;
  for (auto& p : out.plus_) p.weight *= c;
  for (auto& a : out.analytic_) a.weight *= c;
  return out;
}

bool OddConvexCombination::is_exact() const {
  return std::all_of(analytic_.begin(), analytic_.end(),
                     [](const AnalyticAtom& a) { return a.is_exact(); });
}

Rational OddConvexCombination::eval(const Rational& x) const {
  if (!is_exact()) {
    throw InputError(ErrorCode::kInexactFunction,
                     "'" + describe() + "' has no exact rational evaluation");
  }
  const Rational ax = abs(x);
  Rational value = linear_ * ax;
  for (const auto& p : plus_) value += p.weight * positive_part(ax - p.knot);
  for (const auto& a : analytic_) {
    value += a.weight * rational_pow(ax, static_cast<unsigned>(a.degree));
  }
  return sgn(x) < 0 ? Rational(-value) : value;
}

double OddConvexCombination::eval(double x) const {
  const double ax = std::fabs(x);
  double value = to_double(linear_) * ax;
  for (const auto& p : plus_) {
    value += to_double(p.weight) * std::max(ax - to_double(p.knot), 0.0);
  }
  for (const auto& a : analytic_) {
    const double w = to_double(a.weight);
    switch (a.kind) {
      case AtomKind::kSinh: value += w * std::sinh(ax); break;
      case AtomKind::kExpDiff: value += w * 2.0 * std::sinh(ax); break;
      case AtomKind::kMonomial: value += w * std::pow(ax, a.degree); break;
    }
  }
  return x < 0.0 ? -value : value;
}

std::string OddConvexCombination::describe() const {
  std::vector<std::string> parts;
  if (sgn(linear_) != 0) parts.push_back(weighted_label(linear_, "x"));
  for (const auto& p : plus_) {
    parts.push_back(weighted_label(p.weight, "(x-" + to_string(p.knot) + ")_+"));
  }
  for (const auto& a : analytic_) {
    switch (a.kind) {
      case AtomKind::kSinh: parts.push_back(weighted_label(a.weight, "sinh")); break;
      case AtomKind::kExpDiff: parts.push_back(weighted_label(a.weight, "exp_diff")); break;
      case AtomKind::kMonomial:
        parts.push_back(weighted_label(
            a.weight, a.degree == 1 ? "x" : "x^" + std::to_string(a.degree)));
        break;
    }
  }
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

// ---------------------------------------------------------------------------

PiecewiseLinear::PiecewiseLinear(Rational value_at_zero, std::vector<Rational> knots,
                                 std::vector<Rational> slopes)
    : value_at_zero_(std::move(value_at_zero)),
      knots_(std::move(knots)),
      slopes_(std::move(slopes)) {
  if (slopes_.size() != knots_.size() + 1) {
    throw InputError(ErrorCode::kMalformedRepresentation,
                     "piecewise-linear function needs one more slope than knots");
  }
  for (std::size_t i = 1; i < knots_.size(); ++i) {
    if (!(knots_[i - 1] < knots_[i])) {
      throw InputError(ErrorCode::kMalformedRepresentation,
                       "knots must be strictly increasing");
    }
  }
}

PiecewiseLinear PiecewiseLinear::linear(const Rational& slope) {
  return PiecewiseLinear(0, {}, {slope});
}

PiecewiseLinear PiecewiseLinear::from_combination(const OddConvexCombination& phi) {
  PiecewiseLinear out = linear(phi.linear_coeff());
  for (const auto& a : phi.analytic_atoms()) {
    if (a.kind != AtomKind::kMonomial || a.degree != 1) {
      throw InputError(ErrorCode::kInexactFunction,
                       "'" + phi.describe() + "' is not piecewise linear");
    }
    out += linear(a.weight);
  }
  for (const auto& p : phi.plus_atoms()) {
    if (sgn(p.knot) == 0) {
      out += linear(p.weight);
    } else {
      out += PiecewiseLinear(0, {-p.knot, p.knot}, {p.weight, 0, p.weight});
    }
  }
  return out;
}

Rational PiecewiseLinear::operator()(const Rational& x) const {
  // Integrate the slope from 0 to x across the knots in between.
  auto slope_after = [this](const Rational& s) {
    auto it = std::upper_bound(knots_.begin(), knots_.end(), s);
    return slopes_[static_cast<std::size_t>(it - knots_.begin())];
  };
  auto slope_before = [this](const Rational& s) {
    auto it = std::lower_bound(knots_.begin(), knots_.end(), s);
    return slopes_[static_cast<std::size_t>(it - knots_.begin())];
  };

  Rational value = value_at_zero_;
  if (sgn(x) > 0) {
    Rational pos = 0;
    for (const auto& k : knots_) {
      if (k <= pos) continue;
      if (k >= x) break;
      value += slope_after(pos) * (k - pos);
      pos = k;
    }
    value += slope_after(pos) * (x - pos);
  } else if (sgn(x) < 0) {
    Rational pos = 0;
    for (auto it = knots_.rbegin(); it != knots_.rend(); ++it) {
      if (*it >= pos) continue;
      if (*it <= x) break;
      value -= slope_before(pos) * (pos - *it);
      pos = *it;
    }
    value -= slope_before(pos) * (pos - x);
  }
  return value;
}

PiecewiseLinear& PiecewiseLinear::operator+=(const PiecewiseLinear& other) {
  std::vector<Rational> merged;
  std::merge(knots_.begin(), knots_.end(), other.knots_.begin(), other.knots_.end(),
             std::back_inserter(merged));
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

  auto slope_in = [](const PiecewiseLinear& f, const Rational& left_end, bool leftmost) {
    // Slope of f just right of left_end (or far left when leftmost).
    if (leftmost) return f.slopes_.front();
    auto it = std::upper_bound(f.knots_.begin(), f.knots_.end(), left_end);
    return f.slopes_[static_cast<std::size_t>(it - f.knots_.begin())];
  };

  std::vector<Rational> slopes;
  slopes.reserve(merged.size() + 1);
  slopes.push_back(slope_in(*this, 0, true) + slope_in(other, 0, true));
  for (const auto& k : merged) {
    slopes.push_back(slope_in(*this, k, false) + slope_in(other, k, false));
  }
  value_at_zero_ += other.value_at_zero_;
  knots_ = std::move(merged);
  slopes_ = std::move(slopes);
  return *this;
}

PiecewiseLinear PiecewiseLinear::scaled(const Rational& c) const {
  PiecewiseLinear out = *this;
  out.value_at_zero_ *= c;
  for (auto& s : out.slopes_) s *= c;
  return out;
}

ConeMembership cone_membership_pl(const PiecewiseLinear& f) {
  if (sgn(f.value_at_zero()) != 0) {
    return {false, ConeVerdict::kNotOdd, "not odd: f(0) = " + to_string(f.value_at_zero())};
  }
  if (f.slopes().front() != f.slopes().back()) {
    return {false, ConeVerdict::kNotOdd, "not odd: outer slopes differ"};
  }
  for (const auto& k : f.knots()) {
    if (sgn(f(k) + f(-k)) != 0) {
      return {false, ConeVerdict::kNotOdd, "not odd: f(x) + f(-x) != 0 at x = " + to_string(k)};
    }
  }

  const auto& knots = f.knots();
  const auto& slopes = f.slopes();
  std::size_t first = static_cast<std::size_t>(
      std::upper_bound(knots.begin(), knots.end(), Rational(0)) - knots.begin());
  for (std::size_t i = first; i < slopes.size(); ++i) {
    if (sgn(slopes[i]) < 0) {
      return {false, ConeVerdict::kNegativeSlope,
              "decreasing on [0, inf): slope " + to_string(slopes[i])};
    }
    if (i > first && slopes[i] < slopes[i - 1]) {
      return {false, ConeVerdict::kConcave,
              "not convex on [0, inf): slopes decrease at x = " + to_string(knots[i - 1])};
    }
  }
  return {true, ConeVerdict::kMember, "odd, increasing and convex on [0, inf)"};
}

// ---------------------------------------------------------------------------

PLIncreasingConvexFn::PLIncreasingConvexFn(Rational initial_slope,
                                           std::vector<SlopeIncrement> breakpoints)
    : initial_slope_(std::move(initial_slope)) {
  if (sgn(initial_slope_) < 0) {
    throw InputError(ErrorCode::kMalformedRepresentation,
                     "initial slope " + to_string(initial_slope_) + " is negative");
  }
  std::map<Rational, Rational> merged;
  for (auto& bp : breakpoints) {
    if (sgn(bp.knot) < 0) {
      throw InputError(ErrorCode::kMalformedRepresentation,
                       "knot " + to_string(bp.knot) + " is negative");
    }
    if (sgn(bp.increment) < 0) {
      throw InputError(ErrorCode::kMalformedRepresentation,
                       "slope increment " + to_string(bp.increment) + " is negative");
    }
    if (sgn(bp.knot) == 0) {
      initial_slope_ += bp.increment;
    } else {
      merged[bp.knot] += bp.increment;
    }
  }
  for (auto& [knot, inc] : merged) {
    if (sgn(inc) != 0) breakpoints_.push_back({knot, inc});
  }
}

Rational PLIncreasingConvexFn::operator()(const Rational& x) const {
  if (sgn(x) < 0) {
    throw InputError(ErrorCode::kNegativeThreshold, "F is defined on [0, inf) only");
  }
  Rational value = initial_slope_ * x;
  for (const auto& bp : breakpoints_) {
    if (bp.knot >= x) break;
    value += bp.increment * (x - bp.knot);
  }
  return value;
}

double PLIncreasingConvexFn::approx(double x) const {
  double value = to_double(initial_slope_) * x;
  for (const auto& bp : breakpoints_) {
    value += to_double(bp.increment) * std::max(x - to_double(bp.knot), 0.0);
  }
  return value;
}

PlusDecomposition decompose_plus(const PLIncreasingConvexFn& f) {
  return {f.initial_slope(), f.breakpoints()};
}

PLIncreasingConvexFn recompose(const PlusDecomposition& d) {
  return PLIncreasingConvexFn(d.initial_slope, d.atoms);
}

PLIncreasingConvexFn pl_approximation(
    const std::function<Rational(const Rational&)>& sample,
    const Rational& domain_max, int num_knots) {
  if (num_knots < 2) {
    throw InputError(ErrorCode::kInvalidArgument, "num_knots must be at least 2");
  }
  if (sgn(domain_max) <= 0) {
    throw InputError(ErrorCode::kInvalidArgument, "domain_max must be positive");
  }
  const Rational step = domain_max / (num_knots - 1);
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(num_knots));
  for (int i = 0; i < num_knots; ++i) values.push_back(sample(step * i));
  if (sgn(values.front()) != 0) {
    throw InputError(ErrorCode::kInvalidArgument,
                     "function must vanish at 0, got " + to_string(values.front()));
  }

  Rational previous = (values[1] - values[0]) / step;
  if (sgn(previous) < 0) {
    throw InputError(ErrorCode::kNotMonotone, "first chord slope is negative");
  }
  const Rational initial = previous;
  std::vector<SlopeIncrement> breakpoints;
  for (int i = 1; i + 1 < num_knots; ++i) {
    Rational chord = (values[i + 1] - values[i]) / step;
    if (chord < previous) {
      throw InputError(ErrorCode::kNonConvexSample,
                       "chord slopes decrease at x = " + to_string(step * i));
    }
    breakpoints.push_back({step * i, chord - previous});
    previous = std::move(chord);
  }
  return PLIncreasingConvexFn(initial, std::move(breakpoints));
}

PLIncreasingConvexFn pl_approximation(const OddConvexCombination& atom,
                                      const Rational& domain_max, int num_knots) {
  if (atom.is_exact()) {
    return pl_approximation([&atom](const Rational& x) { return atom.eval(x); },
                            domain_max, num_knots);
  }
  return pl_approximation(
      [&atom](const Rational& x) { return from_double(atom.eval(to_double(x))); },
      domain_max, num_knots);
}

}  // namespace ordercheck
