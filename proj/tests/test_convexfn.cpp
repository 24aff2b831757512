#include <cmath>

#include "doctest.h"
#include "ordercheck/convexfn.hpp"
#include "support/generators.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace ordercheck;
using th::q;

TEST_CASE("eval_odd examples") {
  CHECK(eval_odd(OddConvexCombination::sinh(2), 1.0) == doctest::Approx(2.350402).epsilon(1e-6));
  CHECK(eval_odd(OddConvexCombination::exp_diff(), 1.0) == doctest::Approx(std::exp(1.0) - std::exp(-1.0)));
  CHECK(eval_odd(OddConvexCombination::monomial(3), q("-2")) == -8);
  CHECK(eval_odd(OddConvexCombination::sinh(), 0.0) == 0.0);
  CHECK(eval_odd(OddConvexCombination::plus(q("1")), q("0")) == 0);
  CHECK(eval_odd(OddConvexCombination::plus(q("1")), q("-3")) == -2);
  CHECK(eval_odd(OddConvexCombination::plus(q("1")), q("1/2")) == 0);
}

TEST_CASE("atom construction errors") {
  CHECK_INPUT_ERROR(AnalyticAtom::monomial(2), ErrorCode::kInvalidAtom);
  CHECK_INPUT_ERROR(AnalyticAtom::monomial(-1), ErrorCode::kInvalidAtom);
  CHECK_INPUT_ERROR(AnalyticAtom::sinh(q("-1")), ErrorCode::kInvalidAtom);
  CHECK_INPUT_ERROR(OddConvexCombination().add_linear(q("-1")), ErrorCode::kInvalidAtom);
  CHECK_INPUT_ERROR(OddConvexCombination().add_plus(q("1"), q("-1")), ErrorCode::kInvalidAtom);
  CHECK_INPUT_ERROR(OddConvexCombination::identity().scaled(q("-2")), ErrorCode::kInvalidAtom);
  CHECK_INPUT_ERROR(OddConvexCombination::sinh().eval(q("1")), ErrorCode::kInexactFunction);
}

TEST_CASE("odd polynomial coefficients") {
  const auto p = OddConvexCombination::odd_polynomial({q("1"), q("0"), q("3")});
  CHECK(p.eval(q("2")) == 2 + 3 * 32);
  CHECK(p.eval(q("-1")) == -4);
  CHECK(p.is_exact());
  CHECK_FALSE(OddConvexCombination::exp_diff().is_exact());
  CHECK(OddConvexCombination::plus(q("1")).is_piecewise_linear());
  CHECK(p.describe() == "x + 3*x^5");
}

TEST_CASE("combinations add and scale") {
  auto phi = OddConvexCombination::identity() + OddConvexCombination::plus(q("1"), q("2"));
  phi += OddConvexCombination::monomial(3);
  CHECK(phi.eval(q("2")) == 2 + 2 + 8);
  CHECK(phi.scaled(q("1/2")).eval(q("2")) == 6);
}

TEST_CASE("oddness, monotonicity and convexity on random points") {
  gen::Rng rng(3);
  for (int iter = 0; iter < 2000; ++iter) {
    const auto phi = gen::exact_phi(rng);
    const Rational x = gen::rational(rng, 40, 8, -40);
    CHECK(phi.eval(-x) == -phi.eval(x));
    CHECK(phi.eval(Rational(0)) == 0);

    std::vector<Rational> xs = {gen::rational(rng, 40, 8), gen::rational(rng, 40, 8),
                                gen::rational(rng, 40, 8)};
    std::sort(xs.begin(), xs.end());
    if (xs[0] == xs[1] || xs[1] == xs[2]) continue;
    const Rational f1 = phi.eval(xs[0]), f2 = phi.eval(xs[1]), f3 = phi.eval(xs[2]);
    CHECK(f1 <= f2);
    CHECK((f2 - f1) / (xs[1] - xs[0]) <= (f3 - f2) / (xs[2] - xs[1]));
  }
  const auto s = OddConvexCombination::exp_diff(q("3/2")) + OddConvexCombination::sinh();
  for (int iter = 0; iter < 2000; ++iter) {
    const double x = std::uniform_real_distribution<double>(-8.0, 8.0)(rng);
    CHECK(s.eval(-x) == doctest::Approx(-s.eval(x)).epsilon(1e-12));
  }
}

TEST_CASE("cone_membership_pl examples") {
  SUBCASE("odd extension of (x-1)_+") {
    const auto m = cone_membership_pl(PiecewiseLinear::from_combination(OddConvexCombination::plus(q("1"))));
    CHECK(m.member);
    CHECK(m.verdict == ConeVerdict::kMember);
  }
  SUBCASE("|x| is not odd") {
    const auto m = cone_membership_pl(PiecewiseLinear(q("0"), {q("0")}, {q("-1"), q("1")}));
    CHECK_FALSE(m.member);
    CHECK(m.verdict == ConeVerdict::kNotOdd);
  }
  SUBCASE("x - (x-1)_+ extended oddly is concave on [0, inf)") {
    const PiecewiseLinear f(q("0"), {q("-1"), q("1")}, {q("0"), q("1"), q("0")});
    const auto m = cone_membership_pl(f);
    CHECK_FALSE(m.member);
    CHECK(m.verdict == ConeVerdict::kConcave);
  }
  SUBCASE("-x is odd but decreasing") {
    const auto m = cone_membership_pl(PiecewiseLinear::linear(q("-1")));
    CHECK(m.verdict == ConeVerdict::kNegativeSlope);
  }
  SUBCASE("nonzero value at 0") {
    CHECK(cone_membership_pl(PiecewiseLinear(q("1"), {}, {q("1")})).verdict == ConeVerdict::kNotOdd);
  }
}

TEST_CASE("PiecewiseLinear validates its representation") {
  CHECK_INPUT_ERROR(PiecewiseLinear(q("0"), {q("1")}, {q("1")}), ErrorCode::kMalformedRepresentation);
  CHECK_INPUT_ERROR(PiecewiseLinear(q("0"), {q("1"), q("1")}, {q("1"), q("1"), q("1")}),
                    ErrorCode::kMalformedRepresentation);
  CHECK_INPUT_ERROR(PiecewiseLinear::from_combination(OddConvexCombination::sinh()),
                    ErrorCode::kInexactFunction);
}

TEST_CASE("PL form agrees with the combination and the cone is closed") {
  gen::Rng rng(4);
  for (int iter = 0; iter < 500; ++iter) {
    auto phi = gen::exact_phi(rng);
    // Drop the cubic and quintic parts; keep the PL part.
    OddConvexCombination pl;
    pl.add_linear(phi.linear_coeff());
    for (const auto& a : phi.plus_atoms()) pl.add_plus(a.weight, a.knot);
    const auto f = PiecewiseLinear::from_combination(pl);
    for (int i = 0; i < 10; ++i) {
      const Rational x = gen::rational(rng, 60, 8, -60);
      CHECK(f(x) == pl.eval(x));
    }
    CHECK(cone_membership_pl(f).member);

    OddConvexCombination other;
    other.add_plus(gen::rational(rng, 4, 2), gen::rational(rng, 8, 2));
    const auto g = PiecewiseLinear::from_combination(other);
    CHECK(cone_membership_pl(f.scaled(gen::rational(rng, 6, 3)) + g).member);
  }
}

TEST_CASE("decompose_plus examples") {
  SUBCASE("(x-1)_+") {
    const PLIncreasingConvexFn f(q("0"), {{q("1"), q("1")}});
    const auto d = decompose_plus(f);
    CHECK(d.initial_slope == 0);
    REQUIRE(d.atoms.size() == 1);
    CHECK(d.atoms[0] == SlopeIncrement{q("1"), q("1")});
  }
  SUBCASE("s0 = 1, (2, 3)") {
    const PLIncreasingConvexFn f(q("1"), {{q("2"), q("3")}});
    CHECK(f(q("3")) == 6);
    CHECK(recompose(decompose_plus(f))(q("3")) == 6);
  }
  SUBCASE("2x") {
    const auto d = decompose_plus(PLIncreasingConvexFn(q("2"), {}));
    CHECK(d.initial_slope == 2);
    CHECK(d.atoms.empty());
  }
}

TEST_CASE("PLIncreasingConvexFn normalization and errors") {
  const PLIncreasingConvexFn f(q("1"), {{q("0"), q("2")}, {q("3"), q("1")}, {q("3"), q("1")},
                                        {q("5"), q("0")}});
  CHECK(f.initial_slope() == 3);
  REQUIRE(f.breakpoints().size() == 1);
  CHECK(f.breakpoints()[0] == SlopeIncrement{q("3"), q("2")});
  CHECK_INPUT_ERROR(PLIncreasingConvexFn(q("-1"), {}), ErrorCode::kMalformedRepresentation);
  CHECK_INPUT_ERROR(PLIncreasingConvexFn(q("0"), {{q("1"), q("-1")}}),
                    ErrorCode::kMalformedRepresentation);
  CHECK_INPUT_ERROR(PLIncreasingConvexFn(q("0"), {{q("-1"), q("1")}}),
                    ErrorCode::kMalformedRepresentation);
  CHECK_INPUT_ERROR(f(q("-1")), ErrorCode::kNegativeThreshold);
}

TEST_CASE("decomposition round trip and reconstruction identity") {
  gen::Rng rng(6);
  for (int iter = 0; iter < 1000; ++iter) {
    const auto f = gen::pl_fn(rng);
    CHECK(recompose(decompose_plus(f)) == f);
    std::vector<Rational> probe = {Rational(0)};
    for (const auto& b : f.breakpoints()) {
      probe.push_back(b.knot);
      probe.push_back(b.knot + Rational(1, 2));
    }
    for (const auto& x : probe) {
      Rational direct = f.initial_slope() * x;
      for (const auto& b : f.breakpoints()) direct += b.increment * oracle::plus_part(x - b.knot);
      CHECK(f(x) == direct);
    }
  }
}

TEST_CASE("pl_approximation examples") {
  SUBCASE("sinh on [0, 2] with 3 knots") {
    const auto f = pl_approximation(OddConvexCombination::sinh(), q("2"), 3);
    CHECK(f.initial_slope().get_d() == doctest::Approx(std::sinh(1.0)));
    REQUIRE(f.breakpoints().size() == 1);
    CHECK(f.breakpoints()[0].knot == 1);
    const double second = std::sinh(2.0) - std::sinh(1.0);
    CHECK(Rational(f.initial_slope() + f.breakpoints()[0].increment).get_d() == doctest::Approx(second));
    CHECK(second == doctest::Approx(2.4517).epsilon(1e-4));
  }
  SUBCASE("x^3 on [0, 1] with 2 knots") {
    const auto f = pl_approximation(OddConvexCombination::monomial(3), q("1"), 2);
    CHECK(f.initial_slope() == 1);
    CHECK(f.breakpoints().empty());
  }
  SUBCASE("x is reproduced") {
    const auto f = pl_approximation(OddConvexCombination::identity(), q("7"), 8);
    CHECK(f == PLIncreasingConvexFn(q("1"), {}));
  }
}

TEST_CASE("pl_approximation errors") {
  const auto cube = OddConvexCombination::monomial(3);
  CHECK_INPUT_ERROR(pl_approximation(cube, q("1"), 1), ErrorCode::kInvalidArgument);
  CHECK_INPUT_ERROR(pl_approximation(cube, q("0"), 3), ErrorCode::kInvalidArgument);
  const auto concave = [](const Rational& x) { return x < 1 ? x : Rational(1); };
  CHECK_INPUT_ERROR(pl_approximation(concave, q("2"), 5), ErrorCode::kNonConvexSample);
  const auto shifted = [](const Rational& x) { return x + 1; };
  CHECK_INPUT_ERROR(pl_approximation(shifted, q("2"), 5), ErrorCode::kInvalidArgument);
  const auto decreasing = [](const Rational& x) { return -x; };
  CHECK_INPUT_ERROR(pl_approximation(decreasing, q("2"), 5), ErrorCode::kNotMonotone);
}

TEST_CASE("pl interpolant equals the atom at knots and lies above between") {
  const OddConvexCombination atoms[] = {OddConvexCombination::monomial(3),
                                        OddConvexCombination::monomial(5, q("1/3")),
                                        OddConvexCombination::sinh()};
  for (const auto& atom : atoms) {
    const Rational top = 3;
    const int knots = 13;
    const auto f = pl_approximation(atom, top, knots);
    for (int i = 0; i < knots; ++i) {
      const Rational x = top * i / (knots - 1);
      CHECK(f.approx(x.get_d()) == doctest::Approx(atom.eval(x.get_d())).epsilon(1e-12));
    }
    for (int i = 0; i < 200; ++i) {
      const double x = 3.0 * (i + 0.5) / 200.0;
      CHECK(f.approx(x) >= atom.eval(x) - 1e-12);
    }
  }
}
