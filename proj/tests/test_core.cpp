#include <random>

#include "doctest.h"
#include "ordercheck/core.hpp"
#include "support/generators.hpp"
#include "support/helpers.hpp"

using namespace ordercheck;
using th::q;
using th::qs;

TEST_CASE("parse_rational accepts fractions, integers and decimals") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-6/8") == Rational(-3, 4));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("-1.25") == Rational(-5, 4));
  CHECK(parse_rational("0.5") == Rational(1, 2));
  CHECK_INPUT_ERROR(parse_rational(""), ErrorCode::kParse);
  CHECK_INPUT_ERROR(parse_rational("1/0"), ErrorCode::kParse);
  CHECK_INPUT_ERROR(parse_rational("abc"), ErrorCode::kParse);
  CHECK_INPUT_ERROR(parse_rational("1.2.3"), ErrorCode::kParse);
}

TEST_CASE("to_string is canonical") {
  CHECK(to_string(q("6/8")) == "3/4");
  CHECK(to_string(q("-4/2")) == "-2");
  CHECK(to_string(Rational(0)) == "0");
}

TEST_CASE("from_double is exact") {
  CHECK(from_double(0.5) == Rational(1, 2));
  CHECK(from_double(0.1).get_d() == 0.1);
  CHECK(from_double(0.1) != Rational(1, 10));
  CHECK_INPUT_ERROR(from_double(std::nan("")), ErrorCode::kInvalidArgument);
}

TEST_CASE("ScalarPolicy tolerances") {
  const auto p = ScalarPolicy::approximate();
  CHECK(p.abs_tol == 1e-12);
  CHECK(p.rel_tol == 1e-9);
  CHECK(p.accepts_nonnegative(-1e-13, 0.0));
  CHECK_FALSE(p.accepts_nonnegative(-1e-11, 0.0));
  CHECK(p.accepts_nonnegative(-1e-10, 1.0));
  CHECK_INPUT_ERROR(ScalarPolicy::approximate(0.0, 1e-9), ErrorCode::kInvalidArgument);
  CHECK_INPUT_ERROR(ScalarPolicy::approximate(1e-12, -1.0), ErrorCode::kInvalidArgument);
  CHECK(ScalarPolicy::exact().is_exact());
}

TEST_CASE("make_sequence examples") {
  SUBCASE("[-1, 1]") {
    auto s = make_sequence(qs({"-1", "1"}));
    CHECK(s.size() == 2);
    CHECK(s.negative_count() == 1);
    CHECK_FALSE(s.all_zero());
  }
  SUBCASE("[0, 0, 0]") {
    auto s = make_sequence(qs({"0", "0", "0"}));
    CHECK(s.size() == 3);
    CHECK(s.negative_count() == 0);
    CHECK(s.all_zero());
  }
  SUBCASE("[1, -1] is not sorted") {
    CHECK_INPUT_ERROR(make_sequence(qs({"1", "-1"})), ErrorCode::kNotSorted);
  }
}

TEST_CASE("make_sequence errors") {
  std::vector<Rational> empty;
  CHECK_INPUT_ERROR(make_sequence(empty), ErrorCode::kEmpty);
  CHECK_INPUT_ERROR(make_sequence(qs({"-1", "2"})), ErrorCode::kNonZeroSum);
  // Sortedness is reported before the sum.
  CHECK_INPUT_ERROR(make_sequence(qs({"2", "-1"})), ErrorCode::kNotSorted);
  // The near-zero sum is within tolerance but the sequence has no negatives.
  const auto approx = ScalarPolicy::approximate();
  CHECK_INPUT_ERROR(make_sequence(qs({"0", "1/1000000000000000"}), approx),
                    ErrorCode::kNonZeroSum);
}

TEST_CASE("approximate mode accepts a small residual sum") {
  const auto approx = ScalarPolicy::approximate();
  auto v = qs({"-1", "1"});
  v[1] += q("1/10000000000000");
  CHECK_NOTHROW(make_sequence(v, approx));
  CHECK_INPUT_ERROR(make_sequence(v), ErrorCode::kNonZeroSum);
}

TEST_CASE("recenter subtracts the exact mean and is idempotent") {
  auto s = make_sequence(qs({"1", "2", "6"}), ScalarPolicy::exact(), true);
  CHECK(s.values() == qs({"-2", "-1", "3"}));
  auto again = make_sequence(s.values(), ScalarPolicy::exact(), true);
  CHECK(again == s);
  // A constant input recenters to all zeros.
  CHECK(make_sequence(qs({"5", "5"}), ScalarPolicy::exact(), true).all_zero());
}

TEST_CASE("NonnegMultiset") {
  CHECK(th::ms({}).empty());
  CHECK(th::ms({"1", "2", "3/2"}).total() == Rational(9, 2));
  CHECK(th::ms({"1", "2"}).same_elements(th::ms({"2", "1"})));
  CHECK_FALSE(th::ms({"1", "2"}).same_elements(th::ms({"1", "1"})));
  CHECK_INPUT_ERROR(th::ms({"1", "-1/2"}), ErrorCode::kNegativeEntry);
}

TEST_CASE("split_instance examples") {
  SUBCASE("(-2,-1,1,2)") {
    auto s = split_instance(th::seq({"-2", "-1", "1", "2"}));
    CHECK(s.positive.same_elements(th::ms({"3", "8"})));
    CHECK(s.negative.same_elements(th::ms({"2", "2"})));
  }
  SUBCASE("(-1,1)") {
    auto s = split_instance(th::seq({"-1", "1"}));
    CHECK(s.positive.same_elements(th::ms({"2"})));
    CHECK(s.negative.same_elements(th::ms({"1"})));
  }
  SUBCASE("(0,0)") {
    auto s = split_instance(th::seq({"0", "0"}));
    CHECK(s.positive.same_elements(th::ms({"0", "0"})));
    CHECK(s.negative.empty());
  }
}

TEST_CASE("sequence and split invariants on random instances") {
  gen::Rng rng(11);
  for (int iter = 0; iter < 2000; ++iter) {
    const auto n = static_cast<std::size_t>(gen::uniform(rng, 2, 12));
    const auto K = static_cast<std::size_t>(gen::uniform(rng, 1, static_cast<long>(n) - 1));
    const auto s = make_sequence(gen::sequence_with(rng, n, K));
    REQUIRE(s.negative_count() == K);
    CHECK(s.alpha(K) < 0);
    CHECK(s.alpha(K + 1) >= 0);
    for (std::size_t k = 1; k < n; ++k) CHECK(s.alpha(k) <= s.alpha(k + 1));

    const auto split = split_instance(s);
    CHECK(split.positive.size() == n - K);
    CHECK(split.negative.size() == K);
    for (const auto& x : split.negative.entries()) CHECK(x > 0);
    Rational weighted = 0;
    for (std::size_t k = 1; k <= n; ++k) weighted += Rational(static_cast<long>(k)) * s.alpha(k);
    CHECK(split.positive.total() - split.negative.total() == weighted);
  }
}
