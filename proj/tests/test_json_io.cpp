#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "ordercheck/json_io.hpp"
#include "support/certificates.hpp"
#include "support/helpers.hpp"

using namespace ordercheck;
using io::Json;
using th::q;
using th::qs;
using th::seq;

namespace {

// Serialize to text and parse back, as a file round trip would.
Json reparse(const Json& j) { return Json::parse(j.dump(2)); }

}  // namespace

TEST_CASE("rationals travel as strings") {
  CHECK(io::to_json(q("-3/4")) == Json("-3/4"));
  CHECK(io::rational_from_json(Json("5/10"), true) == q("1/2"));
  CHECK(io::rational_from_json(Json(3), true) == 3);
  CHECK(io::rational_from_json(Json(0.5), false) == q("1/2"));
  CHECK(io::rational_from_json(Json(2.0), true) == 2);
  CHECK_INPUT_ERROR(io::rational_from_json(Json(0.1), true), ErrorCode::kParse);
  CHECK_INPUT_ERROR(io::rational_from_json(Json(true), false), ErrorCode::kParse);
}

TEST_CASE("sequence input forms") {
  const auto bare = io::sequence_from_json(Json::parse(R"([-1, "1/2", "1/2"])"), true);
  CHECK(bare.alpha == qs({"-1", "1/2", "1/2"}));
  CHECK_FALSE(bare.mode);
  const auto obj = io::sequence_from_json(Json::parse(R"({"alpha": [-1, 1], "policy": "approx"})"), false);
  CHECK(obj.mode == ArithmeticMode::kApprox);
  CHECK_INPUT_ERROR(io::sequence_from_json(Json::parse(R"({"alpha": [1], "policy": "fuzzy"})"), false),
                    ErrorCode::kParse);
  const auto s = seq({"-3/2", "1/2", "1"});
  const auto back = io::sequence_from_json(reparse(io::sequence_to_json(s)), true);
  CHECK(back.alpha == s.values());
  CHECK(back.mode == ArithmeticMode::kExact);
}

TEST_CASE("multiset forms") {
  CHECK(io::multiset_from_json(Json::parse(R"({"entries": [1, "3/2"]})"), true).same_elements(th::ms({"1", "3/2"})));
  CHECK(io::multiset_from_json(Json::parse("[]"), true).empty());
  CHECK_INPUT_ERROR(io::multiset_from_json(Json::parse("[-1]"), true), ErrorCode::kNegativeEntry);
}

TEST_CASE("phi descriptors round trip") {
  OddConvexCombination phi;
  phi.add_linear(q("1/2"));
  phi.add_plus(q("2"), q("3/4"));
  phi.add_analytic(AnalyticAtom::sinh(q("1/3")));
  phi.add_analytic(AnalyticAtom::exp_diff());
  phi.add_analytic(AnalyticAtom::monomial(5, q("7")));
  CHECK(io::phi_from_json(reparse(io::to_json(phi))) == phi);

  const auto parsed = io::phi_from_json(Json::parse(R"({"linear": 1, "plus": [[2, 1]], "analytic": [["monomial", 3, 1]]})"));
  CHECK(parsed.eval(q("2")) == 2 + 2 + 8);

  const auto from_pl = io::phi_from_json(Json::parse(R"({"s0": 1, "breakpoints": [["1", "2"]]})"));
  CHECK(from_pl.eval(q("-3")) == -(3 + 4));

  CHECK_INPUT_ERROR(io::phi_from_json(Json::parse(R"({"analytic": [["monomial", 2, 1]]})")), ErrorCode::kInvalidAtom);
  CHECK_INPUT_ERROR(io::phi_from_json(Json::parse(R"({"analytic": [["cosh", 1]]})")), ErrorCode::kParse);
  CHECK_INPUT_ERROR(io::phi_from_json(Json::parse(R"({"linear": -1})")), ErrorCode::kInvalidAtom);
}

TEST_CASE("PL function and step function forms") {
  const PLIncreasingConvexFn f(q("1"), {{q("2"), q("3")}, {q("5"), q("1/2")}});
  CHECK(io::pl_fn_from_json(reparse(io::to_json(f))) == f);
  CHECK_INPUT_ERROR(io::pl_fn_from_json(Json::parse(R"({"s0": 0, "breakpoints": [[1, -1]]})")),
                    ErrorCode::kMalformedRepresentation);
  const auto s = io::step_fn_from_json(Json::parse(R"({"breaks": ["1/3"], "levels": [-1, 2]})"));
  CHECK(s.breaks == qs({"1/3"}));
  CHECK(s.levels == qs({"-1", "2"}));
  CHECK(io::to_json(MonotoneFunctionSpec(s))["kind"] == "step");
}

TEST_CASE("report round trips") {
  SUBCASE("evaluation") {
    const Evaluation e{0.1 + 0.2, 3.5, q("7/3")};
    CHECK(io::evaluation_from_json(reparse(io::to_json(e))) == e);
    const Evaluation approx{-1e-300, 2.0, std::nullopt};
    CHECK(io::evaluation_from_json(reparse(io::to_json(approx))) == approx);
  }
  SUBCASE("order witness") {
    const auto w = dominates(th::ms({"1", "1"}), th::ms({"3"}));
    CHECK(io::order_witness_from_json(reparse(io::to_json(w))) == w);
  }
  SUBCASE("certificates in every case") {
    gen::Rng rng(51);
    for (auto c : {ProofCase::kTrivialBZero, ProofCase::kSmallN, ProofCase::kLargeN}) {
      for (int i = 0; i < 30; ++i) {
        const auto inst = gen::cert_instance(rng, c);
        const auto cert = certify_lemma1(make_sequence(inst.alpha), inst.t);
        const auto j = io::to_json(cert);
        CHECK(io::certificate_from_json(reparse(j)) == cert);
        CHECK(j["schema"] == io::kSchemaVersion);
        for (const auto& step : j["bound_chain"]) CHECK(step["lhs"].is_string());
      }
    }
  }
  SUBCASE("verify report") {
    const auto r = verify_main(seq({"-2", "-1", "1", "2"}), OddConvexCombination::monomial(3), ScalarPolicy::exact());
    const auto back = io::verify_report_from_json(reparse(io::to_json(r)));
    CHECK(back.value == r.value);
    CHECK(back.split_value == r.split_value);
    CHECK(back.nonnegative == r.nonnegative);
    CHECK(back.split.positive.entries() == r.split.positive.entries());
    CHECK(back.split.negative.entries() == r.split.negative.entries());
    CHECK(back.order == r.order);
  }
  SUBCASE("karamata") {
    const auto r = karamata_compare(th::ms({"3", "8"}), th::ms({"2", "2"}), PLIncreasingConvexFn(q("1"), {{q("2"), q("1")}}));
    const auto back = io::karamata_from_json(reparse(io::to_json(r)));
    CHECK(back.sum_a == r.sum_a);
    CHECK(back.sum_b == r.sum_b);
    CHECK(back.verdict == r.verdict);
    CHECK(back.order == r.order);
    CHECK(back.terms == r.terms);
  }
  SUBCASE("convergence rows") {
    AnalyticFn f{AnalyticFamily::kAffine, 1.0, q("1"), q("-1/2")};
    const std::int64_t ns[] = {1, 2, 10};
    const auto rows = convergence_study(MonotoneFunctionSpec(f), OddConvexCombination::exp_diff(), ns);
    CHECK(io::convergence_from_json(reparse(io::to_json(rows))) == rows);
    const auto csv = io::convergence_to_csv(rows);
    CHECK(csv.rfind("n,", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
  }
  SUBCASE("scan report") {
    const auto source = InstanceSource::random(2, 8, 400, 9, Distribution::kGaussianReal);
    const OddConvexCombination phis[] = {OddConvexCombination::exp_diff(), OddConvexCombination::monomial(3)};
    ScanOptions options;
    options.seed = 9;
    const auto report = scan(source, phis, options);
    CHECK(io::scan_report_from_json(reparse(io::to_json(report))) == report);
    CHECK(io::to_json(report).dump() == io::to_json(scan(source, phis, options)).dump());
    CHECK_FALSE(io::scan_to_csv(report).empty());
  }
}

TEST_CASE("load_json_argument reads inline text and files") {
  CHECK(io::load_json_argument("[1, 2]") == Json::parse("[1, 2]"));
  CHECK(io::load_json_argument("  {\"a\": 1}") == Json::parse("{\"a\": 1}"));
  const std::string path = "ordercheck_json_io_test.json";
  {
    std::ofstream out(path);
    out << R"({"entries": ["1/2"]})";
  }
  CHECK(io::load_json_argument(path)["entries"][0] == "1/2");
  std::remove(path.c_str());
  CHECK_INPUT_ERROR(io::load_json_argument("no_such_file.json"), ErrorCode::kParse);
  CHECK_INPUT_ERROR(io::load_json_argument("[1, 2"), ErrorCode::kParse);
}
