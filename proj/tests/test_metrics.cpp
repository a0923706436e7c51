#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "mism/error.hpp"
#include "mism/metrics.hpp"
#include "support/oracles.hpp"

using namespace mism;
using doctest::Approx;

namespace {

const MetricConfig kDefault{};
const MetricConfig kStrict{0.1, UndefinedPolicy::Propagate};

ConfusionMatrix cm(std::uint64_t tp, std::uint64_t fp, std::uint64_t tn, std::uint64_t fn) {
  return {tp, fp, tn, fn};
}

// Worked example: 60,000 negatives, 5,000 of them predicted positive.
const ConfusionMatrix kWeakExample = cm(0, 5000, 55000, 0);
const ConfusionMatrix kNormal = cm(40, 10, 945, 5);

}  // namespace

TEST_SUITE("metrics") {

TEST_CASE("MetricConfig rejects alpha outside the open unit interval") {
  for (double bad : {0.0, 1.0, -0.1, 1.5, std::nan("")}) {
    try {
      MetricConfig cfg(bad);
      FAIL("accepted alpha " << bad);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidArgument);
      CHECK(std::string(e.what()).find("(0, 1)") != std::string::npos);
    }
  }
  CHECK(MetricConfig{}.alpha() == 0.1);
  CHECK(MetricConfig{}.undefined_policy() == UndefinedPolicy::ScoreZero);
  CHECK(MetricConfig(1e-9).alpha() == 1e-9);
}

TEST_CASE("dsc") {
  CHECK(dsc(kNormal).value() == 80.0 / 95.0);
  CHECK(dsc(kNormal).value() == Approx(0.8421).epsilon(1e-4));
  CHECK(dsc(cm(7, 0, 3, 0)).value() == 1.0);
  CHECK(dsc(cm(7, 0, 0, 0)).value() == 1.0);

  const auto gap = dsc(cm(0, 0, 100, 0));
  CHECK(gap.value() == 0.0);
  CHECK(gap.resolved_from_undefined());
  CHECK(gap.state() == MetricScore::State::ResolvedZero);

  const auto strict = dsc(cm(0, 0, 100, 0), kStrict);
  CHECK_FALSE(strict.has_value());
  CHECK_THROWS_AS(strict.value(), std::bad_optional_access);
}

TEST_CASE("fpr") {
  CHECK(fpr(kWeakExample).value() == Approx(5000.0 / 60000.0).epsilon(1e-15));
  CHECK(fpr(kWeakExample).value() == Approx(0.08333).epsilon(1e-4));
  CHECK(fpr(cm(3, 0, 20, 1)).value() == 0.0);
  // N = 0 is undefined regardless of policy.
  CHECK_FALSE(fpr(cm(5, 0, 0, 3)).has_value());
}

TEST_CASE("specificity") {
  CHECK(specificity(kWeakExample).value() == Approx(11.0 / 12.0).epsilon(1e-15));
  CHECK(std::abs(specificity(kWeakExample).value() - 0.9166666666666666) < 1e-12);
  CHECK(specificity(cm(4, 0, 9, 2)).value() == 1.0);
  CHECK_FALSE(specificity(cm(5, 0, 0, 3), kStrict).has_value());
  CHECK(specificity(cm(5, 0, 0, 3)).resolved_from_undefined());
}

TEST_CASE("weighted specificity") {
  CHECK(std::abs(weighted_specificity(kWeakExample, MetricConfig(0.1)).value() - 0.55) < 1e-12);

  // alpha = 0.5 cancels the weights
  const MetricConfig half(0.5);
  for (const auto& m : {kNormal, kWeakExample, cm(0, 1, 1, 0), cm(9, 99, 1, 3)}) {
    CHECK(weighted_specificity(m, half).value() == Approx(specificity(m).value()).epsilon(1e-15));
  }

  // r = 1/2 through the closed form gives alpha itself
  CHECK(weighted_specificity(cm(0, 30000, 30000, 0), MetricConfig(0.1)).value() ==
        Approx(0.1).epsilon(1e-15));
  CHECK(mism::testing::wspec_closed_form(0.1, 0.5) == Approx(0.1).epsilon(1e-15));

  CHECK_FALSE(weighted_specificity(cm(5, 0, 0, 3), kStrict).has_value());
}

TEST_CASE("accuracy") {
  CHECK(accuracy(kWeakExample).value() == Approx(11.0 / 12.0).epsilon(1e-15));
  CHECK(accuracy(cm(5, 0, 7, 0)).value() == 1.0);
  CHECK(accuracy(cm(0, 7, 0, 5)).value() == 0.0);
}

TEST_CASE("nmcc") {
  CHECK(nmcc(kWeakExample).value() == 0.5);
  CHECK(nmcc(cm(10, 0, 90, 0)).value() == 1.0);
  CHECK(nmcc(cm(0, 90, 0, 10)).value() == 0.0);

  // Frozen from an independent evaluation of the MCC formula.
  CHECK(std::abs(nmcc(kNormal).value() - 0.9177651543595451) < 1e-6);
  const long double oracle = (mism::testing::mcc_brute_force(40, 10, 945, 5) + 1) / 2;
  CHECK(std::abs(nmcc(kNormal).value() - static_cast<double>(oracle)) < 1e-12);

  // Counts large enough that the denominator product overflows 64-bit integers.
  const auto big = cm(3000000000, 1000000000, 4000000000, 2000000000);
  const long double big_oracle = mism::testing::mcc_brute_force(big.tp, big.fp, big.tn, big.fn);
  CHECK(std::abs(mcc(big) - static_cast<double>(big_oracle)) < 1e-12);
}

TEST_CASE("mism") {
  CHECK(std::abs(mism::mism(kWeakExample, MetricConfig(0.1)).value() - 0.55) < 1e-12);
  for (double a : {0.01, 0.1, 0.5, 0.9}) {
    CHECK(mism::mism(cm(0, 0, 12345, 0), MetricConfig(a)).value() == 1.0);
    CHECK(mism::mism(kNormal, MetricConfig(a)).value() == 80.0 / 95.0);
  }
  // always defined, even under the strict policy
  CHECK(mism::mism(cm(0, 0, 1, 0), kStrict).has_value());
  CHECK(mism::mism(cm(0, 1, 0, 0), kStrict).value() == 0.0);
  CHECK_FALSE(mism::mism(cm(0, 1, 0, 0), kStrict).resolved_from_undefined());
  CHECK(mism::mism(cm(1, 0, 0, 0), kStrict).value() == 1.0);
}

TEST_CASE("metric identifiers and selection") {
  for (Metric m : kAllMetrics) CHECK(parse_metric(metric_name(m)) == m);
  CHECK_THROWS_AS(parse_metric("bogus"), Error);
  CHECK_THROWS_AS(parse_metric("DSC"), Error);

  const auto s = MetricSelection::parse("mism, dsc,mism");
  CHECK(s.size() == 2);
  CHECK(s.to_string() == "dsc,mism");
  CHECK(MetricSelection::comparison_default().to_string() == "dsc,spec,acc,nmcc,mism");
  CHECK_THROWS_AS(MetricSelection::parse(""), Error);
  CHECK_THROWS_AS(MetricSelection::parse(",,"), Error);
  CHECK(parse_policy("zero") == UndefinedPolicy::ScoreZero);
  CHECK(parse_policy("propagate") == UndefinedPolicy::Propagate);
  CHECK_THROWS_AS(parse_policy("strict"), Error);
}

TEST_CASE("evaluate_all") {
  SUBCASE("perfect prediction") {
    const auto scores = evaluate_all(cm(25, 0, 75, 0), kDefault, MetricSelection{Metric::Dsc, Metric::Mism});
    REQUIRE(scores.size() == 2);
    CHECK(scores.at(Metric::Dsc).value() == 1.0);
    CHECK(scores.at(Metric::Mism).value() == 1.0);
  }
  SUBCASE("weak label with false positives") {
    const auto scores = evaluate_all(kWeakExample, MetricConfig(0.1), MetricSelection{Metric::Mism, Metric::Dsc});
    CHECK(scores.at(Metric::Dsc).value() == 0.0);
    // FP > 0 keeps the DSC denominator positive: a genuine zero, not a gap.
    CHECK_FALSE(scores.at(Metric::Dsc).resolved_from_undefined());
    CHECK(std::abs(scores.at(Metric::Mism).value() - 0.55) < 1e-12);
  }
  SUBCASE("unknown identifier") {
    const std::vector<std::string> names{"bogus"};
    try {
      evaluate_all(kNormal, kDefault, names);
      FAIL("expected unknown metric");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UnknownMetric);
    }
  }
  SUBCASE("empty selection") {
    CHECK_THROWS_AS(evaluate_all(kNormal, kDefault, MetricSelection{}), Error);
  }
  SUBCASE("canonical order regardless of request order") {
    const std::vector<std::string> names{"mism", "acc", "dsc", "fpr"};
    const auto scores = evaluate_all(kNormal, kDefault, names);
    std::vector<Metric> order;
    for (const auto& [metric, score] : scores) order.push_back(metric);
    CHECK(order == std::vector<Metric>{Metric::Dsc, Metric::Fpr, Metric::Acc, Metric::Mism});
  }
  SUBCASE("undefined dsc does not suppress mism") {
    const auto scores = evaluate_all(cm(0, 0, 50, 0), kStrict, MetricSelection::all());
    CHECK_FALSE(scores.at(Metric::Dsc).has_value());
    CHECK(scores.at(Metric::Mism).value() == 1.0);
    CHECK(scores.at(Metric::Spec).value() == 1.0);
  }
}

}  // TEST_SUITE
