// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "qmeter/montecarlo.hpp"

using namespace qmeter;

namespace {

void check_within_5se(double hat, double se, double ref) {
  const double slack = std::max(5.0 * se, 1e-12);
  CHECK(std::abs(hat - ref) <= slack);
}

}  // namespace

TEST_CASE("scenario strings parse or throw") {
  CHECK(build_scenario("pc-det:2").povm.elements.size() == 2);
  CHECK(build_scenario("pc-unamb:3").povm.elements.size() == 3);
  CHECK(build_scenario("pc-interp:2:0.8:0").lagrange_a == doctest::Approx(0.8));
  CHECK(build_scenario("um-det").analytic.p_inconclusive == 0.0);
  CHECK(build_scenario("um-interp:0.5").analytic.p_inconclusive == doctest::Approx(0.5));
  CHECK(build_scenario("qd:3").povm.elements.size() == 4);
  CHECK_THROWS_AS(build_scenario(""), std::invalid_argument);
  CHECK_THROWS_AS(build_scenario("pc-det"), std::invalid_argument);
  CHECK_THROWS_AS(build_scenario("pc-det:2:1"), std::invalid_argument);
  CHECK_THROWS_AS(build_scenario("warp:9"), std::invalid_argument);
  CHECK_THROWS_AS(build_scenario("pc-det:two"), std::invalid_argument);
}

TEST_CASE("estimates agree with the analytic rates within 5 sigma") {
  for (const char* scenario : {"pc-det:2", "pc-unamb:2", "um-unamb", "qd:2"}) {
    SimConfig config{20000, 3, scenario, 0};
    const SimReport rep = simulate(config);
    CHECK(rep.trials == 20000);
    std::uint64_t total = 0;
    for (const auto& [label, count] : rep.counts) total += count;
    CHECK(total == rep.trials);
    CHECK(rep.success_count + rep.inconclusive_count + rep.error_count == rep.trials);
    check_within_5se(rep.p_success_hat, rep.p_success_se, rep.analytic.p_success);
    check_within_5se(rep.p_inconclusive_hat, rep.p_inconclusive_se,
                     rep.analytic.p_inconclusive);
  }
}

TEST_CASE("unambiguous scenarios never record an error event") {
  for (const char* scenario : {"pc-unamb:2", "um-unamb", "qd:2", "qd:3"}) {
    SimConfig config{20000, 11, scenario, 0};
    CHECK(simulate(config).error_count == 0);
  }
}

TEST_CASE("reports are bit-identical across thread counts") {
  for (const char* scenario : {"pc-det:2", "um-unamb", "qd:2"}) {
    SimConfig one{5000, 17, scenario, 1};
    SimConfig four{5000, 17, scenario, 4};
    const SimReport a = simulate(one);
    const SimReport b = simulate(four);
    CHECK(a.counts == b.counts);
    CHECK(a.success_count == b.success_count);
    CHECK(a.inconclusive_count == b.inconclusive_count);
    CHECK(a.error_count == b.error_count);
    CHECK(a.p_success_hat == b.p_success_hat);
    CHECK(a.p_inconclusive_hat == b.p_inconclusive_hat);
  }
}

TEST_CASE("different seeds decorrelate the sample") {
  SimConfig a{5000, 1, "pc-det:2", 2};
  SimConfig b{5000, 2, "pc-det:2", 2};
  CHECK(simulate(a).counts != simulate(b).counts);
}

TEST_CASE("trial count is validated") {
  SimConfig config{0, 1, "pc-det:1", 1};
  CHECK_THROWS_AS(simulate(config), std::invalid_argument);
}

TEST_CASE("QMETER_THREADS caps the default worker count") {
  setenv("QMETER_THREADS", "3", 1);
  CHECK(default_thread_count() == 3);
  setenv("QMETER_THREADS", "0", 1);
  CHECK(default_thread_count() >= 1);  // invalid values fall back to hardware
  unsetenv("QMETER_THREADS");
  CHECK(default_thread_count() >= 1);
}
