/*
   Copyright 2026 The dzhcp Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include "dzhcp/analytics.hpp"
#include "dzhcp/error.hpp"
#include "dzhcp/montecarlo.hpp"
#include "dzhcp/parallel.hpp"

#include <cmath>
#include <numbers>

using namespace dzhcp;
using std::numbers::pi;

TEST_CASE("estimate construction") {
    const double xs[] = {1.0, 2.0, 3.0, 4.0};
    const auto e = EstimateWithCI::from_samples(xs, 9);
    CHECK(e.mean == 2.5);
    CHECK(e.std_error == doctest::Approx(std::sqrt(5.0 / 3.0 / 4.0)));
    CHECK(e.ci_low < e.mean);
    CHECK(e.ci_high > e.mean);
    CHECK(e.n_effective == 4);
    CHECK(e.seed == 9);
    const auto b = EstimateWithCI::from_successes(30, 100, 1);
    CHECK(b.mean == 0.3);
    CHECK(b.std_error == doctest::Approx(std::sqrt(0.3 * 0.7 / 100)));
}

TEST_CASE("intensity estimate in the sparse limit") {
    NetworkParams p;
    p.lambda_p = 1e-7;
    const auto w = SimulationWindow::square(3000, p);
    const auto e = estimate_intensity(p, ProcessType::TypeI, w, 400, 3);
    CHECK(e.ci_low <= intensity(ProcessType::TypeI, p));
    CHECK(e.ci_high >= intensity(ProcessType::TypeI, p));
    CHECK(std::abs(e.mean - p.lambda_p) < 4 * e.std_error);
}

TEST_CASE("unthinned intensity CI coverage") {
    // With no exclusion region every point is retained: truth is lambda_p.
    NetworkParams p;
    p.r_cs = 0;
    p.r_tx = 0;
    p.d = 0;
    const auto w = SimulationWindow::square(500, p);
    int covered = 0;
    const int suites = 200;
    for (int s = 0; s < suites; ++s)
        covered += estimate_intensity(p, ProcessType::TypeI, w, 30, 1000 + s).covers(p.lambda_p);
    const double sd = std::sqrt(0.95 * 0.05 * suites);
    CHECK(std::abs(covered - 0.95 * suites) < 3 * sd);
}

TEST_CASE("Palm interference without other points") {
    NetworkParams p;
    p.lambda_p = 0.0;
    const auto e = palm_interference(p, ProcessType::TypeI, SimulationWindow::square(1000, p), 50, 1);
    CHECK(e.mean == 0.0);
    const double thresholds[] = {1.0, 1e6};
    for (const auto& s : estimate_success_prob(p, ProcessType::TypeII, thresholds, SimulationWindow::square(1000, p), 20, 1))
        CHECK(s.mean == 1.0);
}

TEST_CASE("Palm acceptance matches the retention probability") {
    const NetworkParams p;
    const auto w = SimulationWindow::square(1000, p);
    const double x = p.lambda_p * exclusion_area_vo(p);
    const auto r1 = palm_interference_detailed(p, ProcessType::TypeI, w, 4000, 5);
    CHECK(std::abs(r1.acceptance.mean - std::exp(-x)) < 3 * r1.acceptance.std_error);
    const auto r2 = palm_interference_detailed(p, ProcessType::TypeII, w, 4000, 5);
    CHECK(std::abs(r2.acceptance.mean - (1 - std::exp(-x)) / x) < 3 * r2.acceptance.std_error);
}

TEST_CASE("dense parameters abort acceptance sampling") {
    NetworkParams p;
    p.lambda_p = 2e-4;
    try {
        (void)palm_interference(p, ProcessType::TypeI, SimulationWindow::square(500, p), 100, 1);
        FAIL("expected AcceptanceError");
    } catch (const AcceptanceError& e) {
        CHECK(e.acceptance_rate() < kMinAcceptanceRate);
    }
}

TEST_CASE("success ccdf is monotone on shared samples") {
    const NetworkParams p{5e-5};
    std::vector<double> ts;
    for (double db = -20; db <= 20; db += 2.5) ts.push_back(std::pow(10.0, db / 10));
    const auto est = estimate_success_prob(p, ProcessType::TypeII, ts, SimulationWindow::square(1500, p), 2000, 4);
    for (std::size_t i = 1; i < est.size(); ++i) CHECK(est[i].mean <= est[i - 1].mean);
    const double tiny[] = {1e-9};
    CHECK(estimate_success_prob(p, ProcessType::TypeI, tiny, SimulationWindow::square(1500, p), 500, 4)[0].mean ==
          doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("two-pair retention limits") {
    const NetworkParams p;
    CHECK(two_pair_retention({100, 1, 1}, p, ProcessType::TypeI, 1000, 1).mean == 0.0);
    CHECK(two_pair_retention({100, 1, 1}, p, ProcessType::TypeII, 1000, 1).mean == 0.0);
    for (auto t : {ProcessType::TypeI, ProcessType::TypeII}) {
        const auto e = two_pair_retention({100 * p.r_cs, 1, 2}, p, t, 20000, 2);
        const double k = intensity(t, p) / p.lambda_p;
        CHECK(std::abs(e.mean - k * k) < 3 * e.std_error);
    }
}

TEST_CASE("two-pair retention matches the kernel") {
    const NetworkParams p{3e-5};
    for (const PairConfiguration c : {PairConfiguration{150, 0, 0}, PairConfiguration{200, 0.4, 2.0},
                                      PairConfiguration{170, pi, 0}, PairConfiguration{260, 1.0, 4.0}}) {
        for (auto t : {ProcessType::TypeI, ProcessType::TypeII}) {
            const auto e = two_pair_retention(c, p, t, 40000, 17);
            const double k = kernel(c, p, t);
            CAPTURE(c.r);
            CHECK(std::abs(e.mean - k) <= 3 * std::max(e.std_error, 1e-12));
        }
    }
}

TEST_CASE("estimates do not depend on the worker count") {
    const NetworkParams p;
    const auto w = SimulationWindow::square(1200, p);
    set_thread_count(1);
    const auto a = palm_interference(p, ProcessType::TypeII, w, 3000, 8);
    const auto ia = estimate_intensity(p, ProcessType::TypeI, w, 50, 8);
    set_thread_count(3);
    const auto b = palm_interference(p, ProcessType::TypeII, w, 3000, 8);
    const auto ib = estimate_intensity(p, ProcessType::TypeI, w, 50, 8);
    set_thread_count(0);
    CHECK(a.mean == b.mean);
    CHECK(a.std_error == b.std_error);
    CHECK(ia.mean == ib.mean);
}

TEST_CASE("doubling the window leaves the intensity estimate within its CI") {
    const NetworkParams p;
    const auto a = estimate_intensity(p, ProcessType::TypeII, SimulationWindow::square(1000, p), 200, 31);
    const auto b = estimate_intensity(p, ProcessType::TypeII, SimulationWindow::square(2000, p), 200, 32);
    CHECK(std::abs(a.mean - b.mean) < (a.ci_high - a.ci_low));
}
