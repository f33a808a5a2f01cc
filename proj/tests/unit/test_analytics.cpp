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

#include "../oracles.hpp"
#include "dzhcp/analytics.hpp"
#include "dzhcp/error.hpp"

#include <cmath>
#include <numbers>

using namespace dzhcp;
using std::numbers::pi;

namespace {

constexpr double kVo = 56120.615018362943;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

} // namespace

TEST_CASE("intensity closed forms") {
    const NetworkParams p;
    const double x = p.lambda_p * kVo;
    CHECK(intensity(ProcessType::TypeI, p) == doctest::Approx(p.lambda_p * std::exp(-x)).epsilon(1e-14));
    CHECK(intensity(ProcessType::TypeII, p) == doctest::Approx((1 - std::exp(-x)) / kVo).epsilon(1e-14));
    CHECK(intensity(ProcessType::MaternI, p) ==
          doctest::Approx(p.lambda_p * std::exp(-p.lambda_p * pi * 14400)).epsilon(1e-14));
    CHECK(intensity_for_area(ProcessType::TypeII, 0.0, kVo) == 0.0);
    CHECK(intensity_for_area(ProcessType::TypeII, 1e-300, kVo) == doctest::Approx(1e-300));
    // Type I peaks at lambda_p = 1 / V_o with value 1 / (e V_o)
    CHECK(intensity_for_area(ProcessType::TypeI, 1 / kVo, kVo) == doctest::Approx(std::exp(-1.0) / kVo).epsilon(1e-15));
    CHECK(intensity_for_area(ProcessType::TypeI, 1.01 / kVo, kVo) < std::exp(-1.0) / kVo);
    CHECK(intensity_for_area(ProcessType::TypeI, 0.99 / kVo, kVo) < std::exp(-1.0) / kVo);
    CHECK(rel(intensity_for_area(ProcessType::TypeII, 1e3 / kVo, kVo), 1 / kVo) < 1e-6);
    CHECK_THROWS_AS(intensity_for_area(ProcessType::TypeI, -1.0, kVo), DomainError);
}

TEST_CASE("eta matches high-precision closed-form values") {
    struct Case {
        double factor, lambda_p, value;
    };
    // 40-digit evaluations of the closed form
    const Case cases[] = {
        {1.5, 1e-5, 0.31814080975605092359},   {1.5, 1e-4, 0.020944567299084980458},
        {1.5, 1e-6, 0.47722796533840808481},   {2.0, 1e-5, 0.29282625119082063232},
        {2.0, 1e-4, 0.015759626982782767397},  {2.0, 1e-6, 0.47283662957033105331},
        {1.25, 1e-5, 0.33210386510727544857},  {1.25, 1e-4, 0.02502792107452988347},
        {1.25, 1e-6, 0.4794467036864070155},   {1.000001, 1e-5, 0.34703613336800133047},
        {1.000001, 1e-4, 0.030983789752021331087}, {1.000001, 1e-6, 0.48168098624251978153},
    };
    for (const Case& c : cases) {
        CAPTURE(c.factor);
        CAPTURE(c.lambda_p);
        CHECK(rel(eta(c.factor * kVo, kVo, c.lambda_p), c.value) < 1e-11);
    }
}

TEST_CASE("eta identities") {
    for (double lp : {1e-7, 1e-6, 1e-5, 1e-4, 1e-3}) {
        const double a = lp * kVo;
        const double g = -std::expm1(-a) / a;
        CHECK(rel(2 * eta(2 * kVo, kVo, lp), g * g) < 1e-12);
    }
    // adjacent doubles straddling the switch between series and closed form
    for (double lp : {1e-4, 3e-4, 1e-3, 1e-2}) {
        double edge = kVo + 1.0 / lp;
        while (lp * (edge - kVo) >= 1.0) edge = std::nextafter(edge, 0.0);
        while (lp * (edge - kVo) < 1.0) edge = std::nextafter(edge, 3 * kVo);
        CHECK(rel(eta(std::nextafter(edge, 0.0), kVo, lp), eta(edge, kVo, lp)) < 1e-9);
        CHECK(std::isfinite(eta(kVo, kVo, lp)));
    }
    CHECK_THROWS_AS(eta(0.5 * kVo, kVo, 1e-5), DomainError);
    CHECK_THROWS_AS(eta(2.5 * kVo, kVo, 1e-5), DomainError);
}

TEST_CASE("eta near the coincident limit") {
    struct Case {
        double lambda_p, factor, value;
    };
    const Case cases[] = {
        {1e-3, 1.0, 0.00031750835395040085589},      {1e-3, 1.000001, 0.00031750803644236441353},
        {1e-3, 1.001, 0.00031719116278761324265},    {1e-3, 1.01, 0.00031436470688158500583},
        {1e-4, 1.0, 0.030983818909049585124},        {1e-4, 1.000001, 0.030983789752021331087},
        {1e-4, 1.001, 0.030954687573874467952},      {1e-4, 1.01, 0.030694801553318136236},
        {1e-6, 1.0, 0.48168099521096659316},         {1e-6, 1.000001, 0.48168098624251978153},
        {1e-6, 1.001, 0.48167202688950204178},       {1e-6, 1.01, 0.48159132328758583811},
    };
    for (const auto& c : cases) {
        CAPTURE(c.lambda_p);
        CAPTURE(c.factor);
        CHECK(rel(eta(c.factor * kVo, kVo, c.lambda_p), c.value) < 1e-12);
    }
}

TEST_CASE("eta against the mark double integral") {
    for (double f : {1.0, 1.1, 1.5, 1.9, 2.0}) {
        for (double lp : {1e-6, 1e-5, 1e-4}) {
            CHECK(rel(eta(f * kVo, kVo, lp), oracle::eta_double_integral(f * kVo, kVo, lp)) < 1e-10);
        }
    }
}

TEST_CASE("kernel branches") {
    const NetworkParams p;
    CHECK(kernel({100, 1, 1}, p, ProcessType::TypeI) == 0.0);
    CHECK(kernel({150, 0, 0}, p, ProcessType::TypeI) == 0.0);
    const double v = combined_area_v({300, 1, 2}, p);
    CHECK(kernel({300, 1, 2}, p, ProcessType::TypeI) == doctest::Approx(std::exp(-p.lambda_p * v)).epsilon(1e-14));
    CHECK(kernel({150, 0, pi}, p, ProcessType::TypeII) == 0.0);
    const double v1 = combined_area_v({150, 0, 0}, p);
    CHECK(kernel({150, 0, 0}, p, ProcessType::TypeII) == doctest::Approx(eta(v1, kVo, p.lambda_p)).epsilon(1e-14));
    CHECK(kernel({300, 1, 2}, p, ProcessType::TypeII) == doctest::Approx(2 * eta(v, kVo, p.lambda_p)).epsilon(1e-14));
    for (auto t : {ProcessType::TypeI, ProcessType::TypeII, ProcessType::MaternI, ProcessType::MaternII}) {
        const double k = intensity(t, p) / p.lambda_p;
        CHECK(far_field_kernel(p, t) == doctest::Approx(k * k).epsilon(1e-14));
        CHECK(kernel({5000, 1, 2}, p, t) == doctest::Approx(k * k).epsilon(1e-12));
    }
}

TEST_CASE("mean interference: tail-corrected truncation is stable") {
    const NetworkParams p;
    for (auto t : {ProcessType::TypeI, ProcessType::TypeII}) {
        QuadratureSpec spec = QuadratureSpec::defaults_for(p);
        const double a = mean_interference(p, t, spec).mean_interference;
        spec.r_max *= 2;
        const double b = mean_interference(p, t, spec).mean_interference;
        CHECK(rel(a, b) < 1e-3);
    }
}

TEST_CASE("mean interference: ordering and derived quantities") {
    const NetworkParams p;
    const auto spec = QuadratureSpec::defaults_for(p);
    const auto t1 = mean_interference(p, ProcessType::TypeI, spec);
    const auto t2 = mean_interference(p, ProcessType::TypeII, spec);
    CHECK(t1.mean_interference > 0.0);
    CHECK(t1.mean_interference < t2.mean_interference);
    CHECK(t1.misr == doctest::Approx(t1.mean_interference * std::pow(p.d, p.alpha) / (p.p_t * p.path_loss_const)));
    CHECK(t1.gain == doctest::Approx(misr_ppp(p.alpha) / t1.misr));
    CHECK(t1.tail > 0.0);
    CHECK(t1.quad_error < 1e-3 * t1.mean_interference);
    NetworkParams r0 = p;
    r0.r_0 = 100.0;
    CHECK(misr(r0, ProcessType::TypeI, spec) == doctest::Approx(t1.misr * std::pow(100.0 / 80.0, p.alpha)));
}

TEST_CASE("mean interference: nested virtual zone equals Matern") {
    NetworkParams p;
    p.r_tx = 30;
    const auto spec = QuadratureSpec::defaults_for(p);
    CHECK(rel(mean_interference(p, ProcessType::TypeI, spec).mean_interference,
              mean_interference(p, ProcessType::MaternI, spec).mean_interference) < 1e-3);
    CHECK(rel(mean_interference(p, ProcessType::TypeII, spec).mean_interference,
              mean_interference(p, ProcessType::MaternII, spec).mean_interference) < 1e-3);
}

TEST_CASE("mean interference preconditions") {
    NetworkParams p;
    p.r_cs = 80;
    p.r_tx = 50;
    p.d = 80;
    auto spec = QuadratureSpec::defaults_for(p);
    CHECK_NOTHROW(mean_interference(p, ProcessType::TypeI, spec));
    CHECK_THROWS_AS(mean_interference(p, ProcessType::TypeII, spec), DomainError);
    CHECK_THROWS_AS(mean_interference(p, ProcessType::MaternI, spec), DomainError);
    p = {};
    p.lambda_p = 0.0;
    CHECK_THROWS_AS(mean_interference(p, ProcessType::TypeI, spec), DomainError);
}

TEST_CASE("Poisson reference success probability") {
    CHECK(success_prob_ppp_alpha4(1.0) == 1.0 / (1.0 + pi / 4));
    CHECK(success_prob_ppp(1.0, 4.0) == 1.0 / (1.0 + pi / 4));
    // 40-digit evaluations of the defining integral
    struct Case {
        double alpha, t, value;
    };
    const Case cases[] = {{3.0, 0.1, 0.8366330577309401794}, {3.0, 1, 0.37434989042936059395},
                          {3.0, 10, 0.088787212791414509723}, {3.5, 0.1, 0.88530583659218145472},
                          {3.5, 1, 0.48225514664709273278},  {3.5, 10, 0.14496658160268531638},
                          {5.0, 0.1, 0.93957569410182675918}, {5.0, 1, 0.66334853929697204064},
                          {5.0, 10, 0.29886560016181840002}};
    for (const Case& c : cases) CHECK(rel(success_prob_ppp(c.t, c.alpha), c.value) < 1e-12);
    for (double t : {0.01, 0.1, 1.0, 10.0, 100.0})
        CHECK(std::abs(success_prob_ppp_integral(t, 4.0) - success_prob_ppp_alpha4(t)) < 1e-8);
    double prev = 1.0;
    for (double t = 0.01; t < 100; t *= 1.5) {
        const double s = success_prob_ppp(t, 3.5);
        CHECK(s < prev);
        prev = s;
    }
}

TEST_CASE("success probability through the gain") {
    const NetworkParams p;
    const auto spec = QuadratureSpec::defaults_for(p);
    const double g = asymptotic_gain(p, ProcessType::TypeI, spec);
    CHECK(success_prob_dzhcp(1.0, p, ProcessType::TypeI, spec) == doctest::Approx(success_prob_ppp(1.0 / g, p.alpha)));
    CHECK(success_prob_from_gain(1.0, 1.0, 4.0) == success_prob_ppp_alpha4(1.0));
    CHECK(success_prob_dzhcp(1.0, p, ProcessType::TypeI, spec) > success_prob_dzhcp(1.0, p, ProcessType::TypeII, spec));
}
