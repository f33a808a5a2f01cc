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

#include "dzhcp/analytics.hpp"

#include "dzhcp/error.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace dzhcp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// eta is summed as a series in b = lambda_p (V - V_o) below this value; above
// it the closed form loses at most a few digits to cancellation.
constexpr double kEtaSeriesLimit = 1.0;
// Slack on the admissible range [V_o, 2 V_o] of eta's argument.
constexpr double kEtaRangeSlack = 1e-9;

// (1 - e^-x) / x
double retained_fraction(double x) {
    if (x == 0.0) return 1.0;
    return -std::expm1(-x) / x;
}

// integral_0^1 t^k e^{-a t} dt
double truncated_moment(int k, double a) {
    if (a < 1.0) {
        double term = 1.0; // (-a)^n / n!
        double sum = 0.0;
        for (int n = 0; n < 40 && std::abs(term) > 1e-17 * sum; ++n) {
            sum += term / (n + k + 1);
            term *= -a / (n + 1);
        }
        return sum;
    }
    return boost::math::tgamma_lower(k + 1.0, a) / std::pow(a, k + 1);
}

// eta = sum_k (-b)^k / (k+1)! * integral_0^1 t^(k+1) e^{-a t} dt, for b < 1.
double eta_series(double a, double b) {
    constexpr int kTerms = 24;
    std::array<double, kTerms + 2> m{};
    if (a < 1.0) {
        // backward recurrence m_{k-1} = (a m_k + e^-a) / k is stable here
        const double e = std::exp(-a);
        m[kTerms + 1] = truncated_moment(kTerms + 1, a);
        for (int k = kTerms + 1; k > 1; --k) m[k - 1] = (a * m[k] + e) / k;
    }
    double sum = 0.0;
    double coeff = 1.0; // (-b)^k / (k+1)!
    for (int k = 0; k < kTerms; ++k) {
        const double term = coeff * (a < 1.0 ? m[k + 1] : truncated_moment(k + 1, a));
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
        coeff *= -b / (k + 2);
    }
    return sum;
}

void require_positive_intensity(double lambda_p) {
    if (!(lambda_p > 0.0) || !std::isfinite(lambda_p))
        throw DomainError("lambda_p must be finite and > 0 for this quantity");
}

// Kernel on an already reduced region and normalized configuration.
double kernel_on_region(const PairConfiguration& c, const NetworkParams& region, bool type_one,
                        double v_o) {
    const Membership m = membership(c, region);
    if (type_one) {
        if (m.s1 || m.s2 || m.s3) return 0.0;
        return std::exp(-region.lambda_p * combined_area_v(c, region));
    }
    if (m.s1 || (m.s2 && m.s3)) return 0.0;
    const double e = eta(combined_area_v(c, region), v_o, region.lambda_p);
    return (!m.s2 && !m.s3) ? 2.0 * e : e;
}

} // namespace

double retention_area(const NetworkParams& params, ProcessType process) {
    return exclusion_area_vo(exclusion_params(params, process));
}

double intensity_for_area(ProcessType process, double lambda_p, double area) {
    if (!(lambda_p >= 0.0) || !(area > 0.0))
        throw DomainError("intensity needs lambda_p >= 0 and a positive exclusion area");
    const double x = lambda_p * area;
    if (is_type_one(process)) return lambda_p * std::exp(-x);
    return -std::expm1(-x) / area;
}

double intensity(ProcessType process, const NetworkParams& params) {
    params.validate();
    return intensity_for_area(process, params.lambda_p, retention_area(params, process));
}

double eta(double v, double v_o, double lambda_p) {
    require_positive_intensity(lambda_p);
    if (!(v_o > 0.0)) throw DomainError("eta needs a positive exclusion area");
    if (v < v_o * (1.0 - kEtaRangeSlack) || v > 2.0 * v_o * (1.0 + kEtaRangeSlack)) {
        std::ostringstream os;
        os << "eta argument V = " << v << " outside [V_o, 2 V_o] = [" << v_o << ", " << 2.0 * v_o
           << "]";
        throw DomainError(os.str());
    }
    v = std::clamp(v, v_o, 2.0 * v_o);
    const double a = lambda_p * v_o;
    const double b = lambda_p * (v - v_o);
    if (b < kEtaSeriesLimit) return eta_series(a, b);
    return (retained_fraction(a) - retained_fraction(a + b)) / b;
}

double eta(double v, const NetworkParams& params, ProcessType process) {
    return eta(v, retention_area(params, process), params.lambda_p);
}

double kernel(const PairConfiguration& config, const NetworkParams& params, ProcessType process) {
    params.validate();
    require_positive_intensity(params.lambda_p);
    const NetworkParams region = exclusion_params(params, process);
    return kernel_on_region(config.normalized(), region, is_type_one(process),
                            exclusion_area_vo(region));
}

double far_field_kernel(const NetworkParams& params, ProcessType process) {
    require_positive_intensity(params.lambda_p);
    const double ratio = intensity_for_area(process, params.lambda_p, retention_area(params, process)) /
                         params.lambda_p;
    return ratio * ratio;
}

QuadratureResult interference_integral(const NetworkParams& params, ProcessType process,
                                       const QuadratureSpec& spec) {
    params.validate();
    require_positive_intensity(params.lambda_p);
    spec.validate(params);
    const NetworkParams region = exclusion_params(params, process);
    const double big = region.physical_radius();
    const double d = region.d;
    const double small = region.r_tx;
    const bool type_one = is_type_one(process);
    // Interferers next to the receiver must have zero kernel: S1 covers them
    // when d < R_cs; for Type I S2 does too, but Type II keeps weight eta there.
    if (!(d < big) && !(type_one && small > 0.0)) {
        throw DomainError(type_one
            ? "mean interference needs d < R_cs or R_tx > 0; the path-loss singularity is not integrable"
            : "mean interference needs d < max(R_cs, R_tx) for Type II and Matern II; "
              "the path-loss singularity is not integrable");
    }
    const double v_o = exclusion_area_vo(region);
    const double reach = std::max(big, d + small);

    IntegrationLayout layout;
    layout.r_min = big;
    layout.r_breaks = {std::abs(d - small), d + small, 2.0 * reach};
    layout.reflection_symmetric = true;
    if (small > 0.0 && d > 0.0) {
        // S2 in beta: cos(beta) >= (r^2 + d^2 - R_tx^2) / (2 r d).
        layout.beta_cuts = [=](double r, std::vector<double>& cuts) {
            const double c = (r * r + d * d - small * small) / (2.0 * r * d);
            if (c > -1.0 && c < 1.0) {
                const double a = std::acos(c);
                cuts.push_back(a);
                cuts.push_back(kTwoPi - a);
            }
        };
        // S3 in theta: cos(beta - theta) <= (R_tx^2 - r^2 - d^2) / (2 r d).
        layout.theta_cuts = [=](double r, double beta, std::vector<double>& cuts) {
            const double c = (small * small - r * r - d * d) / (2.0 * r * d);
            if (c > -1.0 && c < 1.0) {
                const double a = std::acos(c);
                cuts.push_back(beta + a);
                cuts.push_back(beta - a + kTwoPi);
            }
        };
    }

    const KernelIntegrand integrand = [&](double r, double beta, double theta) {
        const double k = kernel_on_region({r, beta, theta}, region, type_one, v_o);
        if (k == 0.0) return 0.0;
        const double dist = std::sqrt(std::max(r * r - 2.0 * r * d * std::cos(beta) + d * d, 0.0));
        return region.path_loss(dist) * k;
    };

    QuadratureResult result = integrate_kernel(integrand, spec, layout);
    if (spec.tail_correction) result.value += tail_correction(params, process, spec.r_max);
    return result;
}

InterferenceResult mean_interference(const NetworkParams& params, ProcessType process,
                                     const QuadratureSpec& spec) {
    const QuadratureResult q = interference_integral(params, process, spec);
    const double lambda = intensity(process, params);
    const double scale = params.lambda_p * params.lambda_p * params.p_t / (kTwoPi * lambda);

    InterferenceResult out;
    out.integral = q.value;
    out.tail = spec.tail_correction ? tail_correction(params, process, spec.r_max) : 0.0;
    out.mean_interference = scale * q.value;
    out.quad_error = scale * q.error;
    out.levels = q.levels;
    out.misr = out.mean_interference * std::pow(params.reference_distance(), params.alpha) /
               (params.p_t * params.path_loss_const);
    if (out.misr > 0.0) {
        out.gain = misr_ppp(params.alpha) / out.misr;
    } else {
        out.gain = std::numeric_limits<double>::infinity();
        out.diagnostic = "no interferers contribute (MISR = 0); asymptotic gain is unbounded";
    }
    return out;
}

double misr(const NetworkParams& params, ProcessType process, const QuadratureSpec& spec) {
    return mean_interference(params, process, spec).misr;
}

double asymptotic_gain(const NetworkParams& params, ProcessType process, const QuadratureSpec& spec) {
    return mean_interference(params, process, spec).gain;
}

double success_prob_ppp_alpha4(double threshold) {
    if (!(threshold >= 0.0)) throw DomainError("SIR threshold must be >= 0");
    const double s = std::sqrt(threshold);
    return 1.0 / (1.0 + s * std::atan(s));
}

double success_prob_ppp_integral(double threshold, double alpha) {
    if (!(threshold >= 0.0)) throw DomainError("SIR threshold must be >= 0");
    if (!(alpha > 2.0)) throw DomainError("alpha must be > 2");
    if (threshold == 0.0) return 1.0;
    if (std::isinf(threshold)) return 0.0;
    const double delta = 2.0 / alpha;
    const double lower = std::pow(threshold, -delta);
    const double half_alpha = 0.5 * alpha;
    boost::math::quadrature::exp_sinh<double> integrator;
    const double tail = integrator.integrate(
        [half_alpha](double t) { return 1.0 / (1.0 + std::pow(t, half_alpha)); }, lower,
        std::numeric_limits<double>::infinity(), 1e-14);
    return 1.0 / (1.0 + std::pow(threshold, delta) * tail);
}

double success_prob_ppp(double threshold, double alpha) {
    if (alpha == 4.0) return success_prob_ppp_alpha4(threshold);
    return success_prob_ppp_integral(threshold, alpha);
}

double success_prob_from_gain(double threshold, double gain, double alpha) {
    if (!(gain > 0.0)) throw DomainError("asymptotic gain must be > 0");
    return success_prob_ppp(threshold / gain, alpha);
}

double success_prob_dzhcp(double threshold, const NetworkParams& params, ProcessType process,
                          const QuadratureSpec& spec) {
    return success_prob_from_gain(threshold, asymptotic_gain(params, process, spec), params.alpha);
}

} // namespace dzhcp
