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

#pragma once

#include "dzhcp/geometry.hpp"
#include "dzhcp/params.hpp"
#include "dzhcp/quadrature.hpp"

#include <string>

namespace dzhcp {

struct InterferenceResult {
    double mean_interference = 0.0; // [W]
    double misr = 0.0;
    double gain = 0.0;       // MISR_PPP / MISR; +inf when there is no interference
    double integral = 0.0;   // triple integral including the tail term
    double tail = 0.0;       // tail term alone
    double quad_error = 0.0; // absolute error estimate on mean_interference
    int levels = 0;
    std::string diagnostic;  // non-empty for degenerate results
};

// Exclusion area of the process's own region: V_o for the dual-zone
// processes, pi R_cs^2 for the Matern baselines.
double retention_area(const NetworkParams& params, ProcessType process);

double intensity_for_area(ProcessType process, double lambda_p, double area);
double intensity(ProcessType process, const NetworkParams& params);

// Joint retention integral for two pairs with union area v and individual
// area v_o. Defined for v in [v_o, 2 v_o].
double eta(double v, double v_o, double lambda_p);
double eta(double v, const NetworkParams& params, ProcessType process);

// Probability that two pairs in relative configuration `config` are both
// retained, given both are potential transmitters.
double kernel(const PairConfiguration& config, const NetworkParams& params, ProcessType process);

// Limit of the kernel for far-apart pairs: (intensity / lambda_p)^2.
double far_field_kernel(const NetworkParams& params, ProcessType process);

// Triple integral of l(|x - z_o|) k r over the plane, quadrature plus tail.
QuadratureResult interference_integral(const NetworkParams& params, ProcessType process,
                                       const QuadratureSpec& spec);

InterferenceResult mean_interference(const NetworkParams& params, ProcessType process,
                                     const QuadratureSpec& spec);
double misr(const NetworkParams& params, ProcessType process, const QuadratureSpec& spec);
double asymptotic_gain(const NetworkParams& params, ProcessType process, const QuadratureSpec& spec);

inline double misr_ppp(double alpha) { return 2.0 / (alpha - 2.0); }

// Success probability of the nearest-transmitter Poisson reference under
// Rayleigh fading. Uses the arctan closed form at alpha == 4.
double success_prob_ppp(double threshold, double alpha);
double success_prob_ppp_integral(double threshold, double alpha);
double success_prob_ppp_alpha4(double threshold);

// Reference curve shifted by the asymptotic gain: P_ppp(T / G).
double success_prob_from_gain(double threshold, double gain, double alpha);
double success_prob_dzhcp(double threshold, const NetworkParams& params, ProcessType process,
                          const QuadratureSpec& spec);

} // namespace dzhcp
