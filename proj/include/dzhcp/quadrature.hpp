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

#include "dzhcp/params.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace dzhcp {

struct QuadratureSpec {
    double r_max = 1200.0; // truncation radius [m]
    int n_r = 8;           // panels per radial segment at the first level
    int n_beta = 8;        // panels over the beta period
    int n_theta = 8;       // panels over the theta period
    double rel_tol = 1e-3;
    bool tail_correction = true;
    int max_depth = 3; // refinement levels after the first

    // r_max = 10 R_cs (at least the validity bound), other fields default.
    static QuadratureSpec defaults_for(const NetworkParams& params);

    // Field ranges only.
    void validate() const;
    // Also checks r_max >= 2 (R_cs + R_tx + d).
    void validate(const NetworkParams& params) const;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0; // |last - previous| refinement delta
    int levels = 0;
    std::size_t evaluations = 0;
};

using KernelIntegrand = std::function<double(double r, double beta, double theta)>;
using AngleCuts = std::function<void(double r, std::vector<double>& cuts)>;
using ThetaCuts = std::function<void(double r, double beta, std::vector<double>& cuts)>;

// Where the integrand is known to vanish or jump. Cuts are extra panel
// edges; they must lie in the angular period and may be unsorted.
struct IntegrationLayout {
    double r_min = 0.0;           // integrand is zero below
    std::vector<double> r_breaks; // extra radial panel edges
    AngleCuts beta_cuts;
    ThetaCuts theta_cuts;
    double angle_origin = 0.0; // offset of the uniform angular panel grid
    // f(r, beta, theta) == f(r, -beta, -theta): integrate beta over [0, pi]
    // and double.
    bool reflection_symmetric = false;
};

// Integral of f * r over r in [r_min, r_max], beta and theta over [0, 2pi),
// with nested composite 4-point Gauss-Legendre panels. All panel counts are
// doubled each level until successive values differ by less than rel_tol.
// Throws ConvergenceError after max_depth refinements.
QuadratureResult integrate_kernel(const KernelIntegrand& f, const QuadratureSpec& spec,
                                  const IntegrationLayout& layout = {});

// Closed-form integral of k_inf * A r^-alpha * 4 pi^2 * r over [r_max, inf).
double power_law_tail(double k_inf, double path_loss_const, double alpha, double r_max);

// power_law_tail with the far-field kernel of `process`.
double tail_correction(const NetworkParams& params, ProcessType process, double r_max);

} // namespace dzhcp
