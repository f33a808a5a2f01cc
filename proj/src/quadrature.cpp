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

#include "dzhcp/quadrature.hpp"

#include "dzhcp/analytics.hpp"
#include "dzhcp/error.hpp"
#include "dzhcp/parallel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

namespace dzhcp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

constexpr std::array<double, 4> kGaussNodes = {-0.8611363115940526, -0.3399810435848563,
                                               0.3399810435848563, 0.8611363115940526};
constexpr std::array<double, 4> kGaussWeights = {0.3478548451374538, 0.6521451548625461,
                                                 0.6521451548625461, 0.3478548451374538};

struct Node {
    double x;
    double w;
};

// Appends Gauss nodes for every sub-interval of the sorted edge list.
void append_nodes(const std::vector<double>& edges, std::vector<Node>& out) {
    for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
        const double a = edges[k];
        const double b = edges[k + 1];
        if (!(b > a)) continue;
        const double half = 0.5 * (b - a);
        const double mid = 0.5 * (a + b);
        for (std::size_t g = 0; g < kGaussNodes.size(); ++g)
            out.push_back({mid + half * kGaussNodes[g], half * kGaussWeights[g]});
    }
}

// Uniform panels over [lo, hi) anchored at `origin`, merged with cuts.
void angular_edges(double lo, double hi, int panels, double origin,
                   const std::vector<double>& cuts, std::vector<double>& edges) {
    edges.clear();
    const double width = (hi - lo) / panels;
    const double shift = std::fmod(origin - lo, width);
    const double start = lo + (shift < 0.0 ? shift + width : shift);
    edges.push_back(lo);
    for (double e = start; e < hi; e += width)
        if (e > lo) edges.push_back(e);
    for (double c : cuts) {
        double w = std::fmod(c, kTwoPi);
        if (w < 0.0) w += kTwoPi;
        if (w > lo && w < hi) edges.push_back(w);
    }
    edges.push_back(hi);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

struct LevelResult {
    double value = 0.0;
    std::size_t evaluations = 0;
};

LevelResult integrate_level(const KernelIntegrand& f, const QuadratureSpec& spec,
                            const IntegrationLayout& layout, int factor) {
    std::vector<double> segment_edges{layout.r_min};
    for (double b : layout.r_breaks)
        if (b > layout.r_min && b < spec.r_max) segment_edges.push_back(b);
    segment_edges.push_back(spec.r_max);
    std::sort(segment_edges.begin(), segment_edges.end());
    segment_edges.erase(std::unique(segment_edges.begin(), segment_edges.end()), segment_edges.end());

    std::vector<double> r_edges;
    const int per_segment = spec.n_r * factor;
    for (std::size_t s = 0; s + 1 < segment_edges.size(); ++s) {
        const double a = segment_edges[s];
        const double b = segment_edges[s + 1];
        for (int p = 0; p < per_segment; ++p) r_edges.push_back(a + (b - a) * p / per_segment);
    }
    r_edges.push_back(spec.r_max);
    std::vector<Node> r_nodes;
    append_nodes(r_edges, r_nodes);

    const double beta_hi = layout.reflection_symmetric ? kPi : kTwoPi;
    const int beta_panels = layout.reflection_symmetric ? std::max(1, spec.n_beta * factor / 2)
                                                       : spec.n_beta * factor;
    const int theta_panels = spec.n_theta * factor;

    std::vector<double> contributions(r_nodes.size(), 0.0);
    std::vector<std::size_t> counts(r_nodes.size(), 0);
    parallel_for(r_nodes.size(), [&](std::size_t i) {
        const double r = r_nodes[i].x;
        std::vector<double> cuts;
        std::vector<double> edges;
        std::vector<Node> beta_nodes;
        std::vector<Node> theta_nodes;
        std::vector<double> partial;
        if (layout.beta_cuts) layout.beta_cuts(r, cuts);
        angular_edges(0.0, beta_hi, beta_panels, layout.angle_origin, cuts, edges);
        append_nodes(edges, beta_nodes);

        double outer = 0.0;
        std::size_t evals = 0;
        for (const Node& b : beta_nodes) {
            cuts.clear();
            if (layout.theta_cuts) layout.theta_cuts(r, b.x, cuts);
            angular_edges(0.0, kTwoPi, theta_panels, layout.angle_origin, cuts, edges);
            theta_nodes.clear();
            append_nodes(edges, theta_nodes);
            double inner = 0.0;
            for (const Node& t : theta_nodes) inner += t.w * f(r, b.x, t.x);
            evals += theta_nodes.size();
            outer += b.w * inner;
        }
        if (layout.reflection_symmetric) outer *= 2.0;
        contributions[i] = r_nodes[i].w * r * outer;
        counts[i] = evals;
    });
    LevelResult out;
    out.value = pairwise_sum(contributions);
    for (std::size_t c : counts) out.evaluations += c;
    return out;
}

} // namespace

QuadratureSpec QuadratureSpec::defaults_for(const NetworkParams& params) {
    QuadratureSpec spec;
    spec.r_max = std::max(10.0 * params.r_cs, 2.0 * (params.physical_radius() + params.r_tx + params.d));
    return spec;
}

void QuadratureSpec::validate() const {
    std::ostringstream os;
    if (!(rel_tol > 0.0 && rel_tol <= 1e-2))
        os << "rel_tol must lie in (0, 1e-2], got " << rel_tol;
    else if (n_r < 8 || n_beta < 8 || n_theta < 8)
        os << "panel counts must be >= 8 (n_r=" << n_r << ", n_beta=" << n_beta
           << ", n_theta=" << n_theta << ")";
    else if (!(r_max > 0.0) || !std::isfinite(r_max))
        os << "r_max must be finite and > 0, got " << r_max;
    else if (max_depth < 1 || max_depth > 8)
        os << "max_depth must lie in [1, 8], got " << max_depth;
    else
        return;
    throw DomainError(os.str());
}

void QuadratureSpec::validate(const NetworkParams& params) const {
    validate();
    const double need = 2.0 * (params.physical_radius() + params.r_tx + params.d);
    if (r_max < need) {
        std::ostringstream os;
        os << "r_max " << r_max << " m is below 2 (R_cs + R_tx + d) = " << need << " m";
        throw DomainError(os.str());
    }
}

QuadratureResult integrate_kernel(const KernelIntegrand& f, const QuadratureSpec& spec,
                                  const IntegrationLayout& layout) {
    spec.validate();
    if (!(layout.r_min >= 0.0) || !(layout.r_min < spec.r_max))
        throw DomainError("integration layout needs 0 <= r_min < r_max");

    QuadratureResult result;
    LevelResult previous = integrate_level(f, spec, layout, 1);
    result.evaluations = previous.evaluations;
    for (int level = 1; level <= spec.max_depth; ++level) {
        const LevelResult current = integrate_level(f, spec, layout, 1 << level);
        result.evaluations += current.evaluations;
        const double delta = std::abs(current.value - previous.value);
        if (delta <= spec.rel_tol * std::abs(current.value)) {
            result.value = current.value;
            result.error = delta;
            result.levels = level + 1;
            return result;
        }
        if (level == spec.max_depth) {
            std::ostringstream os;
            os << "kernel quadrature did not reach rel_tol " << spec.rel_tol << " after "
               << level + 1 << " levels (last two iterates " << previous.value << ", "
               << current.value << ")";
            throw ConvergenceError(os.str(), previous.value, current.value);
        }
        previous = current;
    }
    return result;
}

double power_law_tail(double k_inf, double path_loss_const, double alpha, double r_max) {
    if (!(alpha > 2.0)) throw DomainError("power-law tail diverges for alpha <= 2");
    if (!std::isfinite(r_max)) return 0.0;
    if (!(r_max > 0.0)) throw DomainError("tail truncation radius must be > 0");
    return k_inf * 4.0 * kPi * kPi * path_loss_const * std::pow(r_max, 2.0 - alpha) / (alpha - 2.0);
}

double tail_correction(const NetworkParams& params, ProcessType process, double r_max) {
    return power_law_tail(far_field_kernel(params, process), params.path_loss_const, params.alpha,
                          r_max);
}

} // namespace dzhcp
