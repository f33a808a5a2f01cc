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

// Independent reference implementations used only by the tests. None of
// them shares code with the library beyond the plain data types.

#include "dzhcp/geometry.hpp"
#include "dzhcp/params.hpp"
#include "dzhcp/sampling.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace oracle {

struct AreaEstimate {
    double area;
    double std_error;
};

// Hit-or-miss area of a union of disks over its bounding box.
inline AreaEstimate dart_area(std::span<const dzhcp::Disk> disks, std::uint64_t n, std::uint64_t seed) {
    double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
    for (const auto& d : disks) {
        x0 = std::min(x0, d.center.x - d.radius);
        x1 = std::max(x1, d.center.x + d.radius);
        y0 = std::min(y0, d.center.y - d.radius);
        y1 = std::max(y1, d.center.y + d.radius);
    }
    struct Circle {
        double x, y, r2;
    };
    std::vector<Circle> circles;
    for (const auto& d : disks) circles.push_back({d.center.x, d.center.y, d.radius * d.radius});
    // largest disks first: most hits exit on the first test
    std::sort(circles.begin(), circles.end(), [](const Circle& a, const Circle& b) { return a.r2 > b.r2; });
    std::mt19937_64 gen(seed);
    const double sx = (x1 - x0) * 0x1.0p-53, sy = (y1 - y0) * 0x1.0p-53;
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        const double x = x0 + static_cast<double>(gen() >> 11) * sx;
        const double y = y0 + static_cast<double>(gen() >> 11) * sy;
        for (const auto& c : circles) {
            const double dx = x - c.x, dy = y - c.y;
            if (dx * dx + dy * dy <= c.r2) {
                ++hits;
                break;
            }
        }
    }
    const double box = (x1 - x0) * (y1 - y0);
    const double p = static_cast<double>(hits) / static_cast<double>(n);
    return {p * box, box * std::sqrt(p * (1.0 - p) / static_cast<double>(n))};
}

// Disks of one pair written out from the model definition.
inline std::vector<dzhcp::Disk> pair_region(dzhcp::Point tx, double theta, double r_cs, double r_tx, double d) {
    std::vector<dzhcp::Disk> out;
    const double big = std::max(r_cs, r_tx);
    if (big > 0.0) out.push_back({tx, big});
    if (r_tx > 0.0) out.push_back({{tx.x + d * std::cos(theta), tx.y + d * std::sin(theta)}, r_tx});
    return out;
}

inline bool inside(std::span<const dzhcp::Disk> disks, dzhcp::Point p) {
    for (const auto& d : disks) {
        const double dx = p.x - d.center.x, dy = p.y - d.center.y;
        if (dx * dx + dy * dy <= d.radius * d.radius) return true;
    }
    return false;
}

// O(n^2) evaluation of the access indicators straight from the definition.
inline std::vector<bool> brute_force_access(std::span<const dzhcp::TransceiverPair> pairs,
                                            const dzhcp::NetworkParams& p, dzhcp::ProcessType type) {
    const bool matern = dzhcp::is_matern(type);
    const bool type_one = dzhcp::is_type_one(type);
    std::vector<bool> e(pairs.size(), true);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto region = matern ? std::vector<dzhcp::Disk>{{pairs[i].tx, p.r_cs}}
                                   : pair_region(pairs[i].tx, pairs[i].theta, p.r_cs, p.r_tx, p.d);
        for (std::size_t j = 0; j < pairs.size() && e[i]; ++j) {
            if (j == i || !inside(region, pairs[j].tx)) continue;
            if (type_one || pairs[j].mark < pairs[i].mark) e[i] = false;
        }
    }
    return e;
}

// Probability that two pairs with no mutual suppression are both retained,
// integrated directly over their marks (one ordering of t1, t2).
inline double eta_double_integral(double v, double v_o, double lambda_p) {
    using boost::math::quadrature::gauss_kronrod;
    auto outer = [&](double t1) {
        auto inner = [&](double t2) { return std::exp(-lambda_p * t2 * (v - v_o)); };
        return std::exp(-lambda_p * t1 * v_o) * gauss_kronrod<double, 61>::integrate(inner, 0.0, t1, 0, 1e-15);
    };
    return gauss_kronrod<double, 61>::integrate(outer, 0.0, 1.0, 0, 1e-15);
}

} // namespace oracle
