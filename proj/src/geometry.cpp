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

#include "dzhcp/geometry.hpp"

#include "dzhcp/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace dzhcp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double a) {
    double w = std::fmod(a, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    // fmod of a tiny negative number can round up to exactly 2pi.
    return w >= kTwoPi ? 0.0 : w;
}

void require_non_negative(double v, const char* what) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
        std::ostringstream os;
        os << what << " must be finite and >= 0, got " << v;
        throw DomainError(os.str());
    }
}

// Signed area swept by the arc [t0, t1] of circle (c, r) under the
// divergence identity A = 1/2 * closed integral of (x dy - y dx).
double arc_contribution(const Disk& disk, double t0, double t1) {
    const double r = disk.radius;
    const double cx = disk.center.x;
    const double cy = disk.center.y;
    return 0.5 * (r * r * (t1 - t0) +
                  r * (cx * (std::sin(t1) - std::sin(t0)) - cy * (std::cos(t1) - std::cos(t0))));
}

struct Interval {
    double lo;
    double hi;
};

} // namespace

PairConfiguration PairConfiguration::normalized() const {
    require_non_negative(r, "pair separation r");
    if (!std::isfinite(beta) || !std::isfinite(theta))
        throw DomainError("pair configuration angles must be finite");
    return {r, wrap_angle(beta), wrap_angle(theta)};
}

Point PairConfiguration::second_transmitter() const noexcept {
    return {r * std::cos(beta), r * std::sin(beta)};
}

double lens_area(double r1, double r2, double separation) {
    require_non_negative(r1, "radius r1");
    require_non_negative(r2, "radius r2");
    require_non_negative(separation, "separation");
    if (separation >= r1 + r2) return 0.0;
    if (separation <= std::abs(r1 - r2)) {
        const double r = std::min(r1, r2);
        return kPi * r * r;
    }
    const double s = separation;
    const double c1 = std::clamp((s * s + r1 * r1 - r2 * r2) / (2.0 * s * r1), -1.0, 1.0);
    const double c2 = std::clamp((s * s + r2 * r2 - r1 * r1) / (2.0 * s * r2), -1.0, 1.0);
    const double k = (-s + r1 + r2) * (s + r1 - r2) * (s - r1 + r2) * (s + r1 + r2);
    return r1 * r1 * std::acos(c1) + r2 * r2 * std::acos(c2) - 0.5 * std::sqrt(std::max(k, 0.0));
}

double exclusion_area_vo(const NetworkParams& params) {
    const double big = params.physical_radius();
    const double small = params.r_tx;
    const double d = params.d;
    require_non_negative(big, "R_cs");
    require_non_negative(small, "R_tx");
    require_non_negative(d, "d");

    if (small == 0.0 || d + small <= big) return kPi * big * big;
    if (d >= big + small) return kPi * (big * big + small * small);

    const double xi1 = std::acos(std::clamp((d * d + big * big - small * small) / (2.0 * d * big), -1.0, 1.0));
    const double xi2 = std::acos(std::clamp((d * d + small * small - big * big) / (2.0 * d * small), -1.0, 1.0));
    return (kPi - xi1) * big * big + (kPi - xi2) * small * small + d * big * std::sin(xi1);
}

Point receiver_position(Point tx, double orientation, double d) noexcept {
    return {tx.x + d * std::cos(orientation), tx.y + d * std::sin(orientation)};
}

PairDisks pair_disks(Point tx, double orientation, const NetworkParams& params) {
    PairDisks out;
    auto push = [&out](Point c, double r) {
        if (r > 0.0) out.disks[out.count++] = Disk{c, r};
    };
    push(tx, params.r_cs);
    push(receiver_position(tx, orientation, params.d), params.r_tx);
    if (params.r_tx > params.r_cs) push(tx, params.r_tx);
    return out;
}

double union_area(std::span<const Disk> disks) {
    if (disks.size() > kMaxUnionDisks) {
        std::ostringstream os;
        os << "union_area supports at most " << kMaxUnionDisks << " disks, got " << disks.size();
        throw DomainError(os.str());
    }
    std::array<Disk, kMaxUnionDisks> kept{};
    std::size_t n = 0;
    for (std::size_t i = 0; i < disks.size(); ++i) {
        const Disk& di = disks[i];
        require_non_negative(di.radius, "disk radius");
        if (di.radius == 0.0) continue;
        bool hidden = false;
        for (std::size_t j = 0; j < disks.size() && !hidden; ++j) {
            if (j == i) continue;
            const Disk& dj = disks[j];
            const double dist = std::sqrt(squared_distance(di.center, dj.center));
            if (dist + di.radius > dj.radius) continue;
            // di lies inside dj; identical disks keep the first occurrence.
            const bool identical = dist == 0.0 && di.radius == dj.radius;
            hidden = !identical || j < i;
        }
        if (!hidden) kept[n++] = di;
    }

    double area = 0.0;
    std::array<Interval, 2 * kMaxUnionDisks> covered{};
    for (std::size_t i = 0; i < n; ++i) {
        const Disk& di = kept[i];
        std::size_t m = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const Disk& dj = kept[j];
            const double dx = dj.center.x - di.center.x;
            const double dy = dj.center.y - di.center.y;
            const double dist = std::sqrt(dx * dx + dy * dy);
            if (dist >= di.radius + dj.radius) continue;
            if (dist <= di.radius - dj.radius) continue;
            const double c = std::clamp(
                (di.radius * di.radius + dist * dist - dj.radius * dj.radius) / (2.0 * di.radius * dist),
                -1.0, 1.0);
            const double half = std::acos(c);
            const double mid = wrap_angle(std::atan2(dy, dx));
            double lo = mid - half;
            double hi = mid + half;
            if (lo < 0.0) {
                covered[m++] = {lo + kTwoPi, kTwoPi};
                lo = 0.0;
            }
            if (hi > kTwoPi) {
                covered[m++] = {0.0, hi - kTwoPi};
                hi = kTwoPi;
            }
            covered[m++] = {lo, hi};
        }
        std::sort(covered.begin(), covered.begin() + static_cast<std::ptrdiff_t>(m),
                  [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
        double cursor = 0.0;
        for (std::size_t k = 0; k < m; ++k) {
            if (covered[k].lo > cursor) area += arc_contribution(di, cursor, covered[k].lo);
            cursor = std::max(cursor, covered[k].hi);
        }
        if (cursor < kTwoPi) area += arc_contribution(di, cursor, kTwoPi);
    }
    return area;
}

double combined_area_v(const PairConfiguration& config, const NetworkParams& params) {
    const PairConfiguration c = config.normalized();
    const double reach = std::max(params.physical_radius(), params.d + params.r_tx);
    if (c.r >= 2.0 * reach) return 2.0 * exclusion_area_vo(params);

    const PairDisks first = pair_disks(Point{}, 0.0, params);
    const PairDisks second = pair_disks(c.second_transmitter(), c.theta, params);
    std::array<Disk, 6> all{};
    std::size_t n = 0;
    for (const Disk& d : first.view()) all[n++] = d;
    for (const Disk& d : second.view()) all[n++] = d;
    return union_area(std::span<const Disk>(all.data(), n));
}

Membership membership(const PairConfiguration& config, const NetworkParams& params) noexcept {
    const double r = config.r;
    const double d = params.d;
    const double big = params.physical_radius();
    const double small_sq = params.r_tx * params.r_tx;
    const double base = r * r + d * d;
    Membership m;
    m.s1 = r * r <= big * big;
    m.s2 = base - 2.0 * r * d * std::cos(config.beta) <= small_sq;
    m.s3 = base + 2.0 * r * d * std::cos(config.beta - config.theta) <= small_sq;
    return m;
}

RegionClass classify(const PairConfiguration& config, const NetworkParams& params,
                     ProcessType process) {
    const NetworkParams region = exclusion_params(params, process);
    const Membership m = membership(config.normalized(), region);
    if (is_type_one(process))
        return (m.s1 || m.s2 || m.s3) ? RegionClass::Suppressed : RegionClass::Survives;
    if (m.s1 || (m.s2 && m.s3)) return RegionClass::Suppressed;
    if (!m.s2 && !m.s3) return RegionClass::DoubleSurvival;
    return RegionClass::SingleSurvival;
}

} // namespace dzhcp
