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

#include <array>
#include <cstddef>
#include <span>

namespace dzhcp {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point a, Point b) noexcept { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) noexcept { return {a.x - b.x, a.y - b.y}; }

inline double squared_distance(Point a, Point b) noexcept {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

struct Disk {
    Point center;
    double radius = 0.0;

    bool contains(Point p) const noexcept {
        return squared_distance(center, p) <= radius * radius;
    }
};

// Relative geometry of a second transceiver pair with respect to a first pair
// whose transmitter sits at the origin with its receiver at (d, 0).
struct PairConfiguration {
    double r = 0.0;     // transmitter separation [m]
    double beta = 0.0;  // bearing of the second transmitter [rad]
    double theta = 0.0; // receiver orientation of the second pair [rad]

    // Throws DomainError for negative r; wraps both angles into [0, 2pi).
    PairConfiguration normalized() const;

    Point second_transmitter() const noexcept;
};

enum class RegionClass { Suppressed, Survives, DoubleSurvival, SingleSurvival };

// Which pair lies in which exclusion zone.
//   s1: transmitters within the physical radius of each other (symmetric)
//   s2: second transmitter inside the first receiver's R_tx disk
//   s3: first transmitter inside the second receiver's R_tx disk
struct Membership {
    bool s1 = false;
    bool s2 = false;
    bool s3 = false;
};

// At most three disks describe one pair's exclusion region.
struct PairDisks {
    std::array<Disk, 3> disks{};
    std::size_t count = 0;

    std::span<const Disk> view() const noexcept { return {disks.data(), count}; }
};

inline constexpr std::size_t kMaxUnionDisks = 8;

double lens_area(double r1, double r2, double separation);

// Area of disk(tx, R) union disk(rx, R_tx) with |tx - rx| = d, where R is the
// physical radius. Closed form for crossing circles, branches otherwise.
double exclusion_area_vo(const NetworkParams& params);

// Exclusion disks for a transmitter at `tx` whose receiver lies at angle
// `orientation`. Zero-radius disks are dropped.
PairDisks pair_disks(Point tx, double orientation, const NetworkParams& params);

Point receiver_position(Point tx, double orientation, double d) noexcept;

// Exact area of a union of up to kMaxUnionDisks disks.
double union_area(std::span<const Disk> disks);

// V(r, beta, theta): union area of both pairs' exclusion regions.
double combined_area_v(const PairConfiguration& config, const NetworkParams& params);

Membership membership(const PairConfiguration& config, const NetworkParams& params) noexcept;

RegionClass classify(const PairConfiguration& config, const NetworkParams& params,
                     ProcessType process);

} // namespace dzhcp
