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
#include "dzhcp/rng.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace dzhcp {

struct TransceiverPair {
    Point tx;
    double theta = 0.0; // receiver orientation [rad]
    double mark = 0.0;  // contention time stamp in [0, 1]
    bool active = false;

    Point receiver(double d) const noexcept { return receiver_position(tx, theta, d); }
};

enum class WindowShape { Square, Disk };

// Observation region centred at the origin, sampled together with a guard
// band so that every exclusion region touching it is fully populated.
struct SimulationWindow {
    WindowShape shape = WindowShape::Square;
    double extent = 2000.0; // side length (square) or diameter (disk) [m]
    double guard = 0.0;     // guard margin [m]

    static double minimum_guard(const NetworkParams& params) noexcept;
    static SimulationWindow square(double side, const NetworkParams& params);

    void validate(const NetworkParams& params) const;
    double observation_area() const noexcept;
    double sampling_area() const noexcept;
    bool observes(Point p) const noexcept;
};

inline constexpr double kDefaultPointCap = 1e7;

// Lazy view of one replication of the Poisson bipolar process: the count is
// drawn up front, pair i is generated on demand from its own counter block.
class BipolarSampler {
public:
    BipolarSampler(const SimulationWindow& window, const NetworkParams& params,
                   std::uint64_t seed, std::uint64_t replication,
                   double max_expected_points = kDefaultPointCap);

    std::uint64_t size() const noexcept { return count_; }
    TransceiverPair operator[](std::uint64_t i) const noexcept;

private:
    CounterRng rng_;
    std::uint64_t replication_;
    WindowShape shape_;
    double half_extent_;
    std::uint64_t count_ = 0;
};

// Poisson bipolar process on the window's sampling region. Deterministic in
// (seed, replication); marks are always drawn.
std::vector<TransceiverPair> sample_bipolar(const SimulationWindow& window,
                                            const NetworkParams& params, std::uint64_t seed,
                                            std::uint64_t replication = 0,
                                            double max_expected_points = kDefaultPointCap);

// True when `other` lies in the exclusion region owned by `owner`.
bool in_exclusion_region(const TransceiverPair& owner, Point other,
                         const NetworkParams& region) noexcept;

// Uniform grid over transmitter positions for fixed-radius neighbour queries.
class NeighborGrid {
public:
    NeighborGrid(std::span<const TransceiverPair> pairs, double cell_size);

    // Calls visit(j) for every pair j whose transmitter may lie within
    // `radius` of p (a superset; callers filter exactly).
    template <class Visit>
    void for_each_candidate(Point p, double radius, Visit&& visit) const {
        if (cell_start_.empty()) return;
        const long x0 = cell_index(p.x - radius - min_x_, nx_);
        const long x1 = cell_index(p.x + radius - min_x_, nx_);
        const long y0 = cell_index(p.y - radius - min_y_, ny_);
        const long y1 = cell_index(p.y + radius - min_y_, ny_);
        for (long cy = y0; cy <= y1; ++cy) {
            for (long cx = x0; cx <= x1; ++cx) {
                const std::size_t c = static_cast<std::size_t>(cy * nx_ + cx);
                for (std::uint32_t k = cell_start_[c]; k < cell_start_[c + 1]; ++k)
                    visit(static_cast<std::size_t>(order_[k]));
            }
        }
    }

private:
    long cell_index(double offset, long n) const noexcept;

    double min_x_ = 0.0;
    double min_y_ = 0.0;
    double cell_ = 1.0;
    long nx_ = 0;
    long ny_ = 0;
    std::vector<std::uint32_t> cell_start_;
    std::vector<std::uint32_t> order_;
};

// Sets `active` on every pair. Suppression is judged against all potential
// transmitters; the Matern variants use disk(tx, R_cs) only.
void mark_access(std::span<TransceiverPair> pairs, const NetworkParams& params, ProcessType process);

// Retained pairs (active = true), in input order.
std::vector<TransceiverPair> thin(std::span<const TransceiverPair> pairs,
                                  const NetworkParams& params, ProcessType process);

std::vector<TransceiverPair> thin_type1(std::span<const TransceiverPair> pairs,
                                        const NetworkParams& params);
std::vector<TransceiverPair> thin_type2(std::span<const TransceiverPair> pairs,
                                        const NetworkParams& params);
// `variant` is ProcessType::TypeI or TypeII; the disk-only region is implied.
std::vector<TransceiverPair> thin_matern(std::span<const TransceiverPair> pairs,
                                         const NetworkParams& params, ProcessType variant);

// CSV with header `x,y,theta,mark,e`, shortest round-trip number formatting.
void write_realization_csv(std::ostream& out, std::span<const TransceiverPair> pairs);

} // namespace dzhcp
