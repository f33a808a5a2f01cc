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

#include "dzhcp/sampling.hpp"

#include "dzhcp/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

namespace dzhcp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double sampling_half_extent(const SimulationWindow& w) noexcept {
    return 0.5 * w.extent + w.guard;
}

double neighbourhood_reach(const NetworkParams& region) noexcept {
    return std::max(region.physical_radius(), region.d + region.r_tx);
}

void append_number(std::string& line, double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    line.append(buf, res.ptr);
}

} // namespace

double SimulationWindow::minimum_guard(const NetworkParams& params) noexcept {
    return params.physical_radius() + params.r_tx + params.d;
}

SimulationWindow SimulationWindow::square(double side, const NetworkParams& params) {
    return SimulationWindow{WindowShape::Square, side, minimum_guard(params)};
}

void SimulationWindow::validate(const NetworkParams& params) const {
    if (!(extent > 0.0) || !std::isfinite(extent))
        throw DomainError("simulation window extent must be finite and > 0");
    const double need = minimum_guard(params);
    if (!(guard >= need) || !std::isfinite(guard)) {
        std::ostringstream os;
        os << "guard margin " << guard << " m is below R_cs + R_tx + d = " << need << " m";
        throw DomainError(os.str());
    }
}

double SimulationWindow::observation_area() const noexcept {
    if (shape == WindowShape::Square) return extent * extent;
    return std::numbers::pi * 0.25 * extent * extent;
}

double SimulationWindow::sampling_area() const noexcept {
    const double h = sampling_half_extent(*this);
    if (shape == WindowShape::Square) return 4.0 * h * h;
    return std::numbers::pi * h * h;
}

bool SimulationWindow::observes(Point p) const noexcept {
    const double h = 0.5 * extent;
    if (shape == WindowShape::Square) return std::abs(p.x) <= h && std::abs(p.y) <= h;
    return p.x * p.x + p.y * p.y <= h * h;
}

BipolarSampler::BipolarSampler(const SimulationWindow& window, const NetworkParams& params,
                               std::uint64_t seed, std::uint64_t replication,
                               double max_expected_points)
    : rng_(seed), replication_(replication), shape_(window.shape),
      half_extent_(sampling_half_extent(window)) {
    params.validate();
    window.validate(params);
    const double mean = params.lambda_p * window.sampling_area();
    if (mean > max_expected_points) {
        std::ostringstream os;
        os << "expected point count " << mean << " exceeds the cap " << max_expected_points;
        throw ResourceError(os.str());
    }
    if (mean > 0.0) {
        CounterEngine engine(rng_, replication_, Stream::Count);
        std::poisson_distribution<std::uint64_t> poisson(mean);
        count_ = poisson(engine);
    }
}

TransceiverPair BipolarSampler::operator[](std::uint64_t i) const noexcept {
    const auto u = rng_.uniform4(replication_, Stream::Points, static_cast<std::uint32_t>(i));
    TransceiverPair p;
    const double h = half_extent_;
    if (shape_ == WindowShape::Square) {
        p.tx = {(2.0 * u[0] - 1.0) * h, (2.0 * u[1] - 1.0) * h};
    } else {
        const double rad = h * std::sqrt(u[0]);
        p.tx = {rad * std::cos(kTwoPi * u[1]), rad * std::sin(kTwoPi * u[1])};
    }
    p.theta = kTwoPi * u[2];
    p.mark = u[3];
    return p;
}

std::vector<TransceiverPair> sample_bipolar(const SimulationWindow& window,
                                            const NetworkParams& params, std::uint64_t seed,
                                            std::uint64_t replication, double max_expected_points) {
    const BipolarSampler sampler(window, params, seed, replication, max_expected_points);
    std::vector<TransceiverPair> out;
    out.reserve(sampler.size());
    for (std::uint64_t i = 0; i < sampler.size(); ++i) out.push_back(sampler[i]);
    return out;
}

bool in_exclusion_region(const TransceiverPair& owner, Point other,
                         const NetworkParams& region) noexcept {
    const double big = region.physical_radius();
    if (squared_distance(owner.tx, other) <= big * big) return true;
    if (region.r_tx <= 0.0) return false;
    return squared_distance(owner.receiver(region.d), other) <= region.r_tx * region.r_tx;
}

NeighborGrid::NeighborGrid(std::span<const TransceiverPair> pairs, double cell_size) {
    if (pairs.empty()) return;
    cell_ = cell_size > 0.0 ? cell_size : 1.0;
    double max_x = pairs[0].tx.x;
    double max_y = pairs[0].tx.y;
    min_x_ = max_x;
    min_y_ = max_y;
    for (const auto& p : pairs) {
        min_x_ = std::min(min_x_, p.tx.x);
        min_y_ = std::min(min_y_, p.tx.y);
        max_x = std::max(max_x, p.tx.x);
        max_y = std::max(max_y, p.tx.y);
    }
    nx_ = static_cast<long>((max_x - min_x_) / cell_) + 1;
    ny_ = static_cast<long>((max_y - min_y_) / cell_) + 1;
    const std::size_t cells = static_cast<std::size_t>(nx_ * ny_);
    cell_start_.assign(cells + 1, 0);
    std::vector<std::uint32_t> cell_of(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const long cx = cell_index(pairs[i].tx.x - min_x_, nx_);
        const long cy = cell_index(pairs[i].tx.y - min_y_, ny_);
        cell_of[i] = static_cast<std::uint32_t>(cy * nx_ + cx);
        ++cell_start_[cell_of[i] + 1];
    }
    for (std::size_t c = 0; c < cells; ++c) cell_start_[c + 1] += cell_start_[c];
    order_.resize(pairs.size());
    std::vector<std::uint32_t> fill(cell_start_.begin(), cell_start_.end() - 1);
    for (std::size_t i = 0; i < pairs.size(); ++i)
        order_[fill[cell_of[i]]++] = static_cast<std::uint32_t>(i);
}

long NeighborGrid::cell_index(double offset, long n) const noexcept {
    const long c = static_cast<long>(std::floor(offset / cell_));
    return std::clamp(c, 0L, n - 1);
}

void mark_access(std::span<TransceiverPair> pairs, const NetworkParams& params, ProcessType process) {
    const NetworkParams region = exclusion_params(params, process);
    const double reach = neighbourhood_reach(region);
    const NeighborGrid grid(pairs, reach);
    const bool type_one = is_type_one(process);

    std::vector<std::uint8_t> active(pairs.size(), 1);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const TransceiverPair& owner = pairs[i];
        bool keep = true;
        grid.for_each_candidate(owner.tx, reach, [&](std::size_t j) {
            if (!keep || j == i) return;
            if (!in_exclusion_region(owner, pairs[j].tx, region)) return;
            if (type_one || !(owner.mark < pairs[j].mark)) keep = false;
        });
        active[i] = keep ? 1 : 0;
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) pairs[i].active = active[i] != 0;
}

std::vector<TransceiverPair> thin(std::span<const TransceiverPair> pairs,
                                  const NetworkParams& params, ProcessType process) {
    std::vector<TransceiverPair> all(pairs.begin(), pairs.end());
    mark_access(all, params, process);
    std::erase_if(all, [](const TransceiverPair& p) { return !p.active; });
    return all;
}

std::vector<TransceiverPair> thin_type1(std::span<const TransceiverPair> pairs,
                                        const NetworkParams& params) {
    return thin(pairs, params, ProcessType::TypeI);
}

std::vector<TransceiverPair> thin_type2(std::span<const TransceiverPair> pairs,
                                        const NetworkParams& params) {
    return thin(pairs, params, ProcessType::TypeII);
}

std::vector<TransceiverPair> thin_matern(std::span<const TransceiverPair> pairs,
                                         const NetworkParams& params, ProcessType variant) {
    return thin(pairs, params, is_type_one(variant) ? ProcessType::MaternI : ProcessType::MaternII);
}

void write_realization_csv(std::ostream& out, std::span<const TransceiverPair> pairs) {
    out << "x,y,theta,mark,e\n";
    std::string line;
    for (const auto& p : pairs) {
        line.clear();
        append_number(line, p.tx.x);
        line.push_back(',');
        append_number(line, p.tx.y);
        line.push_back(',');
        append_number(line, p.theta);
        line.push_back(',');
        append_number(line, p.mark);
        line.push_back(',');
        line.push_back(p.active ? '1' : '0');
        line.push_back('\n');
        out << line;
    }
}

} // namespace dzhcp
