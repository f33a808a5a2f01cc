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
#include "dzhcp/sampling.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace dzhcp {

// Sample mean with a 95% normal confidence interval.
struct EstimateWithCI {
    double mean = 0.0;
    double std_error = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::uint64_t n_effective = 0;
    std::uint64_t seed = 0;

    static EstimateWithCI from_samples(std::span<const double> samples, std::uint64_t seed);
    // Bernoulli frequency with the binomial standard error.
    static EstimateWithCI from_successes(std::uint64_t successes, std::uint64_t trials,
                                         std::uint64_t seed);

    bool covers(double value) const noexcept { return ci_low <= value && value <= ci_high; }
};

inline constexpr double kMinAcceptanceRate = 1e-3;

struct PalmInterference {
    EstimateWithCI interference;
    EstimateWithCI acceptance; // fraction of attempts whose planted pair survived
    std::uint64_t attempts = 0;
};

// Mean retained-transmitter count per unit area of the observation region.
EstimateWithCI estimate_intensity(const NetworkParams& params, ProcessType process,
                                  const SimulationWindow& window, std::uint64_t n_reps,
                                  std::uint64_t seed);

// Mean interference at the receiver (d, 0) of a pair planted at the origin,
// over the first `n_accepted` attempts in which the planted pair survives
// thinning. Throws AcceptanceError when fewer than 1 in 1000 attempts survive.
PalmInterference palm_interference_detailed(const NetworkParams& params, ProcessType process,
                                            const SimulationWindow& window,
                                            std::uint64_t n_accepted, std::uint64_t seed);
EstimateWithCI palm_interference(const NetworkParams& params, ProcessType process,
                                 const SimulationWindow& window, std::uint64_t n_accepted,
                                 std::uint64_t seed);

// Empirical P(SIR > T) at the planted receiver under unit-mean exponential
// fading, one estimate per threshold (linear). SIR is +inf without interferers.
std::vector<EstimateWithCI> estimate_success_prob(const NetworkParams& params, ProcessType process,
                                                  std::span<const double> thresholds,
                                                  const SimulationWindow& window,
                                                  std::uint64_t n_accepted, std::uint64_t seed);

// Frequency with which two pairs planted in `config` are both retained inside
// an independent Poisson background.
EstimateWithCI two_pair_retention(const PairConfiguration& config, const NetworkParams& params,
                                  ProcessType process, std::uint64_t n_reps, std::uint64_t seed);

} // namespace dzhcp
