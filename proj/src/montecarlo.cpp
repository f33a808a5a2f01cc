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

#include "dzhcp/montecarlo.hpp"

#include "dzhcp/error.hpp"
#include "dzhcp/parallel.hpp"
#include "dzhcp/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace dzhcp {

namespace {

constexpr double kZ95 = 1.959963984540054;

// Attempts evaluated per wave. Fixed so that the acceptance check and the
// consumed prefix do not depend on the worker count.
constexpr std::uint64_t kWave = 4096;
constexpr std::uint64_t kMinAttemptsBeforeAbort = 10000;

void require_reps(std::uint64_t n) {
    if (n == 0) throw DomainError("replication count must be >= 1");
}

struct PalmSample {
    bool accepted = false;
    double interference = 0.0;
    double sir = 0.0;
};

struct PalmRun {
    std::vector<PalmSample> samples; // accepted only, in attempt order
    std::uint64_t attempts = 0;
};

PalmSample palm_attempt(const NetworkParams& params, const NetworkParams& region,
                        ProcessType process, const SimulationWindow& window, std::uint64_t seed,
                        std::uint64_t attempt, bool want_sir) {
    const bool type_one = is_type_one(process);
    const CounterRng rng(seed);
    TransceiverPair planted;
    planted.theta = 0.0;
    planted.mark = rng.uniform2(attempt, Stream::Planted, 0)[0];

    const BipolarSampler background(window, params, seed, attempt);
    const std::uint64_t n = background.size();
    for (std::uint64_t i = 0; i < n; ++i) {
        const TransceiverPair q = background[i];
        if (!in_exclusion_region(planted, q.tx, region)) continue;
        if (type_one || q.mark < planted.mark) return {};
    }

    std::vector<TransceiverPair> pairs;
    pairs.reserve(n + 1);
    pairs.push_back(planted);
    for (std::uint64_t i = 0; i < n; ++i) pairs.push_back(background[i]);
    mark_access(pairs, params, process);

    PalmSample out;
    out.accepted = true;
    const Point receiver{params.d, 0.0};
    double interference = 0.0;
    double faded = 0.0;
    for (std::size_t j = 1; j < pairs.size(); ++j) {
        if (!pairs[j].active) continue;
        const double gain = params.path_loss(std::sqrt(squared_distance(pairs[j].tx, receiver)));
        interference += params.p_t * gain;
        if (want_sir) {
            const double u = rng.uniform2(attempt, Stream::Fading, static_cast<std::uint32_t>(j))[0];
            faded += -std::log(u) * gain;
        }
    }
    out.interference = interference;
    if (want_sir) {
        const double u0 = rng.uniform2(attempt, Stream::Fading, 0)[0];
        const double signal = -std::log(u0) * params.path_loss(params.d);
        out.sir = faded > 0.0 ? signal / faded : std::numeric_limits<double>::infinity();
    }
    return out;
}

PalmRun run_palm(const NetworkParams& params, ProcessType process, const SimulationWindow& window,
                 std::uint64_t n_accepted, std::uint64_t seed, bool want_sir) {
    params.validate();
    window.validate(params);
    require_reps(n_accepted);
    const NetworkParams region = exclusion_params(params, process);
    const std::uint64_t max_attempts =
        static_cast<std::uint64_t>(std::ceil(static_cast<double>(n_accepted) / kMinAcceptanceRate)) +
        kMinAttemptsBeforeAbort;

    PalmRun run;
    run.samples.reserve(n_accepted);
    std::vector<PalmSample> wave(kWave);
    while (run.samples.size() < n_accepted) {
        const std::uint64_t base = run.attempts;
        parallel_for(kWave, [&](std::size_t k) {
            wave[k] = palm_attempt(params, region, process, window, seed, base + k, want_sir);
        });
        for (std::uint64_t k = 0; k < kWave && run.samples.size() < n_accepted; ++k) {
            ++run.attempts;
            if (wave[k].accepted) run.samples.push_back(wave[k]);
        }
        const double rate = static_cast<double>(run.samples.size()) / static_cast<double>(run.attempts);
        if ((run.attempts >= kMinAttemptsBeforeAbort && rate < kMinAcceptanceRate) ||
            (run.samples.size() < n_accepted && run.attempts >= max_attempts)) {
            std::ostringstream os;
            os << "Palm acceptance rate " << rate << " after " << run.attempts
               << " attempts is below " << kMinAcceptanceRate
               << "; parameters are too dense for acceptance sampling";
            throw AcceptanceError(os.str(), rate);
        }
    }
    return run;
}

} // namespace

EstimateWithCI EstimateWithCI::from_samples(std::span<const double> samples, std::uint64_t seed) {
    if (samples.empty()) throw DomainError("estimate needs at least one sample");
    const double n = static_cast<double>(samples.size());
    const double mean = pairwise_sum(samples) / n;
    std::vector<double> sq(samples.size());
    std::transform(samples.begin(), samples.end(), sq.begin(),
                   [mean](double v) { return (v - mean) * (v - mean); });
    const double var = samples.size() > 1 ? pairwise_sum(sq) / (n - 1.0) : 0.0;
    EstimateWithCI e;
    e.mean = mean;
    e.std_error = std::sqrt(var / n);
    e.ci_low = mean - kZ95 * e.std_error;
    e.ci_high = mean + kZ95 * e.std_error;
    e.n_effective = samples.size();
    e.seed = seed;
    return e;
}

EstimateWithCI EstimateWithCI::from_successes(std::uint64_t successes, std::uint64_t trials,
                                              std::uint64_t seed) {
    if (trials == 0) throw DomainError("estimate needs at least one trial");
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    EstimateWithCI e;
    e.mean = p;
    e.std_error = std::sqrt(p * (1.0 - p) / n);
    e.ci_low = p - kZ95 * e.std_error;
    e.ci_high = p + kZ95 * e.std_error;
    e.n_effective = trials;
    e.seed = seed;
    return e;
}

EstimateWithCI estimate_intensity(const NetworkParams& params, ProcessType process,
                                  const SimulationWindow& window, std::uint64_t n_reps,
                                  std::uint64_t seed) {
    params.validate();
    window.validate(params);
    require_reps(n_reps);
    std::vector<double> per_rep(n_reps);
    const double area = window.observation_area();
    parallel_for(n_reps, [&](std::size_t rep) {
        std::vector<TransceiverPair> pairs = sample_bipolar(window, params, seed, rep);
        mark_access(pairs, params, process);
        std::size_t count = 0;
        for (const auto& p : pairs)
            if (p.active && window.observes(p.tx)) ++count;
        per_rep[rep] = static_cast<double>(count) / area;
    });
    return EstimateWithCI::from_samples(per_rep, seed);
}

PalmInterference palm_interference_detailed(const NetworkParams& params, ProcessType process,
                                            const SimulationWindow& window,
                                            std::uint64_t n_accepted, std::uint64_t seed) {
    const PalmRun run = run_palm(params, process, window, n_accepted, seed, false);
    std::vector<double> values(run.samples.size());
    std::transform(run.samples.begin(), run.samples.end(), values.begin(),
                   [](const PalmSample& s) { return s.interference; });
    PalmInterference out;
    out.interference = EstimateWithCI::from_samples(values, seed);
    out.acceptance = EstimateWithCI::from_successes(run.samples.size(), run.attempts, seed);
    out.attempts = run.attempts;
    return out;
}

EstimateWithCI palm_interference(const NetworkParams& params, ProcessType process,
                                 const SimulationWindow& window, std::uint64_t n_accepted,
                                 std::uint64_t seed) {
    return palm_interference_detailed(params, process, window, n_accepted, seed).interference;
}

std::vector<EstimateWithCI> estimate_success_prob(const NetworkParams& params, ProcessType process,
                                                  std::span<const double> thresholds,
                                                  const SimulationWindow& window,
                                                  std::uint64_t n_accepted, std::uint64_t seed) {
    for (double t : thresholds)
        if (!(t >= 0.0)) throw DomainError("SIR thresholds must be >= 0");
    const PalmRun run = run_palm(params, process, window, n_accepted, seed, true);
    std::vector<EstimateWithCI> out;
    out.reserve(thresholds.size());
    for (double t : thresholds) {
        std::uint64_t hits = 0;
        for (const PalmSample& s : run.samples)
            if (s.sir > t) ++hits;
        out.push_back(EstimateWithCI::from_successes(hits, run.samples.size(), seed));
    }
    return out;
}

EstimateWithCI two_pair_retention(const PairConfiguration& config, const NetworkParams& params,
                                  ProcessType process, std::uint64_t n_reps, std::uint64_t seed) {
    params.validate();
    require_reps(n_reps);
    const PairConfiguration c = config.normalized();
    const NetworkParams region = exclusion_params(params, process);
    const bool type_one = is_type_one(process);

    TransceiverPair first;
    TransceiverPair second;
    second.tx = c.second_transmitter();
    second.theta = c.theta;

    // Background only matters inside the two exclusion regions.
    const PairDisks a = pair_disks(first.tx, first.theta, region);
    const PairDisks b = pair_disks(second.tx, second.theta, region);
    double x0 = 0.0, x1 = 0.0, y0 = 0.0, y1 = 0.0;
    bool init = false;
    for (const PairDisks* pd : {&a, &b}) {
        for (const Disk& disk : pd->view()) {
            const double lx = disk.center.x - disk.radius, hx = disk.center.x + disk.radius;
            const double ly = disk.center.y - disk.radius, hy = disk.center.y + disk.radius;
            if (!init) {
                x0 = lx, x1 = hx, y0 = ly, y1 = hy;
                init = true;
            } else {
                x0 = std::min(x0, lx), x1 = std::max(x1, hx);
                y0 = std::min(y0, ly), y1 = std::max(y1, hy);
            }
        }
    }
    const double box_area = (x1 - x0) * (y1 - y0);
    const double mean = params.lambda_p * box_area;
    if (mean > kDefaultPointCap) throw ResourceError("two-pair background exceeds the point cap");

    const CounterRng rng(seed);
    std::vector<std::uint8_t> both(n_reps, 0);
    parallel_for(n_reps, [&](std::size_t rep) {
        TransceiverPair p = first;
        TransceiverPair q = second;
        const auto marks = rng.uniform2(rep, Stream::Planted, 0);
        p.mark = marks[0];
        q.mark = marks[1];
        auto suppresses = [&](const TransceiverPair& owner, const TransceiverPair& other) {
            return in_exclusion_region(owner, other.tx, region) && (type_one || other.mark < owner.mark);
        };
        if (suppresses(p, q) || suppresses(q, p)) return;
        std::uint64_t n = 0;
        if (mean > 0.0) {
            CounterEngine engine(rng, rep, Stream::Count);
            std::poisson_distribution<std::uint64_t> poisson(mean);
            n = poisson(engine);
        }
        for (std::uint64_t i = 0; i < n; ++i) {
            const auto u = rng.uniform4(rep, Stream::Points, static_cast<std::uint32_t>(i));
            TransceiverPair bg;
            bg.tx = {x0 + (x1 - x0) * u[0], y0 + (y1 - y0) * u[1]};
            bg.mark = u[3];
            if (suppresses(p, bg) || suppresses(q, bg)) return;
        }
        both[rep] = 1;
    });
    std::uint64_t hits = 0;
    for (std::uint8_t v : both) hits += v;
    return EstimateWithCI::from_successes(hits, n_reps, seed);
}

} // namespace dzhcp
