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

// Counter-based random numbers (Philox4x32-10). Every draw is a pure
// function of (seed, replication, stream, index), so results do not depend
// on how replications are scheduled across threads.

#include <array>
#include <cstdint>
#include <limits>

namespace dzhcp {

using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

namespace detail {

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) noexcept {
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

} // namespace detail

inline PhiloxCounter philox4x32(PhiloxCounter ctr, PhiloxKey key) noexcept {
    constexpr std::uint32_t kM0 = 0xD2511F53u;
    constexpr std::uint32_t kM1 = 0xCD9E8D57u;
    constexpr std::uint32_t kW0 = 0x9E3779B9u;
    constexpr std::uint32_t kW1 = 0xBB67AE85u;
    for (int round = 0; round < 10; ++round) {
        std::uint32_t hi0, lo0, hi1, lo1;
        detail::mulhilo(kM0, ctr[0], hi0, lo0);
        detail::mulhilo(kM1, ctr[2], hi1, lo1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += kW0;
        key[1] += kW1;
    }
    return ctr;
}

// Maps 64 random bits to a double in the open interval (0, 1).
inline double to_unit_open(std::uint64_t bits) noexcept {
    return (static_cast<double>(bits >> 12) + 0.5) * 0x1.0p-52;
}

inline std::uint64_t join64(std::uint32_t hi, std::uint32_t lo) noexcept {
    return (static_cast<std::uint64_t>(hi) << 32) | lo;
}

// Named sub-streams of one replication.
enum class Stream : std::uint32_t {
    Count = 1,
    Points = 2,
    Planted = 3,
    Fading = 4,
};

// Keyed family of counter streams for one master seed.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) noexcept
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)} {}

    // Four 32-bit words for element `index` of (replication, stream).
    PhiloxCounter block(std::uint64_t replication, Stream stream, std::uint32_t index) const noexcept {
        return philox4x32({index, static_cast<std::uint32_t>(stream),
                           static_cast<std::uint32_t>(replication),
                           static_cast<std::uint32_t>(replication >> 32)},
                          key_);
    }

    // Two uniforms in (0, 1) for element `index`.
    std::array<double, 2> uniform2(std::uint64_t replication, Stream stream, std::uint32_t index) const noexcept {
        const PhiloxCounter b = block(replication, stream, index);
        return {to_unit_open(join64(b[0], b[1])), to_unit_open(join64(b[2], b[3]))};
    }

    // Four uniforms in (0, 1) built from two blocks (52 bits each).
    std::array<double, 4> uniform4(std::uint64_t replication, Stream stream, std::uint32_t index) const noexcept {
        const PhiloxCounter a = block(replication, stream, 2 * index);
        const PhiloxCounter b = block(replication, stream, 2 * index + 1);
        return {to_unit_open(join64(a[0], a[1])), to_unit_open(join64(a[2], a[3])),
                to_unit_open(join64(b[0], b[1])), to_unit_open(join64(b[2], b[3]))};
    }

    const PhiloxKey& key() const noexcept { return key_; }

private:
    PhiloxKey key_;
};

// Sequential UniformRandomBitGenerator over one (replication, stream), for
// use with <random> distributions.
class CounterEngine {
public:
    using result_type = std::uint64_t;

    CounterEngine(const CounterRng& rng, std::uint64_t replication, Stream stream) noexcept
        : rng_(&rng), replication_(replication), stream_(stream) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const PhiloxCounter b = rng_->block(replication_, stream_, index_++);
        spare_ = join64(b[2], b[3]);
        have_spare_ = true;
        return join64(b[0], b[1]);
    }

    double uniform() noexcept { return to_unit_open((*this)()); }

private:
    const CounterRng* rng_;
    std::uint64_t replication_;
    Stream stream_;
    std::uint32_t index_ = 0;
    std::uint64_t spare_ = 0;
    bool have_spare_ = false;
};

} // namespace dzhcp
