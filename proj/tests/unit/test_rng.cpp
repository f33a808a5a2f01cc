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

#include <doctest.h>

#include "dzhcp/rng.hpp"

#include <random>

using namespace dzhcp;

// Known-answer vectors from the Random123 distribution (philox4x32_10).
TEST_CASE("philox4x32-10 known answers") {
    CHECK(philox4x32({0, 0, 0, 0}, {0, 0}) ==
          PhiloxCounter{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
    CHECK(philox4x32({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu}, {0xffffffffu, 0xffffffffu}) ==
          PhiloxCounter{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
    CHECK(philox4x32({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u}, {0xa4093822u, 0x299f31d0u}) ==
          PhiloxCounter{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
}

TEST_CASE("uniforms are in the open unit interval") {
    CHECK(to_unit_open(0) > 0.0);
    CHECK(to_unit_open(~0ull) < 1.0);
    const CounterRng rng(42);
    double sum = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const auto u = rng.uniform2(0, Stream::Points, static_cast<std::uint32_t>(i));
        CHECK((u[0] > 0.0 && u[0] < 1.0 && u[1] > 0.0 && u[1] < 1.0));
        sum += u[0] + u[1];
    }
    CHECK(sum / (2 * n) == doctest::Approx(0.5).epsilon(0.005));
}

TEST_CASE("streams are pure functions of their coordinates") {
    const CounterRng a(7), b(7), c(8);
    CHECK(a.block(3, Stream::Fading, 11) == b.block(3, Stream::Fading, 11));
    CHECK(a.block(3, Stream::Fading, 11) != c.block(3, Stream::Fading, 11));
    CHECK(a.block(3, Stream::Fading, 11) != a.block(3, Stream::Points, 11));
    CHECK(a.block(3, Stream::Fading, 11) != a.block(4, Stream::Fading, 11));
    CHECK(a.block(1ull << 32, Stream::Count, 0) != a.block(0, Stream::Count, 0));
}

TEST_CASE("counter engine drives standard distributions") {
    const CounterRng rng(1);
    CounterEngine e1(rng, 5, Stream::Count), e2(rng, 5, Stream::Count);
    std::poisson_distribution<int> d1(30.0), d2(30.0);
    for (int i = 0; i < 100; ++i) CHECK(d1(e1) == d2(e2));
}
