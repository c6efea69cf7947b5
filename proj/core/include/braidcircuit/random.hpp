// Copyright 2026 The braidcircuit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

namespace braidcircuit {

/// SplitMix64 finalizer. Every random decision in the library is derived from
/// this function, so results do not depend on the standard library's engines.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Counter-based key for (seed, a, b): mix64(mix64(mix64(seed) ^ a) ^ b).
constexpr std::uint64_t mix_key(std::uint64_t seed, std::uint64_t a, std::uint64_t b) noexcept {
    return mix64(mix64(mix64(seed) ^ a) ^ b);
}

/// Top 53 bits as a double in [0, 1).
constexpr double to_unit(std::uint64_t bits) noexcept {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Sequential SplitMix64 stream; satisfies UniformRandomBitGenerator.
class SplitMix64 {
   public:
    using result_type = std::uint64_t;
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {
    }
    static constexpr result_type min() noexcept {
        return 0;
    }
    static constexpr result_type max() noexcept {
        return ~result_type{0};
    }
    constexpr result_type operator()() noexcept {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    constexpr double uniform() noexcept {
        return to_unit((*this)());
    }
    /// Uniform integer in [0, n) by multiply-shift (n > 0).
    std::uint64_t below(std::uint64_t n) noexcept;

   private:
    std::uint64_t state_;
};

}  // namespace braidcircuit
