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

#include "braidcircuit/random.hpp"

namespace braidcircuit {

namespace {
__extension__ typedef unsigned __int128 u128;
}  // namespace

std::uint64_t SplitMix64::below(std::uint64_t n) noexcept {
    const u128 wide = static_cast<u128>((*this)()) * n;
    return static_cast<std::uint64_t>(wide >> 64);
}

}  // namespace braidcircuit
