// Copyright 2026 The bosonsim Authors
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

#ifndef BOSONSIM_RNG_H
#define BOSONSIM_RNG_H

#include <cstdint>
#include <random>
#include <string_view>

namespace bosonsim {

using Rng = std::mt19937_64;

/// Derives an independent stream seed from a root seed, a purpose label and
/// an index. All randomness in the library flows through this function so
/// that parallel work never shares generator state.
std::uint64_t derive_seed(std::uint64_t root, std::string_view label, std::uint64_t index = 0);

inline Rng make_rng(std::uint64_t root, std::string_view label, std::uint64_t index = 0) {
    return Rng(derive_seed(root, label, index));
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace bosonsim

#endif
