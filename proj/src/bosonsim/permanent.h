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

#ifndef BOSONSIM_PERMANENT_H
#define BOSONSIM_PERMANENT_H

#include <cstddef>

#include "bosonsim/linalg.h"

namespace bosonsim {

inline constexpr std::size_t kMaxNaivePermanentSize = 10;
inline constexpr std::size_t kMaxRyserPermanentSize = 30;

/// Sum over all permutations. Oracle only; refuses n > 10.
Complex permanent_naive(const ComplexMatrix &a);

/// Ryser inclusion-exclusion with binary-reflected Gray-code subset order,
/// O(2^n n). Refuses n > 30.
Complex permanent_ryser(const ComplexMatrix &a);

/// Ryser's sum split into a fixed number of contiguous Gray-code segments
/// evaluated on up to `threads` workers. Segment partials are reduced in
/// segment order, so the result does not depend on the thread count.
Complex permanent_parallel(const ComplexMatrix &a, unsigned threads);

}  // namespace bosonsim

#endif
