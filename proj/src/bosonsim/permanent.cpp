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

#include "bosonsim/permanent.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "bosonsim/errors.h"

namespace bosonsim {

namespace {

// log2 of the number of Gray-code segments used by the parallel kernel.
constexpr unsigned kSegmentBits = 6;

/// Neumaier-compensated complex accumulator.
class CompensatedSum {
   public:
    void add(Complex x) {
        add_part(re_, re_comp_, x.real());
        add_part(im_, im_comp_, x.imag());
    }
    Complex value() const { return {re_ + re_comp_, im_ + im_comp_}; }

   private:
    static void add_part(double &sum, double &comp, double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }

    double re_ = 0, re_comp_ = 0;
    double im_ = 0, im_comp_ = 0;
};

void require_square(const ComplexMatrix &a, const char *who) {
    if (!a.is_square()) {
        throw DimensionError(std::string(who) + ": matrix is not square");
    }
}

void require_ryser_size(const ComplexMatrix &a, const char *who) {
    require_square(a, who);
    if (a.rows() > kMaxRyserPermanentSize) {
        throw RefusalError(
            std::string(who) + ": n = " + std::to_string(a.rows()) + " exceeds the limit of " +
            std::to_string(kMaxRyserPermanentSize));
    }
}

/// Column-major copy so that toggling a column touches contiguous memory.
std::vector<Complex> columns_of(const ComplexMatrix &a) {
    std::size_t n = a.rows();
    std::vector<Complex> cols(n * n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            cols[j * n + i] = a(i, j);
        }
    }
    return cols;
}

/// Signed Ryser terms for Gray-code ranks in [begin, end). The row sums are
/// rebuilt from scratch for the subset at `begin`, then updated one column
/// at a time.
Complex ryser_segment(const std::vector<Complex> &cols, std::size_t n, std::uint64_t begin, std::uint64_t end) {
    std::vector<Complex> row_sums(n, Complex(0));
    std::uint64_t gray = begin ^ (begin >> 1);
    for (std::size_t j = 0; j < n; j++) {
        if (gray >> j & 1) {
            for (std::size_t i = 0; i < n; i++) {
                row_sums[i] += cols[j * n + i];
            }
        }
    }

    auto signed_product = [&](std::uint64_t subset) {
        Complex prod = row_sums[0];
        for (std::size_t i = 1; i < n; i++) {
            prod *= row_sums[i];
        }
        return (std::popcount(subset) & 1) ? -prod : prod;
    };

    CompensatedSum total;
    total.add(signed_product(gray));
    for (std::uint64_t k = begin + 1; k < end; k++) {
        std::size_t j = static_cast<std::size_t>(std::countr_zero(k));
        gray ^= std::uint64_t{1} << j;
        const Complex *col = &cols[j * n];
        if (gray >> j & 1) {
            for (std::size_t i = 0; i < n; i++) {
                row_sums[i] += col[i];
            }
        } else {
            for (std::size_t i = 0; i < n; i++) {
                row_sums[i] -= col[i];
            }
        }
        total.add(signed_product(gray));
    }
    return total.value();
}

Complex apply_outer_sign(Complex s, std::size_t n) {
    return (n & 1) ? -s : s;
}

}  // namespace

Complex permanent_naive(const ComplexMatrix &a) {
    require_square(a, "permanent_naive");
    std::size_t n = a.rows();
    if (n > kMaxNaivePermanentSize) {
        throw RefusalError(
            "permanent_naive: n = " + std::to_string(n) + " is too large for the factorial oracle; use the Ryser kernel");
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    CompensatedSum total;
    do {
        Complex prod = 1.0;
        for (std::size_t i = 0; i < n; i++) {
            prod *= a(i, perm[i]);
        }
        total.add(prod);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total.value();
}

Complex permanent_ryser(const ComplexMatrix &a) {
    require_ryser_size(a, "permanent_ryser");
    std::size_t n = a.rows();
    if (n == 0) {
        return 1.0;
    }
    auto cols = columns_of(a);
    return apply_outer_sign(ryser_segment(cols, n, 0, std::uint64_t{1} << n), n);
}

Complex permanent_parallel(const ComplexMatrix &a, unsigned threads) {
    if (threads == 0) {
        throw ContractError("permanent_parallel: threads must be at least 1");
    }
    require_ryser_size(a, "permanent_parallel");
    std::size_t n = a.rows();
    if (n == 0) {
        return 1.0;
    }
    auto cols = columns_of(a);
    std::uint64_t space = std::uint64_t{1} << n;
    unsigned segment_bits = std::min<unsigned>(kSegmentBits, static_cast<unsigned>(n));
    std::size_t segments = std::size_t{1} << segment_bits;
    std::uint64_t seg_len = space >> segment_bits;

    std::vector<Complex> partial(segments);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t s = next++; s < segments; s = next++) {
            partial[s] = ryser_segment(cols, n, s * seg_len, (s + 1) * seg_len);
        }
    };
    unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, segments));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; t++) {
            pool.emplace_back(worker);
        }
    }

    CompensatedSum total;
    for (const auto &p : partial) {
        total.add(p);
    }
    return apply_outer_sign(total.value(), n);
}

}  // namespace bosonsim
