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

#ifndef BOSONSIM_TESTS_SUPPORT_H
#define BOSONSIM_TESTS_SUPPORT_H

#include <complex>
#include <ostream>
#include <random>
#include <vector>

#include "bosonsim/linalg.h"
#include "oracles.h"

namespace bosonsim {

inline void PrintTo(const ModeOccupation &m, std::ostream *os) {
    *os << "(";
    for (std::size_t i = 0; i < m.modes(); i++) {
        *os << (i ? "," : "") << m[i];
    }
    *os << ")";
}

}  // namespace bosonsim

namespace testing_support {

inline bosonsim::ComplexMatrix to_matrix(const oracle::Rows &rows) {
    std::size_t n = rows.size();
    std::size_t m = n ? rows[0].size() : 0;
    std::vector<bosonsim::Complex> entries;
    for (const auto &r : rows) {
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return bosonsim::ComplexMatrix(n, m, std::move(entries));
}

inline oracle::Rows to_rows(const bosonsim::ComplexMatrix &a) {
    oracle::Rows rows(a.rows(), std::vector<oracle::cd>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); i++) {
        for (std::size_t j = 0; j < a.cols(); j++) {
            rows[i][j] = a(i, j);
        }
    }
    return rows;
}

inline bosonsim::ComplexMatrix random_matrix(std::size_t n, std::mt19937_64 &rng) {
    return to_matrix(oracle::random_rows(n, rng));
}

inline bosonsim::ComplexMatrix beamsplitter() {
    double r = 1.0 / std::sqrt(2.0);
    return bosonsim::ComplexMatrix{{r, r}, {r, -r}};
}

inline bosonsim::ComplexMatrix fourier(std::size_t n) {
    bosonsim::ComplexMatrix f(n, n);
    for (std::size_t j = 0; j < n; j++) {
        for (std::size_t k = 0; k < n; k++) {
            f(j, k) = std::polar(1.0 / std::sqrt(double(n)), 2 * M_PI * double(j * k) / double(n));
        }
    }
    return f;
}

inline double relative_error(std::complex<double> a, std::complex<double> b) {
    double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / scale;
}

}  // namespace testing_support

#endif
