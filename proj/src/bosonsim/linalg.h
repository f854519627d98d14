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

#ifndef BOSONSIM_LINALG_H
#define BOSONSIM_LINALG_H

#include <compare>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bosonsim {

using Complex = std::complex<double>;

inline constexpr double kDefaultUnitaryTolerance = 1e-10;

/// Dense complex matrix in row-major order. Rows of an interferometer
/// matrix are input modes and columns are output modes.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    /// Zero-filled rows x cols matrix.
    ComplexMatrix(std::size_t rows, std::size_t cols);
    /// Takes ownership of row-major entries. Throws DimensionError on a size
    /// mismatch and ContractError on any non-finite entry.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Complex> entries() const { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix operator*(const ComplexMatrix &rhs) const;
    ComplexMatrix &operator*=(Complex scale);

    double frobenius_norm_squared() const;
    bool all_finite() const;

    bool operator==(const ComplexMatrix &) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

/// Photon counts per optical mode (a Fock basis state).
class ModeOccupation {
   public:
    ModeOccupation() = default;
    explicit ModeOccupation(std::vector<std::uint32_t> counts) : counts_(std::move(counts)) {}
    ModeOccupation(std::initializer_list<std::uint32_t> counts) : counts_(counts) {}

    /// Empty occupation of m modes.
    static ModeOccupation vacuum(std::size_t modes) { return ModeOccupation(std::vector<std::uint32_t>(modes, 0)); }

    /// Parses the compact form "010011"; one decimal digit per mode.
    static ModeOccupation parse(std::string_view compact);

    std::size_t modes() const { return counts_.size(); }
    std::uint32_t operator[](std::size_t i) const { return counts_[i]; }
    std::uint32_t &operator[](std::size_t i) { return counts_[i]; }
    std::span<const std::uint32_t> counts() const { return counts_; }

    std::uint32_t photons() const;
    /// True iff every mode holds at most one photon.
    bool collision_free() const;
    /// Product of the factorials of the mode counts.
    double factorial_product() const;

    /// Compact form, one digit per mode. Throws ContractError for counts > 9.
    std::string str() const;

    auto operator<=>(const ModeOccupation &) const = default;
    bool operator==(const ModeOccupation &) const = default;

   private:
    std::vector<std::uint32_t> counts_;
};

/// True iff U is square and max |(U^dagger U - I)_ij| <= tol.
/// Throws DimensionError for a non-square input.
bool check_unitary(const ComplexMatrix &u, double tol = kDefaultUnitaryTolerance);

/// Haar-distributed m x m unitary, deterministic in the seed.
ComplexMatrix haar_random_unitary(std::size_t m, std::uint64_t seed);

/// The n x n matrix whose permanent is the transition amplitude between
/// Fock states: row i of U repeated input[i] times, column j repeated
/// output[j] times.
ComplexMatrix transition_submatrix(const ComplexMatrix &u, const ModeOccupation &input, const ModeOccupation &output);

/// Singular values in non-increasing order.
std::vector<double> svd_singular_values(const ComplexMatrix &a);

}  // namespace bosonsim

#endif
