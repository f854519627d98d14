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

#include "bosonsim/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "bosonsim/errors.h"
#include "bosonsim/rng.h"

namespace bosonsim {

namespace {

using EigenMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const EigenMatrix> as_eigen(const ComplexMatrix &m) {
    return {m.entries().data(), static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols())};
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
        throw DimensionError(
            "matrix has " + std::to_string(data_.size()) + " entries, expected " + std::to_string(rows_) + "x" +
            std::to_string(cols_));
    }
    if (!all_finite()) {
        throw ContractError("matrix entries must be finite");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw DimensionError("ragged matrix literal");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; i++) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            out(c, r) = (*this)(r, c);
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix &rhs) const {
    if (cols_ != rhs.rows_) {
        throw DimensionError("matrix product shape mismatch");
    }
    ComplexMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t k = 0; k < cols_; k++) {
            Complex a = (*this)(r, k);
            for (std::size_t c = 0; c < rhs.cols_; c++) {
                out(r, c) += a * rhs(k, c);
            }
        }
    }
    return out;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (auto &x : data_) {
        x *= scale;
    }
    return *this;
}

double ComplexMatrix::frobenius_norm_squared() const {
    double s = 0;
    for (const auto &x : data_) {
        s += std::norm(x);
    }
    return s;
}

bool ComplexMatrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const Complex &x) {
        return std::isfinite(x.real()) && std::isfinite(x.imag());
    });
}

ModeOccupation ModeOccupation::parse(std::string_view compact) {
    std::vector<std::uint32_t> counts;
    counts.reserve(compact.size());
    for (char c : compact) {
        if (c < '0' || c > '9') {
            throw ContractError("bad occupation string '" + std::string(compact) + "'");
        }
        counts.push_back(static_cast<std::uint32_t>(c - '0'));
    }
    return ModeOccupation(std::move(counts));
}

std::uint32_t ModeOccupation::photons() const {
    return std::accumulate(counts_.begin(), counts_.end(), std::uint32_t{0});
}

bool ModeOccupation::collision_free() const {
    return std::all_of(counts_.begin(), counts_.end(), [](std::uint32_t c) { return c <= 1; });
}

double ModeOccupation::factorial_product() const {
    double p = 1;
    for (auto c : counts_) {
        p *= std::tgamma(static_cast<double>(c) + 1.0);
    }
    return p;
}

std::string ModeOccupation::str() const {
    std::string s;
    s.reserve(counts_.size());
    for (auto c : counts_) {
        if (c > 9) {
            throw ContractError("compact occupation strings hold at most 9 photons per mode");
        }
        s.push_back(static_cast<char>('0' + c));
    }
    return s;
}

bool check_unitary(const ComplexMatrix &u, double tol) {
    if (!u.is_square()) {
        throw DimensionError("check_unitary: matrix is not square");
    }
    auto e = as_eigen(u);
    EigenMatrix gram = e.adjoint() * e;
    gram -= EigenMatrix::Identity(e.rows(), e.cols());
    double worst = 0;
    for (Eigen::Index i = 0; i < gram.size(); i++) {
        worst = std::max(worst, std::abs(gram.data()[i]));
    }
    return worst <= tol;
}

ComplexMatrix haar_random_unitary(std::size_t m, std::uint64_t seed) {
    if (m == 0) {
        throw DimensionError("haar_random_unitary: m must be at least 1");
    }
    auto rng = make_rng(seed, "haar-unitary", m);
    std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
    Eigen::MatrixXcd z(m, m);
    for (Eigen::Index r = 0; r < z.rows(); r++) {
        for (Eigen::Index c = 0; c < z.cols(); c++) {
            double re = gauss(rng);
            double im = gauss(rng);
            z(r, c) = Complex(re, im);
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd &r = qr.matrixQR();
    // Fix the phase freedom of QR so the result is Haar rather than biased.
    for (Eigen::Index j = 0; j < q.cols(); j++) {
        Complex d = r(j, j);
        double mag = std::abs(d);
        q.col(j) *= mag > 0 ? d / mag : Complex(1.0);
    }
    ComplexMatrix out(m, m);
    for (std::size_t i = 0; i < m; i++) {
        for (std::size_t j = 0; j < m; j++) {
            out(i, j) = q(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        }
    }
    return out;
}

ComplexMatrix transition_submatrix(const ComplexMatrix &u, const ModeOccupation &input, const ModeOccupation &output) {
    if (!u.is_square()) {
        throw DimensionError("transition_submatrix: unitary is not square");
    }
    if (input.modes() != u.rows() || output.modes() != u.rows()) {
        throw DimensionError(
            "transition_submatrix: occupations must span " + std::to_string(u.rows()) + " modes");
    }
    if (input.photons() != output.photons()) {
        throw ContractError("transition_submatrix: input and output photon numbers differ");
    }
    std::vector<std::size_t> row_modes;
    std::vector<std::size_t> col_modes;
    for (std::size_t i = 0; i < input.modes(); i++) {
        row_modes.insert(row_modes.end(), input[i], i);
        col_modes.insert(col_modes.end(), output[i], i);
    }
    std::size_t n = row_modes.size();
    ComplexMatrix sub(n, n);
    for (std::size_t r = 0; r < n; r++) {
        for (std::size_t c = 0; c < n; c++) {
            sub(r, c) = u(row_modes[r], col_modes[c]);
        }
    }
    return sub;
}

std::vector<double> svd_singular_values(const ComplexMatrix &a) {
    if (!a.all_finite()) {
        throw ContractError("svd_singular_values: non-finite entry");
    }
    if (a.rows() == 0 || a.cols() == 0) {
        return {};
    }
    Eigen::MatrixXcd dense = as_eigen(a);
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(dense);
    const auto &s = svd.singularValues();
    std::vector<double> values(s.data(), s.data() + s.size());
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

}  // namespace bosonsim
