// Copyright 2026 The QShor Authors
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

#include "qshor/gates.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qshor {

namespace {

template <size_t D>
double unitarity_error_impl(const std::array<Amplitude, D * D> &m) {
    double worst = 0;
    for (size_t r = 0; r < D; r++) {
        for (size_t c = 0; c < D; c++) {
            Amplitude acc = 0;
            for (size_t k = 0; k < D; k++) {
                acc += std::conj(m[k * D + r]) * m[k * D + c];
            }
            if (r == c) {
                acc -= 1.0;
            }
            double e = std::abs(acc);
            if (!std::isfinite(e)) {
                return INFINITY;
            }
            worst = std::max(worst, e);
        }
    }
    return worst;
}

template <size_t D>
std::array<Amplitude, D * D> adjoint_impl(const std::array<Amplitude, D * D> &m) {
    std::array<Amplitude, D * D> out{};
    for (size_t r = 0; r < D; r++) {
        for (size_t c = 0; c < D; c++) {
            out[c * D + r] = std::conj(m[r * D + c]);
        }
    }
    return out;
}

template <size_t D>
std::array<Amplitude, D * D> multiply_impl(const std::array<Amplitude, D * D> &a, const std::array<Amplitude, D * D> &b) {
    std::array<Amplitude, D * D> out{};
    for (size_t r = 0; r < D; r++) {
        for (size_t c = 0; c < D; c++) {
            Amplitude acc = 0;
            for (size_t k = 0; k < D; k++) {
                acc += a[r * D + k] * b[k * D + c];
            }
            out[r * D + c] = acc;
        }
    }
    return out;
}

}  // namespace

Gate2::Gate2(const Matrix2 &m) : m_(m) {
    double err = unitarity_error(m);
    if (!(err <= kUnitarityTolerance)) {
        throw std::invalid_argument("2x2 matrix is not unitary (max deviation " + std::to_string(err) + ")");
    }
}

Gate4::Gate4(const Matrix4 &m) : m_(m) {
    double err = unitarity_error(m);
    if (!(err <= kUnitarityTolerance)) {
        throw std::invalid_argument("4x4 matrix is not unitary (max deviation " + std::to_string(err) + ")");
    }
}

Gate2 identity_gate() {
    return Gate2({1, 0, 0, 1});
}

Gate2 not_gate() {
    return Gate2({0, 1, 1, 0});
}

Gate2 hadamard() {
    const double s = std::numbers::sqrt2 / 2;
    return Gate2({s, s, s, -s});
}

Gate2 phase_shift(double phi) {
    if (!std::isfinite(phi)) {
        throw std::invalid_argument("phase angle must be finite");
    }
    return Gate2({1, 0, 0, std::polar(1.0, phi)});
}

Gate4 tensor_product(const Gate2 &low, const Gate2 &high) {
    Matrix4 out{};
    for (size_t r = 0; r < 4; r++) {
        for (size_t c = 0; c < 4; c++) {
            out[4 * r + c] = low(r & 1, c & 1) * high(r >> 1, c >> 1);
        }
    }
    return Gate4(out);
}

Gate4 cnot_matrix() {
    // Control qa is bit 0, target qb is bit 1: swaps |01> and |11> (qb qa order).
    Matrix4 m{};
    m[4 * 0 + 0] = 1;
    m[4 * 2 + 2] = 1;
    m[4 * 3 + 1] = 1;
    m[4 * 1 + 3] = 1;
    return Gate4(m);
}

Gate4 swap_matrix() {
    Matrix4 m{};
    m[4 * 0 + 0] = 1;
    m[4 * 1 + 2] = 1;
    m[4 * 2 + 1] = 1;
    m[4 * 3 + 3] = 1;
    return Gate4(m);
}

Gate2 adjoint(const Gate2 &g) {
    return Gate2(adjoint_impl<2>(g.matrix()));
}

Gate4 adjoint(const Gate4 &g) {
    return Gate4(adjoint_impl<4>(g.matrix()));
}

Gate2 multiply(const Gate2 &a, const Gate2 &b) {
    return Gate2(multiply_impl<2>(a.matrix(), b.matrix()));
}

Gate4 multiply(const Gate4 &a, const Gate4 &b) {
    return Gate4(multiply_impl<4>(a.matrix(), b.matrix()));
}

double unitarity_error(const Matrix2 &m) {
    return unitarity_error_impl<2>(m);
}

double unitarity_error(const Matrix4 &m) {
    return unitarity_error_impl<4>(m);
}

bool is_unitary(const Matrix2 &m) {
    return unitarity_error(m) <= kUnitarityTolerance;
}

bool is_unitary(const Matrix4 &m) {
    return unitarity_error(m) <= kUnitarityTolerance;
}

}  // namespace qshor
