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

#ifndef QSHOR_GATES_H
#define QSHOR_GATES_H

#include <array>

#include "qshor/state.h"

namespace qshor {

inline constexpr double kUnitarityTolerance = 1e-12;

using Matrix2 = std::array<Amplitude, 4>;
using Matrix4 = std::array<Amplitude, 16>;

/// Row-major 2x2 unitary, checked on construction.
class Gate2 {
   public:
    /// Throws std::invalid_argument when ||G^dag G - I||_max > 1e-12.
    explicit Gate2(const Matrix2 &m);

    Amplitude operator()(size_t row, size_t col) const {
        return m_[2 * row + col];
    }
    const Matrix2 &matrix() const {
        return m_;
    }
    bool operator==(const Gate2 &other) const = default;

   private:
    Matrix2 m_;
};

/// Row-major 4x4 unitary acting on a qubit pair (qa, qb), checked on
/// construction.
///
/// The row/column index is bit(qa) + 2 * bit(qb), matching the register's
/// little-endian convention. For example tensor_product(X, I) flips qa:
///
///     |qb qa>   00 01 10 11
///       00    [  0  1  0  0 ]
///       01    [  1  0  0  0 ]
///       10    [  0  0  0  1 ]
///       11    [  0  0  1  0 ]
class Gate4 {
   public:
    explicit Gate4(const Matrix4 &m);

    Amplitude operator()(size_t row, size_t col) const {
        return m_[4 * row + col];
    }
    const Matrix4 &matrix() const {
        return m_;
    }
    bool operator==(const Gate4 &other) const = default;

   private:
    Matrix4 m_;
};

Gate2 identity_gate();
Gate2 not_gate();
/// |0> -> (|0> + |1>)/sqrt2, |1> -> (|0> - |1>)/sqrt2.
Gate2 hadamard();
/// diag(1, e^{i phi}). Used with one control this is the controlled phase shift.
Gate2 phase_shift(double phi);

/// `low` acts on qa (bit 0 of the pair index), `high` on qb (bit 1).
Gate4 tensor_product(const Gate2 &low, const Gate2 &high);

/// 4x4 CNOT with control qa and target qb.
Gate4 cnot_matrix();
Gate4 swap_matrix();

Gate2 adjoint(const Gate2 &g);
Gate4 adjoint(const Gate4 &g);
Gate2 multiply(const Gate2 &a, const Gate2 &b);
Gate4 multiply(const Gate4 &a, const Gate4 &b);

/// max_ij |(G^dag G - I)_ij|.
double unitarity_error(const Matrix2 &m);
double unitarity_error(const Matrix4 &m);
bool is_unitary(const Matrix2 &m);
bool is_unitary(const Matrix4 &m);
inline bool is_unitary(const Gate2 &g) {
    return is_unitary(g.matrix());
}
inline bool is_unitary(const Gate4 &g) {
    return is_unitary(g.matrix());
}

}  // namespace qshor

#endif
