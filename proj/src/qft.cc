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

#include "qshor/qft.h"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qshor {

std::vector<Amplitude> dft_reference(std::span<const Amplitude> amps) {
    const uint64_t dim = amps.size();
    if (dim == 0 || !std::has_single_bit(dim)) {
        throw std::invalid_argument("transform length " + std::to_string(dim) + " is not a power of two");
    }
    const double scale = 1 / std::sqrt(static_cast<double>(dim));
    // roots[k] = exp(2 pi i k / dim); x*y is reduced mod dim before lookup.
    std::vector<Amplitude> roots(dim);
    for (uint64_t k = 0; k < dim; k++) {
        roots[k] = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(dim));
    }
    std::vector<Amplitude> out(dim);
    for (uint64_t x = 0; x < dim; x++) {
        Amplitude acc = 0;
        for (uint64_t y = 0; y < dim; y++) {
            acc += roots[(x * y) & (dim - 1)] * amps[y];
        }
        out[x] = acc * scale;
    }
    return out;
}

Circuit qft_circuit(unsigned n, unsigned first, unsigned width) {
    if (n == 0) {
        throw std::invalid_argument("QFT needs at least one qubit");
    }
    if (width == 0) {
        width = first + n;
    }
    if (first + n > width) {
        throw std::invalid_argument("QFT register does not fit the circuit width");
    }
    Circuit c(width);
    // Most significant qubit first. After the ladder qubit j holds the
    // phase for output bit n-1-j, which the swaps put back in place.
    for (unsigned j = n; j-- > 0;) {
        c.append(GateOp::h(first + j));
        for (unsigned k = j; k-- > 0;) {
            c.append(GateOp::cphase(first + k, first + j, std::numbers::pi / static_cast<double>(uint64_t{1} << (j - k))));
        }
    }
    for (unsigned i = 0; i < n / 2; i++) {
        unsigned a = first + i;
        unsigned b = first + n - 1 - i;
        c.append(GateOp::cnot(a, b));
        c.append(GateOp::cnot(b, a));
        c.append(GateOp::cnot(a, b));
    }
    return c;
}

size_t qft_gate_count(unsigned n) {
    return static_cast<size_t>(n) * (n + 1) / 2 + 3 * static_cast<size_t>(n / 2);
}

void apply_qft(QuantumState &state) {
    qft_circuit(state.num_qubits()).run(state);
}

void apply_qft_on(QuantumState &state, std::span<const unsigned> qubits) {
    if (qubits.empty()) {
        throw std::invalid_argument("QFT on an empty qubit set");
    }
    for (size_t i = 1; i < qubits.size(); i++) {
        if (qubits[i] != qubits[0] + i) {
            throw std::invalid_argument("QFT register must be a contiguous ascending run of qubits");
        }
    }
    qft_circuit(static_cast<unsigned>(qubits.size()), qubits[0], state.num_qubits()).run(state);
}

}  // namespace qshor
