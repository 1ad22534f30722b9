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

#ifndef QSHOR_QFT_H
#define QSHOR_QFT_H

#include <span>
#include <vector>

#include "qshor/circuit.h"
#include "qshor/state.h"

// Quantum Fourier transform.
//
// Convention: out[x] = 2^{-n/2} sum_y exp(+2 pi i x y / 2^n) in[y]. The
// inverse transform carries the minus sign.

namespace qshor {

/// Direct O(4^n) evaluation of the transform. Throws std::invalid_argument
/// unless the length is a power of two.
std::vector<Amplitude> dft_reference(std::span<const Amplitude> amps);

/// Hadamard + controlled-phase ladder on qubits [first, first + n) of a
/// register of `width` qubits (default: exactly n), followed by floor(n/2)
/// qubit-reversal swaps, each written as three CNOTs.
///
/// gate_count = n(n+1)/2 + 3 floor(n/2).
Circuit qft_circuit(unsigned n, unsigned first = 0, unsigned width = 0);

/// Closed form of gate_count(qft_circuit(n)).
size_t qft_gate_count(unsigned n);

/// QFT on the whole register.
void apply_qft(QuantumState &state);

/// QFT on a contiguous ascending run of qubits; identity elsewhere.
/// Throws std::invalid_argument for any other subset.
void apply_qft_on(QuantumState &state, std::span<const unsigned> qubits);

}  // namespace qshor

#endif
