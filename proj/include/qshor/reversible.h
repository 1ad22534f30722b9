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

#ifndef QSHOR_REVERSIBLE_H
#define QSHOR_REVERSIBLE_H

#include <cstdint>
#include <functional>
#include <vector>

#include "qshor/circuit.h"
#include "qshor/permutation.h"

// Classical computation on a quantum register.
//
// Register layout: input x on the low qubits, the output register directly
// above it. Work qubits go on top.

namespace qshor {

/// A classical function from input_width bits to output_width bits.
/// `eval` must be pure: it is called from several threads.
struct ReversibleFunction {
    unsigned input_width = 0;
    unsigned output_width = 0;
    std::function<uint64_t(uint64_t)> eval;
};

/// |x, y> -> |x, y XOR f(x)> on input_width + output_width qubits (x low).
/// Throws std::invalid_argument if some f(x) does not fit the output width.
BasisPermutation xor_oracle(const ReversibleFunction &f);

/// x -> a^x mod n.
ReversibleFunction modexp_function(uint64_t a, uint64_t n, unsigned in_width, unsigned out_width);

/// xor_oracle of x -> a^x mod n. Requires gcd(a, n) = 1 and
/// 2^out_width >= n.
BasisPermutation modexp_oracle(uint64_t a, uint64_t n, unsigned in_width, unsigned out_width);

/// Garbage-free wrapper around a computation that leaves garbage.
///
/// `compute` acts on x_width input qubits (low) plus zero-initialized work
/// qubits, and must send every |x, 0> to a single basis state in which the
/// wanted value f(x) is readable from `f_qubits` (bit i = f_qubits[i]); the
/// remaining qubits hold garbage. The result works on compute.width() +
/// f_qubits.size() qubits: compute, XOR f into the fresh qubits on top,
/// then run compute backwards, so |x, 0, 0> -> |x, 0, f(x)>.
///
/// The basis-state requirement is checked by simulating every input; this
/// throws std::invalid_argument if it fails.
Circuit compute_copy_uncompute(const Circuit &compute, unsigned x_width, const std::vector<unsigned> &f_qubits);

/// AND of k >= 2 input bits (qubits 0..k-1) into qubit 2k-2 with a Toffoli
/// chain through k-2 ancillas (qubits k..2k-3), which are returned to 0.
Circuit multi_and_circuit(unsigned k);

/// Basis-state action of a classical reversible circuit (X/CNOT/CCNOT/
/// multi-controlled X and permutation ops only). Throws
/// std::invalid_argument for any other gate.
uint64_t run_classical(const Circuit &c, uint64_t x);

/// The garbage-leaving evaluation of x -> a^x mod n that a
/// square-and-multiply circuit performs when nothing is uncomputed: the
/// exponent bits survive next to the result. Returned as the pair
/// (a^x mod n, garbage) packed as result | garbage << out_width.
ReversibleFunction modexp_with_garbage(uint64_t a, uint64_t n, unsigned in_width, unsigned out_width);

}  // namespace qshor

#endif
