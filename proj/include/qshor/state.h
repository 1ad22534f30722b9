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

#ifndef QSHOR_STATE_H
#define QSHOR_STATE_H

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace qshor {

using Amplitude = std::complex<double>;

/// The random source injected into every sampling operation.
using Rng = std::mt19937_64;

/// Default ceiling on register width. 2^30 amplitudes are 16 GiB.
inline constexpr unsigned kDefaultMaxQubits = 30;

class Gate2;
class Gate4;
class BasisPermutation;

struct MeasurementOutcome {
    /// Bit i of `value` is the observed value of the i-th measured qubit.
    uint64_t value = 0;
    /// Probability mass of the observed outcome before collapse.
    double probability = 0;
};

/// Dense state vector of an n-qubit register.
///
/// Qubit j is bit j of the basis index (qubit 0 is least significant), so
/// the ket |q2 q1 q0> = |101> is index 5.
class QuantumState {
   public:
    /// |x> on n qubits. Throws std::out_of_range when x >= 2^n and
    /// std::length_error when n exceeds `max_qubits`.
    static QuantumState basis(unsigned num_qubits, uint64_t x, unsigned max_qubits = kDefaultMaxQubits);

    /// Wraps an amplitude vector whose length must be a power of two and
    /// whose squared norm must be 1 within 1e-9.
    static QuantumState from_amplitudes(std::vector<Amplitude> amplitudes);

    unsigned num_qubits() const {
        return num_qubits_;
    }
    uint64_t dimension() const {
        return amplitudes_.size();
    }
    std::span<const Amplitude> amplitudes() const {
        return amplitudes_;
    }
    const Amplitude &operator[](uint64_t x) const {
        return amplitudes_[x];
    }

    void apply_single(const Gate2 &g, unsigned target);
    /// Applies g to `target` inside the subspace where every control is 1.
    /// An empty control list degenerates to apply_single.
    void apply_controlled(const Gate2 &g, std::span<const unsigned> controls, unsigned target);
    /// Applies a 4x4 gate. Sub-index 0..3 is bit(qa) + 2*bit(qb).
    void apply_two_qubit(const Gate4 &g, unsigned qa, unsigned qb);
    /// Moves the amplitude at x to perm(x). Exact, no arithmetic.
    void apply_permutation(const BasisPermutation &perm);
    /// Permutes the sub-index formed by `qubits` (bit i = qubits[i]),
    /// leaving every other qubit untouched.
    void apply_permutation(const BasisPermutation &perm, std::span<const unsigned> qubits);

    std::vector<double> probabilities() const;
    double norm_squared() const;

    MeasurementOutcome measure_all(Rng &rng);
    /// Samples the marginal on `qubits`, then projects onto the outcome.
    MeasurementOutcome measure_subregister(std::span<const unsigned> qubits, Rng &rng);

    /// Projects onto `qubits` reading `value` and renormalizes. Returns the
    /// pre-projection probability; throws std::domain_error if it is zero.
    double project_subregister(std::span<const unsigned> qubits, uint64_t value);

    /// Marginal distribution of `qubits`, indexed like MeasurementOutcome::value.
    std::vector<double> marginal(std::span<const unsigned> qubits) const;

   private:
    QuantumState(unsigned num_qubits, std::vector<Amplitude> amplitudes)
        : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    }

    void check_qubit(unsigned q) const;

    unsigned num_qubits_;
    std::vector<Amplitude> amplitudes_;
};

/// <s1|s2>.
Amplitude inner_product(const QuantumState &s1, const QuantumState &s2);

/// Bytes needed for a dense register of the given width.
uint64_t state_bytes(unsigned num_qubits);

/// Index of the outcome selected by a uniform draw u in [0, 1) walking the
/// cumulative distribution. Zero-probability entries are never selected.
uint64_t sample_index(std::span<const double> probabilities, double u);

/// One uniform draw in [0, 1) with 53 random bits.
double uniform_unit(Rng &rng);

}  // namespace qshor

#endif
