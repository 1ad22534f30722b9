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

#ifndef QSHOR_SHOR_H
#define QSHOR_SHOR_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qshor/number_theory.h"
#include "qshor/state.h"

// Period finding and factoring.
//
// Full-mode register layout: the input register x is qubits [0, n), the
// output register holding a^x mod N is qubits [n, n + out_width).

namespace qshor {

enum class ShorMode {
    /// Simulate the whole register: superposition, oracle, QFT, measurement.
    kFull,
    /// Build the collapsed input register directly from a classically
    /// computed order, then QFT and measure it. Needs only n qubits.
    kHybrid,
    /// No simulation. The order comes from multiplicative_order.
    kClassical,
};

enum class RunStatus { kPeriodFound, kNoCandidate, kOddPeriod, kTrivialRoot };

/// How the returned factors were obtained.
enum class FactorMethod { kNone, kEven, kPerfectPower, kSharedFactor, kPeriod };

const char *to_string(ShorMode mode);
const char *to_string(RunStatus status);
const char *to_string(FactorMethod method);
std::optional<ShorMode> parse_mode(const std::string &text);

struct ShorConfig {
    uint64_t n = 0;
    std::optional<uint64_t> base;
    /// Input register width; defaults to choose_register_size(n).
    std::optional<unsigned> qubits;
    unsigned max_runs = 20;
    uint64_t seed = 0;
    ShorMode mode = ShorMode::kFull;
    /// Measure the output register before the QFT.
    bool measure_output = true;
    unsigned max_qubits = kDefaultMaxQubits;
};

struct RunRecord {
    uint64_t a = 0;
    unsigned n = 0;
    std::optional<uint64_t> y;
    std::optional<uint64_t> f_outcome;
    std::vector<Convergent> convergents;
    std::optional<uint64_t> candidate_r;
    RunStatus status = RunStatus::kNoCandidate;
    /// Gates in this run: n Hadamards, one oracle, the QFT ladder.
    size_t gate_count = 0;
};

struct FactoringResult {
    std::optional<std::pair<uint64_t, uint64_t>> factors;
    FactorMethod method = FactorMethod::kNone;
    std::vector<RunRecord> runs;
    size_t gate_estimate = 0;
};

/// Raised for N < 3 or prime N.
class InvalidInput : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Smallest n with 2^n >= N^2.
unsigned choose_register_size(uint64_t n);

/// Bits needed to hold residues mod N.
unsigned output_width(uint64_t n);

/// H on every qubit of |0...0>.
QuantumState prepare_uniform(unsigned n, unsigned max_qubits = kDefaultMaxQubits);

/// Uniform superposition over {x0 + k r < 2^n}. Requires x0 < r <= 2^n.
QuantumState build_period_state(unsigned n, uint64_t x0, uint64_t r);

/// sum_x |x, a^x mod N> over n input qubits, before any measurement.
QuantumState prepare_oracle_state(uint64_t modulus, uint64_t a, unsigned n, unsigned max_qubits = kDefaultMaxQubits);

std::vector<unsigned> input_qubits(unsigned n);
std::vector<unsigned> output_qubits(unsigned n, unsigned out_width);

/// One pass of the full pipeline. Throws std::length_error if the
/// register exceeds max_qubits.
RunRecord run_once_full(
    uint64_t modulus, uint64_t a, unsigned n, Rng &rng, bool measure_output = true,
    unsigned max_qubits = kDefaultMaxQubits);

/// One pass with the collapsed state built directly.
RunRecord run_once_hybrid(uint64_t modulus, uint64_t a, unsigned n, Rng &rng, unsigned max_qubits = kDefaultMaxQubits);

/// Exact distribution of the measured y without sampling: marginal on the
/// input register after oracle and QFT (output register never measured).
std::vector<double> exact_y_distribution(uint64_t modulus, uint64_t a, unsigned n);

/// Exact distribution of y conditioned on the output register showing
/// `f_value`.
std::vector<double> conditioned_y_distribution(uint64_t modulus, uint64_t a, unsigned n, uint64_t f_value);

/// The whole factoring pipeline. Throws InvalidInput for N < 3, prime N,
/// or an invalid forced base.
FactoringResult run_shor(const ShorConfig &config);

}  // namespace qshor

#endif
