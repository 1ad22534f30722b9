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

#include "qshor/shor.h"

#include <algorithm>
#include <bit>
#include <cmath>

#include "qshor/gates.h"
#include "qshor/permutation.h"
#include "qshor/qft.h"
#include "qshor/reversible.h"

namespace qshor {

const char *to_string(ShorMode mode) {
    switch (mode) {
        case ShorMode::kFull:
            return "full";
        case ShorMode::kHybrid:
            return "hybrid";
        case ShorMode::kClassical:
            return "classical";
    }
    return "?";
}

const char *to_string(RunStatus status) {
    switch (status) {
        case RunStatus::kPeriodFound:
            return "period-found";
        case RunStatus::kNoCandidate:
            return "no-candidate";
        case RunStatus::kOddPeriod:
            return "odd-period";
        case RunStatus::kTrivialRoot:
            return "trivial-root";
    }
    return "?";
}

const char *to_string(FactorMethod method) {
    switch (method) {
        case FactorMethod::kNone:
            return "none";
        case FactorMethod::kEven:
            return "even";
        case FactorMethod::kPerfectPower:
            return "perfect-power";
        case FactorMethod::kSharedFactor:
            return "shared-factor";
        case FactorMethod::kPeriod:
            return "period";
    }
    return "?";
}

std::optional<ShorMode> parse_mode(const std::string &text) {
    for (ShorMode m : {ShorMode::kFull, ShorMode::kHybrid, ShorMode::kClassical}) {
        if (text == to_string(m)) {
            return m;
        }
    }
    return std::nullopt;
}

unsigned choose_register_size(uint64_t n) {
    if (n < 3) {
        throw InvalidInput("register size needs N >= 3");
    }
    unsigned __int128 square = static_cast<unsigned __int128>(n) * n;
    unsigned bits = 0;
    while ((static_cast<unsigned __int128>(1) << bits) < square) {
        bits++;
    }
    return bits;
}

unsigned output_width(uint64_t n) {
    return static_cast<unsigned>(std::bit_width(n - 1));
}

QuantumState prepare_uniform(unsigned n, unsigned max_qubits) {
    QuantumState s = QuantumState::basis(n, 0, max_qubits);
    const Gate2 h = hadamard();
    for (unsigned q = 0; q < n; q++) {
        s.apply_single(h, q);
    }
    return s;
}

QuantumState build_period_state(unsigned n, uint64_t x0, uint64_t r) {
    if (r == 0) {
        throw std::invalid_argument("period must be positive");
    }
    if (n >= 40) {
        throw std::length_error("period register too wide");
    }
    const uint64_t dim = uint64_t{1} << n;
    if (x0 >= r || r > dim) {
        throw std::invalid_argument(
            "need 0 <= x0 < r <= 2^n, got x0=" + std::to_string(x0) + " r=" + std::to_string(r) + " n=" +
            std::to_string(n));
    }
    const uint64_t terms = (dim - 1 - x0) / r + 1;
    const double amp = 1 / std::sqrt(static_cast<double>(terms));
    std::vector<Amplitude> amps(dim, Amplitude{0, 0});
    for (uint64_t x = x0; x < dim; x += r) {
        amps[x] = amp;
    }
    return QuantumState::from_amplitudes(std::move(amps));
}

std::vector<unsigned> input_qubits(unsigned n) {
    std::vector<unsigned> q(n);
    for (unsigned i = 0; i < n; i++) {
        q[i] = i;
    }
    return q;
}

std::vector<unsigned> output_qubits(unsigned n, unsigned out_width) {
    std::vector<unsigned> q(out_width);
    for (unsigned i = 0; i < out_width; i++) {
        q[i] = n + i;
    }
    return q;
}

QuantumState prepare_oracle_state(uint64_t modulus, uint64_t a, unsigned n, unsigned max_qubits) {
    const unsigned out = output_width(modulus);
    QuantumState s = QuantumState::basis(n + out, 0, max_qubits);
    const Gate2 h = hadamard();
    for (unsigned q = 0; q < n; q++) {
        s.apply_single(h, q);
    }
    s.apply_permutation(modexp_oracle(a, modulus, n, out));
    return s;
}

namespace {

void finish_record(RunRecord &rec, uint64_t y, uint64_t modulus) {
    const uint64_t m = uint64_t{1} << rec.n;
    rec.y = y;
    rec.convergents = continued_fraction_convergents(y, m);
    if (auto cand = recover_period(y, m, modulus, rec.a)) {
        rec.candidate_r = cand->r;
        rec.status = RunStatus::kPeriodFound;
    } else {
        rec.status = RunStatus::kNoCandidate;
    }
}

}  // namespace

RunRecord run_once_full(uint64_t modulus, uint64_t a, unsigned n, Rng &rng, bool measure_output, unsigned max_qubits) {
    const unsigned out = output_width(modulus);
    RunRecord rec;
    rec.a = a;
    rec.n = n;
    rec.gate_count = n + 1 + qft_gate_count(n);

    QuantumState s = prepare_oracle_state(modulus, a, n, max_qubits);
    const auto in_q = input_qubits(n);
    if (measure_output) {
        const auto out_q = output_qubits(n, out);
        rec.f_outcome = s.measure_subregister(out_q, rng).value;
    }
    apply_qft_on(s, in_q);
    uint64_t y = s.measure_subregister(in_q, rng).value;
    finish_record(rec, y, modulus);
    return rec;
}

RunRecord run_once_hybrid(uint64_t modulus, uint64_t a, unsigned n, Rng &rng, unsigned max_qubits) {
    if (n > max_qubits) {
        throw std::length_error(
            std::to_string(n) + " qubits exceed the cap of " + std::to_string(max_qubits) + " (state vector would need " +
            std::to_string(state_bytes(n)) + " bytes)");
    }
    const uint64_t r = multiplicative_order(a, modulus);
    const uint64_t dim = uint64_t{1} << n;
    if (r > dim) {
        throw std::invalid_argument(
            "order " + std::to_string(r) + " does not fit a " + std::to_string(n) + "-qubit register");
    }
    RunRecord rec;
    rec.a = a;
    rec.n = n;
    rec.gate_count = n + 1 + qft_gate_count(n);

    // The output-register reading a^x0 occurs with probability equal to the
    // share of inputs x with x mod r = x0, i.e. x0 = (uniform x) mod r.
    const uint64_t x = n == 0 ? 0 : rng() >> (64 - n);
    const uint64_t x0 = x % r;
    rec.f_outcome = mod_pow(a, x0, modulus);

    QuantumState s = build_period_state(n, x0, r);
    apply_qft(s);
    uint64_t y = s.measure_all(rng).value;
    finish_record(rec, y, modulus);
    return rec;
}

std::vector<double> exact_y_distribution(uint64_t modulus, uint64_t a, unsigned n) {
    QuantumState s = prepare_oracle_state(modulus, a, n);
    const auto in_q = input_qubits(n);
    apply_qft_on(s, in_q);
    return s.marginal(in_q);
}

std::vector<double> conditioned_y_distribution(uint64_t modulus, uint64_t a, unsigned n, uint64_t f_value) {
    QuantumState s = prepare_oracle_state(modulus, a, n);
    const auto in_q = input_qubits(n);
    s.project_subregister(output_qubits(n, output_width(modulus)), f_value);
    apply_qft_on(s, in_q);
    return s.marginal(in_q);
}

namespace {

uint64_t draw_base(uint64_t n, Rng &rng) {
    return 2 + rng() % (n - 2);
}

}  // namespace

FactoringResult run_shor(const ShorConfig &config) {
    const uint64_t n = config.n;
    if (n < 3) {
        throw InvalidInput(std::to_string(n) + " is too small to factor (need N >= 3)");
    }
    if (config.max_runs < 1) {
        throw std::invalid_argument("max_runs must be at least 1");
    }
    FactoringResult result;
    if (n % 2 == 0) {
        result.factors = std::make_pair(uint64_t{2}, n / 2);
        result.method = FactorMethod::kEven;
        return result;
    }
    if (is_probable_prime(n)) {
        throw InvalidInput(std::to_string(n) + " is prime (deterministic Miller-Rabin check)");
    }
    if (auto pp = perfect_power(n)) {
        result.factors = std::make_pair(pp->first, n / pp->first);
        result.method = FactorMethod::kPerfectPower;
        return result;
    }
    if (config.base && (*config.base < 2 || *config.base >= n)) {
        throw InvalidInput("base must lie in [2, N-1]");
    }

    const unsigned reg = config.qubits ? *config.qubits : choose_register_size(n);
    if (reg == 0 || reg >= 40) {
        throw InvalidInput("input register width must be in [1, 39]");
    }
    Rng rng(config.seed);

    uint64_t a = 0;
    uint64_t combined = 1;
    auto select_base = [&]() -> bool {
        a = config.base ? *config.base : draw_base(n, rng);
        combined = 1;
        uint64_t g = gcd(a, n);
        if (g > 1) {
            result.factors = std::make_pair(std::min(g, n / g), std::max(g, n / g));
            result.method = FactorMethod::kSharedFactor;
            return true;
        }
        return false;
    };
    if (select_base()) {
        return result;
    }

    for (unsigned run = 0; run < config.max_runs; run++) {
        RunRecord rec;
        switch (config.mode) {
            case ShorMode::kFull:
                rec = run_once_full(n, a, reg, rng, config.measure_output, config.max_qubits);
                break;
            case ShorMode::kHybrid:
                rec = run_once_hybrid(n, a, reg, rng, config.max_qubits);
                break;
            case ShorMode::kClassical:
                rec.a = a;
                rec.n = reg;
                rec.candidate_r = multiplicative_order(a, n);
                rec.status = RunStatus::kPeriodFound;
                break;
        }

        // Cross-run combination: different k values give denominators that
        // are divisors of r; their lcm climbs toward r.
        if (rec.status == RunStatus::kNoCandidate) {
            for (auto it = rec.convergents.rbegin(); it != rec.convergents.rend(); ++it) {
                if (it->p != 0 && it->q < n) {
                    uint64_t next = lcm(combined, it->q);
                    combined = next < n ? next : it->q;
                    break;
                }
            }
            if (combined > 1 && mod_pow(a, combined, n) == 1) {
                rec.candidate_r = reduce_to_order(a, combined, n);
                rec.status = RunStatus::kPeriodFound;
            }
        }

        result.gate_estimate += rec.gate_count;
        if (rec.status != RunStatus::kPeriodFound) {
            result.runs.push_back(rec);
            continue;
        }

        const uint64_t r = *rec.candidate_r;
        auto factors = factor_from_period(a, r, n);
        if (factors) {
            result.runs.push_back(rec);
            result.factors = factors;
            result.method = FactorMethod::kPeriod;
            return result;
        }
        rec.status = r % 2 != 0 ? RunStatus::kOddPeriod : RunStatus::kTrivialRoot;
        result.runs.push_back(rec);
        if (config.base) {
            // The order of a forced base is fixed; more runs cannot help.
            break;
        }
        if (select_base()) {
            return result;
        }
    }
    return result;
}

}  // namespace qshor
