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

#include "qshor/state.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qshor/gates.h"
#include "qshor/permutation.h"

namespace qshor {

namespace {

uint64_t gather_bits(uint64_t x, std::span<const unsigned> qubits) {
    uint64_t v = 0;
    for (size_t i = 0; i < qubits.size(); i++) {
        v |= ((x >> qubits[i]) & 1) << i;
    }
    return v;
}

uint64_t subregister_mask(std::span<const unsigned> qubits) {
    uint64_t m = 0;
    for (unsigned q : qubits) {
        m |= uint64_t{1} << q;
    }
    return m;
}

uint64_t scatter_bits(uint64_t v, std::span<const unsigned> qubits) {
    uint64_t x = 0;
    for (size_t i = 0; i < qubits.size(); i++) {
        x |= ((v >> i) & 1) << qubits[i];
    }
    return x;
}

}  // namespace

// ---- BasisPermutation ----

BasisPermutation::BasisPermutation(unsigned num_bits, std::vector<uint64_t> image, std::string name)
    : num_bits_(num_bits), image_(std::move(image)), name_(std::move(name)) {
    if (num_bits >= 63 || image_.size() != (uint64_t{1} << num_bits)) {
        throw std::invalid_argument("permutation image must have length 2^" + std::to_string(num_bits));
    }
    std::vector<bool> hit(image_.size(), false);
    for (uint64_t x = 0; x < image_.size(); x++) {
        uint64_t y = image_[x];
        if (y >= image_.size() || hit[y]) {
            throw std::invalid_argument(
                "mapping is not a bijection: index " + std::to_string(x) + " maps to " + std::to_string(y));
        }
        hit[y] = true;
    }
}

BasisPermutation BasisPermutation::identity(unsigned num_bits) {
    return from_function(num_bits, [](uint64_t x) { return x; }, "identity");
}

BasisPermutation BasisPermutation::from_function(
    unsigned num_bits, const std::function<uint64_t(uint64_t)> &fn, std::string name) {
    if (num_bits >= 63) {
        throw std::invalid_argument("permutation too wide");
    }
    std::vector<uint64_t> image(uint64_t{1} << num_bits);
    for (uint64_t x = 0; x < image.size(); x++) {
        image[x] = fn(x);
    }
    return BasisPermutation(num_bits, std::move(image), std::move(name));
}

BasisPermutation BasisPermutation::inverse() const {
    std::vector<uint64_t> inv(image_.size());
    for (uint64_t x = 0; x < image_.size(); x++) {
        inv[image_[x]] = x;
    }
    std::string n = name_.empty() ? "" : name_ + "^-1";
    return BasisPermutation(num_bits_, std::move(inv), std::move(n));
}

BasisPermutation BasisPermutation::then(const BasisPermutation &other) const {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("composing permutations of different widths");
    }
    std::vector<uint64_t> out(image_.size());
    for (uint64_t x = 0; x < image_.size(); x++) {
        out[x] = other.image_[image_[x]];
    }
    return BasisPermutation(num_bits_, std::move(out));
}

// ---- QuantumState ----

uint64_t state_bytes(unsigned num_qubits) {
    if (num_qubits >= 60) {
        return UINT64_MAX;
    }
    return (uint64_t{1} << num_qubits) * sizeof(Amplitude);
}

QuantumState QuantumState::basis(unsigned num_qubits, uint64_t x, unsigned max_qubits) {
    if (num_qubits > max_qubits) {
        throw std::length_error(
            std::to_string(num_qubits) + " qubits exceed the cap of " + std::to_string(max_qubits) +
            " (state vector would need " + std::to_string(state_bytes(num_qubits)) + " bytes)");
    }
    uint64_t dim = uint64_t{1} << num_qubits;
    if (x >= dim) {
        throw std::out_of_range(
            "basis index " + std::to_string(x) + " out of range for " + std::to_string(num_qubits) + " qubits");
    }
    std::vector<Amplitude> amps(dim, Amplitude{0, 0});
    amps[x] = 1;
    return QuantumState(num_qubits, std::move(amps));
}

QuantumState QuantumState::from_amplitudes(std::vector<Amplitude> amplitudes) {
    if (amplitudes.empty() || !std::has_single_bit(amplitudes.size())) {
        throw std::invalid_argument("amplitude count must be a power of two");
    }
    double total = 0;
    for (const auto &a : amplitudes) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("amplitudes must be finite");
        }
        total += std::norm(a);
    }
    if (std::abs(total - 1) > 1e-9) {
        throw std::invalid_argument("amplitudes are not normalized (sum |a|^2 = " + std::to_string(total) + ")");
    }
    auto n = static_cast<unsigned>(std::countr_zero(amplitudes.size()));
    return QuantumState(n, std::move(amplitudes));
}

void QuantumState::check_qubit(unsigned q) const {
    if (q >= num_qubits_) {
        throw std::out_of_range(
            "qubit " + std::to_string(q) + " out of range for a " + std::to_string(num_qubits_) + "-qubit register");
    }
}

void QuantumState::apply_single(const Gate2 &g, unsigned target) {
    check_qubit(target);
    const uint64_t step = uint64_t{1} << target;
    const uint64_t dim = amplitudes_.size();
    const Amplitude g00 = g(0, 0), g01 = g(0, 1), g10 = g(1, 0), g11 = g(1, 1);
    for (uint64_t base = 0; base < dim; base += 2 * step) {
        for (uint64_t off = 0; off < step; off++) {
            Amplitude &a0 = amplitudes_[base + off];
            Amplitude &a1 = amplitudes_[base + off + step];
            Amplitude v0 = a0, v1 = a1;
            a0 = g00 * v0 + g01 * v1;
            a1 = g10 * v0 + g11 * v1;
        }
    }
}

void QuantumState::apply_controlled(const Gate2 &g, std::span<const unsigned> controls, unsigned target) {
    check_qubit(target);
    uint64_t control_mask = 0;
    for (unsigned c : controls) {
        check_qubit(c);
        if (c == target) {
            throw std::invalid_argument("control qubit " + std::to_string(c) + " equals the target");
        }
        uint64_t bit = uint64_t{1} << c;
        if (control_mask & bit) {
            throw std::invalid_argument("control qubit " + std::to_string(c) + " listed twice");
        }
        control_mask |= bit;
    }
    if (control_mask == 0) {
        apply_single(g, target);
        return;
    }
    const uint64_t step = uint64_t{1} << target;
    const uint64_t dim = amplitudes_.size();
    const Amplitude g00 = g(0, 0), g01 = g(0, 1), g10 = g(1, 0), g11 = g(1, 1);
    for (uint64_t base = 0; base < dim; base += 2 * step) {
        for (uint64_t off = 0; off < step; off++) {
            uint64_t i0 = base + off;
            if ((i0 & control_mask) != control_mask) {
                continue;
            }
            Amplitude &a0 = amplitudes_[i0];
            Amplitude &a1 = amplitudes_[i0 + step];
            Amplitude v0 = a0, v1 = a1;
            a0 = g00 * v0 + g01 * v1;
            a1 = g10 * v0 + g11 * v1;
        }
    }
}

void QuantumState::apply_two_qubit(const Gate4 &g, unsigned qa, unsigned qb) {
    check_qubit(qa);
    check_qubit(qb);
    if (qa == qb) {
        throw std::invalid_argument("two-qubit gate needs distinct qubits, got " + std::to_string(qa) + " twice");
    }
    const uint64_t sa = uint64_t{1} << qa;
    const uint64_t sb = uint64_t{1} << qb;
    const uint64_t dim = amplitudes_.size();
    for (uint64_t i = 0; i < dim; i++) {
        if (i & (sa | sb)) {
            continue;
        }
        const uint64_t idx[4] = {i, i | sa, i | sb, i | sa | sb};
        Amplitude v[4];
        for (int k = 0; k < 4; k++) {
            v[k] = amplitudes_[idx[k]];
        }
        for (size_t r = 0; r < 4; r++) {
            amplitudes_[idx[r]] = g(r, 0) * v[0] + g(r, 1) * v[1] + g(r, 2) * v[2] + g(r, 3) * v[3];
        }
    }
}

void QuantumState::apply_permutation(const BasisPermutation &perm) {
    if (perm.num_bits() != num_qubits_) {
        throw std::invalid_argument(
            "permutation on " + std::to_string(perm.num_bits()) + " bits applied to " + std::to_string(num_qubits_) +
            " qubits");
    }
    std::vector<Amplitude> out(amplitudes_.size());
    for (uint64_t x = 0; x < amplitudes_.size(); x++) {
        out[perm(x)] = amplitudes_[x];
    }
    amplitudes_ = std::move(out);
}

void QuantumState::apply_permutation(const BasisPermutation &perm, std::span<const unsigned> qubits) {
    if (perm.num_bits() != qubits.size()) {
        throw std::invalid_argument(
            "permutation on " + std::to_string(perm.num_bits()) + " bits applied to " +
            std::to_string(qubits.size()) + " qubits");
    }
    uint64_t mask = 0;
    for (unsigned q : qubits) {
        check_qubit(q);
        if (mask & (uint64_t{1} << q)) {
            throw std::invalid_argument("qubit " + std::to_string(q) + " listed twice");
        }
        mask |= uint64_t{1} << q;
    }
    std::vector<Amplitude> out(amplitudes_.size());
    for (uint64_t x = 0; x < amplitudes_.size(); x++) {
        uint64_t moved = perm(gather_bits(x, qubits));
        out[(x & ~mask) | scatter_bits(moved, qubits)] = amplitudes_[x];
    }
    amplitudes_ = std::move(out);
}

std::vector<double> QuantumState::probabilities() const {
    std::vector<double> p(amplitudes_.size());
    for (uint64_t x = 0; x < amplitudes_.size(); x++) {
        p[x] = std::norm(amplitudes_[x]);
    }
    return p;
}

double QuantumState::norm_squared() const {
    double total = 0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

double uniform_unit(Rng &rng) {
    return std::generate_canonical<double, 53>(rng);
}

uint64_t sample_index(std::span<const double> probabilities, double u) {
    double total = 0;
    for (double p : probabilities) {
        total += p;
    }
    double target = u * total;
    double acc = 0;
    uint64_t last_nonzero = 0;
    for (uint64_t x = 0; x < probabilities.size(); x++) {
        if (probabilities[x] <= 0) {
            continue;
        }
        last_nonzero = x;
        acc += probabilities[x];
        if (target < acc) {
            return x;
        }
    }
    // Rounding left the draw beyond the accumulated mass.
    return last_nonzero;
}

MeasurementOutcome QuantumState::measure_all(Rng &rng) {
    auto probs = probabilities();
    uint64_t x = sample_index(probs, uniform_unit(rng));
    MeasurementOutcome out{x, probs[x]};
    std::fill(amplitudes_.begin(), amplitudes_.end(), Amplitude{0, 0});
    amplitudes_[x] = 1;
    return out;
}

std::vector<double> QuantumState::marginal(std::span<const unsigned> qubits) const {
    uint64_t mask = 0;
    for (unsigned q : qubits) {
        check_qubit(q);
        if (mask & (uint64_t{1} << q)) {
            throw std::invalid_argument("qubit " + std::to_string(q) + " listed twice");
        }
        mask |= uint64_t{1} << q;
    }
    std::vector<double> p(uint64_t{1} << qubits.size(), 0.0);
    for (uint64_t x = 0; x < amplitudes_.size(); x++) {
        p[gather_bits(x, qubits)] += std::norm(amplitudes_[x]);
    }
    return p;
}

double QuantumState::project_subregister(std::span<const unsigned> qubits, uint64_t value) {
    for (unsigned q : qubits) {
        check_qubit(q);
    }
    if (qubits.size() < 64 && value >= (uint64_t{1} << qubits.size())) {
        throw std::out_of_range("projected value does not fit the measured qubits");
    }
    const uint64_t mask = subregister_mask(qubits);
    const uint64_t pattern = scatter_bits(value, qubits);
    double mass = 0;
    for (uint64_t x = 0; x < amplitudes_.size(); x++) {
        if ((x & mask) == pattern) {
            mass += std::norm(amplitudes_[x]);
        }
    }
    if (!(mass > 0)) {
        throw std::domain_error("projection onto a zero-probability outcome");
    }
    const double root = std::sqrt(mass);
    for (uint64_t x = 0; x < amplitudes_.size(); x++) {
        if ((x & mask) == pattern) {
            amplitudes_[x] /= root;
        } else {
            amplitudes_[x] = 0;
        }
    }
    return mass;
}

MeasurementOutcome QuantumState::measure_subregister(std::span<const unsigned> qubits, Rng &rng) {
    auto probs = marginal(qubits);
    uint64_t v = sample_index(probs, uniform_unit(rng));
    double mass = project_subregister(qubits, v);
    return MeasurementOutcome{v, mass};
}

Amplitude inner_product(const QuantumState &s1, const QuantumState &s2) {
    if (s1.num_qubits() != s2.num_qubits()) {
        throw std::invalid_argument(
            "inner product of " + std::to_string(s1.num_qubits()) + "- and " + std::to_string(s2.num_qubits()) +
            "-qubit states");
    }
    Amplitude acc = 0;
    for (uint64_t x = 0; x < s1.dimension(); x++) {
        acc += std::conj(s1[x]) * s2[x];
    }
    return acc;
}

}  // namespace qshor
