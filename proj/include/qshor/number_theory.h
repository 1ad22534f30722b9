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

#ifndef QSHOR_NUMBER_THEORY_H
#define QSHOR_NUMBER_THEORY_H

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

// Exact integer arithmetic for the oracle and the classical post-processing.
// Everything is unsigned 64-bit; modular products go through 128 bits.

namespace qshor {

/// Throws std::invalid_argument for gcd(0, 0).
uint64_t gcd(uint64_t a, uint64_t b);
/// Saturates at UINT64_MAX.
uint64_t lcm(uint64_t a, uint64_t b);

struct BezoutResult {
    uint64_t g;
    /// m' with m' * m = k * n + g, reduced into [0, n).
    uint64_t m_prime;
    /// The matching k (may be negative).
    int64_t k;
};

/// Extended Euclid. Requires m, n > 0.
BezoutResult extended_gcd(uint64_t m, uint64_t n);

/// Multiplicative inverse of m modulo n, or nullopt when gcd(m, n) != 1.
std::optional<uint64_t> mod_inverse(uint64_t m, uint64_t n);

uint64_t mod_mul(uint64_t a, uint64_t b, uint64_t m);

/// a^e mod m by square-and-multiply, reducing after every product.
/// Throws std::invalid_argument for m = 0.
uint64_t mod_pow(uint64_t a, uint64_t e, uint64_t m);

/// Least r >= 1 with a^r = 1 (mod n), by stepping through powers.
/// Throws std::invalid_argument unless gcd(a, n) = 1 and n >= 2.
uint64_t multiplicative_order(uint64_t a, uint64_t n);

struct Convergent {
    uint64_t p;
    uint64_t q;
    bool operator==(const Convergent &) const = default;
};

/// Convergents of num/den from the Euclid quotients, starting at 0/1 and
/// ending at num/den in lowest terms. Requires num <= den, den >= 1.
std::vector<Convergent> continued_fraction_convergents(uint64_t num, uint64_t den);

struct PeriodCandidate {
    uint64_t r;
    Convergent source;
    bool verified;
};

/// Looks for the order of a mod n in the convergents of y/m. Every
/// denominator q < n is tested with mod_pow, then the multiples j*q
/// (2 <= j <= 8, j*q < n). The first hit is reduced to the exact order.
std::optional<PeriodCandidate> recover_period(uint64_t y, uint64_t m, uint64_t n, uint64_t a);

/// Deterministic Miller-Rabin over all 64-bit inputs.
bool is_probable_prime(uint64_t n);

/// floor(n^(1/k)).
uint64_t integer_root(uint64_t n, unsigned k);

/// (b, k) with b^k = n and k >= 2 maximal, if n is a perfect power.
std::optional<std::pair<uint64_t, unsigned>> perfect_power(uint64_t n);

/// Nontrivial factors from an even period with a^(r/2) != -1 (mod n).
/// Returns nullopt for odd r or a trivial square root. Throws
/// std::invalid_argument if a^r != 1 (mod n).
std::optional<std::pair<uint64_t, uint64_t>> factor_from_period(uint64_t a, uint64_t r, uint64_t n);

/// Strips prime factors from a known multiple of the order while
/// a^r = 1 (mod n) still holds. Requires a^multiple = 1 (mod n).
uint64_t reduce_to_order(uint64_t a, uint64_t multiple, uint64_t n);

}  // namespace qshor

#endif
