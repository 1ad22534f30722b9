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

#include "qshor/number_theory.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace qshor {

using u128 = unsigned __int128;

uint64_t gcd(uint64_t a, uint64_t b) {
    if (a == 0 && b == 0) {
        throw std::invalid_argument("gcd(0, 0) is undefined");
    }
    while (b != 0) {
        uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

uint64_t lcm(uint64_t a, uint64_t b) {
    if (a == 0 || b == 0) {
        return 0;
    }
    u128 v = static_cast<u128>(a / gcd(a, b)) * b;
    return v > std::numeric_limits<uint64_t>::max() ? std::numeric_limits<uint64_t>::max() : static_cast<uint64_t>(v);
}

BezoutResult extended_gcd(uint64_t m, uint64_t n) {
    if (m == 0 || n == 0) {
        throw std::invalid_argument("extended_gcd needs positive arguments");
    }
    // Invariant: r_i = s_i * m + t_i * n.
    __int128 r0 = m, r1 = n;
    __int128 s0 = 1, s1 = 0;
    __int128 t0 = 0, t1 = 1;
    while (r1 != 0) {
        __int128 q = r0 / r1;
        __int128 tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = s0 - q * s1;
        s0 = s1;
        s1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    // g = s0*m + t0*n. Shift s0 into [0, n) and keep the identity.
    __int128 nn = n;
    __int128 shift = s0 >= 0 ? s0 / nn : -((-s0 + nn - 1) / nn);
    s0 -= shift * nn;
    t0 += shift * static_cast<__int128>(m);
    return BezoutResult{static_cast<uint64_t>(r0), static_cast<uint64_t>(s0), static_cast<int64_t>(-t0)};
}

std::optional<uint64_t> mod_inverse(uint64_t m, uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("modulus must be positive");
    }
    if (n == 1) {
        return 0;
    }
    uint64_t reduced = m % n;
    if (reduced == 0) {
        return std::nullopt;
    }
    auto b = extended_gcd(reduced, n);
    if (b.g != 1) {
        return std::nullopt;
    }
    return b.m_prime;
}

uint64_t mod_mul(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<u128>(a) * b % m);
}

uint64_t mod_pow(uint64_t a, uint64_t e, uint64_t m) {
    if (m == 0) {
        throw std::invalid_argument("modulus must be positive");
    }
    uint64_t result = 1 % m;
    uint64_t base = a % m;
    while (e > 0) {
        if (e & 1) {
            result = mod_mul(result, base, m);
        }
        base = mod_mul(base, base, m);
        e >>= 1;
    }
    return result;
}

uint64_t multiplicative_order(uint64_t a, uint64_t n) {
    if (n < 2) {
        throw std::invalid_argument("order needs a modulus >= 2");
    }
    if (gcd(a, n) != 1) {
        throw std::invalid_argument(
            std::to_string(a) + " is not coprime to " + std::to_string(n) + "; it has no multiplicative order");
    }
    uint64_t x = a % n;
    uint64_t r = 1;
    while (x != 1) {
        x = mod_mul(x, a, n);
        r++;
    }
    return r;
}

std::vector<Convergent> continued_fraction_convergents(uint64_t num, uint64_t den) {
    if (den == 0) {
        throw std::invalid_argument("continued fraction of x/0");
    }
    if (num > den) {
        throw std::invalid_argument("continued fraction expects num <= den");
    }
    std::vector<Convergent> out{{0, 1}};
    if (num == 0) {
        return out;
    }
    // num/den = [0; a1, a2, ...]. h_{-1}=1, h_{-2}=0; k_{-1}=0, k_{-2}=1.
    uint64_t h_prev = 1, h = 0;
    uint64_t k_prev = 0, k = 1;
    uint64_t x = den, y = num;  // continue with den/num after the leading 0
    while (y != 0) {
        uint64_t a = x / y;
        uint64_t rem = x % y;
        uint64_t h_next = a * h + h_prev;
        uint64_t k_next = a * k + k_prev;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
        out.push_back({h, k});
        x = y;
        y = rem;
    }
    return out;
}

std::optional<PeriodCandidate> recover_period(uint64_t y, uint64_t m, uint64_t n, uint64_t a) {
    if (y >= m) {
        throw std::invalid_argument("measured value must be below 2^n");
    }
    if (gcd(a, n) != 1) {
        throw std::invalid_argument("base is not coprime to the modulus");
    }
    if (y == 0) {
        return std::nullopt;
    }
    const auto convergents = continued_fraction_convergents(y, m);
    // Plain denominators first, then the j*q rescue for k sharing a factor with r.
    for (uint64_t j = 1; j <= 8; j++) {
        for (const Convergent &c : convergents) {
            if (c.p == 0 || c.q >= n || j * c.q >= n) {
                continue;
            }
            if (mod_pow(a, j * c.q, n) == 1) {
                return PeriodCandidate{reduce_to_order(a, j * c.q, n), c, true};
            }
        }
    }
    return std::nullopt;
}

bool is_probable_prime(uint64_t n) {
    if (n < 2) {
        return false;
    }
    static constexpr uint64_t kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (uint64_t p : kSmall) {
        if (n % p == 0) {
            return n == p;
        }
    }
    uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        s++;
    }
    // The first twelve primes are a deterministic witness set for every n < 3.1e23.
    for (uint64_t w : kSmall) {
        uint64_t x = mod_pow(w, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool composite = true;
        for (unsigned i = 1; i < s; i++) {
            x = mod_mul(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

uint64_t integer_root(uint64_t n, unsigned k) {
    if (k == 0) {
        throw std::invalid_argument("zeroth root");
    }
    if (k == 1 || n < 2) {
        return n;
    }
    auto pow_exceeds = [&](uint64_t b) {
        u128 acc = 1;
        for (unsigned i = 0; i < k; i++) {
            acc *= b;
            if (acc > n) {
                return true;
            }
        }
        return false;
    };
    uint64_t guess = static_cast<uint64_t>(std::pow(static_cast<double>(n), 1.0 / k));
    while (guess > 0 && pow_exceeds(guess)) {
        guess--;
    }
    while (!pow_exceeds(guess + 1)) {
        guess++;
    }
    return guess;
}

std::optional<std::pair<uint64_t, unsigned>> perfect_power(uint64_t n) {
    if (n < 4) {
        return std::nullopt;
    }
    for (unsigned k = 63; k >= 2; k--) {
        uint64_t b = integer_root(n, k);
        if (b < 2) {
            continue;
        }
        u128 acc = 1;
        for (unsigned i = 0; i < k; i++) {
            acc *= b;
        }
        if (acc == n) {
            return std::make_pair(b, k);
        }
    }
    return std::nullopt;
}

std::optional<std::pair<uint64_t, uint64_t>> factor_from_period(uint64_t a, uint64_t r, uint64_t n) {
    if (r == 0 || mod_pow(a, r, n) != 1) {
        throw std::invalid_argument("r = " + std::to_string(r) + " is not a verified period of " + std::to_string(a));
    }
    if (r % 2 != 0) {
        return std::nullopt;
    }
    uint64_t half = mod_pow(a, r / 2, n);
    if (half == n - 1) {
        return std::nullopt;
    }
    uint64_t f1 = gcd((half + n - 1) % n, n);
    uint64_t f2 = gcd((half + 1) % n, n);
    if (f1 <= 1 || f1 >= n || f2 <= 1 || f2 >= n) {
        return std::nullopt;
    }
    return std::make_pair(std::min(f1, f2), std::max(f1, f2));
}

uint64_t reduce_to_order(uint64_t a, uint64_t multiple, uint64_t n) {
    if (multiple == 0 || mod_pow(a, multiple, n) != 1) {
        throw std::invalid_argument("not a multiple of the order");
    }
    uint64_t r = multiple;
    auto strip = [&](uint64_t p) {
        while (r % p == 0 && mod_pow(a, r / p, n) == 1) {
            r /= p;
        }
    };
    uint64_t rest = multiple;
    for (uint64_t p = 2; p * p <= rest; p++) {
        if (rest % p == 0) {
            while (rest % p == 0) {
                rest /= p;
            }
            strip(p);
        }
    }
    if (rest > 1) {
        strip(rest);
    }
    return r;
}

}  // namespace qshor
