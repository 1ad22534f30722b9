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

#include <gtest/gtest.h>

#include <random>

#include "qshor/number_theory.h"

namespace qshor {
namespace {

uint64_t naive_pow(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t acc = 1 % m;
    for (uint64_t i = 0; i < e; i++) {
        acc = acc * (a % m) % m;
    }
    return acc;
}

bool trial_division_prime(uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (uint64_t d = 2; d * d <= n; d++) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

std::vector<std::pair<uint64_t, uint64_t>> as_pairs(const std::vector<Convergent> &cs) {
    std::vector<std::pair<uint64_t, uint64_t>> out;
    for (auto c : cs) {
        out.emplace_back(c.p, c.q);
    }
    return out;
}

TEST(Gcd, Examples) {
    EXPECT_EQ(gcd(12, 18), 6u);
    EXPECT_EQ(gcd(7, 15), 1u);
    EXPECT_EQ(gcd(12827, 101), 101u);
    EXPECT_EQ(gcd(0, 9), 9u);
    EXPECT_THROW(gcd(0, 0), std::invalid_argument);
}

TEST(ExtendedGcd, BezoutRelation) {
    auto b = extended_gcd(3, 7);
    EXPECT_EQ(b.g, 1u);
    EXPECT_EQ(b.m_prime, 5u);
    EXPECT_EQ(static_cast<int64_t>(b.m_prime * 3), b.k * 7 + 1);
    EXPECT_EQ(mod_inverse(3, 7), 5u);
    EXPECT_FALSE(mod_inverse(2, 4).has_value());
    EXPECT_EQ(extended_gcd(2, 4).g, 2u);
}

TEST(ExtendedGcd, InverseByExhaustiveSearch) {
    for (uint64_t n = 2; n <= 60; n++) {
        for (uint64_t m = 1; m < n; m++) {
            std::optional<uint64_t> brute;
            for (uint64_t c = 0; c < n && !brute; c++) {
                if (c * m % n == 1) {
                    brute = c;
                }
            }
            EXPECT_EQ(mod_inverse(m, n), brute) << m << " mod " << n;
        }
    }
}

TEST(ExtendedGcd, RandomCoprimePairs) {
    std::mt19937_64 rng(1);
    int checked = 0;
    while (checked < 1000) {
        uint64_t n = 2 + rng() % 1000000007ULL;
        uint64_t m = 1 + rng() % (n - 1);
        if (gcd(m, n) != 1) {
            continue;
        }
        auto b = extended_gcd(m, n);
        EXPECT_EQ(mod_mul(b.m_prime, m, n), 1u);
        checked++;
    }
}

TEST(ModPow, Examples) {
    EXPECT_EQ(mod_pow(8, 65, 37), 23u);
    EXPECT_EQ(naive_pow(8, 65, 37), 23u);
    for (uint64_t m = 2; m < 50; m++) {
        EXPECT_EQ(mod_pow(m + 3, 0, m), 1u);
    }
    EXPECT_EQ(mod_pow(5, 3, 1), 0u);
}

TEST(ModPow, AgreesWithNaiveOracle) {
    for (uint64_t m = 1; m <= 200; m++) {
        for (uint64_t a = 0; a <= 200; a += 3) {
            for (uint64_t e = 0; e <= 200; e += 7) {
                ASSERT_EQ(mod_pow(a, e, m), naive_pow(a, e, m)) << a << "^" << e << " mod " << m;
            }
        }
    }
}

TEST(ModPow, LargeModulus) {
    // Fermat with a 61-bit prime exercises the 128-bit product.
    const uint64_t p = (uint64_t{1} << 61) - 1;
    EXPECT_EQ(mod_pow(3, p - 1, p), 1u);
    EXPECT_EQ(mod_mul(p - 1, p - 1, p), 1u);
}

TEST(Order, Examples) {
    EXPECT_EQ(multiplicative_order(2, 15), 4u);
    EXPECT_EQ(multiplicative_order(1, 21), 1u);
    EXPECT_EQ(multiplicative_order(7, 15), 4u);
    EXPECT_EQ(8 % multiplicative_order(7, 15), 0u);
    EXPECT_THROW(multiplicative_order(3, 15), std::invalid_argument);
}

TEST(Order, PeriodCharacterization) {
    for (uint64_t n = 2; n <= 100; n++) {
        for (uint64_t a = 1; a < n; a++) {
            if (gcd(a, n) != 1) {
                continue;
            }
            const uint64_t r = multiplicative_order(a, n);
            for (uint64_t x = 0; x < 3 * r; x++) {
                for (uint64_t y = 0; y < 3 * r; y++) {
                    bool same = mod_pow(a, x, n) == mod_pow(a, y, n);
                    bool divides = (x > y ? x - y : y - x) % r == 0;
                    ASSERT_EQ(same, divides) << "a=" << a << " n=" << n;
                }
            }
        }
    }
}

TEST(ContinuedFraction, Examples) {
    using P = std::vector<std::pair<uint64_t, uint64_t>>;
    EXPECT_EQ(as_pairs(continued_fraction_convergents(9, 64)), (P{{0, 1}, {1, 7}, {9, 64}}));
    EXPECT_EQ(as_pairs(continued_fraction_convergents(55, 64)), (P{{0, 1}, {1, 1}, {6, 7}, {55, 64}}));
    EXPECT_EQ(as_pairs(continued_fraction_convergents(1, 2)), (P{{0, 1}, {1, 2}}));
    EXPECT_EQ(as_pairs(continued_fraction_convergents(192, 256)), (P{{0, 1}, {1, 1}, {3, 4}}));
}

TEST(ContinuedFraction, BestApproximationBound) {
    for (uint64_t den : {64u, 256u, 1000u, 4096u}) {
        for (uint64_t num = 1; num < den; num++) {
            auto cs = continued_fraction_convergents(num, den);
            const double v = static_cast<double>(num) / static_cast<double>(den);
            for (auto c : cs) {
                double err = std::abs(v - static_cast<double>(c.p) / static_cast<double>(c.q));
                double q = static_cast<double>(c.q);
                EXPECT_TRUE(err == 0 || err < 1 / (q * q)) << num << "/" << den;
            }
            EXPECT_EQ(cs.back().p * den, cs.back().q * num);
            EXPECT_EQ(gcd(cs.back().p, cs.back().q), 1u);
        }
    }
}

TEST(RecoverPeriod, Examples) {
    auto c = recover_period(192, 256, 15, 2);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(c->r, 4u);
    EXPECT_EQ(c->source.p, 3u);
    EXPECT_EQ(c->source.q, 4u);
    EXPECT_TRUE(c->verified);
    EXPECT_FALSE(recover_period(0, 256, 15, 2).has_value());

    // An order-7 element: 2 has order 7 mod 127.
    ASSERT_EQ(multiplicative_order(2, 127), 7u);
    auto seven = recover_period(55, 64, 127, 2);
    ASSERT_TRUE(seven.has_value());
    EXPECT_EQ(seven->r, 7u);
    EXPECT_EQ(seven->source.q, 7u);
}

TEST(RecoverPeriod, MultipleOfDenominator) {
    // y/M = 1/2 for r = 4 gives q = 2; the doubled candidate is the order.
    auto c = recover_period(128, 256, 15, 2);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(c->r, 4u);
}

TEST(RecoverPeriod, Completeness) {
    for (uint64_t r = 2; r <= 20; r++) {
        uint64_t p = r + 1;
        while (!trial_division_prime(p) || (p - 1) % r != 0) {
            p++;
        }
        uint64_t a = 2;
        while (multiplicative_order(a, p) != r) {
            a++;
        }
        for (uint64_t m = r * r; m <= 4 * r * r + 7; m += r + 1) {
            for (uint64_t k = 1; k < r; k++) {
                if (gcd(k, r) != 1) {
                    continue;
                }
                uint64_t y = (2 * k * m + r) / (2 * r);
                auto c = recover_period(y, m, p, a);
                ASSERT_TRUE(c.has_value()) << "r=" << r << " k=" << k << " M=" << m;
                EXPECT_EQ(c->r, r) << "k=" << k << " M=" << m;
            }
        }
    }
}

TEST(Primality, Examples) {
    EXPECT_TRUE(is_probable_prime(101));
    EXPECT_TRUE(is_probable_prime(127));
    EXPECT_FALSE(is_probable_prime(12827));
    EXPECT_TRUE(is_probable_prime(2));
    EXPECT_FALSE(is_probable_prime(1));
    EXPECT_FALSE(is_probable_prime(0));
}

TEST(Primality, AgreesWithTrialDivision) {
    for (uint64_t n = 0; n < 20000; n++) {
        ASSERT_EQ(is_probable_prime(n), trial_division_prime(n)) << n;
    }
    // Strong pseudoprimes to several small bases.
    EXPECT_FALSE(is_probable_prime(3215031751ULL));
    EXPECT_FALSE(is_probable_prime(3825123056546413051ULL));
    EXPECT_TRUE(is_probable_prime(18446744073709551557ULL));
}

TEST(PerfectPower, Examples) {
    EXPECT_EQ(perfect_power(27), (std::pair<uint64_t, unsigned>{3, 3}));
    EXPECT_EQ(perfect_power(49)->first, 7u);
    EXPECT_FALSE(perfect_power(15).has_value());
    EXPECT_EQ(integer_root(1000000, 3), 100u);
    EXPECT_EQ(integer_root(999999, 3), 99u);
}

TEST(FactorFromPeriod, Examples) {
    EXPECT_EQ(factor_from_period(7, 4, 15), (std::pair<uint64_t, uint64_t>{3, 5}));
    EXPECT_EQ(factor_from_period(2, 4, 15), (std::pair<uint64_t, uint64_t>{3, 5}));
    // 4 has order 2 mod 15; 4^1 = 4, gcd(3, 15) = 3.
    EXPECT_EQ(factor_from_period(4, 2, 15), (std::pair<uint64_t, uint64_t>{3, 5}));
    // Odd order: 2 mod 7 has r = 3; use N = 21 where 4 has order 3.
    EXPECT_FALSE(factor_from_period(4, 3, 21).has_value());
    // Trivial root: 14 = -1 mod 15 has order 2.
    EXPECT_FALSE(factor_from_period(14, 2, 15).has_value());
    EXPECT_THROW(factor_from_period(2, 3, 15), std::invalid_argument);
}

TEST(FactorFromPeriod, ProductIsExact) {
    for (uint64_t n = 6; n <= 400; n++) {
        if (is_probable_prime(n) || n % 2 == 0) {
            continue;
        }
        for (uint64_t a = 2; a < n; a++) {
            if (gcd(a, n) != 1) {
                continue;
            }
            auto f = factor_from_period(a, multiplicative_order(a, n), n);
            if (f) {
                EXPECT_EQ(f->first * f->second, n);
                EXPECT_GT(f->first, 1u);
                EXPECT_LE(f->first, f->second);
            }
        }
    }
}

TEST(ReduceToOrder, StripsExtraFactors) {
    EXPECT_EQ(reduce_to_order(2, 12, 15), 4u);
    EXPECT_EQ(reduce_to_order(2, 4, 15), 4u);
    EXPECT_EQ(reduce_to_order(2, 7 * 64, 127), 7u);
}

TEST(Euler, SemiprimesUpToThousand) {
    for (uint64_t p = 2; p < 500; p++) {
        for (uint64_t q = p + 1; p * q <= 1000; q++) {
            if (!trial_division_prime(p) || !trial_division_prime(q)) {
                continue;
            }
            for (uint64_t a = 1; a < p * q; a++) {
                if (gcd(a, p * q) == 1) {
                    ASSERT_EQ(mod_pow(a, (p - 1) * (q - 1), p * q), 1u) << a << " " << p << "*" << q;
                }
            }
        }
    }
}

}  // namespace
}  // namespace qshor
