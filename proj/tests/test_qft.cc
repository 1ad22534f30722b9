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

#include <bit>
#include <cmath>
#include <map>
#include <numbers>

#include "qshor/acceptance.h"
#include "qshor/gates.h"
#include "qshor/qft.h"
#include "qshor/shor.h"
#include "test_util.h"

namespace qshor {
namespace {

using testing::max_deviation;
using testing::random_amplitudes;

std::vector<double> post_qft(unsigned n, uint64_t x0, uint64_t r) {
    auto s = build_period_state(n, x0, r);
    apply_qft(s);
    return s.probabilities();
}

// Independent oracle: |sum_k exp(2 pi i (x0 + k r) y / M)|^2 / (K M).
double closed_form(unsigned n, uint64_t x0, uint64_t r, uint64_t y) {
    const uint64_t m = uint64_t{1} << n;
    Amplitude acc = 0;
    uint64_t terms = 0;
    for (uint64_t x = x0; x < m; x += r, terms++) {
        acc += std::polar(1.0, 2 * std::numbers::pi * static_cast<double>((x * y) % m) / static_cast<double>(m));
    }
    return std::norm(acc) / static_cast<double>(terms * m);
}

TEST(DftReference, Examples) {
    auto one = dft_reference(std::vector<Amplitude>{1, 0});
    EXPECT_NEAR(std::abs(one[0] - 1 / std::numbers::sqrt2), 0, 1e-15);
    EXPECT_NEAR(std::abs(one[1] - 1 / std::numbers::sqrt2), 0, 1e-15);

    std::vector<Amplitude> zero(16), uniform(16, 0.25);
    zero[0] = 1;
    auto z = dft_reference(zero);
    for (auto a : z) {
        EXPECT_NEAR(std::abs(a - 0.25), 0, 1e-15);
    }
    auto u = dft_reference(uniform);
    EXPECT_NEAR(std::abs(u[0] - 1.0), 0, 1e-12);
    for (size_t i = 1; i < u.size(); i++) {
        EXPECT_NEAR(std::abs(u[i]), 0, 1e-12);
    }
}

TEST(DftReference, PositiveSign) {
    // |1> on n = 2 goes to (1, i, -1, -i) / 2.
    auto out = dft_reference(std::vector<Amplitude>{0, 1, 0, 0});
    EXPECT_NEAR(std::abs(out[1] - Amplitude(0, 0.5)), 0, 1e-15);
    EXPECT_NEAR(std::abs(out[3] - Amplitude(0, -0.5)), 0, 1e-15);
}

TEST(DftReference, RejectsNonPowerOfTwo) {
    EXPECT_THROW(dft_reference(std::vector<Amplitude>(3)), std::invalid_argument);
}

TEST(QftCircuit, SingleQubitIsHadamard) {
    Circuit c = qft_circuit(1);
    ASSERT_EQ(c.gate_count(), 1u);
    EXPECT_EQ(c.ops()[0], GateOp::h(0));
    for (uint64_t col = 0; col < 2; col++) {
        std::vector<Amplitude> e(2);
        e[col] = 1;
        auto ref = dft_reference(e);
        for (uint64_t row = 0; row < 2; row++) {
            EXPECT_NEAR(std::abs(hadamard()(row, col) - ref[row]), 0, 1e-15);
        }
    }
}

TEST(QftCircuit, MatchesReferenceOnRandomStates) {
    Rng rng(1);
    for (unsigned n = 1; n <= 8; n++) {
        Circuit c = qft_circuit(n);
        for (int trial = 0; trial < 100; trial++) {
            auto amps = random_amplitudes(n, rng);
            auto s = c.run(QuantumState::from_amplitudes(amps));
            EXPECT_LE(max_deviation(s.amplitudes(), dft_reference(amps)), 1e-10) << "n=" << n;
        }
    }
}

TEST(QftCircuit, GateCountFormula) {
    for (unsigned n = 1; n <= 20; n++) {
        EXPECT_EQ(qft_circuit(n).gate_count(), qft_gate_count(n));
        EXPECT_EQ(qft_gate_count(n), n * (n + 1) / 2 + 3 * (n / 2));
    }
    Circuit c = qft_circuit(6);
    size_t ladder = 0, cnots = 0;
    for (const auto &op : c.ops()) {
        bool is_cnot = op.name == GateName::kX && op.controls.size() == 1;
        (is_cnot ? cnots : ladder)++;
    }
    EXPECT_EQ(ladder, 21u);
    EXPECT_EQ(cnots, 9u);
}

TEST(QftCircuit, OffsetRegister) {
    // QFT on qubits [2, 5) of a 6-qubit register equals the reference on
    // that factor of a product state.
    Rng rng(2);
    auto low = random_amplitudes(2, rng), mid = random_amplitudes(3, rng), high = random_amplitudes(1, rng);
    std::vector<Amplitude> amps(64);
    for (uint64_t x = 0; x < 64; x++) {
        amps[x] = low[x & 3] * mid[(x >> 2) & 7] * high[x >> 5];
    }
    auto s = QuantumState::from_amplitudes(amps);
    std::vector<unsigned> q = {2, 3, 4};
    apply_qft_on(s, q);
    auto mid_ref = dft_reference(mid);
    for (uint64_t x = 0; x < 64; x++) {
        EXPECT_NEAR(std::abs(s[x] - low[x & 3] * mid_ref[(x >> 2) & 7] * high[x >> 5]), 0, 1e-12);
    }
    std::vector<unsigned> gap = {0, 2};
    EXPECT_THROW(apply_qft_on(s, gap), std::invalid_argument);
}

TEST(ApplyQft, Examples) {
    auto s = QuantumState::basis(5, 0);
    apply_qft(s);
    for (auto a : s.amplitudes()) {
        EXPECT_NEAR(std::abs(a - std::pow(2.0, -2.5)), 0, 1e-12);
    }
    EXPECT_NEAR(post_qft(6, 4, 7)[0], 81.0 / 576, 1e-12);
}

TEST(ApplyQft, OffsetOnlyChangesPhases) {
    for (uint64_t r : {3u, 5u, 7u, 12u}) {
        auto base = post_qft(6, 0, r);
        for (uint64_t x0 = 1; x0 < r; x0++) {
            auto p = post_qft(6, x0, r);
            // Same number of terms keeps the profile; pick x0 with equal counts.
            if ((64 - x0 + r - 1) / r != (64 + r - 1) / r) {
                continue;
            }
            for (size_t y = 0; y < p.size(); y++) {
                EXPECT_NEAR(p[y], base[y], 1e-12) << "r=" << r << " x0=" << x0 << " y=" << y;
            }
        }
    }
}

TEST(ApplyQft, OffsetInvarianceNeedsEqualTermCounts) {
    // 64 = 9 * 7 + 1: x0 = 0 has ten terms, x0 = 1..6 have nine.
    auto four = post_qft(6, 4, 7);
    for (uint64_t x0 : {1u, 2u, 6u}) {
        auto p = post_qft(6, x0, 7);
        for (size_t y = 0; y < 64; y++) {
            EXPECT_NEAR(p[y], four[y], 1e-12);
        }
    }
    EXPECT_GT(std::abs(post_qft(6, 0, 7)[0] - four[0]), 1e-3);
}

TEST(ApplyQft, Unitarity) {
    Rng rng(3);
    for (unsigned n = 1; n <= 10; n++) {
        auto s = QuantumState::from_amplitudes(random_amplitudes(n, rng));
        auto before = std::vector<Amplitude>(s.amplitudes().begin(), s.amplitudes().end());
        apply_qft(s);
        EXPECT_NEAR(s.norm_squared(), 1, 1e-12);
        qft_circuit(n).inverse().run(s);
        EXPECT_LE(max_deviation(s.amplitudes(), before), 1e-10);
    }
}

TEST(PeakProfile, AllSixtyFourLineLengths) {
    auto p = post_qft(6, 4, 7);
    const auto &expected = reference_peak_profile();
    ASSERT_EQ(expected.size(), 64u);
    for (uint64_t y = 0; y < 64; y++) {
        EXPECT_NEAR(576 * p[y], expected[y], 0.05) << "y=" << y;
        EXPECT_NEAR(p[y], closed_form(6, 4, 7, y), 1e-12) << "y=" << y;
    }
}

TEST(PeakProfile, EightPeaks) {
    auto p = post_qft(6, 4, 7);
    const std::map<uint64_t, double> peaks = {
        {0, 81.0}, {9, 75.9}, {18, 62.2}, {27, 43.7}, {28, 25.3}, {37, 43.7}, {46, 62.2}, {55, 75.9}};
    for (auto [y, len] : peaks) {
        EXPECT_NEAR(576 * p[y], len, 0.05) << "y=" << y;
    }
}

// Local maxima (cyclic, ignoring values below 1e-9 where only rounding
// noise lives) all sit within 1 of round(k 2^n / r).
TEST(PeakProfile, SpacingIsTwoToTheNOverR) {
    for (unsigned n = 4; n <= 9; n++) {
        const uint64_t m = uint64_t{1} << n;
        for (uint64_t r = 2; r <= 20 && r <= m; r++) {
            for (uint64_t x0 : {uint64_t{0}, r / 2, r - 1}) {
                auto p = post_qft(n, x0, r);
                for (uint64_t y = 0; y < m; y++) {
                    if (p[y] < 1e-9 || !(p[y] > p[(y + m - 1) % m] && p[y] >= p[(y + 1) % m])) {
                        continue;
                    }
                    uint64_t best = m;
                    for (uint64_t k = 0; k < r; k++) {
                        uint64_t c = static_cast<uint64_t>(std::llround(static_cast<double>(k * m) / r)) % m;
                        uint64_t d = y > c ? y - c : c - y;
                        best = std::min(best, std::min(d, m - d));
                    }
                    EXPECT_LE(best, 1u) << "n=" << n << " r=" << r << " x0=" << x0 << " y=" << y;
                }
            }
        }
    }
}

TEST(PeakProfile, WidthIsOrderOne) {
    for (uint64_t r = 1; r <= 16; r++) {
        const unsigned n = std::max(1u, 2 * static_cast<unsigned>(std::bit_width(r - 1)));
        const uint64_t m = uint64_t{1} << n;
        for (uint64_t x0 = 0; x0 < r; x0++) {
            auto p = post_qft(n, x0, r);
            std::vector<bool> near(m, false);
            for (uint64_t k = 0; k < r; k++) {
                int64_t c = std::llround(static_cast<double>(k * m) / r);
                for (int64_t d = -1; d <= 1; d++) {
                    near[static_cast<uint64_t>((c + d + static_cast<int64_t>(m)) % static_cast<int64_t>(m))] = true;
                }
            }
            double mass = 0;
            for (uint64_t y = 0; y < m; y++) {
                mass += near[y] ? p[y] : 0;
            }
            EXPECT_GE(mass, 0.5) << "r=" << r << " x0=" << x0;
        }
    }
}

}  // namespace
}  // namespace qshor
