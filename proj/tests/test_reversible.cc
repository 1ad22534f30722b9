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
#include <set>

#include "qshor/number_theory.h"
#include "qshor/reversible.h"

namespace qshor {
namespace {

// Oracle reading |x, y> as x | y << in.
uint64_t ket(uint64_t x, uint64_t y, unsigned in) {
    return x | (y << in);
}

TEST(XorOracle, ZeroFunctionIsIdentity) {
    auto p = xor_oracle({3, 2, [](uint64_t) { return 0; }});
    EXPECT_EQ(p, BasisPermutation::identity(5));
}

TEST(XorOracle, IdentityOnOneBitIsCnot) {
    auto p = xor_oracle({1, 1, [](uint64_t x) { return x; }});
    // Control qubit 0, target qubit 1.
    EXPECT_EQ(p, BasisPermutation(2, {0, 3, 2, 1}));
}

TEST(XorOracle, Modexp) {
    auto p = xor_oracle(modexp_function(2, 15, 4, 4));
    EXPECT_EQ(p(ket(3, 0, 4)), ket(3, 8, 4));
    EXPECT_EQ(p(ket(3, 8, 4)), ket(3, 0, 4));
}

TEST(XorOracle, Involution) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 50; trial++) {
        unsigned in = 1 + trial % 4, out = 1 + trial % 3;
        std::vector<uint64_t> table(uint64_t{1} << in);
        for (auto &v : table) {
            v = rng() % (uint64_t{1} << out);
        }
        auto p = xor_oracle({in, out, [&](uint64_t x) { return table[x]; }});
        EXPECT_EQ(p.then(p), BasisPermutation::identity(in + out));
    }
}

TEST(XorOracle, RejectsOversizedOutput) {
    EXPECT_THROW(xor_oracle({2, 1, [](uint64_t x) { return x; }}), std::invalid_argument);
}

TEST(ModexpFunction, Examples) {
    auto f = modexp_function(2, 15, 4, 4);
    std::vector<uint64_t> got;
    for (uint64_t x = 0; x <= 4; x++) {
        got.push_back(f.eval(x));
    }
    EXPECT_EQ(got, (std::vector<uint64_t>{1, 2, 4, 8, 1}));
    auto one = modexp_function(1, 21, 5, 5);
    for (uint64_t x = 0; x < 32; x++) {
        EXPECT_EQ(one.eval(x), 1u);
    }
    EXPECT_EQ(modexp_function(8, 37, 7, 6).eval(65), 23u);
}

TEST(ModexpOracle, Validates) {
    EXPECT_THROW(modexp_oracle(3, 15, 4, 4), std::invalid_argument);
    EXPECT_THROW(modexp_oracle(2, 15, 4, 3), std::invalid_argument);
}

TEST(ComputeCopyUncompute, AndWithGarbage) {
    Circuit cf(3);
    cf.append(GateOp::ccnot(0, 1, 2));
    Circuit c = compute_copy_uncompute(cf, 2, {2});
    ASSERT_EQ(c.width(), 4u);
    for (uint64_t a = 0; a < 2; a++) {
        for (uint64_t b = 0; b < 2; b++) {
            uint64_t in = a | (b << 1);
            EXPECT_EQ(run_classical(c, in), in | ((a & b) << 3));
        }
    }
}

TEST(ComputeCopyUncompute, EmptyComputeIsCopyFan) {
    Circuit cf(2);
    Circuit c = compute_copy_uncompute(cf, 2, {0, 1});
    ASSERT_EQ(c.gate_count(), 2u);
    EXPECT_EQ(c.ops()[0], GateOp::cnot(0, 2));
    EXPECT_EQ(c.ops()[1], GateOp::cnot(1, 3));
}

TEST(ComputeCopyUncompute, RandomNetworksLeaveWorkClean) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 100; trial++) {
        Circuit cf(6);
        for (int g = 0; g < 20; g++) {
            std::vector<unsigned> q = {0, 1, 2, 3, 4, 5};
            std::shuffle(q.begin(), q.end(), rng);
            switch (rng() % 3) {
                case 0:
                    cf.append(GateOp::x(q[0]));
                    break;
                case 1:
                    cf.append(GateOp::cnot(q[0], q[1]));
                    break;
                default:
                    cf.append(GateOp::ccnot(q[0], q[1], q[2]));
            }
        }
        Circuit c = compute_copy_uncompute(cf, 3, {4});
        for (uint64_t x = 0; x < 8; x++) {
            uint64_t f = (run_classical(cf, x) >> 4) & 1;
            uint64_t y = run_classical(c, x);
            EXPECT_EQ(y & 0x3F, x) << "work register not restored";
            EXPECT_EQ(y >> 6, f);
        }
    }
}

TEST(ComputeCopyUncompute, MatchesXorOracleExhaustively) {
    // Every function {0,1}^k -> {0,1} for k <= 3, built as an oracle, then
    // scrambled so the input is garbage; the wrapper must equal the plain
    // XOR oracle with clean work qubits.
    for (unsigned in = 1; in <= 3; in++) {
        for (uint64_t table = 0; table < (uint64_t{1} << (1u << in)); table++) {
            ReversibleFunction f{in, 1, [table](uint64_t x) { return (table >> x) & 1; }};
            Circuit cf(in + 1);
            std::vector<unsigned> reg(in + 1);
            for (unsigned i = 0; i <= in; i++) {
                reg[i] = i;
            }
            cf.append(GateOp::permute(std::make_shared<const BasisPermutation>(xor_oracle(f)), reg));
            cf.append(GateOp::cnot(in, 0));
            Circuit c = compute_copy_uncompute(cf, in, {in});
            auto oracle = xor_oracle(f);
            for (uint64_t x = 0; x < (uint64_t{1} << in); x++) {
                for (uint64_t y = 0; y < 2; y++) {
                    // Oracle index x | y << in; wrapper puts y above the work.
                    uint64_t o = oracle(x | (y << in));
                    uint64_t w = run_classical(c, x | (y << (in + 1)));
                    EXPECT_EQ(w, (o & ((uint64_t{1} << in) - 1)) | ((o >> in) << (in + 1)));
                }
            }
        }
    }
}

TEST(ComputeCopyUncompute, RejectsNonBasisCompute) {
    Circuit cf(2);
    cf.append(GateOp::h(1));
    EXPECT_THROW(compute_copy_uncompute(cf, 1, {1}), std::invalid_argument);
}

TEST(MultiAnd, TwoInputsIsOneToffoli) {
    Circuit c = multi_and_circuit(2);
    ASSERT_EQ(c.gate_count(), 1u);
    EXPECT_EQ(c.ops()[0], GateOp::ccnot(0, 1, 2));
}

TEST(MultiAnd, ExhaustiveSmall) {
    for (unsigned k = 2; k <= 5; k++) {
        Circuit c = multi_and_circuit(k);
        const unsigned result = 2 * k - 2;
        ASSERT_EQ(c.width(), result + 1);
        for (uint64_t x = 0; x < (uint64_t{1} << k); x++) {
            uint64_t all = x == (uint64_t{1} << k) - 1 ? 1 : 0;
            EXPECT_EQ(run_classical(c, x), x | (all << result)) << "k=" << k << " x=" << x;
        }
    }
    // Input 1110 (qubit 0 clear).
    EXPECT_EQ(run_classical(multi_and_circuit(4), 0b1110) >> 6, 0u);
    EXPECT_EQ(run_classical(multi_and_circuit(3), 0b111), 0b111u | (1u << 4));
}

TEST(RunClassical, RejectsQuantumGates) {
    Circuit c(1);
    c.append(GateOp::h(0));
    EXPECT_THROW(run_classical(c, 0), std::invalid_argument);
}

TEST(GarbageNecessity, JointMapIsNotPeriodic) {
    const unsigned in = 8, out = 4;
    auto f = modexp_function(2, 15, in, out);
    auto joint = modexp_with_garbage(2, 15, in, out);
    bool f_periodic = true, joint_periodic = true;
    for (uint64_t x = 0; x + 4 < 256; x++) {
        f_periodic &= f.eval(x) == f.eval(x + 4);
        joint_periodic &= joint.eval(x) == joint.eval(x + 4);
        EXPECT_EQ(joint.eval(x) & 0xF, f.eval(x));
    }
    EXPECT_TRUE(f_periodic);
    EXPECT_FALSE(joint_periodic);
}

TEST(GarbageNecessity, JointMapIsInjective) {
    auto joint = modexp_with_garbage(2, 15, 6, 4);
    std::set<uint64_t> seen;
    for (uint64_t x = 0; x < 64; x++) {
        seen.insert(joint.eval(x));
    }
    EXPECT_EQ(seen.size(), 64u);
}

}  // namespace
}  // namespace qshor
