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

#include "qshor/reversible.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qshor/number_theory.h"

namespace qshor {

BasisPermutation xor_oracle(const ReversibleFunction &f) {
    const unsigned in = f.input_width;
    const unsigned out = f.output_width;
    if (in + out >= 40) {
        throw std::invalid_argument("oracle register too wide");
    }
    const uint64_t in_mask = (uint64_t{1} << in) - 1;
    const uint64_t out_limit = uint64_t{1} << out;
    std::vector<uint64_t> fx(uint64_t{1} << in);
    for (uint64_t x = 0; x < fx.size(); x++) {
        fx[x] = f.eval(x);
        if (fx[x] >= out_limit) {
            throw std::invalid_argument(
                "f(" + std::to_string(x) + ") = " + std::to_string(fx[x]) + " does not fit in " + std::to_string(out) +
                " bits");
        }
    }
    std::vector<uint64_t> image(uint64_t{1} << (in + out));
    for (uint64_t i = 0; i < image.size(); i++) {
        uint64_t x = i & in_mask;
        image[i] = i ^ (fx[x] << in);
    }
    return BasisPermutation(in + out, std::move(image), "xor_oracle");
}

ReversibleFunction modexp_function(uint64_t a, uint64_t n, unsigned in_width, unsigned out_width) {
    if (n == 0) {
        throw std::invalid_argument("modulus must be positive");
    }
    return ReversibleFunction{in_width, out_width, [a, n](uint64_t x) { return mod_pow(a, x, n); }};
}

BasisPermutation modexp_oracle(uint64_t a, uint64_t n, unsigned in_width, unsigned out_width) {
    if (n < 2 || gcd(a, n) != 1) {
        throw std::invalid_argument(
            "base " + std::to_string(a) + " is not coprime to " + std::to_string(n));
    }
    if (out_width >= 63 || (uint64_t{1} << out_width) < n) {
        throw std::invalid_argument(
            "output register of " + std::to_string(out_width) + " bits cannot hold residues mod " + std::to_string(n));
    }
    BasisPermutation perm = xor_oracle(modexp_function(a, n, in_width, out_width));
    return BasisPermutation(
        perm.num_bits(), std::vector<uint64_t>(perm.image().begin(), perm.image().end()),
        "modexp(" + std::to_string(a) + "," + std::to_string(n) + ")");
}

Circuit compute_copy_uncompute(const Circuit &compute, unsigned x_width, const std::vector<unsigned> &f_qubits) {
    const unsigned w = compute.width();
    if (x_width > w) {
        throw std::invalid_argument("input register wider than the compute circuit");
    }
    for (unsigned q : f_qubits) {
        if (q >= w) {
            throw std::invalid_argument("f qubit " + std::to_string(q) + " outside the compute circuit");
        }
    }
    if (w > 24) {
        throw std::invalid_argument("compute circuit too wide to verify exhaustively");
    }

    // Every |x, 0> must land on a single basis state.
    for (uint64_t x = 0; x < (uint64_t{1} << x_width); x++) {
        QuantumState s = QuantumState::basis(w, x);
        compute.run(s);
        uint64_t peak = 0;
        for (uint64_t i = 1; i < s.dimension(); i++) {
            if (std::norm(s[i]) > std::norm(s[peak])) {
                peak = i;
            }
        }
        if (std::abs(std::norm(s[peak]) - 1) > 1e-12) {
            throw std::invalid_argument(
                "compute circuit sends basis input " + std::to_string(x) + " to a superposition");
        }
    }

    Circuit out(w + static_cast<unsigned>(f_qubits.size()));
    out.extend(compute);
    for (size_t i = 0; i < f_qubits.size(); i++) {
        out.append(GateOp::cnot(f_qubits[i], w + static_cast<unsigned>(i)));
    }
    out.extend(compute.inverse());
    return out;
}

Circuit multi_and_circuit(unsigned k) {
    if (k < 2) {
        throw std::invalid_argument("AND needs at least 2 inputs");
    }
    const unsigned result = 2 * k - 2;
    Circuit c(2 * k - 1);
    if (k == 2) {
        c.append(GateOp::ccnot(0, 1, result));
        return c;
    }
    // Ancilla k+j holds the AND of inputs 0..j+1.
    Circuit chain(2 * k - 1);
    chain.append(GateOp::ccnot(0, 1, k));
    for (unsigned i = 2; i + 1 < k; i++) {
        chain.append(GateOp::ccnot(i, k + i - 2, k + i - 1));
    }
    c.extend(chain);
    c.append(GateOp::ccnot(k - 1, 2 * k - 3, result));
    c.extend(chain.inverse());
    return c;
}

uint64_t run_classical(const Circuit &c, uint64_t x) {
    for (const GateOp &op : c.ops()) {
        if (op.name == GateName::kX) {
            bool fire = true;
            for (unsigned q : op.controls) {
                fire = fire && ((x >> q) & 1);
            }
            if (fire) {
                x ^= uint64_t{1} << op.targets[0];
            }
        } else if (op.name == GateName::kPermutation) {
            uint64_t sub = 0;
            uint64_t mask = 0;
            for (size_t i = 0; i < op.targets.size(); i++) {
                sub |= ((x >> op.targets[i]) & 1) << i;
                mask |= uint64_t{1} << op.targets[i];
            }
            uint64_t moved = (*op.permutation)(sub);
            x &= ~mask;
            for (size_t i = 0; i < op.targets.size(); i++) {
                x |= ((moved >> i) & 1) << op.targets[i];
            }
        } else {
            throw std::invalid_argument("circuit contains a non-classical gate");
        }
    }
    return x;
}

ReversibleFunction modexp_with_garbage(uint64_t a, uint64_t n, unsigned in_width, unsigned out_width) {
    if (n == 0) {
        throw std::invalid_argument("modulus must be positive");
    }
    // Garbage layout: the exponent bits, then each running product
    // a^(x mod 2^i) for i = 1 .. in_width-1.
    const unsigned garbage_width = in_width + (in_width > 0 ? (in_width - 1) * out_width : 0);
    if (out_width + garbage_width >= 64) {
        throw std::invalid_argument("garbage register too wide");
    }
    return ReversibleFunction{
        in_width, out_width + garbage_width, [a, n, in_width, out_width](uint64_t x) {
            uint64_t acc = 1 % n;
            uint64_t garbage = x;
            unsigned shift = in_width;
            uint64_t square = a % n;
            for (unsigned i = 0; i < in_width; i++) {
                if ((x >> i) & 1) {
                    acc = mod_mul(acc, square, n);
                }
                square = mod_mul(square, square, n);
                if (i + 1 < in_width) {
                    garbage |= acc << shift;
                    shift += out_width;
                }
            }
            return acc | (garbage << out_width);
        }};
}

}  // namespace qshor
