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

#ifndef QSHOR_CIRCUIT_H
#define QSHOR_CIRCUIT_H

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qshor/gates.h"
#include "qshor/permutation.h"
#include "qshor/state.h"

namespace qshor {

enum class OpKind { kSingle, kControlled, kTwoQubit, kPermutation };

/// Which payload a GateOp carries. Named gates keep their identity so the
/// text format and inverse() can round-trip them exactly.
enum class GateName { kH, kX, kPhase, kU2, kU4, kPermutation };

/// One gate placement.
struct GateOp {
    GateName name = GateName::kH;
    std::vector<unsigned> controls;
    /// One qubit for 1-qubit payloads, (qa, qb) for U4, the permuted
    /// sub-register (bit i = targets[i]) for permutations.
    std::vector<unsigned> targets;
    /// Radians, for kPhase.
    double angle = 0;
    std::optional<Gate2> u2;
    std::optional<Gate4> u4;
    std::shared_ptr<const BasisPermutation> permutation;

    static GateOp h(unsigned q);
    static GateOp x(unsigned q);
    static GateOp phase(unsigned q, double radians);
    static GateOp cnot(unsigned control, unsigned target);
    static GateOp ccnot(unsigned c1, unsigned c2, unsigned target);
    static GateOp cphase(unsigned control, unsigned target, double radians);
    static GateOp mcx(std::vector<unsigned> controls, unsigned target);
    static GateOp unitary2(unsigned q, const Gate2 &g, std::vector<unsigned> controls = {});
    static GateOp unitary4(unsigned qa, unsigned qb, const Gate4 &g);
    static GateOp permute(std::shared_ptr<const BasisPermutation> perm, std::vector<unsigned> qubits);

    OpKind kind() const;
    /// The 2x2 matrix for every 1-qubit payload (H, X, PHASE, U2).
    Gate2 payload2() const;
    /// Conjugate-transposed payload with the same placement.
    GateOp inverse() const;
    void apply(QuantumState &state) const;
    /// Largest qubit index touched.
    unsigned max_qubit() const;

    bool operator==(const GateOp &other) const;
};

/// An ordered, purely unitary gate sequence. Measurements are driver-level
/// actions and never appear here, so inverse() is always defined.
class Circuit {
   public:
    explicit Circuit(unsigned width = 0) : width_(width) {
    }

    unsigned width() const {
        return width_;
    }
    const std::vector<GateOp> &ops() const {
        return ops_;
    }
    size_t gate_count() const {
        return ops_.size();
    }

    /// Throws std::invalid_argument if `op` touches a qubit >= width or
    /// reuses an index.
    Circuit &append(GateOp op);
    /// Appends every op of `other`, which must not be wider than this.
    Circuit &extend(const Circuit &other);

    void run(QuantumState &state) const;
    QuantumState run(QuantumState &&state) const;

    /// Reversed order, each payload inverted.
    Circuit inverse() const;

    /// Text form. Throws std::invalid_argument for permutation ops, which
    /// have no text representation.
    std::string serialize() const;

    bool operator==(const Circuit &other) const = default;

   private:
    unsigned width_;
    std::vector<GateOp> ops_;
};

/// Malformed circuit text. what() reads "line <n>: <reason>".
class ParseError : public std::runtime_error {
   public:
    ParseError(size_t line, const std::string &reason)
        : std::runtime_error("line " + std::to_string(line) + ": " + reason), line_(line) {
    }
    size_t line() const {
        return line_;
    }

   private:
    size_t line_;
};

/// Parses the line format:
///
///     qubits <n>                    optional header, must precede ops
///     H <q> | X <q> | PHASE <q> <radians>
///     CNOT <c> <t> | CCNOT <c1> <c2> <t> | CPHASE <c> <t> <radians>
///     U2 <q> <8 reals>              row-major (re, im) pairs
///     U4 <qa> <qb> <32 reals>       row-major (re, im) pairs
///     # comment
///
/// Without a header the width is one more than the largest index used.
Circuit parse_circuit(std::string_view text);

}  // namespace qshor

#endif
