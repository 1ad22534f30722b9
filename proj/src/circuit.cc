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

#include "qshor/circuit.h"

#include <algorithm>
#include <array>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace qshor {

namespace {

std::string format_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void append_matrix(std::string &out, const Amplitude *begin, size_t count) {
    for (size_t k = 0; k < count; k++) {
        out += ' ';
        out += format_real(begin[k].real());
        out += ' ';
        out += format_real(begin[k].imag());
    }
}

}  // namespace

// ---- GateOp ----

GateOp GateOp::h(unsigned q) {
    GateOp op;
    op.name = GateName::kH;
    op.targets = {q};
    return op;
}

GateOp GateOp::x(unsigned q) {
    GateOp op;
    op.name = GateName::kX;
    op.targets = {q};
    return op;
}

GateOp GateOp::phase(unsigned q, double radians) {
    GateOp op;
    op.name = GateName::kPhase;
    op.targets = {q};
    op.angle = radians;
    // Validates finiteness.
    (void)phase_shift(radians);
    return op;
}

GateOp GateOp::cnot(unsigned control, unsigned target) {
    GateOp op = x(target);
    op.controls = {control};
    return op;
}

GateOp GateOp::ccnot(unsigned c1, unsigned c2, unsigned target) {
    GateOp op = x(target);
    op.controls = {c1, c2};
    return op;
}

GateOp GateOp::cphase(unsigned control, unsigned target, double radians) {
    GateOp op = phase(target, radians);
    op.controls = {control};
    return op;
}

GateOp GateOp::mcx(std::vector<unsigned> controls, unsigned target) {
    GateOp op = x(target);
    op.controls = std::move(controls);
    return op;
}

GateOp GateOp::unitary2(unsigned q, const Gate2 &g, std::vector<unsigned> controls) {
    GateOp op;
    op.name = GateName::kU2;
    op.targets = {q};
    op.controls = std::move(controls);
    op.u2 = g;
    return op;
}

GateOp GateOp::unitary4(unsigned qa, unsigned qb, const Gate4 &g) {
    GateOp op;
    op.name = GateName::kU4;
    op.targets = {qa, qb};
    op.u4 = g;
    return op;
}

GateOp GateOp::permute(std::shared_ptr<const BasisPermutation> perm, std::vector<unsigned> qubits) {
    if (!perm) {
        throw std::invalid_argument("null permutation");
    }
    if (perm->num_bits() != qubits.size()) {
        throw std::invalid_argument("permutation width does not match the number of qubits");
    }
    GateOp op;
    op.name = GateName::kPermutation;
    op.targets = std::move(qubits);
    op.permutation = std::move(perm);
    return op;
}

OpKind GateOp::kind() const {
    switch (name) {
        case GateName::kU4:
            return OpKind::kTwoQubit;
        case GateName::kPermutation:
            return OpKind::kPermutation;
        default:
            return controls.empty() ? OpKind::kSingle : OpKind::kControlled;
    }
}

Gate2 GateOp::payload2() const {
    switch (name) {
        case GateName::kH:
            return hadamard();
        case GateName::kX:
            return not_gate();
        case GateName::kPhase:
            return phase_shift(angle);
        case GateName::kU2:
            return *u2;
        default:
            throw std::logic_error("op has no 2x2 payload");
    }
}

GateOp GateOp::inverse() const {
    GateOp inv = *this;
    switch (name) {
        case GateName::kH:
        case GateName::kX:
            break;
        case GateName::kPhase:
            inv.angle = -angle;
            break;
        case GateName::kU2:
            inv.u2 = adjoint(*u2);
            break;
        case GateName::kU4:
            inv.u4 = adjoint(*u4);
            break;
        case GateName::kPermutation:
            inv.permutation = std::make_shared<const BasisPermutation>(permutation->inverse());
            break;
    }
    return inv;
}

void GateOp::apply(QuantumState &state) const {
    switch (kind()) {
        case OpKind::kSingle:
            state.apply_single(payload2(), targets[0]);
            break;
        case OpKind::kControlled:
            state.apply_controlled(payload2(), controls, targets[0]);
            break;
        case OpKind::kTwoQubit:
            state.apply_two_qubit(*u4, targets[0], targets[1]);
            break;
        case OpKind::kPermutation:
            state.apply_permutation(*permutation, targets);
            break;
    }
}

unsigned GateOp::max_qubit() const {
    unsigned m = 0;
    for (unsigned q : targets) {
        m = std::max(m, q);
    }
    for (unsigned q : controls) {
        m = std::max(m, q);
    }
    return m;
}

bool GateOp::operator==(const GateOp &other) const {
    if (name != other.name || controls != other.controls || targets != other.targets || angle != other.angle ||
        u2 != other.u2 || u4 != other.u4) {
        return false;
    }
    if (permutation == other.permutation) {
        return true;
    }
    return permutation && other.permutation && *permutation == *other.permutation;
}

// ---- Circuit ----

Circuit &Circuit::append(GateOp op) {
    if (op.targets.empty()) {
        throw std::invalid_argument("gate op has no target");
    }
    uint64_t seen = 0;
    auto check = [&](unsigned q) {
        if (q >= width_) {
            throw std::invalid_argument(
                "qubit " + std::to_string(q) + " out of range for a " + std::to_string(width_) + "-qubit circuit");
        }
        if (seen & (uint64_t{1} << q)) {
            throw std::invalid_argument("qubit " + std::to_string(q) + " used twice in one gate");
        }
        seen |= uint64_t{1} << q;
    };
    for (unsigned q : op.controls) {
        check(q);
    }
    for (unsigned q : op.targets) {
        check(q);
    }
    ops_.push_back(std::move(op));
    return *this;
}

Circuit &Circuit::extend(const Circuit &other) {
    for (const auto &op : other.ops_) {
        append(op);
    }
    return *this;
}

void Circuit::run(QuantumState &state) const {
    if (state.num_qubits() != width_) {
        throw std::invalid_argument(
            "circuit width " + std::to_string(width_) + " does not match a " + std::to_string(state.num_qubits()) +
            "-qubit state");
    }
    for (const auto &op : ops_) {
        op.apply(state);
    }
}

QuantumState Circuit::run(QuantumState &&state) const {
    run(state);
    return std::move(state);
}

Circuit Circuit::inverse() const {
    Circuit out(width_);
    out.ops_.reserve(ops_.size());
    for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
        out.ops_.push_back(it->inverse());
    }
    return out;
}

std::string Circuit::serialize() const {
    std::string out = "qubits " + std::to_string(width_) + "\n";
    for (const auto &op : ops_) {
        auto q = [](unsigned v) { return " " + std::to_string(v); };
        const size_t nc = op.controls.size();
        switch (op.name) {
            case GateName::kH:
                if (nc != 0) {
                    throw std::invalid_argument("controlled H has no text form");
                }
                out += "H" + q(op.targets[0]);
                break;
            case GateName::kX:
                if (nc == 0) {
                    out += "X" + q(op.targets[0]);
                } else if (nc == 1) {
                    out += "CNOT" + q(op.controls[0]) + q(op.targets[0]);
                } else if (nc == 2) {
                    out += "CCNOT" + q(op.controls[0]) + q(op.controls[1]) + q(op.targets[0]);
                } else {
                    throw std::invalid_argument("NOT with more than two controls has no text form");
                }
                break;
            case GateName::kPhase:
                if (nc == 0) {
                    out += "PHASE" + q(op.targets[0]) + " " + format_real(op.angle);
                } else if (nc == 1) {
                    out += "CPHASE" + q(op.controls[0]) + q(op.targets[0]) + " " + format_real(op.angle);
                } else {
                    throw std::invalid_argument("multi-controlled phase has no text form");
                }
                break;
            case GateName::kU2:
                if (nc != 0) {
                    throw std::invalid_argument("controlled U2 has no text form");
                }
                out += "U2" + q(op.targets[0]);
                append_matrix(out, op.u2->matrix().data(), 4);
                break;
            case GateName::kU4:
                out += "U4" + q(op.targets[0]) + q(op.targets[1]);
                append_matrix(out, op.u4->matrix().data(), 16);
                break;
            case GateName::kPermutation:
                throw std::invalid_argument("permutation ops have no text form");
        }
        out += '\n';
    }
    return out;
}

// ---- parsing ----

namespace {

struct LineParser {
    size_t line_no;
    std::vector<std::string> tokens;

    [[noreturn]] void fail(const std::string &reason) const {
        throw ParseError(line_no, reason);
    }

    unsigned qubit(size_t i) const {
        const std::string &t = tokens[i];
        if (t.empty() || t.size() > 9 || !std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            fail("bad qubit index '" + t + "'");
        }
        return static_cast<unsigned>(std::stoul(t));
    }

    double real(size_t i) const {
        const std::string &t = tokens[i];
        char *end = nullptr;
        errno = 0;
        double v = std::strtod(t.c_str(), &end);
        if (t.empty() || end != t.c_str() + t.size() || errno == ERANGE || !std::isfinite(v)) {
            fail("bad number '" + t + "'");
        }
        return v;
    }

    void expect_args(size_t qubits, size_t reals) const {
        size_t have = tokens.size() - 1;
        if (have < qubits) {
            fail("expected " + std::to_string(qubits) + " qubit argument" + (qubits == 1 ? "" : "s"));
        }
        if (have != qubits + reals) {
            if (reals == 0) {
                fail("expected " + std::to_string(qubits) + " qubit argument" + (qubits == 1 ? "" : "s"));
            }
            fail(
                "expected " + std::to_string(qubits) + " qubit argument" + (qubits == 1 ? "" : "s") + " and " +
                std::to_string(reals) + " real" + (reals == 1 ? "" : "s"));
        }
    }

    template <size_t N>
    std::array<Amplitude, N> matrix(size_t first) const {
        std::array<Amplitude, N> m{};
        for (size_t k = 0; k < N; k++) {
            m[k] = Amplitude(real(first + 2 * k), real(first + 2 * k + 1));
        }
        return m;
    }
};

}  // namespace

Circuit parse_circuit(std::string_view text) {
    std::optional<unsigned> declared_width;
    std::vector<std::pair<size_t, GateOp>> ops;

    size_t line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        line_no++;

        if (auto hash = raw.find('#'); hash != std::string_view::npos) {
            raw = raw.substr(0, hash);
        }
        LineParser p{line_no, {}};
        std::istringstream in{std::string(raw)};
        for (std::string tok; in >> tok;) {
            p.tokens.push_back(tok);
        }
        if (p.tokens.empty()) {
            continue;
        }

        const std::string &name = p.tokens[0];
        try {
            if (name == "qubits") {
                if (declared_width || !ops.empty()) {
                    p.fail("'qubits' header must come once, before any gate");
                }
                if (p.tokens.size() != 2) {
                    p.fail("expected 'qubits <n>'");
                }
                declared_width = p.qubit(1);
                if (*declared_width > 62) {
                    p.fail("too many qubits");
                }
                continue;
            }
            GateOp op;
            if (name == "H") {
                p.expect_args(1, 0);
                op = GateOp::h(p.qubit(1));
            } else if (name == "X") {
                p.expect_args(1, 0);
                op = GateOp::x(p.qubit(1));
            } else if (name == "PHASE") {
                p.expect_args(1, 1);
                op = GateOp::phase(p.qubit(1), p.real(2));
            } else if (name == "CNOT") {
                p.expect_args(2, 0);
                op = GateOp::cnot(p.qubit(1), p.qubit(2));
            } else if (name == "CCNOT") {
                p.expect_args(3, 0);
                op = GateOp::ccnot(p.qubit(1), p.qubit(2), p.qubit(3));
            } else if (name == "CPHASE") {
                p.expect_args(2, 1);
                op = GateOp::cphase(p.qubit(1), p.qubit(2), p.real(3));
            } else if (name == "U2") {
                p.expect_args(1, 8);
                op = GateOp::unitary2(p.qubit(1), Gate2(p.matrix<4>(2)));
            } else if (name == "U4") {
                p.expect_args(2, 32);
                op = GateOp::unitary4(p.qubit(1), p.qubit(2), Gate4(p.matrix<16>(3)));
            } else {
                p.fail("unknown gate '" + name + "'");
            }
            ops.emplace_back(line_no, std::move(op));
        } catch (const ParseError &) {
            throw;
        } catch (const std::exception &e) {
            p.fail(e.what());
        }
    }

    unsigned width = 0;
    if (declared_width) {
        width = *declared_width;
    } else {
        for (const auto &[ln, op] : ops) {
            width = std::max(width, op.max_qubit() + 1);
        }
    }
    Circuit c(width);
    for (auto &[ln, op] : ops) {
        try {
            c.append(std::move(op));
        } catch (const std::exception &e) {
            throw ParseError(ln, e.what());
        }
    }
    return c;
}

}  // namespace qshor
