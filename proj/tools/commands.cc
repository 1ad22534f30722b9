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

#include "commands.h"

#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "qshor/acceptance.h"
#include "qshor/circuit.h"
#include "qshor/qft.h"
#include "qshor/shor.h"
#include "qshor/transcript.h"

namespace qshor::cli {

namespace {

struct FactorArgs {
    uint64_t n = 0;
    uint64_t seed = 0;
    std::string mode = "full";
    std::optional<uint64_t> base;
    unsigned max_runs = 20;
    std::optional<unsigned> qubits;
    std::string transcript;
};

struct DemoArgs {
    unsigned n = 6;
    uint64_t x0 = 0;
    uint64_t r = 1;
    std::string stage = "after";
    std::string out;
};

struct CircuitArgs {
    std::string file;
    uint64_t init = 0;
    uint64_t shots = 1000;
    uint64_t seed = 0;
};

bool ends_with(const std::string &s, const std::string &suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

int cmd_factor(const FactorArgs &a, std::ostream &out, std::ostream &err) {
    auto mode = parse_mode(a.mode);
    if (!mode) {
        err << "unknown mode '" << a.mode << "' (expected full, hybrid or classical)\n";
        return kExitInvalidInput;
    }
    ShorConfig cfg;
    cfg.n = a.n;
    cfg.seed = a.seed;
    cfg.mode = *mode;
    cfg.base = a.base;
    cfg.max_runs = a.max_runs;
    cfg.qubits = a.qubits;
    FactoringResult result = run_shor(cfg);

    if (!a.transcript.empty()) {
        std::ofstream file(a.transcript, std::ios::binary);
        if (!file) {
            err << "cannot write transcript " << a.transcript << "\n";
            return kExitInvalidInput;
        }
        if (ends_with(a.transcript, ".json")) {
            file << transcript_json(a.n, result);
        } else {
            write_transcript_csv(file, result);
        }
    }
    if (!result.factors) {
        err << "failed to factor " << a.n << " after " << result.runs.size() << " runs\n";
        return kExitAlgorithmFailure;
    }
    out << a.n << " = " << result.factors->first << " x " << result.factors->second << "\n";
    return kExitOk;
}

int cmd_qft_demo(const DemoArgs &a, std::ostream &out, std::ostream &err) {
    if (a.stage != "before" && a.stage != "after") {
        err << "--stage must be 'before' or 'after'\n";
        return kExitInvalidInput;
    }
    QuantumState s = build_period_state(a.n, a.x0, a.r);
    if (a.stage == "after") {
        apply_qft(s);
    }
    auto probs = s.probabilities();
    if (a.out.empty()) {
        write_probability_csv(out, probs);
        return kExitOk;
    }
    std::ofstream file(a.out, std::ios::binary);
    if (!file) {
        err << "cannot write " << a.out << "\n";
        return kExitInvalidInput;
    }
    write_probability_csv(file, probs);
    return kExitOk;
}

int cmd_circuit_run(const CircuitArgs &a, std::ostream &out, std::ostream &err) {
    std::ifstream file(a.file, std::ios::binary);
    if (!file) {
        err << "cannot read " << a.file << "\n";
        return kExitInvalidInput;
    }
    std::stringstream text;
    text << file.rdbuf();
    Circuit circuit = parse_circuit(text.str());
    if (circuit.width() == 0) {
        err << "circuit has no qubits; add a 'qubits <n>' header\n";
        return kExitInvalidInput;
    }
    if (circuit.width() < 64 && a.init >= (uint64_t{1} << circuit.width())) {
        err << "--init " << a.init << " does not fit in " << circuit.width() << " qubits\n";
        return kExitInvalidInput;
    }
    // The circuit is deterministic, so re-preparing per shot is a copy of
    // the pre-measurement state.
    const QuantumState prepared = circuit.run(QuantumState::basis(circuit.width(), a.init));
    Rng rng(a.seed);
    std::map<uint64_t, uint64_t> counts;
    for (uint64_t shot = 0; shot < a.shots; shot++) {
        QuantumState s = prepared;
        counts[s.measure_all(rng).value]++;
    }
    write_histogram_csv(out, counts);
    return kExitOk;
}

// Nudges the first controlled-phase angle of the QFT ladder.
Circuit corrupted_qft(unsigned n) {
    Circuit good = qft_circuit(n);
    Circuit bad(good.width());
    bool done = false;
    for (GateOp op : good.ops()) {
        if (!done && op.name == GateName::kPhase && !op.controls.empty()) {
            op.angle += 0.05;
            done = true;
        }
        bad.append(std::move(op));
    }
    return bad;
}

int cmd_selftest(bool corrupt, std::ostream &out) {
    AcceptanceOptions opt;
    if (corrupt) {
        opt.qft_builder = corrupted_qft;
    }
    auto results = run_acceptance(opt);
    print_acceptance_table(out, results);
    return all_passed(results) ? kExitOk : kExitAlgorithmFailure;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Desk-scale quantum circuit simulator and Shor factoring driver", "qshor"};
    app.require_subcommand(1);

    FactorArgs fa;
    auto *factor = app.add_subcommand("factor", "Factor N with the period-finding pipeline");
    factor->add_option("N", fa.n, "Integer to factor (>= 3)")->required();
    factor->add_option("--seed", fa.seed, "RNG seed");
    factor->add_option("--mode", fa.mode, "full | hybrid | classical");
    factor->add_option("--base", fa.base, "Force the base a");
    factor->add_option("--max-runs", fa.max_runs, "Quantum runs before giving up");
    factor->add_option("--qubits", fa.qubits, "Input register width (default: smallest n with 2^n >= N^2)");
    factor->add_option("--transcript", fa.transcript, "Write per-run transcript (.json for JSON, else CSV)");

    DemoArgs da;
    auto *demo = app.add_subcommand("qft-demo", "Probability table of a periodic state before or after the QFT");
    demo->add_option("--n", da.n, "Register width")->required();
    demo->add_option("--x0", da.x0, "Offset, 0 <= x0 < r");
    demo->add_option("--r", da.r, "Period")->required();
    demo->add_option("--stage", da.stage, "before | after");
    demo->add_option("--out", da.out, "CSV path (default: stdout)");

    CircuitArgs ca;
    auto *circuit = app.add_subcommand("circuit", "Circuit-file tools");
    circuit->require_subcommand(1);
    auto *circuit_run = circuit->add_subcommand("run", "Run a circuit file and histogram measurement outcomes");
    circuit_run->add_option("file", ca.file, "Circuit text file")->required();
    circuit_run->add_option("--init", ca.init, "Initial basis state");
    circuit_run->add_option("--shots", ca.shots, "Measurement shots");
    circuit_run->add_option("--seed", ca.seed, "RNG seed");

    bool corrupt = false;
    auto *selftest = app.add_subcommand("selftest", "Run the acceptance suite");
    // Hidden: empty group.
    selftest->add_flag("--corrupt-qft-angle", corrupt)->group("");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (factor->parsed()) {
            return cmd_factor(fa, out, err);
        }
        if (demo->parsed()) {
            return cmd_qft_demo(da, out, err);
        }
        if (circuit_run->parsed()) {
            return cmd_circuit_run(ca, out, err);
        }
        if (selftest->parsed()) {
            return cmd_selftest(corrupt, out);
        }
    } catch (const std::exception &e) {
        err << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}

}  // namespace qshor::cli
