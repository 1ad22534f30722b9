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

#ifndef QSHOR_ACCEPTANCE_H
#define QSHOR_ACCEPTANCE_H

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "qshor/circuit.h"

// The desk-scale acceptance suite shared by the test binary and
// `qshor selftest`.

namespace qshor {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct AcceptanceOptions {
    /// Builds the n-qubit QFT circuit checked by the peak-height and oracle
    /// criteria. Swappable so a fault can be injected.
    std::function<Circuit(unsigned)> qft_builder;
};

/// Fixed seeds for the end-to-end full-simulation factoring check.
struct DocumentedSeed {
    uint64_t n;
    uint64_t seed;
    uint64_t p;
    uint64_t q;
};
const std::vector<DocumentedSeed> &documented_factoring_seeds();

/// Reference line lengths (576 * P(y), one decimal) of the post-QFT period state with
/// n = 6, x0 = 4, r = 7, for y = 0..63.
const std::vector<double> &reference_peak_profile();

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions &options = {});

/// One line per criterion plus a summary line.
void print_acceptance_table(std::ostream &out, const std::vector<CriterionResult> &results);

bool all_passed(const std::vector<CriterionResult> &results);

}  // namespace qshor

#endif
