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

#ifndef QSHOR_TRANSCRIPT_H
#define QSHOR_TRANSCRIPT_H

#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <string>

#include "qshor/shor.h"

// Machine-readable outputs. CSV files have a header row, comma separators,
// decimals with 12 significant digits, and a trailing newline.

namespace qshor {

std::string format_decimal(double v);

/// "index,probability" rows for every basis index.
void write_probability_csv(std::ostream &out, std::span<const double> probabilities);

/// "outcome,count" rows in increasing outcome order.
void write_histogram_csv(std::ostream &out, const std::map<uint64_t, uint64_t> &counts);

/// One row per run: run,a,n,y,f_outcome,convergents,candidate_r,status.
/// Convergents are written as p/q separated by ';'. Missing values are empty.
void write_transcript_csv(std::ostream &out, const FactoringResult &result);

/// The same data as a JSON document.
std::string transcript_json(uint64_t modulus, const FactoringResult &result);

}  // namespace qshor

#endif
