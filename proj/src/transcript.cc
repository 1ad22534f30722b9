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

#include "qshor/transcript.h"

#include <cstdio>

#include "json.hpp"

namespace qshor {

std::string format_decimal(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_probability_csv(std::ostream &out, std::span<const double> probabilities) {
    out << "index,probability\n";
    for (size_t i = 0; i < probabilities.size(); i++) {
        out << i << ',' << format_decimal(probabilities[i]) << '\n';
    }
}

void write_histogram_csv(std::ostream &out, const std::map<uint64_t, uint64_t> &counts) {
    out << "outcome,count\n";
    for (const auto &[outcome, count] : counts) {
        out << outcome << ',' << count << '\n';
    }
}

namespace {

template <typename T>
std::string opt(const std::optional<T> &v) {
    return v ? std::to_string(*v) : "";
}

}  // namespace

void write_transcript_csv(std::ostream &out, const FactoringResult &result) {
    out << "run,a,n,y,f_outcome,convergents,candidate_r,status\n";
    for (size_t i = 0; i < result.runs.size(); i++) {
        const RunRecord &r = result.runs[i];
        std::string convergents;
        for (const Convergent &c : r.convergents) {
            if (!convergents.empty()) {
                convergents += ';';
            }
            convergents += std::to_string(c.p) + "/" + std::to_string(c.q);
        }
        out << i << ',' << r.a << ',' << r.n << ',' << opt(r.y) << ',' << opt(r.f_outcome) << ',' << convergents << ','
            << opt(r.candidate_r) << ',' << to_string(r.status) << '\n';
    }
}

std::string transcript_json(uint64_t modulus, const FactoringResult &result) {
    using nlohmann::json;
    json doc;
    doc["N"] = modulus;
    if (result.factors) {
        doc["factors"] = {result.factors->first, result.factors->second};
    } else {
        doc["factors"] = nullptr;
    }
    doc["method"] = to_string(result.method);
    doc["gate_estimate"] = result.gate_estimate;
    json runs = json::array();
    for (const RunRecord &r : result.runs) {
        json j;
        j["a"] = r.a;
        j["n"] = r.n;
        j["y"] = r.y ? json(*r.y) : json(nullptr);
        j["f_outcome"] = r.f_outcome ? json(*r.f_outcome) : json(nullptr);
        json conv = json::array();
        for (const Convergent &c : r.convergents) {
            conv.push_back({c.p, c.q});
        }
        j["convergents"] = conv;
        j["candidate_r"] = r.candidate_r ? json(*r.candidate_r) : json(nullptr);
        j["status"] = to_string(r.status);
        j["gate_count"] = r.gate_count;
        runs.push_back(j);
    }
    doc["runs"] = runs;
    return doc.dump(2) + "\n";
}

}  // namespace qshor
