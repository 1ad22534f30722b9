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

#ifndef QSHOR_PERMUTATION_H
#define QSHOR_PERMUTATION_H

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace qshor {

/// A bijection on the basis indices 0..2^n-1 of an n-qubit register.
///
/// Reversible classical gates (NOT, CNOT, Toffoli, XOR oracles) act on basis
/// states this way. Bijectivity is verified when the object is built.
class BasisPermutation {
   public:
    /// Throws std::invalid_argument unless `image` has length 2^num_bits and
    /// hits every index exactly once.
    BasisPermutation(unsigned num_bits, std::vector<uint64_t> image, std::string name = "");

    static BasisPermutation identity(unsigned num_bits);
    static BasisPermutation from_function(
        unsigned num_bits, const std::function<uint64_t(uint64_t)> &fn, std::string name = "");

    unsigned num_bits() const {
        return num_bits_;
    }
    uint64_t size() const {
        return image_.size();
    }
    uint64_t operator()(uint64_t x) const {
        return image_[x];
    }
    std::span<const uint64_t> image() const {
        return image_;
    }
    const std::string &name() const {
        return name_;
    }

    BasisPermutation inverse() const;
    /// x -> other(this(x)).
    BasisPermutation then(const BasisPermutation &other) const;

    /// Same mapping, names ignored.
    bool operator==(const BasisPermutation &other) const {
        return num_bits_ == other.num_bits_ && image_ == other.image_;
    }

   private:
    unsigned num_bits_;
    std::vector<uint64_t> image_;
    std::string name_;
};

}  // namespace qshor

#endif
