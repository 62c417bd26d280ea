// Copyright 2026 The mglab Authors
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "mglab/bits.h"
#include "mglab/simulate.h"

namespace mglab {

/// Largest secret length for which the dense zoo tables are built.
constexpr std::size_t kMaxZooSecretBits = 20;

/// Parity secret s; length at least one.
class Secret {
   public:
    explicit Secret(BitString bits);
    static Secret from_string(std::string_view text);

    const BitString &bits() const {
        return bits_;
    }
    std::size_t size() const {
        return bits_.size();
    }
    std::uint64_t value() const {
        return bits_.value();
    }
    std::string str() const {
        return bits_.str();
    }

    bool operator==(const Secret &) const = default;

   private:
    BitString bits_;
};

/// Label-flip probability eta in [0, 1].
class NoiseRate {
   public:
    NoiseRate() = default;
    explicit NoiseRate(double eta);

    double value() const {
        return eta_;
    }

   private:
    double eta_ = 0;
};

/// Bit layout of the zoo tables: x at positions 0..n-1, y at n, z at n+1.
constexpr std::uint64_t pack_xy(std::uint64_t x, bool y) {
    return (x << 1) | static_cast<std::uint64_t>(y);
}
constexpr std::uint64_t pack_xyz(std::uint64_t x, bool y, bool z) {
    return (x << 2) | (static_cast<std::uint64_t>(y) << 1) | static_cast<std::uint64_t>(z);
}

/// <x, s> mod 2. Throws LengthMismatch.
bool chi(const Secret &s, const BitString &x);

struct FermionizedLabel {
    bool y;
    bool z;
    bool operator==(const FermionizedLabel &) const = default;
};

/// (chi_s(x), chi_s(x) + |x|).
FermionizedLabel xi(const Secret &s, const BitString &x);

/// D_s over n+1 bits.
DistributionTable parity_dist(const Secret &s);
/// D_s^eta over n+1 bits.
DistributionTable noisy_parity_dist(const Secret &s, NoiseRate eta);
/// M_s over n+2 bits.
DistributionTable fermionized_parity_dist(const Secret &s);
/// M_s^eta over n+2 bits.
DistributionTable fermionized_noisy_parity_dist(const Secret &s, NoiseRate eta);
/// Uniform over the even-weight k-bit strings.
DistributionTable even_parity_dist(std::size_t k);

/// A total map from n-bit strings to [0, 1]. Queries outside the domain and
/// outputs outside [0, 1] are errors.
class Evaluator {
   public:
    Evaluator(std::size_t n, std::function<double(std::uint64_t)> fn);

    std::size_t num_bits() const {
        return n_;
    }
    double operator()(std::uint64_t x) const;
    double operator()(const BitString &x) const;
    /// Outputs on every input, in index order.
    std::vector<double> tabulate() const;

   private:
    std::size_t n_;
    std::function<double(std::uint64_t)> fn_;
};

Evaluator exact_evaluator(DistributionTable table);

/// (x, y) -> e(x, y, |x| + y).
Evaluator eval_reduction_D_from_M(Evaluator m_evaluator);
/// (x, y, z) -> e(x, y) if |x| + y == z else 0.
Evaluator eval_reduction_M_from_D(Evaluator d_evaluator);

/// A sampling procedure with owned state. Single caller only.
class Generator {
   public:
    Generator(std::size_t n, std::function<std::uint64_t()> draw_one);

    std::size_t num_bits() const {
        return n_;
    }
    std::uint64_t operator()();
    std::vector<std::uint64_t> draw(std::size_t count);

   private:
    std::size_t n_;
    std::function<std::uint64_t()> draw_one_;
};

Generator table_generator(const DistributionTable &table, std::uint64_t seed);

enum class ReductionDirection {
    /// Drop the last bit: samples of M_s become samples of D_s.
    MToD,
    /// Append |x| + y: samples of D_s become samples of M_s.
    DToM,
};

Generator gen_reduction_pair(Generator source, ReductionDirection direction);

}  // namespace mglab
