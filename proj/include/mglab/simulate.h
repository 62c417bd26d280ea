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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "mglab/gates.h"
#include "mglab/rng.h"

namespace mglab {

/// Desk-scale guard for dense simulation.
constexpr std::size_t kMaxSimulatedWires = 24;

/// Dense amplitudes indexed by bit string value, wire 0 being the most
/// significant bit.
class StateVector {
   public:
    /// |0^n>.
    explicit StateVector(std::size_t n);
    StateVector(std::size_t n, std::vector<std::complex<double>> amplitudes);

    std::size_t num_wires() const {
        return n_;
    }
    std::span<const std::complex<double>> amplitudes() const {
        return amplitudes_;
    }
    std::complex<double> operator[](std::uint64_t x) const {
        return amplitudes_[x];
    }
    double norm_squared() const;

    /// Applies a two-qubit gate on adjacent wires (w, w+1).
    void apply(const Gate2Q &gate);

   private:
    std::size_t n_;
    std::vector<std::complex<double>> amplitudes_;
};

/// Exact probability mass function over n-bit strings. Construction checks
/// that entries are non-negative and sum to one within 1e-10.
class DistributionTable {
   public:
    DistributionTable(std::size_t n, std::vector<double> mass);

    static DistributionTable point_mass(std::size_t n, std::uint64_t x);
    static DistributionTable uniform(std::size_t n);
    /// Normalized histogram of samples.
    static DistributionTable empirical(std::size_t n, std::span<const std::uint64_t> samples);

    std::size_t num_bits() const {
        return n_;
    }
    std::size_t size() const {
        return mass_.size();
    }
    double operator[](std::uint64_t x) const {
        return mass_[x];
    }
    std::span<const double> mass() const {
        return mass_;
    }

    /// Distribution of the outcome with bit positions i and j exchanged.
    DistributionTable swap_bits(std::size_t i, std::size_t j) const;

   private:
    std::size_t n_;
    std::vector<double> mass_;
};

/// U|0^n>, gates applied layer by layer and in listed order within a layer.
/// Validates the circuit first; throws TooLarge above kMaxSimulatedWires.
StateVector apply_circuit(const MatchgateCircuit &circuit);
StateVector apply_circuit(const MatchgateCircuit &circuit, StateVector initial);

DistributionTable born_distribution(const StateVector &state);
DistributionTable born_distribution(const MatchgateCircuit &circuit);

/// Inverse-CDF sampler over a dense table. Owns its RNG; not for concurrent use.
class Sampler {
   public:
    Sampler(const DistributionTable &table, std::uint64_t seed);

    std::uint64_t next();
    std::vector<std::uint64_t> draw(std::size_t shots);
    std::size_t num_bits() const {
        return n_;
    }

   private:
    std::size_t n_;
    std::vector<double> cdf_;
    Rng rng_;
};

std::vector<std::uint64_t> sample(const DistributionTable &table, std::uint64_t seed, std::size_t shots);

/// Half the l1 distance. Throws DimensionMismatch if bit counts differ.
double tvd(const DistributionTable &p, const DistributionTable &q);
/// Half the l1 distance between raw mass vectors (which need not be normalized).
double tvd(std::span<const double> p, std::span<const double> q);

/// CSV with header `bitstring,probability`, probabilities at 17 significant digits.
void write_csv(std::ostream &out, const DistributionTable &table);

}  // namespace mglab
