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

#include "mglab/simulate.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "mglab/bits.h"
#include "mglab/error.h"

namespace mglab {

namespace {

void check_wire_count(std::size_t n) {
    if (n > kMaxSimulatedWires) {
        throw Error(ErrorKind::TooLarge,
                    std::to_string(n) + " wires exceeds the dense limit of " + std::to_string(kMaxSimulatedWires));
    }
}

}  // namespace

StateVector::StateVector(std::size_t n) : n_(n) {
    check_wire_count(n);
    amplitudes_.assign(std::size_t{1} << n, 0.0);
    amplitudes_[0] = 1.0;
}

StateVector::StateVector(std::size_t n, std::vector<std::complex<double>> amplitudes)
    : n_(n), amplitudes_(std::move(amplitudes)) {
    check_wire_count(n);
    if (amplitudes_.size() != (std::size_t{1} << n)) {
        throw Error(ErrorKind::DimensionMismatch, "expected 2^" + std::to_string(n) + " amplitudes");
    }
    if (std::abs(norm_squared() - 1) > 1e-10) {
        throw Error(ErrorKind::InvalidArgument, "state vector is not normalized");
    }
}

double StateVector::norm_squared() const {
    double total = 0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

void StateVector::apply(const Gate2Q &gate) {
    const auto [a, b] = gate.wires;
    if (b != a + 1 || b >= n_) {
        throw Error(ErrorKind::InvalidWire, "gate wires out of range");
    }
    const Matrix4 u = gate.matrix();
    // Wire w lives at bit (n - 1 - w); wire a is the high bit of the local index.
    const std::uint64_t hi = std::uint64_t{1} << (n_ - 1 - a);
    const std::uint64_t lo = std::uint64_t{1} << (n_ - 1 - b);
    const std::uint64_t mask = hi | lo;
    const std::uint64_t size = amplitudes_.size();
    for (std::uint64_t base = 0; base < size; base++) {
        if (base & mask) {
            continue;
        }
        const std::uint64_t idx[4] = {base, base | lo, base | hi, base | mask};
        const std::complex<double> in[4] = {amplitudes_[idx[0]], amplitudes_[idx[1]], amplitudes_[idx[2]],
                                            amplitudes_[idx[3]]};
        for (int r = 0; r < 4; r++) {
            amplitudes_[idx[r]] = u(r, 0) * in[0] + u(r, 1) * in[1] + u(r, 2) * in[2] + u(r, 3) * in[3];
        }
    }
}

DistributionTable::DistributionTable(std::size_t n, std::vector<double> mass) : n_(n), mass_(std::move(mass)) {
    if (n > kMaxBits) {
        throw Error(ErrorKind::TooLarge, "distribution over " + std::to_string(n) + " bits");
    }
    if (mass_.size() != (std::size_t{1} << n)) {
        throw Error(ErrorKind::DimensionMismatch, "expected 2^" + std::to_string(n) + " entries");
    }
    double total = 0;
    for (double m : mass_) {
        if (!(m >= 0)) {
            throw Error(ErrorKind::InvalidArgument, "negative or NaN probability mass");
        }
        total += m;
    }
    if (std::abs(total - 1) > 1e-10) {
        throw Error(ErrorKind::InvalidArgument, "probability mass sums to " + std::to_string(total));
    }
}

DistributionTable DistributionTable::point_mass(std::size_t n, std::uint64_t x) {
    std::vector<double> mass(std::size_t{1} << n, 0.0);
    mass.at(x) = 1;
    return DistributionTable(n, std::move(mass));
}

DistributionTable DistributionTable::uniform(std::size_t n) {
    const std::size_t size = std::size_t{1} << n;
    return DistributionTable(n, std::vector<double>(size, 1.0 / static_cast<double>(size)));
}

DistributionTable DistributionTable::empirical(std::size_t n, std::span<const std::uint64_t> samples) {
    if (samples.empty()) {
        throw Error(ErrorKind::InvalidArgument, "empirical distribution of zero samples");
    }
    std::vector<double> mass(std::size_t{1} << n, 0.0);
    for (std::uint64_t x : samples) {
        mass.at(x) += 1;
    }
    const double scale = 1.0 / static_cast<double>(samples.size());
    for (double &m : mass) {
        m *= scale;
    }
    return DistributionTable(n, std::move(mass));
}

DistributionTable DistributionTable::swap_bits(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) {
        throw Error(ErrorKind::InvalidWire, "bit position out of range");
    }
    const std::uint64_t bi = std::uint64_t{1} << (n_ - 1 - i);
    const std::uint64_t bj = std::uint64_t{1} << (n_ - 1 - j);
    std::vector<double> out(mass_.size());
    for (std::uint64_t x = 0; x < mass_.size(); x++) {
        std::uint64_t y = x;
        if (((x & bi) != 0) != ((x & bj) != 0)) {
            y ^= bi | bj;
        }
        out[y] = mass_[x];
    }
    return DistributionTable(n_, std::move(out));
}

StateVector apply_circuit(const MatchgateCircuit &circuit) {
    check_wire_count(circuit.n);
    return apply_circuit(circuit, StateVector(circuit.n));
}

StateVector apply_circuit(const MatchgateCircuit &circuit, StateVector initial) {
    check_wire_count(circuit.n);
    if (initial.num_wires() != circuit.n) {
        throw Error(ErrorKind::DimensionMismatch, "initial state width differs from circuit");
    }
    validate_circuit(circuit);
    for (const auto &layer : circuit.layers) {
        for (const auto &gate : layer) {
            initial.apply(gate);
        }
    }
    return initial;
}

DistributionTable born_distribution(const StateVector &state) {
    std::vector<double> mass(state.amplitudes().size());
    for (std::size_t x = 0; x < mass.size(); x++) {
        mass[x] = std::norm(state[x]);
    }
    return DistributionTable(state.num_wires(), std::move(mass));
}

DistributionTable born_distribution(const MatchgateCircuit &circuit) {
    return born_distribution(apply_circuit(circuit));
}

Sampler::Sampler(const DistributionTable &table, std::uint64_t seed) : n_(table.num_bits()), rng_(seed) {
    cdf_.resize(table.size());
    double running = 0;
    for (std::size_t x = 0; x < table.size(); x++) {
        running += table[x];
        cdf_[x] = running;
    }
}

std::uint64_t Sampler::next() {
    const double u = uniform01(rng_) * cdf_.back();
    // First index whose cumulative mass exceeds u; zero-mass entries are never hit.
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    if (it == cdf_.end()) {
        --it;
    }
    return static_cast<std::uint64_t>(it - cdf_.begin());
}

std::vector<std::uint64_t> Sampler::draw(std::size_t shots) {
    std::vector<std::uint64_t> out(shots);
    for (auto &x : out) {
        x = next();
    }
    return out;
}

std::vector<std::uint64_t> sample(const DistributionTable &table, std::uint64_t seed, std::size_t shots) {
    Sampler sampler(table, seed);
    return sampler.draw(shots);
}

double tvd(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) {
        throw Error(ErrorKind::DimensionMismatch, "mass vectors of different length");
    }
    double total = 0;
    for (std::size_t x = 0; x < p.size(); x++) {
        total += std::abs(p[x] - q[x]);
    }
    return total / 2;
}

double tvd(const DistributionTable &p, const DistributionTable &q) {
    if (p.num_bits() != q.num_bits()) {
        throw Error(ErrorKind::DimensionMismatch, "distributions over " + std::to_string(p.num_bits()) + " and " +
                                                      std::to_string(q.num_bits()) + " bits");
    }
    return tvd(p.mass(), q.mass());
}

void write_csv(std::ostream &out, const DistributionTable &table) {
    out << "bitstring,probability\n";
    char buf[40];
    for (std::uint64_t x = 0; x < table.size(); x++) {
        std::snprintf(buf, sizeof(buf), "%#.17g", table[x]);
        out << BitString(table.num_bits(), x).str() << ',' << buf << '\n';
    }
}

}  // namespace mglab
