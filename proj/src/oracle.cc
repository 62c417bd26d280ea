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

#include "mglab/oracle.h"

#include <cmath>
#include <string>

#include "mglab/error.h"
#include "mglab/rng.h"

namespace mglab {

StatQuery::StatQuery(std::size_t n, std::function<double(std::uint64_t)> fn) : n_(n), fn_(std::move(fn)) {
}

double StatQuery::operator()(std::uint64_t x) const {
    const double v = fn_(x);
    if (!(v >= -1 && v <= 1)) {
        throw Error(ErrorKind::RangeViolation, "query value " + std::to_string(v) + " outside [-1, 1]");
    }
    return v;
}

StatQuery parity_correlator(const BitString &a, bool b) {
    const std::uint64_t mask = (a.value() << 1) | static_cast<std::uint64_t>(b);
    return StatQuery(a.size() + 1, [mask](std::uint64_t xy) { return parity_of(xy & mask) ? -1.0 : 1.0; });
}

StatQuery indicator_query(const BitString &target) {
    const std::uint64_t t = target.value();
    return StatQuery(target.size(), [t](std::uint64_t x) { return x == t ? 1.0 : 0.0; });
}

double expectation(const DistributionTable &p, const StatQuery &phi) {
    if (p.num_bits() != phi.num_bits()) {
        throw Error(ErrorKind::DimensionMismatch, "query over " + std::to_string(phi.num_bits()) +
                                                      " bits for a distribution over " + std::to_string(p.num_bits()));
    }
    double total = 0;
    for (std::uint64_t x = 0; x < p.size(); x++) {
        if (p[x] != 0) {
            total += p[x] * phi(x);
        }
    }
    return total;
}

const char *oracle_mode_name(OracleMode mode) {
    switch (mode) {
        case OracleMode::Exact:
            return "exact";
        case OracleMode::Empirical:
            return "empirical";
        case OracleMode::Adversarial:
            return "adversarial";
    }
    return "unknown";
}

double hoeffding_radius(std::size_t shots, double delta) {
    // P(|mean - E| >= r) <= 2 exp(-shots r^2 / 2) for values in [-1, 1].
    return std::sqrt(2 * std::log(2 / delta) / static_cast<double>(shots));
}

std::size_t default_empirical_shots(double tau) {
    return static_cast<std::size_t>(std::ceil(2 * std::log(2e6) / (tau * tau)));
}

StatOracle::StatOracle(std::shared_ptr<const DistributionTable> target, double tau, OracleMode mode,
                       std::uint64_t seed, std::size_t shots)
    : target_(std::move(target)), tau_(tau), mode_(mode), seed_(seed), shots_(shots) {
    if (!(tau > 0 && tau < 1)) {
        throw Error(ErrorKind::InvalidArgument, "tolerance must lie in (0, 1), got " + std::to_string(tau));
    }
    if (mode == OracleMode::Empirical) {
        sampler_.emplace(*target_, seed);
    }
}

StatOracle StatOracle::exact(DistributionTable target, double tau) {
    return StatOracle(std::make_shared<const DistributionTable>(std::move(target)), tau, OracleMode::Exact, 0, 0);
}

StatOracle StatOracle::empirical(DistributionTable target, double tau, std::uint64_t seed, std::size_t shots) {
    if (shots == 0) {
        shots = default_empirical_shots(tau);
    }
    return StatOracle(std::make_shared<const DistributionTable>(std::move(target)), tau, OracleMode::Empirical, seed,
                      shots);
}

StatOracle StatOracle::adversarial(DistributionTable target, double tau, std::uint64_t seed) {
    return StatOracle(std::make_shared<const DistributionTable>(std::move(target)), tau, OracleMode::Adversarial,
                      seed, 0);
}

double StatOracle::query(const StatQuery &phi) {
    if (phi.num_bits() != target_->num_bits()) {
        throw Error(ErrorKind::DimensionMismatch, "query over " + std::to_string(phi.num_bits()) +
                                                      " bits for an oracle over " +
                                                      std::to_string(target_->num_bits()));
    }
    const std::size_t index = query_count_;
    double v = 0;
    switch (mode_) {
        case OracleMode::Exact:
            v = expectation(*target_, phi);
            break;
        case OracleMode::Empirical: {
            const double radius = hoeffding_radius(shots_);
            if (radius > tau_) {
                throw Error(ErrorKind::ToleranceRisk, std::to_string(shots_) + " shots give Hoeffding radius " +
                                                          std::to_string(radius) + " > tau " + std::to_string(tau_));
            }
            double total = 0;
            for (std::size_t i = 0; i < shots_; i++) {
                total += phi(sampler_->next());
            }
            v = total / static_cast<double>(shots_);
            break;
        }
        case OracleMode::Adversarial: {
            const double sign = (derive_seed(seed_, index) & 1) ? 1.0 : -1.0;
            v = expectation(*target_, phi) + sign * tau_;
            break;
        }
    }
    query_count_++;
    return v;
}

double stat_query(StatOracle &oracle, const StatQuery &phi) {
    return oracle.query(phi);
}

SampleOracle::SampleOracle(const DistributionTable &target, std::uint64_t seed) : sampler_(target, seed) {
}

std::uint64_t SampleOracle::sample() {
    sample_count_++;
    return sampler_.next();
}

std::vector<std::uint64_t> SampleOracle::draw(std::size_t count) {
    std::vector<std::uint64_t> out(count);
    for (auto &x : out) {
        x = sample();
    }
    return out;
}

DecomposedQuery decompose_query(const StatQuery &phi) {
    if (phi.num_bits() < 3) {
        throw Error(ErrorKind::LengthMismatch, "an M query needs at least 3 bits");
    }
    const std::size_t n = phi.num_bits() - 2;
    auto part = [phi](bool z) {
        return [phi, z](std::uint64_t xy) {
            const std::uint64_t x = xy >> 1;
            const bool y = (xy & 1) != 0;
            if ((parity_of(x) != y) != z) {
                return 0.0;
            }
            return phi((xy << 1) | static_cast<std::uint64_t>(z));
        };
    };
    return DecomposedQuery{StatQuery(n + 1, part(false)), StatQuery(n + 1, part(true))};
}

double simulate_M_query(const StatQuery &phi, StatOracle &d_oracle) {
    const DecomposedQuery parts = decompose_query(phi);
    const double even = d_oracle.query(parts.even);
    const double odd = d_oracle.query(parts.odd);
    return even + odd;
}

}  // namespace mglab
