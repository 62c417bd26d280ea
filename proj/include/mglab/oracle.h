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
#include <memory>
#include <optional>

#include "mglab/bits.h"
#include "mglab/simulate.h"

namespace mglab {

/// A query function phi: {0,1}^n -> [-1, 1]. The range is checked on every
/// evaluation.
class StatQuery {
   public:
    StatQuery(std::size_t n, std::function<double(std::uint64_t)> fn);

    std::size_t num_bits() const {
        return n_;
    }
    double operator()(std::uint64_t x) const;

   private:
    std::size_t n_;
    std::function<double(std::uint64_t)> fn_;
};

/// (-1)^{a.x + b y} over (x, y) with x of length a.size().
StatQuery parity_correlator(const BitString &a, bool b);
/// 1 on `target`, 0 elsewhere.
StatQuery indicator_query(const BitString &target);

/// E_P[phi] by a dense sum. Throws DimensionMismatch.
double expectation(const DistributionTable &p, const StatQuery &phi);

enum class OracleMode { Exact, Empirical, Adversarial };

const char *oracle_mode_name(OracleMode mode);

/// Hoeffding radius for the mean of `shots` values in [-1, 1] at failure
/// probability `delta`.
double hoeffding_radius(std::size_t shots, double delta = 1e-6);
/// ceil(2 ln(2 * 10^6) / tau^2): the smallest shot count whose Hoeffding
/// radius at delta = 1e-6 is at most tau.
std::size_t default_empirical_shots(double tau);

/// Stat_tau(P) presenter with query accounting.
///
/// Exact returns E_P[phi]. Empirical averages `shots` fresh samples per query.
/// Adversarial returns E_P[phi] +- tau with the sign drawn from (seed, query
/// index), i.e. always at the boundary of what the tolerance allows.
class StatOracle {
   public:
    static StatOracle exact(DistributionTable target, double tau);
    /// shots == 0 selects default_empirical_shots(tau).
    static StatOracle empirical(DistributionTable target, double tau, std::uint64_t seed, std::size_t shots = 0);
    static StatOracle adversarial(DistributionTable target, double tau, std::uint64_t seed);

    /// Throws DimensionMismatch, RangeViolation (via phi), and in Empirical
    /// mode ToleranceRisk when the shot count cannot certify tau.
    double query(const StatQuery &phi);

    OracleMode mode() const {
        return mode_;
    }
    double tolerance() const {
        return tau_;
    }
    std::size_t shots() const {
        return shots_;
    }
    std::size_t query_count() const {
        return query_count_;
    }
    const DistributionTable &target() const {
        return *target_;
    }

   private:
    StatOracle(std::shared_ptr<const DistributionTable> target, double tau, OracleMode mode, std::uint64_t seed,
               std::size_t shots);

    std::shared_ptr<const DistributionTable> target_;
    double tau_;
    OracleMode mode_;
    std::uint64_t seed_;
    std::size_t shots_;
    std::size_t query_count_ = 0;
    std::optional<Sampler> sampler_;
};

double stat_query(StatOracle &oracle, const StatQuery &phi);

/// Sample(P) presenter; deterministic per seed.
class SampleOracle {
   public:
    SampleOracle(const DistributionTable &target, std::uint64_t seed);

    std::uint64_t sample();
    std::vector<std::uint64_t> draw(std::size_t count);
    std::size_t sample_count() const {
        return sample_count_;
    }
    std::size_t num_bits() const {
        return sampler_.num_bits();
    }

   private:
    Sampler sampler_;
    std::size_t sample_count_ = 0;
};

/// The two parts of an (x, y, z) query that survive on some M_s support:
/// even(x, y) = phi(x, y, 0) [|x| + y = 0], odd(x, y) = phi(x, y, 1) [|x| + y = 1].
/// Everything else of phi vanishes under every M_s.
struct DecomposedQuery {
    StatQuery even;
    StatQuery odd;
};

DecomposedQuery decompose_query(const StatQuery &phi);

/// Answers a query about M_s with two queries to a D_s oracle. The result is
/// within 2 * d_oracle.tolerance() of E_{M_s}[phi].
double simulate_M_query(const StatQuery &phi, StatOracle &d_oracle);

}  // namespace mglab
