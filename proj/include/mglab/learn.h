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

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mglab/dist.h"
#include "mglab/oracle.h"

namespace mglab {

struct PacParams {
    double epsilon;
    double delta;

    /// Throws InvalidArgument unless both lie strictly inside (0, 1).
    PacParams(double epsilon, double delta);
};

struct LabeledSample {
    BitString x;
    bool label;
};

/// Splits (x, y) samples packed as in the zoo tables into labeled examples.
std::vector<LabeledSample> unpack_labeled(std::size_t n, std::span<const std::uint64_t> xy_samples);

struct LearnReport {
    std::string experiment;
    std::size_t n = 0;
    double eta = 0;
    std::optional<double> tau;
    std::optional<Secret> recovered;
    std::optional<std::size_t> queries_used;
    std::optional<std::size_t> samples_used;
    bool success = false;
    std::uint64_t seed = 0;
    std::chrono::nanoseconds wallclock{0};
};

/// Incremental Gaussian elimination for x . s = y over GF(2).
class Gf2System {
   public:
    explicit Gf2System(std::size_t n);

    /// Adds one equation. Returns true if it raised the rank. Throws
    /// Inconsistent if it contradicts earlier equations.
    bool add(const LabeledSample &sample);

    std::size_t rank() const {
        return rank_;
    }
    std::size_t num_unknowns() const {
        return n_;
    }
    /// The unique solution once rank == n.
    std::optional<Secret> solution() const;

   private:
    std::size_t n_;
    std::size_t rank_ = 0;
    // pivot_rows_[b] holds a reduced row (equation bits, label in bit 0 of
    // the shifted word) whose leading variable is bit b, or 0 if none.
    std::vector<std::uint64_t> pivot_rows_;
};

/// Noiseless parity solver. nullopt when the samples have rank < n; throws
/// Inconsistent when no s fits all samples.
std::optional<Secret> gauss_learner(std::size_t n, std::span<const LabeledSample> samples);

/// argmax over all 2^n candidates of the agreement count, ties broken
/// lexicographically. Agreements for all candidates come from one Walsh-
/// Hadamard transform of the signed label histogram. Requires eta <= 1/2; at
/// eta = 1/2 the labels carry no information and the output is a guess.
Secret lpn_ml_learner(std::size_t n, std::span<const LabeledSample> samples, NoiseRate eta);

/// Queries (-1)^{t.x + y} for t in lexicographic order against an oracle for
/// D_s and returns the first t whose response exceeds 1/2. Requires tau < 1/2.
LearnReport sq_parity_learner(StatOracle &d_oracle, double tau);

/// Same search posed as queries about M_s (correlators that ignore z), each
/// answered by simulate_M_query from d_oracle. d_oracle must have tolerance at
/// most tau/2; queries_used counts the D_s queries (two per M_s query).
LearnReport sq_fermionized_parity_learner(StatOracle &d_oracle, double tau);

/// Brute-force minimum of tvd(M, M_s) over all s. Throws PromiseViolated if the
/// minimum is not below 1/4 and TooLarge for n > 12.
Secret identify_secret_from_distribution(const DistributionTable &m);

using Hypothesis = std::function<bool(std::uint64_t x)>;

/// h(x) = 0 if e(x,0,|x|) >= e(x,1,|x|+1) else 1.
Hypothesis evaluator_to_pac(Evaluator e);

struct PacErrorEstimate {
    double value = 0;
    /// 95% Wilson interval; equal to value when exact.
    double lower = 0;
    double upper = 0;
    bool exact = true;
    std::size_t evaluations = 0;
};

/// Disagreement rate of h and chi_s under the uniform distribution. Exact for
/// n <= 16; otherwise Monte-Carlo with `mc_samples` points from `seed`.
PacErrorEstimate pac_error(const Hypothesis &h, const Secret &s, std::uint64_t seed = 0,
                           std::size_t mc_samples = 100000);

}  // namespace mglab
