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

#include "mglab/learn.h"

#include "gtest/gtest.h"

#include "mglab/error.h"
#include "mglab/simulate.h"
#include "test_util.h"

using namespace mglab;
using namespace mglab::testing;

namespace {

LabeledSample labeled(const char *x, bool y) {
    return {BitString::from_string(x), y};
}

std::vector<LabeledSample> draw_labeled(const Secret &s, double eta, std::size_t count, std::uint64_t seed) {
    const auto raw = sample(noisy_parity_dist(s, NoiseRate(eta)), seed, count);
    return unpack_labeled(s.size(), raw);
}

// All secrets consistent with every sample, by enumeration.
std::vector<std::uint64_t> consistent_secrets(std::size_t n, const std::vector<LabeledSample> &samples) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << n); t++) {
        bool ok = true;
        for (const auto &smp : samples) {
            ok = ok && parity_of(smp.x.value() & t) == smp.label;
        }
        if (ok) {
            out.push_back(t);
        }
    }
    return out;
}

// Agreement count maximiser by direct counting; ties go to the smallest t.
std::uint64_t brute_ml(std::size_t n, const std::vector<LabeledSample> &samples) {
    std::uint64_t best = 0;
    std::size_t best_agree = 0;
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << n); t++) {
        std::size_t agree = 0;
        for (const auto &smp : samples) {
            agree += parity_of(smp.x.value() & t) == smp.label;
        }
        if (t == 0 || agree > best_agree) {
            best = t;
            best_agree = agree;
        }
    }
    return best;
}

}  // namespace

TEST(learn, gauss_examples) {
    const std::vector<LabeledSample> basis = {labeled("100", true), labeled("010", false), labeled("001", true)};
    ASSERT_EQ(gauss_learner(3, basis), Secret::from_string("101"));

    const std::vector<LabeledSample> mixed = {labeled("110", true), labeled("011", true), labeled("111", false)};
    ASSERT_EQ(gauss_learner(3, mixed), Secret::from_string("101"));

    const std::vector<LabeledSample> short_rank = {labeled("110", true), labeled("110", true)};
    ASSERT_FALSE(gauss_learner(3, short_rank).has_value());

    const std::vector<LabeledSample> contradiction = {labeled("11", true), labeled("11", false)};
    try {
        gauss_learner(2, contradiction);
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind(), ErrorKind::Inconsistent);
    }
    const std::vector<LabeledSample> wrong_length = {labeled("11", true)};
    ASSERT_THROW(gauss_learner(3, wrong_length), Error);
}

TEST(learn, gauss_agrees_with_enumeration) {
    Rng rng(1);
    for (std::size_t n = 1; n <= 10; n++) {
        for (int trial = 0; trial < 20; trial++) {
            const Secret s(BitString(n, uniform_below(rng, std::uint64_t{1} << n)));
            const std::size_t count = uniform_below(rng, 2 * n + 2);
            const auto samples = draw_labeled(s, 0, count, rng());
            const auto candidates = consistent_secrets(n, samples);
            ASSERT_FALSE(candidates.empty());
            Gf2System system(n);
            for (const auto &smp : samples) {
                system.add(smp);
            }
            // Rank determines the size of the solution space.
            ASSERT_EQ(candidates.size(), std::size_t{1} << (n - system.rank()));
            const auto learned = gauss_learner(n, samples);
            if (candidates.size() == 1) {
                ASSERT_EQ(learned, s);
            } else {
                ASSERT_FALSE(learned.has_value());
            }
        }
    }
}

TEST(learn, gf2_add_reports_new_information) {
    Gf2System system(3);
    ASSERT_TRUE(system.add(labeled("110", true)));
    ASSERT_FALSE(system.add(labeled("110", true)));
    ASSERT_TRUE(system.add(labeled("011", false)));
    ASSERT_FALSE(system.add(labeled("101", true)));
    ASSERT_EQ(system.rank(), 2);
    ASSERT_FALSE(system.solution().has_value());
    ASSERT_TRUE(system.add(labeled("001", false)));
    ASSERT_EQ(system.solution(), Secret::from_string("100"));
}

TEST(learn, ml_matches_brute_force) {
    Rng rng(2);
    for (std::size_t n = 1; n <= 8; n++) {
        for (int trial = 0; trial < 10; trial++) {
            const Secret s(BitString(n, uniform_below(rng, std::uint64_t{1} << n)));
            const double eta = uniform(rng, 0, 0.45);
            const auto samples = draw_labeled(s, eta, uniform_below(rng, 40), rng());
            ASSERT_EQ(lpn_ml_learner(n, samples, NoiseRate(eta)).value(), brute_ml(n, samples));
        }
    }
}

TEST(learn, ml_recovers_noisy_secret) {
    Rng rng(3);
    int hits = 0;
    for (int trial = 0; trial < 100; trial++) {
        const Secret s(BitString(10, uniform_below(rng, 1024)));
        const auto samples = draw_labeled(s, 0.1, 500, rng());
        hits += lpn_ml_learner(10, samples, NoiseRate(0.1)) == s;
    }
    ASSERT_GT(hits, 95);
}

TEST(learn, ml_guards) {
    const std::vector<LabeledSample> none;
    ASSERT_THROW(lpn_ml_learner(17, none, NoiseRate(0.1)), Error);
    ASSERT_THROW(lpn_ml_learner(3, none, NoiseRate(0.6)), Error);
    // No samples: every candidate ties, the smallest wins.
    ASSERT_EQ(lpn_ml_learner(3, none, NoiseRate(0.1)), Secret::from_string("000"));
}

TEST(learn, sq_query_counts) {
    for (std::size_t n = 1; n <= 8; n++) {
        StatOracle zero = StatOracle::exact(parity_dist(Secret(BitString::zeros(n))), 0.1);
        const LearnReport r0 = sq_parity_learner(zero, 0.1);
        ASSERT_EQ(r0.queries_used, 1);
        ASSERT_EQ(r0.recovered, Secret(BitString::zeros(n)));

        StatOracle ones = StatOracle::exact(parity_dist(Secret(BitString::ones(n))), 0.1);
        const LearnReport r1 = sq_parity_learner(ones, 0.1);
        ASSERT_EQ(r1.queries_used, std::size_t{1} << n);
        ASSERT_TRUE(r1.success);
        ASSERT_EQ(r1.experiment, "sq");
    }
}

TEST(learn, sq_average_queries) {
    const std::size_t n = 10;
    double total = 0;
    for (std::uint64_t sv = 0; sv < (1u << n); sv++) {
        StatOracle oracle = StatOracle::exact(parity_dist(Secret(BitString(n, sv))), 0.1);
        total += static_cast<double>(*sq_parity_learner(oracle, 0.1).queries_used);
    }
    // Lexicographic search uses s + 1 queries, averaging (2^n + 1) / 2.
    ASSERT_EQ(total / 1024, 512.5);
}

TEST(learn, sq_fermionized_succeeds_in_every_mode) {
    Rng rng(4);
    const double tau = 0.1;
    for (std::size_t n = 1; n <= 6; n++) {
        const Secret s(BitString(n, uniform_below(rng, std::uint64_t{1} << n)));
        const DistributionTable d = noisy_parity_dist(s, NoiseRate(0.1));
        std::vector<StatOracle> oracles = {StatOracle::exact(d, tau / 2), StatOracle::adversarial(d, tau / 2, rng()),
                                           StatOracle::empirical(d, tau / 2, rng())};
        for (StatOracle &oracle : oracles) {
            const LearnReport r = sq_fermionized_parity_learner(oracle, tau);
            ASSERT_EQ(r.recovered, s) << oracle_mode_name(oracle.mode());
            ASSERT_EQ(r.queries_used, 2 * (s.value() + 1));
            ASSERT_EQ(r.experiment, "sq_fermionized");
        }
    }
    StatOracle loose = StatOracle::exact(parity_dist(Secret::from_string("1")), 0.1);
    ASSERT_THROW(sq_fermionized_parity_learner(loose, 0.1), Error);
}

TEST(learn, sq_reports_not_found_when_no_correlator) {
    StatOracle oracle = StatOracle::exact(DistributionTable::uniform(3), 0.1);
    try {
        sq_parity_learner(oracle, 0.1);
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind(), ErrorKind::NotFound);
    }
}

TEST(learn, identify_examples) {
    ASSERT_EQ(identify_secret_from_distribution(fermionized_parity_dist(Secret::from_string("1"))),
              Secret::from_string("1"));
    ASSERT_EQ(identify_secret_from_distribution(fermionized_noisy_parity_dist(Secret::from_string("011"), NoiseRate(0.1))),
              Secret::from_string("011"));
    try {
        identify_secret_from_distribution(DistributionTable::uniform(4));
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind(), ErrorKind::PromiseViolated);
    }
}

TEST(learn, identify_tolerates_perturbation) {
    Rng rng(5);
    for (std::size_t n = 1; n <= 8; n++) {
        const Secret s(BitString(n, uniform_below(rng, std::uint64_t{1} << n)));
        const DistributionTable target = fermionized_parity_dist(s);
        std::vector<double> noise(target.size());
        double total = 0;
        for (double &v : noise) {
            v = uniform01(rng);
            total += v;
        }
        // A 0.2 mixture sits within distance 0.2 of the target.
        std::vector<double> mix(target.size());
        for (std::size_t v = 0; v < mix.size(); v++) {
            mix[v] = 0.8 * target[v] + 0.2 * noise[v] / total;
        }
        ASSERT_EQ(identify_secret_from_distribution(DistributionTable(n + 2, mix)), s);
    }
}

TEST(learn, evaluator_to_pac_is_exact_on_true_evaluator) {
    for (std::size_t n = 1; n <= 6; n++) {
        for (std::uint64_t sv = 0; sv < (1u << n); sv++) {
            const Secret s(BitString(n, sv));
            for (double eta : {0.0, 0.2}) {
                const Hypothesis h = evaluator_to_pac(exact_evaluator(fermionized_noisy_parity_dist(s, NoiseRate(eta))));
                const PacErrorEstimate err = pac_error(h, s);
                ASSERT_TRUE(err.exact);
                ASSERT_EQ(err.value, 0);
            }
        }
    }
}

TEST(learn, pac_error_exact_values) {
    const Secret s = Secret::from_string("110");
    const PacErrorEstimate always_zero = pac_error([](std::uint64_t) { return false; }, s);
    ASSERT_EQ(always_zero.value, 0.5);
    ASSERT_EQ(always_zero.evaluations, 8);
    const PacErrorEstimate wrong = pac_error([](std::uint64_t x) { return parity_of(x & 0b011); }, s);
    ASSERT_EQ(wrong.value, 0.5);
    const PacErrorEstimate right = pac_error([](std::uint64_t x) { return parity_of(x & 0b110); }, s);
    ASSERT_EQ(right.value, 0);
}

TEST(learn, pac_error_monte_carlo) {
    const Secret s(BitString(20, 0xABCDE));
    const PacErrorEstimate right = pac_error([&](std::uint64_t x) { return parity_of(x & s.value()); }, s, 1, 20000);
    ASSERT_FALSE(right.exact);
    ASSERT_EQ(right.value, 0);
    ASSERT_EQ(right.lower, 0);
    ASSERT_LT(right.upper, 1e-3);
    const PacErrorEstimate half = pac_error([](std::uint64_t) { return true; }, s, 2, 20000);
    ASSERT_LE(half.lower, 0.5);
    ASSERT_GE(half.upper, 0.5);
    ASSERT_NEAR(half.value, 0.5, 0.02);
}

TEST(learn, unpack_and_params) {
    const std::vector<std::uint64_t> raw = {0b1011, 0b0000};
    const auto samples = unpack_labeled(3, raw);
    ASSERT_EQ(samples[0].x, BitString::from_string("101"));
    ASSERT_TRUE(samples[0].label);
    ASSERT_FALSE(samples[1].label);
    ASSERT_THROW(PacParams(0, 0.1), Error);
    ASSERT_THROW(PacParams(0.1, 1), Error);
    const PacParams ok(0.1, 0.05);
    ASSERT_EQ(ok.epsilon, 0.1);
}
