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

#include <bit>
#include <cmath>
#include <string>

#include "mglab/error.h"
#include "mglab/rng.h"

namespace mglab {

namespace {

constexpr std::size_t kMaxLpnBits = 16;
constexpr std::size_t kMaxIdentifyBits = 12;
constexpr std::size_t kMaxExactPacBits = 16;

LearnReport search_correlators(std::size_t n, double tau, std::size_t query_bits, StatOracle &d_oracle,
                               const std::function<double(const StatQuery &)> &ask, std::string experiment) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t before = d_oracle.query_count();
    LearnReport report;
    report.experiment = std::move(experiment);
    report.n = n;
    report.tau = tau;
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << n); t++) {
        // (-1)^{t.x + y}; the M_s variant ignores z in the lowest bit.
        const std::uint64_t mask = query_bits == n + 1 ? ((t << 1) | 1) : ((t << 2) | 2);
        const StatQuery phi(query_bits, [mask](std::uint64_t v) { return parity_of(v & mask) ? -1.0 : 1.0; });
        if (ask(phi) > 0.5) {
            report.recovered = Secret(BitString(n, t));
            report.success = true;
            break;
        }
    }
    report.queries_used = d_oracle.query_count() - before;
    report.wallclock = std::chrono::steady_clock::now() - start;
    if (!report.recovered) {
        throw Error(ErrorKind::NotFound, "no correlator exceeded 1/2 after " +
                                             std::to_string(*report.queries_used) + " queries");
    }
    return report;
}

}  // namespace

PacParams::PacParams(double epsilon_, double delta_) : epsilon(epsilon_), delta(delta_) {
    if (!(epsilon > 0 && epsilon < 1) || !(delta > 0 && delta < 1)) {
        throw Error(ErrorKind::InvalidArgument, "PAC parameters must lie in (0, 1)");
    }
}

std::vector<LabeledSample> unpack_labeled(std::size_t n, std::span<const std::uint64_t> xy_samples) {
    std::vector<LabeledSample> out;
    out.reserve(xy_samples.size());
    for (std::uint64_t xy : xy_samples) {
        out.push_back({BitString(n, xy >> 1), (xy & 1) != 0});
    }
    return out;
}

Gf2System::Gf2System(std::size_t n) : n_(n), pivot_rows_(n, 0) {
    if (n == 0 || n > kMaxBits) {
        throw Error(ErrorKind::InvalidArgument, "GF(2) system needs 1.." + std::to_string(kMaxBits) + " unknowns");
    }
}

bool Gf2System::add(const LabeledSample &sample) {
    if (sample.x.size() != n_) {
        throw Error(ErrorKind::LengthMismatch,
                    "sample of length " + std::to_string(sample.x.size()) + " for " + std::to_string(n_) + " unknowns");
    }
    std::uint64_t row = (sample.x.value() << 1) | static_cast<std::uint64_t>(sample.label);
    for (std::size_t b = n_; b-- > 0;) {
        if (((row >> (b + 1)) & 1) == 0) {
            continue;
        }
        if (pivot_rows_[b] == 0) {
            pivot_rows_[b] = row;
            rank_++;
            return true;
        }
        row ^= pivot_rows_[b];
    }
    if (row & 1) {
        throw Error(ErrorKind::Inconsistent, "samples admit no parity consistent with all labels");
    }
    return false;
}

std::optional<Secret> Gf2System::solution() const {
    if (rank_ < n_) {
        return std::nullopt;
    }
    // A pivot row with leading bit b only involves bits <= b.
    std::uint64_t s = 0;
    for (std::size_t b = 0; b < n_; b++) {
        const std::uint64_t row = pivot_rows_[b];
        const std::uint64_t lower = (row >> 1) & ((std::uint64_t{1} << b) - 1);
        const bool bit = ((row & 1) != 0) != parity_of(lower & s);
        s |= static_cast<std::uint64_t>(bit) << b;
    }
    return Secret(BitString(n_, s));
}

std::optional<Secret> gauss_learner(std::size_t n, std::span<const LabeledSample> samples) {
    Gf2System system(n);
    for (const auto &sample : samples) {
        system.add(sample);
    }
    return system.solution();
}

Secret lpn_ml_learner(std::size_t n, std::span<const LabeledSample> samples, NoiseRate eta) {
    if (n == 0 || n > kMaxLpnBits) {
        throw Error(ErrorKind::TooLarge, "brute-force LPN supports 1.." + std::to_string(kMaxLpnBits) + " bits");
    }
    if (!(eta.value() <= 0.5)) {
        throw Error(ErrorKind::InvalidArgument, "maximum-likelihood decoding requires eta <= 1/2");
    }
    std::vector<std::int64_t> w(std::size_t{1} << n, 0);
    for (const auto &sample : samples) {
        if (sample.x.size() != n) {
            throw Error(ErrorKind::LengthMismatch, "sample length differs from n");
        }
        w[sample.x.value()] += sample.label ? -1 : 1;
    }
    // In place Walsh-Hadamard: w[t] becomes sum_i (-1)^{y_i + t.x_i}, which is
    // 2 * agreements(t) - N.
    for (std::size_t len = 1; len < w.size(); len <<= 1) {
        for (std::size_t i = 0; i < w.size(); i += 2 * len) {
            for (std::size_t j = i; j < i + len; j++) {
                const std::int64_t a = w[j];
                const std::int64_t b = w[j + len];
                w[j] = a + b;
                w[j + len] = a - b;
            }
        }
    }
    std::uint64_t best = 0;
    for (std::uint64_t t = 1; t < w.size(); t++) {
        if (w[t] > w[best]) {
            best = t;
        }
    }
    return Secret(BitString(n, best));
}

LearnReport sq_parity_learner(StatOracle &d_oracle, double tau) {
    if (!(tau > 0 && tau < 0.5)) {
        throw Error(ErrorKind::InvalidArgument, "correlator search needs 0 < tau < 1/2");
    }
    if (d_oracle.tolerance() > tau) {
        throw Error(ErrorKind::InvalidArgument, "oracle tolerance exceeds tau");
    }
    const std::size_t bits = d_oracle.target().num_bits();
    if (bits < 2) {
        throw Error(ErrorKind::LengthMismatch, "a D_s oracle needs at least 2 bits");
    }
    return search_correlators(
        bits - 1, tau, bits, d_oracle, [&](const StatQuery &phi) { return d_oracle.query(phi); }, "sq");
}

LearnReport sq_fermionized_parity_learner(StatOracle &d_oracle, double tau) {
    if (!(tau > 0 && tau < 0.5)) {
        throw Error(ErrorKind::InvalidArgument, "correlator search needs 0 < tau < 1/2");
    }
    if (d_oracle.tolerance() > tau / 2 * (1 + 1e-12)) {
        throw Error(ErrorKind::InvalidArgument, "sub-oracle tolerance must be at most tau/2");
    }
    const std::size_t bits = d_oracle.target().num_bits();
    if (bits < 2) {
        throw Error(ErrorKind::LengthMismatch, "a D_s oracle needs at least 2 bits");
    }
    const std::size_t n = bits - 1;
    return search_correlators(
        n, tau, n + 2, d_oracle, [&](const StatQuery &phi) { return simulate_M_query(phi, d_oracle); },
        "sq_fermionized");
}

Secret identify_secret_from_distribution(const DistributionTable &m) {
    if (m.num_bits() < 3) {
        throw Error(ErrorKind::LengthMismatch, "expected a distribution over n+2 >= 3 bits");
    }
    const std::size_t n = m.num_bits() - 2;
    if (n > kMaxIdentifyBits) {
        throw Error(ErrorKind::TooLarge, "brute-force identification supports n <= " + std::to_string(kMaxIdentifyBits));
    }
    double total = 0;
    for (double p : m.mass()) {
        total += p;
    }
    const double weight = std::ldexp(1.0, -static_cast<int>(n));
    double best_tvd = 2;
    std::uint64_t best = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); s++) {
        // tvd = 1/2 (sum over support of |M - 2^-n| + mass of M off the support).
        double on_support_diff = 0;
        double on_support_mass = 0;
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); x++) {
            const bool y = parity_of(x & s);
            const double p = m[pack_xyz(x, y, y != parity_of(x))];
            on_support_diff += std::abs(p - weight);
            on_support_mass += p;
        }
        const double d = (on_support_diff + (total - on_support_mass)) / 2;
        if (d < best_tvd) {
            best_tvd = d;
            best = s;
        }
    }
    if (!(best_tvd < 0.25)) {
        throw Error(ErrorKind::PromiseViolated,
                    "closest fermionized parity is at distance " + std::to_string(best_tvd) + " >= 1/4");
    }
    return Secret(BitString(n, best));
}

Hypothesis evaluator_to_pac(Evaluator e) {
    if (e.num_bits() < 3) {
        throw Error(ErrorKind::LengthMismatch, "expected an evaluator over n+2 >= 3 bits");
    }
    return [e = std::move(e)](std::uint64_t x) {
        const bool p = parity_of(x);
        return !(e(pack_xyz(x, false, p)) >= e(pack_xyz(x, true, !p)));
    };
}

PacErrorEstimate pac_error(const Hypothesis &h, const Secret &s, std::uint64_t seed, std::size_t mc_samples) {
    const std::size_t n = s.size();
    PacErrorEstimate est;
    if (n <= kMaxExactPacBits) {
        std::uint64_t wrong = 0;
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); x++) {
            wrong += h(x) != parity_of(x & s.value());
        }
        est.evaluations = std::size_t{1} << n;
        est.value = static_cast<double>(wrong) / static_cast<double>(est.evaluations);
        est.lower = est.upper = est.value;
        est.exact = true;
        return est;
    }
    if (mc_samples == 0) {
        throw Error(ErrorKind::InvalidArgument, "Monte-Carlo PAC error needs at least one sample");
    }
    Rng rng(seed);
    std::uint64_t wrong = 0;
    for (std::size_t i = 0; i < mc_samples; i++) {
        const std::uint64_t x = rng() >> (64 - n);
        wrong += h(x) != parity_of(x & s.value());
    }
    const double trials = static_cast<double>(mc_samples);
    const double p = static_cast<double>(wrong) / trials;
    constexpr double z = 1.959963984540054;
    const double denom = 1 + z * z / trials;
    const double center = (p + z * z / (2 * trials)) / denom;
    const double half = z * std::sqrt(p * (1 - p) / trials + z * z / (4 * trials * trials)) / denom;
    est.value = p;
    est.lower = std::max(0.0, center - half);
    est.upper = std::min(1.0, center + half);
    est.exact = false;
    est.evaluations = mc_samples;
    return est;
}

}  // namespace mglab
