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

#include "mglab/dist.h"

#include <cmath>
#include <memory>
#include <string>

#include "mglab/error.h"

namespace mglab {

namespace {

void check_secret_size(const Secret &s, std::size_t limit) {
    if (s.size() > limit) {
        throw Error(ErrorKind::TooLarge,
                    "secret of length " + std::to_string(s.size()) + " exceeds " + std::to_string(limit));
    }
}

// Shared by the four zoo tables: weight of (x, label) given whether the label
// agrees with chi_s(x).
template <typename Weight>
std::vector<double> parity_table(const Secret &s, std::size_t extra_bits, Weight weight) {
    const std::size_t n = s.size();
    std::vector<double> mass(std::size_t{1} << (n + extra_bits), 0.0);
    const double base = std::ldexp(1.0, -static_cast<int>(n));
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); x++) {
        const bool label = parity_of(x & s.value());
        weight(mass, x, label, parity_of(x), base);
    }
    return mass;
}

}  // namespace

Secret::Secret(BitString bits) : bits_(bits) {
    if (bits_.size() == 0) {
        throw Error(ErrorKind::InvalidArgument, "secret must have length at least 1");
    }
}

Secret Secret::from_string(std::string_view text) {
    return Secret(BitString::from_string(text));
}

NoiseRate::NoiseRate(double eta) : eta_(eta) {
    if (!(eta >= 0 && eta <= 1)) {
        throw Error(ErrorKind::InvalidArgument, "noise rate must lie in [0, 1], got " + std::to_string(eta));
    }
}

bool chi(const Secret &s, const BitString &x) {
    if (x.size() != s.size()) {
        throw Error(ErrorKind::LengthMismatch,
                    "x has length " + std::to_string(x.size()) + ", secret " + std::to_string(s.size()));
    }
    return parity_of(x.value() & s.value());
}

FermionizedLabel xi(const Secret &s, const BitString &x) {
    const bool y = chi(s, x);
    return {y, y != x.parity()};
}

DistributionTable parity_dist(const Secret &s) {
    return noisy_parity_dist(s, NoiseRate(0));
}

DistributionTable noisy_parity_dist(const Secret &s, NoiseRate eta) {
    check_secret_size(s, kMaxZooSecretBits);
    const double e = eta.value();
    auto mass = parity_table(s, 1, [e](std::vector<double> &m, std::uint64_t x, bool label, bool, double base) {
        m[pack_xy(x, label)] = (1 - e) * base;
        m[pack_xy(x, !label)] = e * base;
    });
    return DistributionTable(s.size() + 1, std::move(mass));
}

DistributionTable fermionized_parity_dist(const Secret &s) {
    return fermionized_noisy_parity_dist(s, NoiseRate(0));
}

DistributionTable fermionized_noisy_parity_dist(const Secret &s, NoiseRate eta) {
    check_secret_size(s, kMaxZooSecretBits - 2);
    const double e = eta.value();
    auto mass =
        parity_table(s, 2, [e](std::vector<double> &m, std::uint64_t x, bool label, bool x_parity, double base) {
            const bool z = label != x_parity;
            m[pack_xyz(x, label, z)] = (1 - e) * base;
            m[pack_xyz(x, !label, !z)] = e * base;
        });
    return DistributionTable(s.size() + 2, std::move(mass));
}

DistributionTable even_parity_dist(std::size_t k) {
    if (k == 0) {
        throw Error(ErrorKind::InvalidArgument, "even parity distribution needs k >= 1");
    }
    if (k > kMaxZooSecretBits) {
        throw Error(ErrorKind::TooLarge, "k=" + std::to_string(k) + " exceeds " + std::to_string(kMaxZooSecretBits));
    }
    std::vector<double> mass(std::size_t{1} << k, 0.0);
    const double weight = std::ldexp(1.0, 1 - static_cast<int>(k));
    for (std::uint64_t x = 0; x < mass.size(); x++) {
        if (!parity_of(x)) {
            mass[x] = weight;
        }
    }
    return DistributionTable(k, std::move(mass));
}

Evaluator::Evaluator(std::size_t n, std::function<double(std::uint64_t)> fn) : n_(n), fn_(std::move(fn)) {
    if (n > kMaxBits) {
        throw Error(ErrorKind::TooLarge, "evaluator over " + std::to_string(n) + " bits");
    }
}

double Evaluator::operator()(std::uint64_t x) const {
    if (n_ < 64 && (x >> n_) != 0) {
        throw Error(ErrorKind::InvalidArgument, "query outside the " + std::to_string(n_) + "-bit domain");
    }
    const double v = fn_(x);
    if (!(v >= 0 && v <= 1)) {
        throw Error(ErrorKind::RangeViolation, "evaluator output " + std::to_string(v) + " outside [0, 1]");
    }
    return v;
}

double Evaluator::operator()(const BitString &x) const {
    if (x.size() != n_) {
        throw Error(ErrorKind::LengthMismatch,
                    "query of length " + std::to_string(x.size()) + " to a " + std::to_string(n_) + "-bit evaluator");
    }
    return (*this)(x.value());
}

std::vector<double> Evaluator::tabulate() const {
    std::vector<double> out(std::size_t{1} << n_);
    for (std::uint64_t x = 0; x < out.size(); x++) {
        out[x] = (*this)(x);
    }
    return out;
}

Evaluator exact_evaluator(DistributionTable table) {
    const std::size_t n = table.num_bits();
    auto shared = std::make_shared<const DistributionTable>(std::move(table));
    return Evaluator(n, [shared](std::uint64_t x) { return (*shared)[x]; });
}

Evaluator eval_reduction_D_from_M(Evaluator m_evaluator) {
    if (m_evaluator.num_bits() < 3) {
        throw Error(ErrorKind::LengthMismatch, "an M evaluator needs at least 3 bits");
    }
    const std::size_t n = m_evaluator.num_bits() - 2;
    return Evaluator(n + 1, [m = std::move(m_evaluator)](std::uint64_t xy) {
        const std::uint64_t x = xy >> 1;
        const bool y = (xy & 1) != 0;
        return m(pack_xyz(x, y, parity_of(x) != y));
    });
}

Evaluator eval_reduction_M_from_D(Evaluator d_evaluator) {
    if (d_evaluator.num_bits() < 2) {
        throw Error(ErrorKind::LengthMismatch, "a D evaluator needs at least 2 bits");
    }
    const std::size_t n = d_evaluator.num_bits() - 1;
    return Evaluator(n + 2, [d = std::move(d_evaluator)](std::uint64_t xyz) {
        const std::uint64_t x = xyz >> 2;
        const bool y = ((xyz >> 1) & 1) != 0;
        const bool z = (xyz & 1) != 0;
        if ((parity_of(x) != y) != z) {
            return 0.0;
        }
        return d(pack_xy(x, y));
    });
}

Generator::Generator(std::size_t n, std::function<std::uint64_t()> draw_one) : n_(n), draw_one_(std::move(draw_one)) {
}

std::uint64_t Generator::operator()() {
    return draw_one_();
}

std::vector<std::uint64_t> Generator::draw(std::size_t count) {
    std::vector<std::uint64_t> out(count);
    for (auto &x : out) {
        x = draw_one_();
    }
    return out;
}

Generator table_generator(const DistributionTable &table, std::uint64_t seed) {
    auto sampler = std::make_shared<Sampler>(table, seed);
    return Generator(table.num_bits(), [sampler] { return sampler->next(); });
}

Generator gen_reduction_pair(Generator source, ReductionDirection direction) {
    const std::size_t n_in = source.num_bits();
    auto inner = std::make_shared<Generator>(std::move(source));
    if (direction == ReductionDirection::MToD) {
        if (n_in < 3) {
            throw Error(ErrorKind::LengthMismatch, "an M generator needs at least 3 bits");
        }
        return Generator(n_in - 1, [inner] { return (*inner)() >> 1; });
    }
    if (n_in < 2) {
        throw Error(ErrorKind::LengthMismatch, "a D generator needs at least 2 bits");
    }
    return Generator(n_in + 1, [inner] {
        const std::uint64_t xy = (*inner)();
        const std::uint64_t x = xy >> 1;
        const bool y = (xy & 1) != 0;
        return (xy << 1) | static_cast<std::uint64_t>(parity_of(x) != y);
    });
}

}  // namespace mglab
