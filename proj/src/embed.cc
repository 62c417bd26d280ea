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

#include "mglab/embed.h"

#include <cmath>
#include <numbers>
#include <string>

#include "mglab/error.h"

namespace mglab {

namespace {

void append_block(std::vector<Gate2Q> &gates, std::size_t offset, std::size_t k) {
    for (const auto &layer : parity_block_circuit(k).layers) {
        for (Gate2Q g : layer) {
            g.wires = {g.wires[0] + offset, g.wires[1] + offset};
            gates.push_back(g);
        }
    }
}

}  // namespace

MatchgateCircuit parity_block_circuit(std::size_t k) {
    if (k == 0) {
        throw Error(ErrorKind::InvalidArgument, "parity block needs k >= 1");
    }
    MatchgateCircuit c;
    c.n = k;
    for (std::size_t start : {std::size_t{0}, std::size_t{1}}) {
        std::vector<Gate2Q> layer;
        for (std::size_t w = start; w + 1 < k; w += 2) {
            layer.push_back(Gate2Q::ux(w, std::numbers::pi / 2));
        }
        if (!layer.empty()) {
            c.layers.push_back(std::move(layer));
        }
    }
    return c;
}

EmbeddingPlan plan_permutation(const Secret &s, NoiseRate eta, bool local) {
    const std::size_t n = s.size();
    EmbeddingPlan plan{s, eta, local, s.bits().weight() + 1, {}, {}};
    for (std::size_t i = 0; i < n; i++) {
        if (s.bits()[i]) {
            plan.wire_roles.push_back(i);
        }
    }
    plan.wire_roles.push_back(n);
    plan.wire_roles.push_back(n + 1);
    for (std::size_t i = 0; i < n; i++) {
        if (!s.bits()[i]) {
            plan.wire_roles.push_back(i);
        }
    }

    // Odd-even transposition sort on the destination keys; every exchange is
    // one adjacent transposition.
    std::vector<std::size_t> keys = plan.wire_roles;
    const std::size_t wires = keys.size();
    for (std::size_t round = 0; round < wires; round++) {
        for (std::size_t k = round % 2; k + 1 < wires; k += 2) {
            if (keys[k] > keys[k + 1]) {
                std::swap(keys[k], keys[k + 1]);
                plan.transpositions.push_back(k);
            }
        }
    }
    return plan;
}

EmbeddedCircuit embed_parity(const Secret &s, bool local) {
    return embed_noisy_parity(s, NoiseRate(0), local);
}

EmbeddedCircuit embed_noisy_parity(const Secret &s, NoiseRate eta, bool local) {
    if (s.size() > kMaxEmbedSecretBits) {
        throw Error(ErrorKind::TooLarge, "secret of length " + std::to_string(s.size()) + " exceeds " +
                                             std::to_string(kMaxEmbedSecretBits));
    }
    EmbeddingPlan plan = plan_permutation(s, eta, local);
    const std::size_t n = s.size();
    const std::size_t m = plan.m;

    std::vector<Gate2Q> gates;
    append_block(gates, 0, m);
    append_block(gates, m, n + 2 - m);

    const double t = 2 * std::asin(std::sqrt(eta.value()));
    const bool noisy = eta.value() != 0;
    if (local) {
        for (std::size_t k : plan.transpositions) {
            gates.push_back(Gate2Q::fswap(k));
        }
        if (noisy) {
            gates.push_back(Gate2Q::ux(n, t));
        }
    } else if (noisy) {
        gates.push_back(Gate2Q::ux(m - 1, t));
    }
    return EmbeddedCircuit{compact_layers(n + 2, gates), std::move(plan)};
}

DistributionTable apply_relabeling(const EmbeddingPlan &plan, DistributionTable measured) {
    if (measured.num_bits() != plan.num_wires()) {
        throw Error(ErrorKind::DimensionMismatch, "distribution width differs from the plan's wire count");
    }
    for (std::size_t k : plan.transpositions) {
        measured = measured.swap_bits(k, k + 1);
    }
    return measured;
}

DistributionTable embedded_distribution(const EmbeddedCircuit &embedded) {
    DistributionTable measured = born_distribution(embedded.circuit);
    if (embedded.plan.local) {
        return measured;
    }
    return apply_relabeling(embedded.plan, std::move(measured));
}

}  // namespace mglab
