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
#include <vector>

#include "mglab/dist.h"
#include "mglab/gates.h"
#include "mglab/simulate.h"

namespace mglab {

/// Largest secret for which embeddings are built.
constexpr std::size_t kMaxEmbedSecretBits = 16;

/// Layout of M_s as two even-parity blocks followed by a bit permutation.
///
/// Before the permutation, block 1 occupies wires 0..m-1 and block 2 wires
/// m..n+1. wire_roles[w] is the output position that wire w is moved to:
/// block 1 carries the x-bits on the support of s followed by y (position n),
/// block 2 carries z (position n+1) followed by the remaining x-bits. y and z
/// therefore sit on the adjacent wires m-1 and m before the permutation, and
/// on n and n+1 after it.
struct EmbeddingPlan {
    Secret secret;
    NoiseRate eta;
    bool local = true;
    std::size_t m = 1;
    std::vector<std::size_t> wire_roles;
    /// Adjacent transpositions (k, k+1), stored by k, in application order.
    /// Produced by odd-even transposition sort so the network has depth at
    /// most n+2.
    std::vector<std::size_t> transpositions;

    std::size_t num_wires() const {
        return secret.size() + 2;
    }
};

/// Depth-2 brickwork of U_X(pi/2): layer one on (0,1),(2,3),..., layer two on
/// (1,2),(3,4),.... Empty for k = 1.
MatchgateCircuit parity_block_circuit(std::size_t k);

EmbeddingPlan plan_permutation(const Secret &s, NoiseRate eta = NoiseRate(0), bool local = true);

/// A circuit together with the plan it realizes. When plan.local is false,
/// the plan's transpositions are applied to measurement outcomes instead of
/// being compiled into FSWAP gates.
struct EmbeddedCircuit {
    MatchgateCircuit circuit;
    EmbeddingPlan plan;
};

/// Circuit whose (post-relabeling) Born distribution is M_s. Throws TooLarge.
EmbeddedCircuit embed_parity(const Secret &s, bool local);

/// Circuit whose (post-relabeling) Born distribution is M_s^eta: embed_parity
/// plus U_X(2 asin(sqrt(eta))) on the (y, z) wire pair.
EmbeddedCircuit embed_noisy_parity(const Secret &s, NoiseRate eta, bool local);

/// Applies the plan's transpositions to the bits of a measured distribution.
DistributionTable apply_relabeling(const EmbeddingPlan &plan, DistributionTable measured);

/// Born distribution of the circuit, relabeled when the plan is non-local.
DistributionTable embedded_distribution(const EmbeddedCircuit &embedded);

}  // namespace mglab
