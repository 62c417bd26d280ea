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

#include <array>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace mglab {

using Matrix4 = Eigen::Matrix4cd;

/// Default tolerance for unitarity and matchgate block-structure checks.
constexpr double kGateTolerance = 1e-9;

/// Two-qubit gate matrices use the basis order |00>,|01>,|10>,|11> where the
/// left ket belongs to the lower wire index.
Matrix4 ux_gate(double t);
Matrix4 fswap_gate();

/// True iff `u` is e^{i phi} times a direct sum of two SU(2) blocks, one on
/// span{|00>,|11>} and one on span{|01>,|10>}. The SU(2) condition is checked
/// as det(outer block) == det(inner block), which avoids solving for phi.
/// Throws NonUnitary if u^dagger u differs from the identity by more than tol.
bool is_matchgate(const Matrix4 &u, double tol = kGateTolerance);

enum class GateKind { UX, FSWAP, Custom };

struct Gate2Q {
    GateKind kind = GateKind::FSWAP;
    /// Wire pair the gate acts on. Valid gates have wires[1] == wires[0] + 1.
    std::array<std::size_t, 2> wires{0, 1};
    /// Rotation angle; meaningful for UX only.
    double t = 0;
    /// Gate matrix; meaningful for Custom only.
    Matrix4 custom = Matrix4::Identity();

    static Gate2Q ux(std::size_t lower_wire, double t);
    static Gate2Q fswap(std::size_t lower_wire);
    static Gate2Q make_custom(std::size_t lower_wire, const Matrix4 &matrix);

    Matrix4 matrix() const;
};

struct MatchgateCircuit {
    std::size_t n = 0;
    std::vector<std::vector<Gate2Q>> layers;

    std::size_t depth() const {
        return layers.size();
    }
    std::size_t gate_count() const;
    /// All gates in execution order.
    std::vector<Gate2Q> flattened() const;
};

/// Throws InvalidWire, OverlappingGates or NotAMatchgate naming the offending
/// layer and gate index.
void validate_circuit(const MatchgateCircuit &circuit, double tol = kGateTolerance);

/// Schedules gates as early as possible: each gate lands one layer after the
/// latest layer already touching either of its wires. Per-wire gate order is
/// preserved, so the circuit unitary is unchanged.
MatchgateCircuit compact_layers(std::size_t n, const std::vector<Gate2Q> &gates);

}  // namespace mglab
