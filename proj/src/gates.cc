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

#include "mglab/gates.h"

#include <cmath>
#include <complex>
#include <string>

#include "mglab/error.h"

namespace mglab {

namespace {

std::string where(std::size_t layer, std::size_t gate) {
    return "layer " + std::to_string(layer) + ", gate " + std::to_string(gate);
}

}  // namespace

Matrix4 ux_gate(double t) {
    const std::complex<double> c = std::cos(t / 2);
    const std::complex<double> s = std::complex<double>(0, std::sin(t / 2));
    Matrix4 u = Matrix4::Zero();
    u(0, 0) = c;
    u(1, 1) = c;
    u(2, 2) = c;
    u(3, 3) = c;
    u(0, 3) = s;
    u(1, 2) = s;
    u(2, 1) = s;
    u(3, 0) = s;
    return u;
}

Matrix4 fswap_gate() {
    Matrix4 u = Matrix4::Zero();
    u(0, 0) = 1;
    u(1, 2) = 1;
    u(2, 1) = 1;
    u(3, 3) = -1;
    return u;
}

bool is_matchgate(const Matrix4 &u, double tol) {
    const double unitarity_error = (u.adjoint() * u - Matrix4::Identity()).cwiseAbs().maxCoeff();
    if (!(unitarity_error <= tol)) {
        throw Error(ErrorKind::NonUnitary, "U^dagger U deviates from identity by " + std::to_string(unitarity_error));
    }
    constexpr int off_block[8][2] = {{0, 1}, {0, 2}, {1, 0}, {1, 3}, {2, 0}, {2, 3}, {3, 1}, {3, 2}};
    for (const auto &rc : off_block) {
        if (std::abs(u(rc[0], rc[1])) >= tol) {
            return false;
        }
    }
    const std::complex<double> det_outer = u(0, 0) * u(3, 3) - u(0, 3) * u(3, 0);
    const std::complex<double> det_inner = u(1, 1) * u(2, 2) - u(1, 2) * u(2, 1);
    return std::abs(det_outer - det_inner) <= tol;
}

Gate2Q Gate2Q::ux(std::size_t lower_wire, double t) {
    Gate2Q g;
    g.kind = GateKind::UX;
    g.wires = {lower_wire, lower_wire + 1};
    g.t = t;
    return g;
}

Gate2Q Gate2Q::fswap(std::size_t lower_wire) {
    Gate2Q g;
    g.kind = GateKind::FSWAP;
    g.wires = {lower_wire, lower_wire + 1};
    return g;
}

Gate2Q Gate2Q::make_custom(std::size_t lower_wire, const Matrix4 &matrix) {
    Gate2Q g;
    g.kind = GateKind::Custom;
    g.wires = {lower_wire, lower_wire + 1};
    g.custom = matrix;
    return g;
}

Matrix4 Gate2Q::matrix() const {
    switch (kind) {
        case GateKind::UX:
            return ux_gate(t);
        case GateKind::FSWAP:
            return fswap_gate();
        case GateKind::Custom:
            return custom;
    }
    return custom;
}

std::size_t MatchgateCircuit::gate_count() const {
    std::size_t total = 0;
    for (const auto &layer : layers) {
        total += layer.size();
    }
    return total;
}

std::vector<Gate2Q> MatchgateCircuit::flattened() const {
    std::vector<Gate2Q> out;
    out.reserve(gate_count());
    for (const auto &layer : layers) {
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

void validate_circuit(const MatchgateCircuit &circuit, double tol) {
    for (std::size_t l = 0; l < circuit.layers.size(); l++) {
        std::vector<bool> used(circuit.n, false);
        const auto &layer = circuit.layers[l];
        for (std::size_t g = 0; g < layer.size(); g++) {
            const Gate2Q &gate = layer[g];
            const auto [a, b] = gate.wires;
            if (b != a + 1) {
                throw Error(ErrorKind::InvalidWire, "wires (" + std::to_string(a) + "," + std::to_string(b) +
                                                        ") are not adjacent at " + where(l, g));
            }
            if (b >= circuit.n) {
                throw Error(ErrorKind::InvalidWire, "wire " + std::to_string(b) + " out of range for n=" +
                                                        std::to_string(circuit.n) + " at " + where(l, g));
            }
            if (used[a] || used[b]) {
                throw Error(ErrorKind::OverlappingGates, "gates share a wire at " + where(l, g));
            }
            used[a] = true;
            used[b] = true;
            if (gate.kind == GateKind::Custom) {
                bool ok = false;
                try {
                    ok = is_matchgate(gate.custom, tol);
                } catch (const Error &e) {
                    throw Error(ErrorKind::NotAMatchgate, std::string(e.what()) + " at " + where(l, g));
                }
                if (!ok) {
                    throw Error(ErrorKind::NotAMatchgate, "custom matrix fails the block test at " + where(l, g));
                }
            } else if (gate.kind == GateKind::UX && !std::isfinite(gate.t)) {
                throw Error(ErrorKind::NotAMatchgate, "non-finite UX angle at " + where(l, g));
            }
        }
    }
}

MatchgateCircuit compact_layers(std::size_t n, const std::vector<Gate2Q> &gates) {
    MatchgateCircuit out;
    out.n = n;
    // next_free[w] is the first layer index after the last gate touching wire w.
    std::vector<std::size_t> next_free(n, 0);
    for (const Gate2Q &gate : gates) {
        const auto [a, b] = gate.wires;
        if (b != a + 1 || b >= n) {
            throw Error(ErrorKind::InvalidWire, "cannot schedule gate on wires (" + std::to_string(a) + "," +
                                                    std::to_string(b) + ") with n=" + std::to_string(n));
        }
        const std::size_t layer = std::max(next_free[a], next_free[b]);
        if (layer == out.layers.size()) {
            out.layers.emplace_back();
        }
        out.layers[layer].push_back(gate);
        next_free[a] = layer + 1;
        next_free[b] = layer + 1;
    }
    return out;
}

}  // namespace mglab
