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

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <ostream>
#include <vector>

#include <Eigen/Dense>

#include "mglab/dist.h"
#include "mglab/gates.h"
#include "mglab/pfaffian.h"
#include "mglab/rng.h"

namespace mglab {

inline void PrintTo(const Secret &s, std::ostream *out) {
    *out << s.str();
}

inline void PrintTo(const BitString &b, std::ostream *out) {
    *out << b.str();
}

}  // namespace mglab

namespace mglab::testing {

inline double uniform(Rng &rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

inline std::complex<double> random_complex(Rng &rng) {
    return {uniform(rng, -1, 1), uniform(rng, -1, 1)};
}

/// Haar-ish SU(2) element from a random unit quaternion.
inline Eigen::Matrix2cd random_su2(Rng &rng) {
    double q[4];
    double norm = 0;
    do {
        norm = 0;
        for (double &v : q) {
            v = uniform(rng, -1, 1);
            norm += v * v;
        }
    } while (norm < 1e-6 || norm > 1);
    norm = std::sqrt(norm);
    const std::complex<double> a(q[0] / norm, q[1] / norm);
    const std::complex<double> b(q[2] / norm, q[3] / norm);
    Eigen::Matrix2cd m;
    m << a, -std::conj(b), b, std::conj(a);
    return m;
}

inline Matrix4 random_matchgate(Rng &rng) {
    const Eigen::Matrix2cd w = random_su2(rng);
    const Eigen::Matrix2cd q = random_su2(rng);
    const std::complex<double> phase = std::polar(1.0, uniform(rng, 0, 2 * std::numbers::pi));
    Matrix4 u = Matrix4::Zero();
    u(0, 0) = w(0, 0);
    u(0, 3) = w(0, 1);
    u(3, 0) = w(1, 0);
    u(3, 3) = w(1, 1);
    u(1, 1) = q(0, 0);
    u(1, 2) = q(0, 1);
    u(2, 1) = q(1, 0);
    u(2, 2) = q(1, 1);
    return phase * u;
}

/// Random unitary via QR of a complex Gaussian-like matrix; generically not a matchgate.
inline Matrix4 random_unitary(Rng &rng) {
    Matrix4 a;
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            a(r, c) = random_complex(rng);
        }
    }
    Eigen::HouseholderQR<Matrix4> qr(a);
    return qr.householderQ() * Matrix4::Identity();
}

inline Gate2Q random_gate(Rng &rng, std::size_t lower_wire) {
    switch (uniform_below(rng, 3)) {
        case 0:
            return Gate2Q::ux(lower_wire, uniform(rng, -4, 4));
        case 1:
            return Gate2Q::fswap(lower_wire);
        default:
            return Gate2Q::make_custom(lower_wire, random_matchgate(rng));
    }
}

/// Random brickwork-ish circuit: each layer places gates on a random subset
/// of disjoint pairs.
inline MatchgateCircuit random_circuit(Rng &rng, std::size_t n, std::size_t depth) {
    MatchgateCircuit c;
    c.n = n;
    for (std::size_t d = 0; d < depth; d++) {
        std::vector<Gate2Q> layer;
        std::size_t w = uniform_below(rng, 2);
        while (w + 1 < n) {
            if (uniform_below(rng, 4) != 0) {
                layer.push_back(random_gate(rng, w));
                w += 2;
            } else {
                w += 1;
            }
        }
        c.layers.push_back(std::move(layer));
    }
    return c;
}

inline SkewMatrix random_skew(Rng &rng, std::size_t dim) {
    const auto d = static_cast<Eigen::Index>(dim);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (Eigen::Index i = 0; i < d; i++) {
        for (Eigen::Index j = i + 1; j < d; j++) {
            m(i, j) = random_complex(rng);
            m(j, i) = -m(i, j);
        }
    }
    return SkewMatrix(std::move(m));
}

/// Pfaffian by expansion along the first row. Exponential; test oracle only.
inline std::complex<double> pfaffian_by_expansion(const Eigen::MatrixXcd &a) {
    const Eigen::Index m = a.rows();
    if (m == 0) {
        return 1;
    }
    if (m % 2 == 1) {
        return 0;
    }
    std::complex<double> total = 0;
    for (Eigen::Index j = 1; j < m; j++) {
        std::vector<Eigen::Index> keep;
        for (Eigen::Index k = 1; k < m; k++) {
            if (k != j) {
                keep.push_back(k);
            }
        }
        Eigen::MatrixXcd minor(m - 2, m - 2);
        for (Eigen::Index r = 0; r < m - 2; r++) {
            for (Eigen::Index c = 0; c < m - 2; c++) {
                minor(r, c) = a(keep[r], keep[c]);
            }
        }
        const double sign = (j % 2 == 1) ? 1.0 : -1.0;
        total += sign * a(0, j) * pfaffian_by_expansion(minor);
    }
    return total;
}

/// Full 2^n x 2^n unitary of a gate on wires (w, w+1) via Kronecker products;
/// an independent route to the state vector kernel.
inline Eigen::MatrixXcd embed_gate_dense(const Matrix4 &u, std::size_t n, std::size_t w) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    auto kron = [](const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
        Eigen::MatrixXcd r(a.rows() * b.rows(), a.cols() * b.cols());
        for (Eigen::Index i = 0; i < a.rows(); i++) {
            for (Eigen::Index j = 0; j < a.cols(); j++) {
                r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
            }
        }
        return r;
    };
    for (std::size_t k = 0; k < n;) {
        if (k == w) {
            out = kron(out, Eigen::MatrixXcd(u));
            k += 2;
        } else {
            out = kron(out, Eigen::MatrixXcd::Identity(2, 2));
            k += 1;
        }
    }
    return out;
}

}  // namespace mglab::testing
