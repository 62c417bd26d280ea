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

#include "mglab/pfaffian.h"

#include <cmath>
#include <string>

#include "mglab/error.h"

namespace mglab {

SkewMatrix::SkewMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) {
        throw Error(ErrorKind::DimensionMismatch, "skew matrix must be square");
    }
    const Eigen::Index m = entries_.rows();
    for (Eigen::Index i = 0; i < m; i++) {
        entries_(i, i) = 0;
        for (Eigen::Index j = i + 1; j < m; j++) {
            if (std::abs(entries_(i, j) + entries_(j, i)) > 1e-12) {
                throw Error(ErrorKind::InvalidArgument,
                            "matrix is not skew-symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    }
}

SkewMatrix SkewMatrix::zero(std::size_t dim) {
    const auto d = static_cast<Eigen::Index>(dim);
    return SkewMatrix(Eigen::MatrixXcd::Zero(d, d));
}

SkewMatrix SkewMatrix::from_upper(std::size_t dim, const std::vector<UpperEntry> &upper) {
    const auto d = static_cast<Eigen::Index>(dim);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (const auto &e : upper) {
        if (e.i >= e.j || e.j >= dim) {
            throw Error(ErrorKind::InvalidArgument, "upper entry (" + std::to_string(e.i) + "," +
                                                        std::to_string(e.j) + ") is not strictly upper in range");
        }
        const auto i = static_cast<Eigen::Index>(e.i);
        const auto j = static_cast<Eigen::Index>(e.j);
        m(i, j) = e.value;
        m(j, i) = -e.value;
    }
    return SkewMatrix(std::move(m));
}

std::vector<UpperEntry> SkewMatrix::upper_entries() const {
    std::vector<UpperEntry> out;
    for (std::size_t i = 0; i < dim(); i++) {
        for (std::size_t j = i + 1; j < dim(); j++) {
            if ((*this)(i, j) != std::complex<double>(0)) {
                out.push_back({i, j, (*this)(i, j)});
            }
        }
    }
    return out;
}

std::complex<double> pfaffian(const SkewMatrix &a) {
    const Eigen::Index m = static_cast<Eigen::Index>(a.dim());
    if (m == 0) {
        return 1;
    }
    if (m % 2 == 1) {
        return 0;
    }
    Eigen::MatrixXcd w = a.matrix();
    std::complex<double> result = 1;
    for (Eigen::Index k = 0; k + 1 < m; k += 2) {
        // Pivot: largest entry in column k below the diagonal.
        Eigen::Index pivot = k + 1;
        double best = std::abs(w(k + 1, k));
        for (Eigen::Index i = k + 2; i < m; i++) {
            const double v = std::abs(w(i, k));
            if (v > best) {
                best = v;
                pivot = i;
            }
        }
        if (pivot != k + 1) {
            w.row(k + 1).swap(w.row(pivot));
            w.col(k + 1).swap(w.col(pivot));
            result = -result;
        }
        if (w(k + 1, k) == std::complex<double>(0)) {
            return 0;
        }
        result *= w(k, k + 1);
        if (k + 2 < m) {
            const Eigen::Index rest = m - k - 2;
            const Eigen::VectorXcd tau = w.row(k).segment(k + 2, rest).transpose() / w(k, k + 1);
            const Eigen::VectorXcd pivot_col = w.col(k + 1).segment(k + 2, rest);
            w.bottomRightCorner(rest, rest) += tau * pivot_col.transpose() - pivot_col * tau.transpose();
        }
    }
    return result;
}

SkewMatrix restrict_to(const SkewMatrix &g, const BitString &x) {
    if (x.size() != g.dim()) {
        throw Error(ErrorKind::LengthMismatch, "bit string length " + std::to_string(x.size()) +
                                                   " differs from matrix dimension " + std::to_string(g.dim()));
    }
    std::vector<Eigen::Index> keep;
    for (std::size_t i = 0; i < x.size(); i++) {
        if (x[i]) {
            keep.push_back(static_cast<Eigen::Index>(i));
        }
    }
    const auto k = static_cast<Eigen::Index>(keep.size());
    Eigen::MatrixXcd sub(k, k);
    for (Eigen::Index r = 0; r < k; r++) {
        for (Eigen::Index c = 0; c < k; c++) {
            sub(r, c) = g.matrix()(keep[r], keep[c]);
        }
    }
    return SkewMatrix(std::move(sub));
}

GaussianState normalize(const SkewMatrix &g) {
    const std::size_t n = g.dim();
    if (n > kMaxGaussianModes) {
        throw Error(ErrorKind::TooLarge, std::to_string(n) + " modes exceeds the enumeration limit of " +
                                             std::to_string(kMaxGaussianModes));
    }
    double total = 0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); x++) {
        if (parity_of(x)) {
            continue;
        }
        total += std::norm(pfaffian(restrict_to(g, BitString(n, x))));
    }
    if (!(total >= 1e-300) || !std::isfinite(total)) {
        throw Error(ErrorKind::DegenerateState, "normalization sum is " + std::to_string(total));
    }
    return GaussianState{g, 1 / std::sqrt(total)};
}

std::complex<double> amplitude(const GaussianState &state, const BitString &x) {
    if (x.size() != state.num_modes()) {
        throw Error(ErrorKind::LengthMismatch, "bit string length " + std::to_string(x.size()) + " differs from " +
                                                   std::to_string(state.num_modes()) + " modes");
    }
    if (x.parity()) {
        return 0;
    }
    return state.norm_constant * pfaffian(restrict_to(state.generator, x));
}

}  // namespace mglab
