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

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "mglab/bits.h"

namespace mglab {

/// Desk-scale guard for normalization by enumeration.
constexpr std::size_t kMaxGaussianModes = 20;

/// One strictly-upper entry (i < j) of a skew-symmetric matrix.
struct UpperEntry {
    std::size_t i;
    std::size_t j;
    std::complex<double> value;
};

/// Complex skew-symmetric matrix. The diagonal is zeroed on construction and
/// A^T = -A is checked entrywise within 1e-12.
class SkewMatrix {
   public:
    SkewMatrix() = default;
    explicit SkewMatrix(Eigen::MatrixXcd entries);

    static SkewMatrix zero(std::size_t dim);
    static SkewMatrix from_upper(std::size_t dim, const std::vector<UpperEntry> &upper);

    std::size_t dim() const {
        return static_cast<std::size_t>(entries_.rows());
    }
    const Eigen::MatrixXcd &matrix() const {
        return entries_;
    }
    std::complex<double> operator()(std::size_t i, std::size_t j) const {
        return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
    std::vector<UpperEntry> upper_entries() const;

   private:
    Eigen::MatrixXcd entries_;
};

/// Pfaffian by Parlett-Reid tridiagonalization with partial pivoting.
/// Pf of the empty matrix is 1; odd dimension gives 0.
std::complex<double> pfaffian(const SkewMatrix &a);

/// Principal submatrix on the indices where x has a 1, in index order.
SkewMatrix restrict_to(const SkewMatrix &g, const BitString &x);

/// State N exp(sum_ij G_ij c_i^dag c_j^dag)|0>.
struct GaussianState {
    SkewMatrix generator;
    double norm_constant = 1;

    std::size_t num_modes() const {
        return generator.dim();
    }
};

/// Computes N = (sum over even-weight x of |Pf(G|_x)|^2)^{-1/2} by enumeration.
/// Throws TooLarge above kMaxGaussianModes, DegenerateState on underflow.
GaussianState normalize(const SkewMatrix &g);

/// <x|psi> = N Pf(G|_x); exactly zero on odd-weight x.
std::complex<double> amplitude(const GaussianState &state, const BitString &x);

}  // namespace mglab
