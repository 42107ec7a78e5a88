// Copyright 2026 The symverify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "symverify/linalg.hpp"

namespace symverify {

/// Seeded randomness for every sampling interface: std::mt19937_64 with the
/// conversions to doubles done here (the standard distributions are
/// implementation-defined), so streams are reproducible across toolchains.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Standard normal by Box-Muller.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0)
            u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * std::numbers::pi * u2);
        has_spare_ = true;
        return r * std::cos(2.0 * std::numbers::pi * u2);
    }

    Complex complex_normal() {
        const double re = normal();
        const double im = normal();
        return {re, im};
    }

    ComplexMatrix complex_gaussian(Index rows, Index cols) {
        ComplexMatrix m(rows, cols);
        for (Index j = 0; j < cols; ++j)
            for (Index i = 0; i < rows; ++i)
                m(i, j) = complex_normal();
        return m;
    }

    /// Haar-random unit vector: normalized complex Gaussian.
    ComplexVector haar_vector(Index dim) {
        ComplexVector v = complex_gaussian(dim, 1).col(0);
        return v / v.norm();
    }

    /// Haar-random unitary via QR of a complex Gaussian matrix with the
    /// diagonal phases of R fixed.
    ComplexMatrix haar_unitary(Index dim) {
        const ComplexMatrix z = complex_gaussian(dim, dim);
        Eigen::HouseholderQR<ComplexMatrix> qr(z);
        ComplexMatrix q = qr.householderQ() * identity_matrix(dim);
        const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
        for (Index k = 0; k < dim; ++k) {
            const double a = std::abs(r(k, k));
            if (a > 0)
                q.col(k) *= r(k, k) / a;
        }
        return q;
    }

  private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Per-trial seed: trials are independent streams keyed by index.
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) { return seed + trial; }

} // namespace symverify
