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
#include <numeric>
#include <string>
#include <vector>

#include "symverify/config.hpp"
#include "symverify/errors.hpp"
#include "symverify/linalg.hpp"

namespace symverify {

/// A unit vector together with the dimensions of the registers it lives on
/// (first register most significant).
class StateVector {
  public:
    StateVector(std::vector<Index> registers, ComplexVector amplitudes)
        : registers_(std::move(registers)), amplitudes_(std::move(amplitudes)) {
        const Index product =
            std::accumulate(registers_.begin(), registers_.end(), Index{1}, std::multiplies<>());
        if (registers_.empty() || product != amplitudes_.size())
            throw InvalidArgument("register dimensions multiply to " + std::to_string(product) +
                                  " but the state has " + std::to_string(amplitudes_.size()) +
                                  " amplitudes");
        if (!amplitudes_.allFinite())
            throw InvalidArgument("state amplitudes must be finite");
        const double norm = amplitudes_.norm();
        if (std::abs(norm - 1.0) > kTolerance)
            throw InvalidArgument("state is not normalized (norm " + std::to_string(norm) + ")");
    }

    /// Single-register state.
    explicit StateVector(const ComplexVector &amplitudes)
        : StateVector(std::vector<Index>{amplitudes.size()}, amplitudes) {}

    /// Normalizes v (which must be nonzero) onto the given registers.
    static StateVector normalized(std::vector<Index> registers, const ComplexVector &v) {
        const double norm = v.norm();
        if (!(norm > 0.0))
            throw DegenerateInput("cannot normalize the zero vector");
        return StateVector(std::move(registers), v / norm);
    }

    Index dim() const noexcept { return amplitudes_.size(); }
    const std::vector<Index> &registers() const noexcept { return registers_; }
    const ComplexVector &amplitudes() const noexcept { return amplitudes_; }
    Complex operator[](Index k) const { return amplitudes_(k); }

  private:
    std::vector<Index> registers_;
    ComplexVector amplitudes_;
};

/// A subspace given by an orthonormal basis (columns). May be empty.
struct Subspace {
    Index ambient_dim = 0;
    ComplexMatrix basis; // ambient_dim x dim

    Index dim() const noexcept { return basis.cols(); }

    ComplexMatrix projector() const {
        if (dim() == 0)
            return ComplexMatrix::Zero(ambient_dim, ambient_dim);
        return basis * basis.adjoint();
    }

    /// max |<b_i, b_j> - delta_ij|
    double orthonormality_residual() const {
        if (dim() == 0)
            return 0.0;
        return max_abs_diff(basis.adjoint() * basis, identity_matrix(dim()));
    }

    /// ||(I - P) v||
    double distance(const ComplexVector &v) const {
        if (dim() == 0)
            return v.norm();
        return (v - basis * (basis.adjoint() * v)).norm();
    }

    static Subspace empty(Index ambient) { return Subspace{ambient, ComplexMatrix(ambient, 0)}; }

    /// Orthonormalized span of the given columns.
    static Subspace span(const ComplexMatrix &columns, double drop_tol = 1e-8) {
        return Subspace{columns.rows(), orthonormalize(columns, drop_tol)};
    }
};

} // namespace symverify
