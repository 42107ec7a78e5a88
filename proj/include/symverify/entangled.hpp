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
#include <string>
#include <utility>
#include <vector>

#include "symverify/config.hpp"
#include "symverify/errors.hpp"
#include "symverify/group_sum.hpp"
#include "symverify/linalg.hpp"
#include "symverify/rep.hpp"
#include "symverify/state.hpp"
#include "symverify/wfs.hpp"

namespace symverify {

/// Eigenvalue tolerance when reading off eigenspaces of acceptance operators.
inline constexpr double kSpectralTolerance = 1e-8;

// ---------------------------------------------------------------------------
// Vectorization: |vec A> = sum_ij A_ij |i>|j>, index i * cols + j.

/// Unnormalized vectorization of a square matrix.
inline ComplexVector vec_raw(const ComplexMatrix &a) {
    if (a.rows() != a.cols())
        throw InvalidArgument("vec: matrix must be square");
    const Index d = a.rows();
    ComplexVector v(d * d);
    for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j)
            v(i * d + j) = a(i, j);
    return v;
}

struct RawVec {
    ComplexVector vector;
    double norm = 0;
};

inline RawVec vec_with_norm(const ComplexMatrix &a) {
    ComplexVector v = vec_raw(a);
    const double n = v.norm();
    return {std::move(v), n};
}

/// vec(A) / ||A||_F as a state on two d-dimensional registers.
inline StateVector vec(const ComplexMatrix &a) {
    return StateVector::normalized({a.rows(), a.cols()}, vec_raw(a));
}

/// Inverse of vec_raw: the d x d matrix X with v = vec X.
inline ComplexMatrix unvec(const ComplexVector &v) {
    const auto d = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(v.size()))));
    if (d * d != v.size())
        throw InvalidArgument("unvec: length " + std::to_string(v.size()) + " is not a perfect square");
    ComplexMatrix x(d, d);
    for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j)
            x(i, j) = v(i * d + j);
    return x;
}

/// The standard maximally entangled state (1/sqrt d) sum_b |b>|b>.
inline StateVector phi_plus(Index d) {
    if (d < 1)
        throw InvalidArgument("phi_plus: dimension must be >= 1");
    return vec(identity_matrix(d));
}

// ---------------------------------------------------------------------------
// Maximally entangled states over subspaces.

/// |Phi_Pi> = (1/sqrt dim) sum_i |b_i> (x) |b_i^*> for an orthonormal basis
/// {b_i} of Pi; conjugation is entrywise in the computational basis. The
/// result does not depend on the basis chosen.
inline StateVector max_entangled_over(const Subspace &pi) {
    if (pi.dim() == 0)
        throw InvalidArgument("max_entangled_over: the subspace is zero-dimensional");
    const Index d2 = pi.ambient_dim;
    ComplexVector out = ComplexVector::Zero(d2 * d2);
    for (Index i = 0; i < pi.dim(); ++i) {
        const ComplexVector b = pi.basis.col(i);
        out += kron(b, ComplexVector(b.conjugate()));
    }
    out /= std::sqrt(static_cast<double>(pi.dim()));
    return StateVector({d2, d2}, out);
}

/// Orthonormal basis of the image of an orthogonal projector.
inline Subspace projector_image(const ComplexMatrix &projector) {
    return Subspace::span(projector, 1e-6);
}

// ---------------------------------------------------------------------------
// States passing weak Fourier sampling on the left register.

struct PsiLambda {
    StateVector state;
    double normalization = 0; // A_lambda^(phi)
};

/// (1/sqrt A) sum_h chi^lambda(h)^* (sigma(h) (x) I_D) |phi>, phi in C^{D^2}.
inline PsiLambda psi_lambda(const GroupRep &sigma, const Partition &lambda, const StateVector &phi) {
    require_partition_of(lambda, sigma, "psi_lambda");
    const Index dim = sigma.dim();
    if (phi.dim() != dim * dim)
        throw InvalidArgument("psi_lambda: phi must live in C^{D^2} = C^" + std::to_string(dim * dim));
    const auto &rho = irrep_of(lambda);
    const auto &group = sigma.group();
    const ComplexVector sum = group_sum(group.order(), dim * dim, 1, [&](std::size_t h) -> ComplexMatrix {
        return std::conj(rho.class_character(group.class_of(h))) * apply_left(sigma.image(h), phi.amplitudes());
    });
    const double a = sum.squaredNorm();
    if (a < 1e-12)
        throw DegenerateInput("psi_lambda: phi has no component in the " + lambda.label() +
                              " sector (A = " + std::to_string(a) + ")");
    return PsiLambda{StateVector({dim, dim}, sum / std::sqrt(a)), a};
}

// ---------------------------------------------------------------------------
// The group twirl and the internal-state test operator.

/// W = (1/|G|) sum_k sigma(k) (x) sigma(k)^*; W vec(X) = vec(E(X)) where E
/// is the group-averaging channel. W is the orthogonal projector onto the
/// vectorized commutant of sigma.
inline ComplexMatrix twirl_operator(const GroupRep &sigma) {
    const Index dim = sigma.dim();
    if (static_cast<long long>(dim) * dim * dim * dim > kMaxStateAmplitudes)
        throw ResourceLimit("twirl_operator: D^2 x D^2 with D = " + std::to_string(dim) +
                            " exceeds the amplitude cap");
    const auto &group = sigma.group();
    const ComplexMatrix sum = group_sum(group.order(), dim * dim, dim * dim, [&](std::size_t k) -> ComplexMatrix {
        const ComplexMatrix s = sigma.image(k);
        return kron(s, ComplexMatrix(s.conjugate()));
    });
    return sum / static_cast<double>(group.order());
}

/// Acceptance operator of the Hadamard-test form of internal-state testing:
/// Pr[accept psi] = <psi| (I + W)/2 |psi>.
inline ComplexMatrix internal_test_operator(const GroupRep &sigma) {
    const Index dd = sigma.dim() * sigma.dim();
    return 0.5 * (identity_matrix(dd) + twirl_operator(sigma));
}

// ---------------------------------------------------------------------------
// Isotypic block decomposition sigma|_lambda = I_m (x) rho^lambda.

struct BlockDecomposition {
    Partition lambda;
    int multiplicity = 0;
    Index irrep_dim = 0;
    /// D x (m d) with orthonormal columns; column j * d + i is the i-th basis
    /// vector of copy j, so basis^dagger sigma(g) basis = I_m (x) rho^lambda(g).
    ComplexMatrix basis;

    /// Orthonormal basis of copy j.
    ComplexMatrix block(int j) const { return basis.middleCols(j * irrep_dim, irrep_dim); }
};

/// Builds the copies of rho^lambda inside sigma from the matrix units
/// E_{i1} = (d/|G|) sum_g rho^lambda_{i1}(g)^* sigma(g): an orthonormal basis
/// {v_j} of image(E_11) fixes one vector per copy, and E_{i1} v_j completes
/// copy j.
inline BlockDecomposition block_decomposition(const GroupRep &sigma, const Partition &lambda) {
    require_partition_of(lambda, sigma, "block_decomposition");
    const auto &rho = irrep_of(lambda);
    const auto &group = sigma.group();
    const Index d = rho.dim();
    const Index dim = sigma.dim();
    const double scale = static_cast<double>(d) / static_cast<double>(group.order());
    std::vector<ComplexMatrix> units;
    for (Index i = 0; i < d; ++i)
        units.push_back(scale * group_sum(group.order(), dim, dim, [&](std::size_t g) -> ComplexMatrix {
                            return std::conj(rho.image(g)(i, 0)) * sigma.image(g);
                        }));
    const ComplexMatrix seeds = orthonormalize(units[0], 1e-6);
    const int m = character_multiplicity(sigma, lambda);
    if (seeds.cols() != m)
        throw NumericalConsistency("block_decomposition: image of E_11 has dimension " +
                                   std::to_string(seeds.cols()) + " but the multiplicity is " +
                                   std::to_string(m));
    ComplexMatrix basis(dim, static_cast<Index>(m) * d);
    for (int j = 0; j < m; ++j)
        for (Index i = 0; i < d; ++i)
            basis.col(j * d + i) = units[static_cast<std::size_t>(i)] * seeds.col(j);
    return BlockDecomposition{lambda, m, d, std::move(basis)};
}

/// max_g |B^dagger sigma(g) B - I_m (x) rho^lambda(g)| over the generators.
inline double block_decomposition_residual(const GroupRep &sigma, const BlockDecomposition &blocks) {
    const auto &rho = irrep_of(blocks.lambda);
    double worst = blocks.multiplicity == 0 ? 0.0 : unitarity_residual(blocks.basis);
    for (int i = 1; i < sigma.degree(); ++i) {
        const auto s = Permutation::adjacent(sigma.degree(), i);
        const ComplexMatrix lhs = blocks.basis.adjoint() * sigma.image(s) * blocks.basis;
        const ComplexMatrix rhs = kron(identity_matrix(blocks.multiplicity), rho.image(s));
        worst = std::max(worst, max_abs_diff(lhs, rhs));
    }
    return worst;
}

enum class MLambdaRoute { span, fixed_point };

/// M_lambda by one of two constructions:
///  - span: orthonormalized span of Phi over each copy block Xi_{lambda,j};
///  - fixed_point: eigenvalue-1 eigenspace of (Xi (x) I) T (Xi (x) I), T the
///    internal-test operator.
/// The span route has dimension m, the fixed-point route m^2.
inline Subspace m_lambda_subspace(const GroupRep &sigma, const Partition &lambda, MLambdaRoute route) {
    require_partition_of(lambda, sigma, "m_lambda_subspace");
    const Index dim = sigma.dim();
    if (character_multiplicity(sigma, lambda) == 0)
        return Subspace::empty(dim * dim);
    if (route == MLambdaRoute::span) {
        const auto blocks = block_decomposition(sigma, lambda);
        ComplexMatrix states(dim * dim, blocks.multiplicity);
        for (int j = 0; j < blocks.multiplicity; ++j) {
            const Subspace copy{dim, blocks.block(j)};
            states.col(j) = max_entangled_over(copy).amplitudes();
        }
        return Subspace::span(states);
    }
    const ComplexMatrix xi = kron(isotypic_sum(sigma, lambda), identity_matrix(dim));
    const ComplexMatrix accept = xi * internal_test_operator(sigma) * xi;
    return Subspace{dim * dim, hermitian_eigenspace(accept, 1.0, kSpectralTolerance)};
}

} // namespace symverify
