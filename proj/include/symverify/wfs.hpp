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
#include <string>
#include <utility>
#include <vector>

#include "symverify/config.hpp"
#include "symverify/errors.hpp"
#include "symverify/group_sum.hpp"
#include "symverify/linalg.hpp"
#include "symverify/partition.hpp"
#include "symverify/random.hpp"
#include "symverify/rep.hpp"
#include "symverify/state.hpp"

namespace symverify {

/// Tolerance for the Hermitian/idempotent checks on projectors.
inline constexpr double kProjectorTolerance = 1e-8;

/// An orthogonal projector tagged with its irrep label and integral rank.
struct Projector {
    Partition lambda;
    ComplexMatrix matrix;
    int rank = 0;
};

/// Validates P = P^dagger = P^2 and extracts rank = round(tr P).
inline Projector make_projector(Partition lambda, ComplexMatrix matrix) {
    const double herm = hermiticity_residual(matrix);
    const double idem = max_abs_diff(matrix * matrix, matrix);
    if (herm > kProjectorTolerance || idem > kProjectorTolerance)
        throw NumericalConsistency("projector for " + lambda.label() + " fails P = P^2 = P^dagger (" +
                                   std::to_string(herm) + ", " + std::to_string(idem) + ")");
    const Complex tr = matrix.trace();
    if (std::abs(tr.imag()) > kIntegralTolerance)
        throw NumericalConsistency("projector trace has an imaginary part");
    const auto rank = static_cast<int>(checked_round(tr.real(), kIntegralTolerance, "projector rank"));
    return Projector{std::move(lambda), std::move(matrix), rank};
}

inline void require_partition_of(const Partition &lambda, const GroupRep &sigma, const char *what) {
    if (lambda.n() != sigma.degree())
        throw InvalidArgument(std::string(what) + ": " + lambda.label() + " is not a partition of " +
                              std::to_string(sigma.degree()));
}

/// Xi_lambda = (d_lambda/|G|) sum_g chi^lambda(g)^* sigma(g), unvalidated.
inline ComplexMatrix isotypic_sum(const GroupRep &sigma, const Partition &lambda, unsigned threads = 1) {
    require_partition_of(lambda, sigma, "wfs_projector");
    const auto &rho = irrep_of(lambda);
    const auto &group = sigma.group();
    const ComplexMatrix sum = group_sum(
        group.order(), sigma.dim(), sigma.dim(),
        [&](std::size_t g) -> ComplexMatrix {
            return std::conj(rho.class_character(group.class_of(g))) * sigma.image(g);
        },
        threads);
    return (static_cast<double>(rho.dim()) / static_cast<double>(group.order())) * sum;
}

/// The weak-Fourier-sampling projector onto the lambda-isotypic component.
inline Projector wfs_projector(const GroupRep &sigma, const Partition &lambda, unsigned threads = 1) {
    return make_projector(lambda, isotypic_sum(sigma, lambda, threads));
}

/// {Xi_lambda} over all lambda |- n, in partition order. Checks that the
/// projectors are mutually orthogonal and sum to the identity.
inline std::vector<Projector> wfs_povm(const GroupRep &sigma, unsigned threads = 1) {
    std::vector<Projector> out;
    ComplexMatrix total = ComplexMatrix::Zero(sigma.dim(), sigma.dim());
    for (const auto &lambda : enumerate_partitions(sigma.degree())) {
        out.push_back(wfs_projector(sigma, lambda, threads));
        total += out.back().matrix;
    }
    if (max_abs_diff(total, identity_matrix(sigma.dim())) > kProjectorTolerance)
        throw NumericalConsistency("weak Fourier sampling projectors do not sum to the identity");
    for (std::size_t a = 0; a < out.size(); ++a)
        for (std::size_t b = a + 1; b < out.size(); ++b)
            if (max_abs(out[a].matrix * out[b].matrix) > kProjectorTolerance)
                throw NumericalConsistency("projectors " + out[a].lambda.label() + " and " +
                                           out[b].lambda.label() + " are not orthogonal");
    return out;
}

/// Kraus element of generalized phase estimation: maps the target space
/// C^D into control (x) target, control = C^{|G|} in the Fourier basis.
struct KrausElement {
    Partition lambda;
    Index control_dim = 0;
    Index target_dim = 0;
    ComplexMatrix matrix; // (control_dim * target_dim) x target_dim
};

/// E_lambda = |G|^{-1/2} sum_g (Pi_lambda FT |g>) (x) sigma(g).
inline KrausElement gpe_kraus(const GroupRep &sigma, const Partition &lambda) {
    require_partition_of(lambda, sigma, "gpe_kraus");
    const int n = sigma.degree();
    require_dense(n, "gpe_kraus");
    const auto &group = sigma.group();
    const auto order = static_cast<Index>(group.order());
    const Index dim = sigma.dim();
    if (static_cast<long long>(order) * dim * dim > kMaxStateAmplitudes)
        throw ResourceLimit("gpe_kraus: (|G| D) x D = " + std::to_string(order * dim) + " x " +
                            std::to_string(dim) + " exceeds the amplitude cap " +
                            std::to_string(kMaxStateAmplitudes));
    const ComplexMatrix ft = fourier_transform_matrix(n);
    const Index offset = fourier_block_offset(lambda);
    const Index d = irrep_dimension(lambda);
    // Pi_lambda keeps only the d^2 rows of the lambda block.
    ComplexMatrix e = ComplexMatrix::Zero(order * dim, dim);
    const double norm = 1.0 / std::sqrt(static_cast<double>(order));
    for (std::size_t g = 0; g < group.order(); ++g) {
        const ComplexMatrix sg = sigma.image(g);
        for (Index r = offset; r < offset + d * d; ++r) {
            const Complex coeff = norm * ft(r, static_cast<Index>(g));
            if (coeff != Complex(0.0))
                e.block(r * dim, 0, dim, dim) += coeff * sg;
        }
    }
    return KrausElement{lambda, order, dim, std::move(e)};
}

/// (Xi (x) I) v for v in C^{D * extra}, via the reshaped matrix product.
inline ComplexVector apply_left(const ComplexMatrix &xi, const ComplexVector &v) {
    const Index d = xi.rows();
    if (d == 0 || v.size() % d != 0)
        throw InvalidArgument("apply_left: dimension mismatch");
    const Index extra = v.size() / d;
    // Row-major reshape: v[i * extra + j] = X(i, j).
    const auto x = Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
        v.data(), d, extra);
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> y = xi * x;
    return Eigen::Map<const ComplexVector>(y.data(), v.size());
}

struct MeasurementOutcome {
    Partition lambda;
    double probability = 0.0;
    StateVector post_state;
};

/// Samples the weak Fourier sampling outcome on psi. psi lives on C^D, or on
/// C^{D^2} in which case the projectors act on the left register.
inline MeasurementOutcome measure_wfs(const GroupRep &sigma, const StateVector &psi, std::uint64_t seed) {
    const Index dim = sigma.dim();
    const bool lifted = psi.dim() == dim * dim && psi.dim() != dim;
    if (psi.dim() != dim && !lifted)
        throw InvalidArgument("measure_wfs: state dimension " + std::to_string(psi.dim()) +
                              " matches neither D = " + std::to_string(dim) + " nor D^2");
    const auto povm = wfs_povm(sigma);
    std::vector<ComplexVector> projected;
    std::vector<double> probs;
    for (const auto &p : povm) {
        projected.push_back(lifted ? apply_left(p.matrix, psi.amplitudes()) : ComplexVector(p.matrix * psi.amplitudes()));
        probs.push_back(projected.back().squaredNorm());
    }
    Rng rng(seed);
    const double u = rng.uniform();
    double cumulative = 0.0;
    std::size_t pick = povm.size();
    std::size_t last_positive = povm.size();
    for (std::size_t k = 0; k < povm.size(); ++k) {
        if (probs[k] <= 0.0)
            continue;
        last_positive = k;
        cumulative += probs[k];
        if (u < cumulative) {
            pick = k;
            break;
        }
    }
    if (pick == povm.size())
        pick = last_positive; // u landed in the rounding slack above the total
    if (pick == povm.size())
        throw NumericalConsistency("measure_wfs: every outcome has probability zero");
    std::vector<Index> registers = lifted ? std::vector<Index>{dim, dim} : std::vector<Index>{dim};
    return MeasurementOutcome{povm[pick].lambda, probs[pick],
                              StateVector::normalized(std::move(registers), projected[pick])};
}

/// Exact outcome probabilities <psi| Xi_lambda |psi> (or Xi (x) I), in
/// partition order.
inline std::vector<std::pair<Partition, double>> wfs_probabilities(const GroupRep &sigma,
                                                                   const StateVector &psi) {
    const Index dim = sigma.dim();
    const bool lifted = psi.dim() == dim * dim && psi.dim() != dim;
    if (psi.dim() != dim && !lifted)
        throw InvalidArgument("wfs_probabilities: state dimension mismatch");
    std::vector<std::pair<Partition, double>> out;
    for (const auto &p : wfs_povm(sigma)) {
        const ComplexVector v = lifted ? apply_left(p.matrix, psi.amplitudes())
                                       : ComplexVector(p.matrix * psi.amplitudes());
        out.emplace_back(p.lambda, v.squaredNorm());
    }
    return out;
}

/// Multiplicity of lambda in sigma by the character inner product.
inline int character_multiplicity(const GroupRep &sigma, const Partition &lambda) {
    const Complex m = character_inner_product(sigma, lambda);
    if (std::abs(m.imag()) > kIntegralTolerance)
        throw NumericalConsistency("multiplicity has an imaginary part");
    const auto v = checked_round(m.real(), kIntegralTolerance, "character multiplicity");
    if (v < 0)
        throw NumericalConsistency("negative multiplicity");
    return static_cast<int>(v);
}

/// lambda -> (d_lambda / (d_mu d_nu)) m_{mu nu lambda}: the outcome law of
/// weak Fourier sampling on the maximally entangled state of rho^mu (x) rho^nu.
inline std::vector<std::pair<Partition, double>> lightning_distribution(const Partition &mu,
                                                                        const Partition &nu) {
    if (mu.n() != nu.n())
        throw InvalidArgument("lightning_distribution: " + mu.label() + " and " + nu.label() +
                              " are partitions of different n");
    const GroupRep sigma = tensor_rep(mu, nu);
    const double dmu = irrep_dimension(mu);
    const double dnu = irrep_dimension(nu);
    std::vector<std::pair<Partition, double>> out;
    for (const auto &lambda : enumerate_partitions(mu.n()))
        out.emplace_back(lambda, irrep_dimension(lambda) * character_multiplicity(sigma, lambda) / (dmu * dnu));
    return out;
}

/// The same law by the Born rule on |Phi+> in C^{D^2} with Xi_lambda (x) I
/// built as an explicit D^2 x D^2 matrix.
inline std::vector<std::pair<Partition, double>> lightning_born(const Partition &mu, const Partition &nu) {
    if (mu.n() != nu.n())
        throw InvalidArgument("lightning_born: partitions of different n");
    const GroupRep sigma = tensor_rep(mu, nu);
    const Index dim = sigma.dim();
    ComplexVector phi = ComplexVector::Zero(dim * dim);
    for (Index b = 0; b < dim; ++b)
        phi(b * dim + b) = 1.0 / std::sqrt(static_cast<double>(dim));
    std::vector<std::pair<Partition, double>> out;
    for (const auto &lambda : enumerate_partitions(mu.n())) {
        const ComplexMatrix big = kron(isotypic_sum(sigma, lambda), identity_matrix(dim));
        out.emplace_back(lambda, phi.dot(big * phi).real());
    }
    return out;
}

} // namespace symverify
