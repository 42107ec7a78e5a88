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

// Residual computations for the representation-theoretic identities. Each
// returns the largest absolute deviation observed, so callers can compare
// against whatever tolerance they need and report the number.

#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "symverify/group_sum.hpp"
#include "symverify/linalg.hpp"
#include "symverify/random.hpp"
#include "symverify/rep.hpp"

namespace symverify {

struct GeneratorResiduals {
    double unitary = 0;
    double involution = 0;
    double braid = 0;
    double commutation = 0;
    double max() const { return std::max({unitary, involution, braid, commutation}); }
};

/// Coxeter relations on the generator images: s_i unitary, s_i^2 = 1,
/// s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}, and s_i s_j = s_j s_i for |i-j| >= 2.
inline GeneratorResiduals generator_residuals(const GroupRep &sigma) {
    GeneratorResiduals r;
    const auto &gens = sigma.generator_images();
    const ComplexMatrix id = identity_matrix(sigma.dim());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        r.unitary = std::max(r.unitary, unitarity_residual(gens[i]));
        r.involution = std::max(r.involution, max_abs_diff(gens[i] * gens[i], id));
        if (i + 1 < gens.size())
            r.braid = std::max(r.braid, max_abs_diff(gens[i] * gens[i + 1] * gens[i],
                                                     gens[i + 1] * gens[i] * gens[i + 1]));
        for (std::size_t j = i + 2; j < gens.size(); ++j)
            r.commutation = std::max(r.commutation, max_abs_diff(gens[i] * gens[j], gens[j] * gens[i]));
    }
    return r;
}

/// max over random pairs of |sigma(gh) - sigma(g) sigma(h)|, with sigma
/// evaluated along adjacent-transposition words.
inline double homomorphism_residual(const GroupRep &sigma, std::uint64_t seed, int pairs = 100) {
    const auto &group = sigma.group();
    Rng rng(seed);
    double worst = 0;
    for (int k = 0; k < pairs; ++k) {
        const auto g = static_cast<std::size_t>(rng.uniform() * static_cast<double>(group.order()));
        const auto h = static_cast<std::size_t>(rng.uniform() * static_cast<double>(group.order()));
        const ComplexMatrix lhs = rep_evaluate(sigma, group[g] * group[h]);
        const ComplexMatrix rhs = rep_evaluate(sigma, group[g]) * rep_evaluate(sigma, group[h]);
        worst = std::max(worst, max_abs_diff(lhs, rhs));
    }
    return worst;
}

/// max over random g of the difference between evaluating along the
/// position-sorting word, the value-sorting word and the cached image.
inline double decomposition_independence_residual(const GroupRep &sigma, std::uint64_t seed, int samples = 100) {
    const auto &group = sigma.group();
    Rng rng(seed);
    double worst = 0;
    for (int k = 0; k < samples; ++k) {
        const auto g = static_cast<std::size_t>(rng.uniform() * static_cast<double>(group.order()));
        const ComplexMatrix a = sigma.evaluate_word(adjacent_transposition_decomposition(group[g]));
        const ComplexMatrix b = sigma.evaluate_word(adjacent_transposition_decomposition_by_values(group[g]));
        worst = std::max({worst, max_abs_diff(a, b), max_abs_diff(a, sigma.image(g))});
    }
    return worst;
}

/// sum_g rho^a_{i1 j1}(g)^* rho^b_{i2 j2}(g) = (|G|/d_a) delta delta delta,
/// over all irrep pairs and index tuples of S_n.
inline double schur_orthogonality_residual(int n) {
    const auto &reps = irreps_of(n);
    const auto &group = reps.front().group();
    const auto order = group.order();
    double worst = 0;
    for (std::size_t a = 0; a < reps.size(); ++a) {
        for (std::size_t b = 0; b < reps.size(); ++b) {
            const Index da = reps[a].dim();
            const Index db = reps[b].dim();
            // All (i1 j1, i2 j2) entries at once: sum_g conj(vec rho_a) vec(rho_b)^T.
            const ComplexMatrix gram = group_sum(order, da * da, db * db, [&](std::size_t g) -> ComplexMatrix {
                const ComplexMatrix ra = reps[a].image(g);
                const ComplexMatrix rb = reps[b].image(g);
                const Eigen::Map<const ComplexVector> va(ra.data(), da * da);
                const Eigen::Map<const ComplexVector> vb(rb.data(), db * db);
                return va.conjugate() * vb.transpose();
            });
            ComplexMatrix expected = ComplexMatrix::Zero(da * da, db * db);
            if (a == b)
                expected = (static_cast<double>(order) / static_cast<double>(da)) * identity_matrix(da * da);
            worst = std::max(worst, max_abs_diff(gram, expected));
        }
    }
    return worst;
}

/// sum_g chi^a(g)^* chi^b(g) = |G| delta_ab, summed element by element.
inline double character_orthogonality_residual(int n) {
    const auto &reps = irreps_of(n);
    const auto &group = reps.front().group();
    double worst = 0;
    for (std::size_t a = 0; a < reps.size(); ++a)
        for (std::size_t b = 0; b < reps.size(); ++b) {
            const Complex s = scalar_group_sum(group.order(), [&](std::size_t g) {
                return std::conj(reps[a].image(g).trace()) * reps[b].image(g).trace();
            });
            const double expected = a == b ? static_cast<double>(group.order()) : 0.0;
            worst = std::max(worst, std::abs(s - expected));
        }
    return worst;
}

/// sum_g chi^a(g)^* rho^b(g h) = (|G|/d_a) delta_ab rho^b(h) for every h.
inline double twisted_identity_residual(int n) {
    const auto &reps = irreps_of(n);
    const auto &group = reps.front().group();
    const auto order = group.order();
    double worst = 0;
    for (std::size_t a = 0; a < reps.size(); ++a)
        for (std::size_t b = 0; b < reps.size(); ++b)
            for (std::size_t h = 0; h < order; ++h) {
                const ComplexMatrix s = group_sum(order, reps[b].dim(), reps[b].dim(), [&](std::size_t g) -> ComplexMatrix {
                    return std::conj(reps[a].class_character(group.class_of(g))) *
                           reps[b].image(group.product_index(g, h));
                });
                ComplexMatrix expected = ComplexMatrix::Zero(reps[b].dim(), reps[b].dim());
                if (a == b)
                    expected = (static_cast<double>(order) / static_cast<double>(reps[a].dim())) * reps[b].image(h);
                worst = std::max(worst, max_abs_diff(s, expected));
            }
    return worst;
}

} // namespace symverify
