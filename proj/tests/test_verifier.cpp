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

#include <cmath>

#include <catch2/catch.hpp>

#include "symverify/verifier.hpp"

using namespace symverify;

namespace {

const Partition kHook({2, 1});

// E(X) for I_2 (x) rho^(2,1) by direct evaluation: the (i,j) block of
// E(X) is tr(X^(ij)) / 2 times I_2.
ComplexMatrix block_trace_average(const ComplexMatrix &x) {
    ComplexMatrix out = ComplexMatrix::Zero(4, 4);
    for (Index i = 0; i < 2; ++i)
        for (Index j = 0; j < 2; ++j) {
            const Complex t = x.block(2 * i, 2 * j, 2, 2).trace() / 2.0;
            out.block(2 * i, 2 * j, 2, 2) = t * identity_matrix(2);
        }
    return out;
}

} // namespace

TEST_CASE("channel_E", "[verifier]") {
    Rng rng(1);
    const auto irr = irrep(Partition({3, 1}));
    CHECK(max_abs_diff(channel_E(irr, identity_matrix(3)), identity_matrix(3)) < 1e-12);
    const ComplexMatrix x = rng.complex_gaussian(3, 3);
    CHECK(max_abs_diff(channel_E(irr, x), (x.trace() / 3.0) * identity_matrix(3)) < 1e-12);

    const auto amp = identity_tensor(2, irrep_of(kHook));
    const ComplexMatrix y = rng.complex_gaussian(4, 4);
    CHECK(max_abs_diff(channel_E(amp, y), block_trace_average(y)) < 1e-12);

    const auto sigma = tensor_rep(kHook, kHook);
    for (int t = 0; t < 20; ++t) {
        const ComplexMatrix a = rng.complex_gaussian(4, 4);
        const ComplexMatrix b = rng.complex_gaussian(4, 4);
        const ComplexMatrix ea = channel_E(sigma, a);
        CHECK(max_abs_diff(channel_E(sigma, ea), ea) < 1e-9);
        CHECK(std::abs(frobenius_inner(ea, b) - frobenius_inner(a, channel_E(sigma, b))) < 1e-9);
        const Complex self = frobenius_inner(a, ea);
        CHECK(std::abs(self.imag()) < 1e-10);
        CHECK(self.real() >= -1e-10);
    }
    CHECK_THROWS_AS(channel_E(sigma, identity_matrix(3)), InvalidArgument);
}

TEST_CASE("internal test: formula and circuit", "[verifier]") {
    // |a> (x) Phi+ inside I_2 (x) rho: both values 1.
    const auto amp = identity_tensor(2, irrep_of(kHook));
    Rng rng(2);
    const Subspace target = lemma_target(2, 2);
    const StateVector good({4, 4}, target.basis * rng.haar_vector(4));
    const auto accept = internal_test_probability(amp, good);
    CHECK(std::abs(accept.formula_value - 1.0) < 1e-9);
    CHECK(std::abs(accept.circuit_value - 1.0) < 1e-9);

    // Traceless blocks: both values 1/2.
    ComplexMatrix x = rng.complex_gaussian(4, 4);
    x -= block_trace_average(x);
    const auto half = internal_test_probability(amp, vec(x));
    CHECK(std::abs(half.formula_value - 0.5) < 1e-9);
    CHECK(std::abs(half.circuit_value - 0.5) < 1e-9);

    // Random states: circuit = 1/2 + 1/2 <X, E(X)>, formula = 1/2 + 1/2 <X, E(X)>^2.
    const auto sigma = tensor_rep(kHook, kHook);
    for (int t = 0; t < 50; ++t) {
        const StateVector psi({4, 4}, rng.haar_vector(16));
        const auto r = internal_test_probability(sigma, psi);
        CHECK(std::abs(r.circuit_value - (0.5 + 0.5 * r.overlap)) < 1e-8);
        CHECK(std::abs(r.formula_value - (0.5 + 0.5 * r.overlap * r.overlap)) < 1e-12);
        CHECK(r.circuit_value >= 0.5 - 1e-12);
        CHECK(r.circuit_value + 1e-12 >= r.formula_value);
        // Against the operator form <psi| (I + W)/2 |psi>.
        const double op = psi.amplitudes().dot(internal_test_operator(sigma) * psi.amplitudes()).real();
        CHECK(std::abs(op - r.circuit_value) < 1e-10);
    }
}

TEST_CASE("acceptance operator for ((2,1),(2,1),(2,1))", "[verifier]") {
    const auto op = verification_acceptance_operator(kHook, kHook, kHook);
    CHECK(hermiticity_residual(op.matrix) < 1e-12);
    CHECK(op.eigenvalue_one_multiplicity == 1);
    CHECK(std::abs(op.completeness - 1.0) < 1e-8);
    CHECK(op.gap_ok);
    CHECK(op.soundness <= 8.0 / 9.0);
    CHECK(std::abs(op.soundness - 0.5) < 1e-8);
    for (double e : op.spectrum)
        CHECK((std::abs(e - 1.0) < 1e-8 || e <= op.soundness + 1e-12));

    const auto sigma = tensor_rep(kHook, kHook);
    const auto phi_xi = max_entangled_over(projector_image(wfs_projector(sigma, kHook).matrix));
    CHECK(op.accepting.distance(phi_xi.amplitudes()) < 1e-8);

    // m = 0: no eigenvalue 1.
    const auto empty = verification_acceptance_operator(Partition({3}), Partition({3}), kHook);
    CHECK(empty.eigenvalue_one_multiplicity == 0);
    CHECK(empty.completeness <= empty.soundness + 1e-12);
}

TEST_CASE("eigenvalue-1 multiplicity is m^2 and Xi commutes with T", "[verifier]") {
    for (int n = 2; n <= 4; ++n)
        for (const auto &mu : enumerate_partitions(n))
            for (const auto &nu : enumerate_partitions(n)) {
                const auto sigma = tensor_rep(mu, nu);
                const ComplexMatrix t = internal_test_operator(sigma);
                for (const auto &lambda : enumerate_partitions(n)) {
                    INFO(mu.label() << nu.label() << lambda.label());
                    const int m = character_multiplicity(sigma, lambda);
                    const ComplexMatrix xi = kron(wfs_projector(sigma, lambda).matrix, identity_matrix(sigma.dim()));
                    CHECK(max_abs_diff(xi * t, t * xi) < 1e-8);
                    const auto op = acceptance_operator(sigma, lambda);
                    CHECK(op.eigenvalue_one_multiplicity == m * m);
                    CHECK(op.gap_ok);
                    CHECK(op.soundness <= 8.0 / 9.0);
                }
            }
    // m = 2 on the regular representation.
    const auto reg = acceptance_operator(left_regular(3), kHook);
    CHECK(reg.eigenvalue_one_multiplicity == 4);
}

TEST_CASE("Lemma bound certification", "[verifier]") {
    // Exact target: eps = 0, distance 0.
    TrialOptions exact{5, 11, TrialMode::perturbed, 0.0};
    for (const auto &r : certify_lemma_bound(2, kHook, exact)) {
        CHECK(r.epsilon < 1e-12);
        CHECK(r.distance_to_target < 1e-9);
        CHECK(r.bound_satisfied);
    }

    // The target subspace is the image of the twirl.
    const auto amp = identity_tensor(2, irrep_of(kHook));
    const ComplexMatrix w = twirl_operator(amp);
    CHECK(max_abs_diff(lemma_target(2, 2).projector(), w) < 1e-12);

    for (const auto mode : {TrialMode::haar, TrialMode::perturbed}) {
        const auto reports = certify_lemma_bound(2, kHook, TrialOptions{200, 7, mode, 0.1});
        REQUIRE(reports.size() == 200);
        for (std::size_t k = 0; k < reports.size(); ++k) {
            CHECK(reports[k].trial == static_cast<int>(k));
            CHECK(reports[k].bound_satisfied == (reports[k].distance_to_target <= reports[k].bound + 1e-8));
        }
        CHECK(summarize(reports).violations == 0);
    }
    // Reproducible given the seed.
    const auto a = certify_lemma_bound(2, Partition({3, 1}), TrialOptions{10, 5, TrialMode::haar, 0.1});
    const auto b = certify_lemma_bound(2, Partition({3, 1}), TrialOptions{10, 5, TrialMode::haar, 0.1});
    for (std::size_t k = 0; k < a.size(); ++k)
        CHECK(a[k].distance_to_target == b[k].distance_to_target);
}

TEST_CASE("Corollary and fixed-point bound certification", "[verifier]") {
    const auto exact = certify_corollary_bound(kHook, kHook, kHook, TrialOptions{5, 3, TrialMode::perturbed, 0.0});
    for (const auto &r : exact) {
        CHECK(r.epsilon < 1e-12);
        CHECK(r.distance_to_target < 1e-9);
    }

    // In Gamma_lambda with a traceless internal block: internal test at 1/2.
    const auto sigma = tensor_rep(kHook, kHook);
    const ComplexMatrix xi = wfs_projector(sigma, kHook).matrix;
    Rng rng(9);
    ComplexMatrix x = xi * rng.complex_gaussian(4, 4);
    x -= channel_E(sigma, x);
    const auto o = verifier_outcome(sigma, xi, vec(x));
    CHECK(std::abs(o.wfs_probability - 1.0) < 1e-9);
    CHECK(std::abs(o.internal.formula_value - 0.5) < 1e-9);

    for (const auto mode : {TrialMode::haar, TrialMode::perturbed}) {
        const auto reports = certify_corollary_bound(kHook, kHook, kHook, TrialOptions{200, 13, mode, 0.1});
        REQUIRE(reports.size() == 400);
        CHECK(reports[0].kind == ReportKind::corollary);
        CHECK(reports[1].kind == ReportKind::theorem);
        CHECK(summarize(reports).violations == 0);
    }
    CHECK_THROWS_AS(certify_corollary_bound(Partition({3}), Partition({3}), kHook, TrialOptions{}), InvalidArgument);
}

TEST_CASE("sampling mode", "[verifier]") {
    const auto sigma = tensor_rep(kHook, kHook);
    const auto phi_xi = max_entangled_over(projector_image(wfs_projector(sigma, kHook).matrix));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto run = run_verifier(sigma, kHook, phi_xi, seed);
        CHECK(run.wfs_passed);
        CHECK(run.accepted);
    }
    const auto a = run_verifier(sigma, kHook, phi_plus(4), 5);
    const auto b = run_verifier(sigma, kHook, phi_plus(4), 5);
    CHECK(a.outcome == b.outcome);
    CHECK(a.accepted == b.accepted);
    CHECK(std::abs(a.wfs_probability - 0.5) < 1e-12);
}
