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

// Invariant suites run by `symverify selftest`. Every check records a
// residual and a tolerance; suites are deterministic given the seed.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "symverify/checks.hpp"
#include "symverify/entangled.hpp"
#include "symverify/kronecker.hpp"
#include "symverify/random.hpp"
#include "symverify/verifier.hpp"
#include "symverify/wfs.hpp"

namespace symverify {

struct SuiteResult {
    std::string name;
    int checks = 0;
    int passed = 0;
    double max_residual = 0;
    std::vector<std::string> failures;
    double elapsed_ms = 0;

    int failed() const noexcept { return checks - passed; }

    /// residual <= tol counts as a pass; residual enters max_residual.
    void residual(const std::string &what, double r, double tol) {
        ++checks;
        max_residual = std::max(max_residual, r);
        if (r <= tol)
            ++passed;
        else
            failures.push_back(what);
    }

    void expect(const std::string &what, bool ok) {
        ++checks;
        if (ok)
            ++passed;
        else
            failures.push_back(what);
    }

    /// Runs body, converting an escaped exception into a failed check.
    void guarded(const std::string &what, const std::function<void()> &body) {
        try {
            body();
        } catch (const std::exception &e) {
            ++checks;
            failures.push_back(what + ": " + e.what());
        }
    }
};

struct SelftestOptions {
    int n_max = 4;
    int trials = 100;
    std::uint64_t seed = 0;
};

inline constexpr int kSelftestMaxN = 5;

namespace detail {

inline std::vector<std::pair<Partition, Partition>> pairs_up_to(int n_max) {
    std::vector<std::pair<Partition, Partition>> out;
    for (int n = 1; n <= n_max; ++n)
        for (const auto &mu : enumerate_partitions(n))
            for (const auto &nu : enumerate_partitions(n))
                out.emplace_back(mu, nu);
    return out;
}

} // namespace detail

inline SuiteResult selftest_yyrep(const SelftestOptions &opts) {
    SuiteResult s{"yyrep"};
    std::uint64_t seed = opts.seed;
    for (int n = 1; n <= opts.n_max; ++n) {
        for (const auto &lambda : enumerate_partitions(n)) {
            const auto &rho = irrep_of(lambda);
            const std::string tag = "irrep " + lambda.label();
            s.residual(tag + " Coxeter relations", generator_residuals(rho).max(), 1e-12);
            s.residual(tag + " homomorphism", homomorphism_residual(rho, seed++, 50), 1e-10);
            s.residual(tag + " decomposition independence", decomposition_independence_residual(rho, seed++, 50), 1e-10);
        }
        s.residual("character orthogonality n=" + std::to_string(n), character_orthogonality_residual(n), 1e-8);
        if (n <= 4) {
            s.residual("Schur orthogonality n=" + std::to_string(n), schur_orthogonality_residual(n), 1e-8);
            s.residual("twisted identity n=" + std::to_string(n), twisted_identity_residual(n), 1e-8);
            const ComplexMatrix ft = fourier_transform_matrix(n);
            s.residual("Fourier unitarity n=" + std::to_string(n), unitarity_residual(ft), 1e-9);
            const auto [left, right] = regular_representations(n);
            double block = 0;
            for (std::size_t h = 0; h < left.group().order(); ++h) {
                ComplexMatrix want = ComplexMatrix::Zero(left.dim(), left.dim());
                Index off = 0;
                for (const auto &r : irreps_of(n)) {
                    const Index d = r.dim();
                    want.block(off, off, d * d, d * d) = kron(r.image(h), identity_matrix(d));
                    off += d * d;
                }
                block = std::max(block, max_abs_diff(ft * left.image(h) * ft.adjoint(), want));
                block = std::max(block, max_abs_diff(left.image(h) * right.image(h), right.image(h) * left.image(h)));
            }
            s.residual("Fourier block diagonalization n=" + std::to_string(n), block, 1e-9);
        }
    }
    return s;
}

inline SuiteResult selftest_wfs(const SelftestOptions &opts) {
    SuiteResult s{"wfs"};
    for (const auto &[mu, nu] : detail::pairs_up_to(opts.n_max)) {
        const std::string tag = mu.label() + "x" + nu.label();
        s.guarded(tag, [&] {
            const auto sigma = tensor_rep(mu, nu);
            const auto povm = wfs_povm(sigma);
            ComplexMatrix total = ComplexMatrix::Zero(sigma.dim(), sigma.dim());
            double orth = 0, proj = 0, comm = 0;
            int rank_total = 0;
            for (std::size_t a = 0; a < povm.size(); ++a) {
                const auto &p = povm[a];
                total += p.matrix;
                rank_total += p.rank;
                proj = std::max({proj, hermiticity_residual(p.matrix), max_abs_diff(p.matrix * p.matrix, p.matrix)});
                for (std::size_t b = a + 1; b < povm.size(); ++b)
                    orth = std::max(orth, max_abs(p.matrix * povm[b].matrix));
                for (const auto &gen : sigma.generator_images())
                    comm = std::max(comm, max_abs_diff(p.matrix * gen, gen * p.matrix));
                s.expect(tag + " rank " + p.lambda.label(),
                         p.rank == multiplicity_character(sigma, p.lambda).value * irrep_dimension(p.lambda));
            }
            s.residual(tag + " completeness", max_abs_diff(total, identity_matrix(sigma.dim())), 1e-8);
            s.residual(tag + " orthogonality", orth, 1e-8);
            s.residual(tag + " idempotence", proj, 1e-8);
            s.residual(tag + " central", comm, 1e-8);
            s.expect(tag + " ranks sum to D", rank_total == sigma.dim());
            if (mu.n() <= 4)
                for (const auto &p : povm) {
                    const auto e = gpe_kraus(sigma, p.lambda);
                    s.residual(tag + " Kraus " + p.lambda.label(),
                               max_abs_diff(e.matrix.adjoint() * e.matrix, p.matrix), 1e-8);
                }
            const auto formula = lightning_distribution(mu, nu);
            const auto born = lightning_born(mu, nu);
            double diff = 0, sum = 0;
            for (std::size_t k = 0; k < formula.size(); ++k) {
                diff = std::max(diff, std::abs(formula[k].second - born[k].second));
                sum += formula[k].second;
            }
            s.residual(tag + " lightning Born rule", diff, 1e-9);
            s.residual(tag + " lightning normalization", std::abs(sum - 1.0), 1e-9);
        });
    }
    return s;
}

inline SuiteResult selftest_kronecker(const SelftestOptions &opts) {
    SuiteResult s{"kronecker"};
    for (int n = 1; n <= std::min(opts.n_max, 4); ++n) {
        const auto ps = enumerate_partitions(n);
        for (const auto &a : ps)
            for (const auto &b : ps)
                for (const auto &c : ps) {
                    const std::string tag = a.label() + b.label() + c.label();
                    s.guarded(tag, [&] {
                        const auto both = kronecker_both_routes(a, b, c);
                        s.expect(tag + " routes agree", both.agree());
                        const int m = both.character_sum;
                        s.expect(tag + " symmetric",
                                 kronecker_coefficient(b, a, c).value == m && kronecker_coefficient(c, b, a).value == m &&
                                     kronecker_coefficient(a, c, b).value == m);
                    });
                }
    }
    if (opts.n_max >= 5) {
        const auto ps = enumerate_partitions(5);
        Rng rng(opts.seed);
        auto pick = [&] { return ps[static_cast<std::size_t>(rng.uniform() * static_cast<double>(ps.size()))]; };
        for (int k = 0; k < 50; ++k) {
            const auto a = pick(), b = pick(), c = pick();
            const std::string tag = a.label() + b.label() + c.label();
            s.guarded(tag, [&] { s.expect(tag + " routes agree", kronecker_both_routes(a, b, c).agree()); });
        }
    }
    for (const auto &[mu, nu] : detail::pairs_up_to(opts.n_max)) {
        long long total = 0;
        for (const auto &lambda : enumerate_partitions(mu.n()))
            total += static_cast<long long>(kronecker_coefficient(mu, nu, lambda).value) * irrep_dimension(lambda);
        s.expect(mu.label() + "x" + nu.label() + " dimension count",
                 total == static_cast<long long>(irrep_dimension(mu)) * irrep_dimension(nu));
    }
    return s;
}

inline SuiteResult selftest_entangled(const SelftestOptions &opts) {
    SuiteResult s{"entangled"};
    Rng rng(opts.seed);
    double vec_res = 0;
    for (int t = 0; t < opts.trials; ++t) {
        const ComplexMatrix a = rng.complex_gaussian(3, 3);
        const ComplexMatrix b = rng.complex_gaussian(3, 3);
        const ComplexMatrix c = rng.complex_gaussian(3, 3);
        vec_res = std::max(vec_res, (kron(b, c) * vec_raw(a) - vec_raw(b * a * c.transpose())).cwiseAbs().maxCoeff());
        vec_res = std::max(vec_res, std::abs(vec_raw(a).dot(vec_raw(b)) - (a.adjoint() * b).trace()));
        vec_res = std::max(vec_res, std::abs(vec_raw(a).squaredNorm() - a.squaredNorm()));
    }
    s.residual("vectorization identities", vec_res, 1e-10);

    double basis_res = 0;
    for (int t = 0; t < opts.trials; ++t) {
        const Subspace pi = Subspace::span(rng.complex_gaussian(4, 2));
        const Subspace mixed{4, pi.basis * rng.haar_unitary(2)};
        basis_res = std::max(basis_res, (max_entangled_over(pi).amplitudes() - max_entangled_over(mixed).amplitudes())
                                            .cwiseAbs()
                                            .maxCoeff());
    }
    s.residual("maximally entangled state basis invariance", basis_res, 1e-9);

    for (const auto &[mu, nu] : detail::pairs_up_to(std::min(opts.n_max, 4))) {
        const auto sigma = tensor_rep(mu, nu);
        for (const auto &lambda : enumerate_partitions(mu.n())) {
            const std::string tag = mu.label() + "x" + nu.label() + " at " + lambda.label();
            s.guarded(tag, [&] {
                const int m = character_multiplicity(sigma, lambda);
                const auto blocks = block_decomposition(sigma, lambda);
                s.residual(tag + " block decomposition", block_decomposition_residual(sigma, blocks), 1e-8);
                const auto span = m_lambda_subspace(sigma, lambda, MLambdaRoute::span);
                const auto fixed = m_lambda_subspace(sigma, lambda, MLambdaRoute::fixed_point);
                s.expect(tag + " span dimension m", span.dim() == m);
                s.expect(tag + " fixed-point dimension m^2", fixed.dim() == static_cast<Index>(m) * m);
                double contain = 0;
                for (Index k = 0; k < span.dim(); ++k)
                    contain = std::max(contain, fixed.distance(span.basis.col(k)));
                s.residual(tag + " span inside fixed points", contain, 1e-8);
                if (m >= 1) {
                    const StateVector phi({sigma.dim(), sigma.dim()}, rng.haar_vector(sigma.dim() * sigma.dim()));
                    const auto psi = psi_lambda(sigma, lambda, phi);
                    const ComplexMatrix xi = wfs_projector(sigma, lambda).matrix;
                    s.residual(tag + " psi_lambda in Gamma",
                               (apply_left(xi, psi.state.amplitudes()) - psi.state.amplitudes()).cwiseAbs().maxCoeff(),
                               1e-8);
                }
            });
        }
    }
    return s;
}

inline SuiteResult selftest_verifier(const SelftestOptions &opts) {
    SuiteResult s{"verifier"};
    Rng rng(opts.seed);
    for (const auto &[mu, nu] : detail::pairs_up_to(std::min(opts.n_max, 4))) {
        const auto sigma = tensor_rep(mu, nu);
        const std::string tag = mu.label() + "x" + nu.label();
        s.guarded(tag, [&] {
            const ComplexMatrix a = rng.complex_gaussian(sigma.dim(), sigma.dim());
            const ComplexMatrix ea = channel_E(sigma, a);
            s.residual(tag + " channel idempotent", max_abs_diff(channel_E(sigma, ea), ea), 1e-9);
            const ComplexMatrix t = internal_test_operator(sigma);
            for (const auto &lambda : enumerate_partitions(mu.n())) {
                const int m = character_multiplicity(sigma, lambda);
                const auto op = acceptance_operator(sigma, lambda);
                const ComplexMatrix xi = kron(wfs_projector(sigma, lambda).matrix, identity_matrix(sigma.dim()));
                const std::string lt = tag + " at " + lambda.label();
                s.residual(lt + " POVM commutes with internal test", max_abs_diff(xi * t, t * xi), 1e-8);
                s.expect(lt + " eigenvalue-1 multiplicity m^2", op.eigenvalue_one_multiplicity == m * m);
                s.expect(lt + " spectral gap", op.gap_ok && op.soundness <= 8.0 / 9.0);
            }
        });
    }
    const TrialOptions haar{opts.trials, opts.seed, TrialMode::haar, 0.1};
    const TrialOptions perturbed{opts.trials, opts.seed, TrialMode::perturbed, 0.1};
    std::vector<std::pair<int, Partition>> lemma_cases{{2, Partition({2, 1})}};
    std::vector<Partition> corollary_cases{Partition({2, 1})};
    if (opts.n_max >= 4) {
        lemma_cases.emplace_back(2, Partition({3, 1}));
        corollary_cases.push_back(Partition({3, 1}));
    }
    for (const auto &[m, lambda] : lemma_cases)
        for (const auto &o : {haar, perturbed}) {
            const std::string tag = "lemma m=" + std::to_string(m) + " " + lambda.label() + " " + to_string(o.mode);
            s.guarded(tag, [&] {
                const auto sum = summarize(certify_lemma_bound(m, lambda, o));
                s.expect(tag, sum.violations == 0);
            });
        }
    for (const auto &lambda : corollary_cases)
        for (const auto &o : {haar, perturbed}) {
            const std::string tag = "corollary " + lambda.label() + " " + to_string(o.mode);
            s.guarded(tag, [&] {
                const auto sum = summarize(certify_corollary_bound(lambda, lambda, lambda, o));
                s.expect(tag, sum.violations == 0);
            });
        }
    for (int t = 0; t < opts.trials; ++t) {
        const auto sigma = tensor_rep(Partition({2, 1}), Partition({2, 1}));
        const auto r = internal_test_probability(sigma, StateVector({4, 4}, rng.haar_vector(16)));
        s.residual("circuit matches Hadamard form", std::abs(r.circuit_value - (0.5 + 0.5 * r.overlap)), 1e-8);
    }
    return s;
}

struct SelftestReport {
    SelftestOptions options;
    std::vector<SuiteResult> suites;

    bool ok() const {
        return std::all_of(suites.begin(), suites.end(), [](const SuiteResult &s) { return s.failed() == 0; });
    }
};

inline SelftestReport run_selftest(const SelftestOptions &opts) {
    if (opts.n_max < 1 || opts.n_max > kSelftestMaxN)
        throw InvalidArgument("selftest: n-max must be in 1.." + std::to_string(kSelftestMaxN));
    if (opts.trials < 1)
        throw InvalidArgument("selftest: trials must be >= 1");
    SelftestReport report{opts, {}};
    const std::vector<SuiteResult (*)(const SelftestOptions &)> suites{
        selftest_yyrep, selftest_wfs, selftest_kronecker, selftest_entangled, selftest_verifier};
    for (auto suite : suites) {
        const auto start = std::chrono::steady_clock::now();
        report.suites.push_back(suite(opts));
        report.suites.back().elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    return report;
}

} // namespace symverify
