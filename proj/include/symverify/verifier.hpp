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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symverify/config.hpp"
#include "symverify/entangled.hpp"
#include "symverify/errors.hpp"
#include "symverify/group_sum.hpp"
#include "symverify/kronecker.hpp"
#include "symverify/linalg.hpp"
#include "symverify/random.hpp"
#include "symverify/rep.hpp"
#include "symverify/state.hpp"
#include "symverify/wfs.hpp"

namespace symverify {

/// Slack added to every certified bound.
inline constexpr double kBoundSlack = 1e-8;

/// E(X) = (1/|G|) sum_k sigma(k) X sigma(k)^dagger.
inline ComplexMatrix channel_E(const GroupRep &sigma, const ComplexMatrix &x) {
    if (x.rows() != sigma.dim() || x.cols() != sigma.dim())
        throw InvalidArgument("channel_E: X must be " + std::to_string(sigma.dim()) + " x " +
                              std::to_string(sigma.dim()));
    const auto &group = sigma.group();
    const ComplexMatrix sum = group_sum(group.order(), x.rows(), x.cols(), [&](std::size_t k) -> ComplexMatrix {
        const ComplexMatrix s = sigma.image(k);
        return s * x * s.adjoint();
    });
    return sum / static_cast<double>(group.order());
}

// ---------------------------------------------------------------------------
// Internal-state test.

struct InternalTestResult {
    double overlap = 0;       // <X, E(X)>_F with psi = vec X
    double formula_value = 0; // 1/2 + 1/2 |<X, E(X)>|^2
    double circuit_value = 0; // Hadamard test on U = sum_k |k><k| (x) sigma(k) (x) sigma(k)^*
};

/// Exact statevector run of the 1-bit phase-estimation circuit: a qubit
/// control, a |G|-dimensional register in the uniform state and psi. Returns
/// the probability that the qubit reads 0.
inline double internal_test_circuit(const GroupRep &sigma, const StateVector &psi) {
    const Index dim = sigma.dim();
    const Index dd = dim * dim;
    if (psi.dim() != dd)
        throw InvalidArgument("internal test: psi must live in C^{D^2} = C^" + std::to_string(dd));
    const auto &group = sigma.group();
    const auto order = static_cast<Index>(group.order());
    if (2LL * order * dd > kMaxStateAmplitudes)
        throw ResourceLimit("internal test: 2 |G| D^2 = " + std::to_string(2LL * order * dd) +
                            " amplitudes exceeds the cap " + std::to_string(kMaxStateAmplitudes));
    // |tau> = |u> (x) |psi>, u uniform over G. After H, controlled-U, H the
    // qubit-0 branch holds (tau + U tau) / 2.
    const double amp = 1.0 / std::sqrt(static_cast<double>(order));
    const ComplexMatrix x = unvec(psi.amplitudes());
    ComplexVector zero_branch(order * dd);
    for (Index k = 0; k < order; ++k) {
        const ComplexMatrix s = sigma.image(static_cast<std::size_t>(k));
        // (sigma (x) sigma^*) vec X = vec(sigma X sigma^dagger)
        const ComplexVector u_block = amp * vec_raw(s * x * s.adjoint());
        zero_branch.segment(k * dd, dd) = 0.5 * (amp * psi.amplitudes() + u_block);
    }
    return zero_branch.squaredNorm();
}

inline InternalTestResult internal_test_probability(const GroupRep &sigma, const StateVector &psi) {
    const Index dd = sigma.dim() * sigma.dim();
    if (psi.dim() != dd)
        throw InvalidArgument("internal test: psi must live in C^{D^2} = C^" + std::to_string(dd));
    const ComplexMatrix x = unvec(psi.amplitudes());
    const Complex overlap = frobenius_inner(x, channel_E(sigma, x));
    InternalTestResult r;
    r.overlap = overlap.real();
    r.formula_value = 0.5 + 0.5 * std::norm(overlap);
    r.circuit_value = internal_test_circuit(sigma, psi);
    return r;
}

// ---------------------------------------------------------------------------
// Acceptance operator of the two-step verifier.

struct AcceptanceOperator {
    ComplexMatrix matrix;
    std::vector<double> spectrum; // descending
    double completeness = 0;      // largest eigenvalue
    double soundness = 0;         // largest eigenvalue below 1
    int eigenvalue_one_multiplicity = 0;
    bool gap_ok = false;          // spectrum in [0,1] and nothing strictly inside (s, 1)
    Subspace accepting;           // eigenvalue-1 eigenspace
};

/// A = (Xi_lambda (x) I) T (Xi_lambda (x) I) on C^{D^2}, T the Hadamard-test
/// acceptance operator of the internal-state test.
inline AcceptanceOperator acceptance_operator(const GroupRep &sigma, const Partition &lambda) {
    require_partition_of(lambda, sigma, "acceptance_operator");
    const Index dim = sigma.dim();
    const ComplexMatrix xi = kron(wfs_projector(sigma, lambda).matrix, identity_matrix(dim));
    AcceptanceOperator op;
    op.matrix = xi * internal_test_operator(sigma) * xi;
    op.matrix = 0.5 * (op.matrix + op.matrix.adjoint());
    op.spectrum = hermitian_spectrum(op.matrix);
    op.completeness = op.spectrum.empty() ? 0.0 : op.spectrum.front();
    bool in_range = true;
    for (double e : op.spectrum) {
        if (e < -kSpectralTolerance || e > 1.0 + kSpectralTolerance)
            in_range = false;
        if (std::abs(e - 1.0) <= kSpectralTolerance)
            ++op.eigenvalue_one_multiplicity;
        else if (e > op.soundness)
            op.soundness = e;
    }
    // Anything in (s, 1 - tol) would have become s; anything within tol of 1
    // counts as 1. The gap check then reduces to the range check plus the
    // separation between s and 1.
    op.gap_ok = in_range && op.soundness < 1.0 - kSpectralTolerance;
    op.accepting = Subspace{dim * dim, hermitian_eigenspace(op.matrix, 1.0, kSpectralTolerance)};
    if (op.accepting.dim() != op.eigenvalue_one_multiplicity)
        throw NumericalConsistency("acceptance operator: eigenspace dimension disagrees with the spectrum");
    return op;
}

inline AcceptanceOperator verification_acceptance_operator(const Partition &mu, const Partition &nu,
                                                           const Partition &lambda) {
    require_same_n(mu, nu, lambda);
    const GroupRep sigma = tensor_rep(mu, nu);
    require_dense(mu.n(), "verification_acceptance_operator");
    const long long dd = static_cast<long long>(sigma.dim()) * sigma.dim();
    if (dd * dd > kMaxStateAmplitudes)
        throw ResourceLimit("verification_acceptance_operator: D^2 x D^2 with D^2 = " + std::to_string(dd) +
                            " exceeds the amplitude cap");
    return acceptance_operator(sigma, lambda);
}

// ---------------------------------------------------------------------------
// Bound certification.

enum class ReportKind { lemma, corollary, theorem };

inline const char *to_string(ReportKind k) {
    switch (k) {
    case ReportKind::lemma:
        return "lemma";
    case ReportKind::corollary:
        return "corollary";
    case ReportKind::theorem:
        return "theorem";
    }
    return "?";
}

struct TestReport {
    ReportKind kind = ReportKind::lemma;
    int trial = 0;
    double acceptance_probability = 0; // formula form
    double circuit_acceptance = 0;     // Hadamard-test form
    double epsilon = 0;
    double distance_to_target = 0;
    double bound = 0;
    bool bound_satisfied = false;
    bool applicable = true; // false when the post-measurement state is undefined
};

inline TestReport make_report(ReportKind kind, int trial, double accept, double circuit, double distance,
                              double bound_factor) {
    TestReport r;
    r.kind = kind;
    r.trial = trial;
    r.acceptance_probability = accept;
    r.circuit_acceptance = circuit;
    r.epsilon = std::max(0.0, 1.0 - accept);
    r.distance_to_target = distance;
    r.bound = bound_factor * std::sqrt(2.0 * r.epsilon);
    r.bound_satisfied = distance <= r.bound + kBoundSlack;
    return r;
}

enum class TrialMode { haar, perturbed };

inline const char *to_string(TrialMode m) { return m == TrialMode::haar ? "haar" : "perturbed"; }

struct TrialOptions {
    int trials = 1000;
    std::uint64_t seed = 0;
    TrialMode mode = TrialMode::haar;
    double scale = 0.1; // perturbation norm in perturbed mode
};

/// Random unit vector: Haar, or a random unit vector of `target` moved by a
/// random direction of norm `scale`.
inline ComplexVector trial_state(Rng &rng, const Subspace &target, const TrialOptions &opts) {
    const Index dim = target.ambient_dim;
    if (opts.mode == TrialMode::haar || target.dim() == 0)
        return rng.haar_vector(dim);
    ComplexVector base = target.basis * rng.haar_vector(target.dim());
    base += opts.scale * rng.haar_vector(dim);
    return base / base.norm();
}

/// {|a> (x) Phi+} for sigma = I_m (x) rho: vectorizations of E_ij (x) I_d / sqrt(d).
inline Subspace lemma_target(int m, Index d) {
    const Index dim = m * d;
    ComplexMatrix basis = ComplexMatrix::Zero(dim * dim, static_cast<Index>(m) * m);
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (Index x = 0; x < d; ++x)
                basis((i * d + x) * dim + (j * d + x), i * m + j) = amp;
    return Subspace{dim * dim, basis};
}

/// Internal test on sigma = I_m (x) rho^lambda: distance to {|a> (x) Phi+}
/// against 2 sqrt(2 eps), eps from the formula form.
inline std::vector<TestReport> certify_lemma_bound(int m, const Partition &lambda, const TrialOptions &opts) {
    if (m < 1)
        throw InvalidArgument("certify_lemma_bound: m must be >= 1");
    if (opts.trials < 0)
        throw InvalidArgument("certify_lemma_bound: trials must be >= 0");
    const GroupRep sigma = identity_tensor(m, irrep_of(lambda));
    const Subspace target = lemma_target(m, irrep_dimension(lambda));
    std::vector<TestReport> out;
    out.reserve(static_cast<std::size_t>(opts.trials));
    for (int t = 0; t < opts.trials; ++t) {
        Rng rng(trial_seed(opts.seed, static_cast<std::uint64_t>(t)));
        const StateVector psi({sigma.dim(), sigma.dim()}, trial_state(rng, target, opts));
        const auto test = internal_test_probability(sigma, psi);
        out.push_back(make_report(ReportKind::lemma, t, test.formula_value, test.circuit_value,
                                  target.distance(psi.amplitudes()), 2.0));
    }
    return out;
}

struct VerifierOutcome {
    double wfs_probability = 0;       // <psi| Xi (x) I |psi>
    double accept_formula = 0;        // wfs_probability * internal formula value
    double accept_circuit = 0;        // wfs_probability * internal circuit value = <psi|A|psi>
    std::optional<StateVector> post;  // normalized post-WFS state, if defined
    InternalTestResult internal;
};

/// Exact acceptance of the two-step verifier on psi in C^{D^2}.
inline VerifierOutcome verifier_outcome(const GroupRep &sigma, const ComplexMatrix &xi, const StateVector &psi) {
    VerifierOutcome o;
    const ComplexVector projected = apply_left(xi, psi.amplitudes());
    o.wfs_probability = projected.squaredNorm();
    if (o.wfs_probability < 1e-12)
        return o;
    o.post = StateVector({sigma.dim(), sigma.dim()}, projected / std::sqrt(o.wfs_probability));
    o.internal = internal_test_probability(sigma, *o.post);
    o.accept_formula = o.wfs_probability * o.internal.formula_value;
    o.accept_circuit = o.wfs_probability * o.internal.circuit_value;
    return o;
}

/// Two reports per trial, in trial order: the distance of psi to the
/// accepting eigenspace against 3 sqrt(2 eps), and the distance of the
/// post-WFS state to the same fixed-point subspace against 2 sqrt(2 eps).
inline std::vector<TestReport> certify_bounds(const GroupRep &sigma, const Partition &lambda,
                                              const TrialOptions &opts) {
    if (opts.trials < 0)
        throw InvalidArgument("certify: trials must be >= 0");
    if (character_multiplicity(sigma, lambda) < 1)
        throw InvalidArgument("certify: " + lambda.label() + " does not occur in " + sigma.describe());
    const auto op = acceptance_operator(sigma, lambda);
    const ComplexMatrix xi = wfs_projector(sigma, lambda).matrix;
    std::vector<TestReport> out;
    out.reserve(2 * static_cast<std::size_t>(opts.trials));
    for (int t = 0; t < opts.trials; ++t) {
        Rng rng(trial_seed(opts.seed, static_cast<std::uint64_t>(t)));
        const StateVector psi({sigma.dim(), sigma.dim()}, trial_state(rng, op.accepting, opts));
        const auto o = verifier_outcome(sigma, xi, psi);
        out.push_back(make_report(ReportKind::corollary, t, o.accept_formula, o.accept_circuit,
                                  op.accepting.distance(psi.amplitudes()), 3.0));
        if (o.post) {
            out.push_back(make_report(ReportKind::theorem, t, o.accept_formula, o.accept_circuit,
                                      op.accepting.distance(o.post->amplitudes()), 2.0));
        } else {
            auto r = make_report(ReportKind::theorem, t, o.accept_formula, o.accept_circuit, 0.0, 2.0);
            r.applicable = false;
            out.push_back(r);
        }
    }
    return out;
}

inline std::vector<TestReport> certify_corollary_bound(const Partition &mu, const Partition &nu,
                                                       const Partition &lambda, const TrialOptions &opts) {
    require_same_n(mu, nu, lambda);
    return certify_bounds(tensor_rep(mu, nu), lambda, opts);
}

struct CertificationSummary {
    int reports = 0;
    int violations = 0;
    double max_ratio = 0; // max distance / bound over reports with a positive bound
};

inline CertificationSummary summarize(const std::vector<TestReport> &reports) {
    CertificationSummary s;
    for (const auto &r : reports) {
        ++s.reports;
        if (!r.bound_satisfied)
            ++s.violations;
        if (r.bound > 0)
            s.max_ratio = std::max(s.max_ratio, r.distance_to_target / r.bound);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Sampling mode.

struct VerifierRun {
    Partition outcome;
    bool wfs_passed = false;
    bool accepted = false;
    double wfs_probability = 0;
    InternalTestResult internal;
};

/// One sampled run: weak Fourier sampling on the left register, then (if the
/// outcome is lambda) a coin with the circuit's acceptance probability.
inline VerifierRun run_verifier(const GroupRep &sigma, const Partition &lambda, const StateVector &psi,
                                std::uint64_t seed) {
    require_partition_of(lambda, sigma, "run_verifier");
    if (psi.dim() != sigma.dim() * sigma.dim())
        throw InvalidArgument("run_verifier: psi must live in C^{D^2}");
    const auto measured = measure_wfs(sigma, psi, seed);
    VerifierRun run{measured.lambda, measured.lambda == lambda, false, 0.0, {}};
    for (const auto &[label, p] : wfs_probabilities(sigma, psi))
        if (label == lambda)
            run.wfs_probability = p;
    if (!run.wfs_passed)
        return run;
    run.internal = internal_test_probability(sigma, measured.post_state);
    Rng coin(seed ^ 0x9e3779b97f4a7c15ULL);
    run.accepted = coin.uniform() < run.internal.circuit_value;
    return run;
}

} // namespace symverify
