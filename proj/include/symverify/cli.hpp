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

// Command-line front end. Needs nlohmann/json and CLI11 on the include path
// in addition to the core library.

#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "symverify/entangled.hpp"
#include "symverify/kronecker.hpp"
#include "symverify/selftest.hpp"
#include "symverify/verifier.hpp"
#include "symverify/wfs.hpp"

namespace symverify::cli {

using Json = nlohmann::ordered_json;

enum class Status { ok, invalid_argument, resource_limit, numerical_consistency };

inline const char *to_string(Status s) {
    switch (s) {
    case Status::ok:
        return "ok";
    case Status::invalid_argument:
        return "invalid-argument";
    case Status::resource_limit:
        return "resource-limit";
    case Status::numerical_consistency:
        return "numerical-consistency";
    }
    return "?";
}

inline int exit_code(Status s) {
    switch (s) {
    case Status::ok:
        return 0;
    case Status::invalid_argument:
        return 2;
    case Status::resource_limit:
        return 3;
    case Status::numerical_consistency:
        return 4;
    }
    return 4;
}

struct CommandResult {
    Status status = Status::ok;
    Json payload;       // subcommand output, or {"error", "message"} on failure
    std::string text;   // help or usage text, printed instead of payload when set
    double elapsed_ms = 0;
    bool pretty = false;
};

// ---------------------------------------------------------------------------
// JSON schemas.

inline Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

inline Json matrix_json(const ComplexMatrix &m) {
    Json data = Json::array();
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            data.push_back(complex_json(m(i, j)));
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

inline Json state_json(const StateVector &s) {
    Json amps = Json::array();
    for (Index k = 0; k < s.dim(); ++k)
        amps.push_back(complex_json(s[k]));
    return Json{{"registers", s.registers()}, {"amplitudes", std::move(amps)}};
}

inline StateVector state_from_json(const Json &j) {
    if (!j.is_object() || !j.contains("amplitudes"))
        throw InvalidArgument("state JSON needs an \"amplitudes\" array");
    const auto &amps = j.at("amplitudes");
    ComplexVector v(static_cast<Index>(amps.size()));
    for (std::size_t k = 0; k < amps.size(); ++k) {
        const auto &a = amps[k];
        if (a.is_number())
            v(static_cast<Index>(k)) = a.get<double>();
        else if (a.is_array() && a.size() == 2)
            v(static_cast<Index>(k)) = Complex(a[0].get<double>(), a[1].get<double>());
        else
            throw InvalidArgument("state amplitudes must be numbers or [re, im] pairs");
    }
    std::vector<Index> registers{v.size()};
    if (j.contains("registers"))
        registers = j.at("registers").get<std::vector<Index>>();
    return StateVector(std::move(registers), std::move(v));
}

inline Json projector_json(const Projector &p) {
    Json j = matrix_json(p.matrix);
    j["lambda"] = p.lambda.to_string();
    j["rank"] = p.rank;
    return j;
}

inline Json report_json(const TestReport &r) {
    return Json{{"kind", to_string(r.kind)},
                {"trial", r.trial},
                {"acceptance_probability", r.acceptance_probability},
                {"circuit_acceptance", r.circuit_acceptance},
                {"epsilon", r.epsilon},
                {"distance_to_target", r.distance_to_target},
                {"bound", r.bound},
                {"bound_satisfied", r.bound_satisfied},
                {"applicable", r.applicable}};
}

inline Json internal_json(const InternalTestResult &r) {
    return Json{{"overlap", r.overlap}, {"formula_value", r.formula_value}, {"circuit_value", r.circuit_value}};
}

inline Json suite_json(const SuiteResult &s, bool timing) {
    Json j{{"name", s.name},
           {"checks", s.checks},
           {"passed", s.passed},
           {"failed", s.failed()},
           {"max_residual", s.max_residual},
           {"failures", s.failures}};
    if (timing)
        j["elapsed_ms"] = s.elapsed_ms;
    return j;
}

inline Json selftest_json(const SelftestReport &r, bool timing) {
    Json suites = Json::array();
    double total_ms = 0;
    for (const auto &s : r.suites) {
        suites.push_back(suite_json(s, timing));
        total_ms += s.elapsed_ms;
    }
    Json j{{"n_max", r.options.n_max},
           {"trials", r.options.trials},
           {"seed", r.options.seed},
           {"ok", r.ok()},
           {"suites", std::move(suites)}};
    if (timing)
        j["elapsed_ms"] = total_ms;
    return j;
}

/// Rounds every floating-point leaf to 6 significant digits.
inline Json round_for_display(const Json &j) {
    if (j.is_number_float()) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6g", j.get<double>());
        return std::stod(buf);
    }
    if (j.is_array() || j.is_object()) {
        Json out = j;
        for (auto it = out.begin(); it != out.end(); ++it)
            *it = round_for_display(*it);
        return out;
    }
    return j;
}

inline std::string render(const CommandResult &r) {
    if (!r.text.empty())
        return r.text;
    return r.pretty ? round_for_display(r.payload).dump(2) : r.payload.dump();
}

// ---------------------------------------------------------------------------
// Argument helpers.

/// Representation spec: "2,1" (irrep), "irrep:2,1", "tensor:2,1/2,1",
/// "left:3", "right:3", "amp:2/2,1" (I_2 (x) irrep), "lift:2,1/3" (irrep (x) I_3).
inline GroupRep parse_sigma(const std::string &spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        return irrep(Partition::parse(spec));
    const std::string kind = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);
    const auto slash = rest.find('/');
    auto to_int = [&](const std::string &s) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(s, &used);
            if (used != s.size())
                throw std::invalid_argument(s);
            return v;
        } catch (const std::exception &) {
            throw InvalidArgument("representation spec '" + spec + "': '" + s + "' is not an integer");
        }
    };
    if (kind == "irrep")
        return irrep(Partition::parse(rest));
    if (kind == "left")
        return left_regular(to_int(rest));
    if (kind == "right")
        return right_regular(to_int(rest));
    if (slash != std::string::npos) {
        const std::string a = rest.substr(0, slash);
        const std::string b = rest.substr(slash + 1);
        if (kind == "tensor")
            return tensor_rep(Partition::parse(a), Partition::parse(b));
        if (kind == "amp")
            return identity_tensor(to_int(a), irrep_of(Partition::parse(b)));
        if (kind == "lift")
            return lift_with_identity(irrep(Partition::parse(a)), to_int(b));
    }
    throw InvalidArgument("unknown representation spec '" + spec +
                          "' (expected a partition, irrep:P, tensor:P/Q, left:n, right:n, amp:m/P or lift:P/k)");
}

inline Json read_json_file(const std::string &path) {
    if (path == "-")
        return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in)
        throw InvalidArgument("cannot open '" + path + "'");
    return Json::parse(in);
}

/// "phi-plus" names the maximally entangled state on C^{dim^2}; anything else
/// is a path to a state JSON file ("-" for stdin).
inline StateVector load_state(const std::string &source, Index dim) {
    if (source == "phi-plus")
        return phi_plus(dim);
    return state_from_json(read_json_file(source));
}

inline Json distribution_json(const std::vector<std::pair<Partition, double>> &dist) {
    Json j = Json::object();
    for (const auto &[lambda, p] : dist)
        j[lambda.label()] = p;
    return j;
}

inline TrialMode parse_mode(const std::string &m) {
    if (m == "haar")
        return TrialMode::haar;
    if (m == "perturbed")
        return TrialMode::perturbed;
    throw InvalidArgument("mode must be haar or perturbed, got '" + m + "'");
}

inline std::vector<int> parse_int_list(const std::string &s) {
    std::vector<int> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception &) {
            throw InvalidArgument("'" + s + "' is not a comma-separated integer list");
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Benchmark.

inline Json run_bench(const std::vector<int> &degrees, unsigned threads, int repeat) {
    if (repeat < 1)
        throw InvalidArgument("bench: repeat must be >= 1");
    Json rows = Json::array();
    for (int n : degrees) {
        if (n < 2)
            throw InvalidArgument("bench: degrees must be >= 2");
        require_dense(n, "bench");
        const Partition hook = [&] {
            std::vector<int> p{n - 1, 1};
            return Partition(p);
        }();
        const auto sigma = tensor_rep(hook, hook);
        for (std::size_t k = 0; k < sigma.group().order(); ++k)
            (void)sigma.image(k); // warm the image tables
        for (unsigned t : {1u, threads}) {
            double best = 1e300;
            for (int r = 0; r < repeat; ++r) {
                const auto start = std::chrono::steady_clock::now();
                const ComplexMatrix xi = isotypic_sum(sigma, hook, t);
                const double ms =
                    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
                best = std::min(best, ms);
                (void)xi;
            }
            rows.push_back(Json{{"n", n},
                                {"dim", sigma.dim()},
                                {"threads", t},
                                {"best_ms", best},
                                {"elements_per_s", static_cast<double>(sigma.group().order()) / (best / 1000.0)}});
            if (threads == 1)
                break;
        }
    }
    return Json{{"kernel", "isotypic_sum"}, {"repeat", repeat}, {"results", std::move(rows)}};
}

// ---------------------------------------------------------------------------
// Dispatcher.

/// Runs one command. args excludes the program name.
inline CommandResult run(const std::vector<std::string> &args) {
    const auto start = std::chrono::steady_clock::now();
    CommandResult result;
    std::function<Json()> action;

    CLI::App app{"Representation theory of S_n and entangled-state verification", "symverify"};
    app.require_subcommand(1);
    app.fallthrough(); // inherited, so --pretty is accepted after any subcommand
    app.add_flag("--pretty", result.pretty, "Indent output and round numbers to 6 significant digits");
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    // sym
    auto *sym = app.add_subcommand("sym", "Partitions, dimensions and tableaux");
    sym->require_subcommand(1);
    int sym_n = 0;
    auto *sym_parts = sym->add_subcommand("partitions", "All partitions of n, (n) first");
    sym_parts->add_option("n", sym_n)->required();
    sym_parts->callback([&] {
        action = [&] {
            Json list = Json::array();
            for (const auto &p : enumerate_partitions(sym_n))
                list.push_back(p.to_string());
            return Json{{"n", sym_n}, {"partitions", std::move(list)}};
        };
    });
    std::string sym_shape;
    auto *sym_dim = sym->add_subcommand("dim", "Irrep dimension by the hook-length formula");
    sym_dim->add_option("lambda", sym_shape)->required();
    sym_dim->callback([&] { action = [&] { return Json{{"d", irrep_dimension(Partition::parse(sym_shape))}}; }; });
    auto *sym_tab = sym->add_subcommand("tableaux", "Standard tableaux of a shape in basis order");
    sym_tab->add_option("lambda", sym_shape)->required();
    sym_tab->callback([&] {
        action = [&] {
            const Partition shape = Partition::parse(sym_shape);
            Json list = Json::array();
            for (const auto &t : enumerate_tableaux(shape))
                list.push_back(t.rows());
            return Json{{"shape", shape.to_string()}, {"tableaux", std::move(list)}};
        };
    });

    // rep
    auto *rep = app.add_subcommand("rep", "Representation matrices, characters, Fourier transform");
    rep->require_subcommand(1);
    std::string rep_sigma, rep_perm;
    int rep_n = 0;
    auto *rep_matrix = rep->add_subcommand("matrix", "sigma(g) for a representation spec and a permutation");
    rep_matrix->add_option("sigma", rep_sigma)->required();
    rep_matrix->add_option("g", rep_perm, "One-line notation, e.g. 2,3,1")->required();
    rep_matrix->callback([&] {
        action = [&] { return matrix_json(rep_evaluate(parse_sigma(rep_sigma), Permutation::parse(rep_perm))); };
    });
    auto *rep_char = rep->add_subcommand("char", "Character at g, or on every conjugacy class");
    rep_char->add_option("sigma", rep_sigma)->required();
    rep_char->add_option("g", rep_perm);
    rep_char->callback([&] {
        action = [&] {
            const GroupRep sigma = parse_sigma(rep_sigma);
            auto real_part = [](Complex z) {
                if (std::abs(z.imag()) > kIntegralTolerance)
                    throw NumericalConsistency("character has an imaginary part");
                return z.real();
            };
            if (!rep_perm.empty())
                return Json{{"chi", real_part(character(sigma, Permutation::parse(rep_perm)))}};
            Json classes = Json::object();
            const auto &group = sigma.group();
            for (std::size_t c = 0; c < group.classes().size(); ++c)
                classes[group.classes()[c].label()] = real_part(sigma.class_character(c));
            return Json{{"rep", sigma.describe()}, {"classes", std::move(classes)}};
        };
    });
    auto *rep_ft = rep->add_subcommand("ft", "Dense Fourier transform of S_n");
    rep_ft->add_option("n", rep_n)->required();
    rep_ft->callback([&] { action = [&] { return matrix_json(fourier_transform_matrix(rep_n)); }; });

    // wfs
    auto *wfs = app.add_subcommand("wfs", "Weak Fourier sampling");
    wfs->require_subcommand(1);
    std::string wfs_sigma, wfs_lambda, wfs_state;
    std::uint64_t wfs_seed = 0;
    auto *wfs_project = wfs->add_subcommand("project", "The isotypic projector Xi_lambda");
    wfs_project->add_option("sigma", wfs_sigma)->required();
    wfs_project->add_option("lambda", wfs_lambda)->required();
    wfs_project->callback([&] {
        action = [&] { return projector_json(wfs_projector(parse_sigma(wfs_sigma), Partition::parse(wfs_lambda))); };
    });
    auto *wfs_povm_cmd = wfs->add_subcommand("povm", "All projectors, checked for completeness");
    wfs_povm_cmd->add_option("sigma", wfs_sigma)->required();
    wfs_povm_cmd->callback([&] {
        action = [&] {
            Json list = Json::array();
            for (const auto &p : wfs_povm(parse_sigma(wfs_sigma)))
                list.push_back(projector_json(p));
            return list;
        };
    });
    auto *wfs_measure = wfs->add_subcommand("measure", "Sample an outcome on a state");
    wfs_measure->add_option("sigma", wfs_sigma)->required();
    wfs_measure->add_option("--state", wfs_state, "State JSON path, '-' or phi-plus")->required();
    wfs_measure->add_option("--seed", wfs_seed)->required();
    wfs_measure->callback([&] {
        action = [&] {
            const GroupRep sigma = parse_sigma(wfs_sigma);
            const auto out = measure_wfs(sigma, load_state(wfs_state, sigma.dim()), wfs_seed);
            return Json{{"lambda", out.lambda.to_string()},
                        {"probability", out.probability},
                        {"post_state", state_json(out.post_state)}};
        };
    });

    // kron
    std::string k_mu, k_nu, k_lambda, k_route = "char";
    auto *kron_cmd = app.add_subcommand("kron", "Kronecker coefficient m_{mu nu lambda}");
    kron_cmd->add_option("mu", k_mu)->required();
    kron_cmd->add_option("nu", k_nu)->required();
    kron_cmd->add_option("lambda", k_lambda)->required();
    kron_cmd->add_option("--route", k_route)->check(CLI::IsMember({"char", "rank", "both"}));
    kron_cmd->callback([&] {
        action = [&] {
            const Partition mu = Partition::parse(k_mu), nu = Partition::parse(k_nu), lambda = Partition::parse(k_lambda);
            if (k_route == "both") {
                const auto both = kronecker_both_routes(mu, nu, lambda);
                if (!both.agree())
                    throw NumericalConsistency("routes disagree: character sum " + std::to_string(both.character_sum) +
                                               ", projector rank " + std::to_string(both.projector_rank));
                return Json{{"m", both.character_sum}, {"routes_agree", true}};
            }
            const auto route = k_route == "char" ? MultiplicityRoute::character_sum : MultiplicityRoute::projector_rank;
            const auto m = kronecker_coefficient(mu, nu, lambda, route);
            return Json{{"m", m.value}, {"route", to_string(m.route)}};
        };
    });

    // lightning
    auto *lightning = app.add_subcommand("lightning", "Outcome law of weak Fourier sampling on Phi+");
    lightning->add_option("mu", k_mu)->required();
    lightning->add_option("nu", k_nu)->required();
    lightning->callback([&] {
        action = [&] { return distribution_json(lightning_distribution(Partition::parse(k_mu), Partition::parse(k_nu))); };
    });

    // state
    auto *state = app.add_subcommand("state", "Entangled states");
    state->require_subcommand(1);
    int st_d = 0;
    std::string st_sigma, st_lambda, st_phi = "phi-plus";
    auto *st_plus = state->add_subcommand("phi-plus", "(1/sqrt d) sum_b |b>|b>");
    st_plus->add_option("d", st_d)->required();
    st_plus->callback([&] { action = [&] { return state_json(phi_plus(st_d)); }; });
    auto *st_pi = state->add_subcommand("phi-pi", "Maximally entangled state over image(Xi_lambda)");
    st_pi->add_option("sigma", st_sigma)->required();
    st_pi->add_option("lambda", st_lambda)->required();
    st_pi->callback([&] {
        action = [&] {
            const auto xi = wfs_projector(parse_sigma(st_sigma), Partition::parse(st_lambda));
            if (xi.rank == 0)
                throw InvalidArgument("phi-pi: " + xi.lambda.label() + " does not occur in the representation");
            return Json{{"dim", xi.rank}, {"state", state_json(max_entangled_over(projector_image(xi.matrix)))}};
        };
    });
    auto *st_psi = state->add_subcommand("psi-lambda", "Project phi onto the lambda sector of the left register");
    st_psi->add_option("sigma", st_sigma)->required();
    st_psi->add_option("lambda", st_lambda)->required();
    st_psi->add_option("--phi", st_phi, "State JSON path, '-' or phi-plus");
    st_psi->callback([&] {
        action = [&] {
            const GroupRep sigma = parse_sigma(st_sigma);
            const auto psi = psi_lambda(sigma, Partition::parse(st_lambda), load_state(st_phi, sigma.dim()));
            return Json{{"normalization", psi.normalization}, {"state", state_json(psi.state)}};
        };
    });

    // verify
    auto *verify = app.add_subcommand("verify", "The two-step verifier");
    verify->require_subcommand(1);
    std::string v_state;
    int v_trials = 1000, v_m = 2;
    std::uint64_t v_seed = 0;
    std::string v_mode = "haar";
    double v_scale = 0.1;
    bool v_full = false;
    auto add_triple = [&](CLI::App *cmd) {
        cmd->add_option("mu", k_mu)->required();
        cmd->add_option("nu", k_nu)->required();
        cmd->add_option("lambda", k_lambda)->required();
    };
    auto add_trials = [&](CLI::App *cmd) {
        cmd->add_option("--trials", v_trials)->check(CLI::NonNegativeNumber);
        cmd->add_option("--seed", v_seed);
        cmd->add_option("--mode", v_mode, "haar or perturbed");
        cmd->add_option("--scale", v_scale, "Perturbation norm in perturbed mode")->check(CLI::NonNegativeNumber);
        cmd->add_flag("--reports", v_full, "Include every per-trial report");
    };
    auto certification_json = [&](const std::vector<TestReport> &reports) {
        Json summary = Json::object();
        for (const auto kind : {ReportKind::lemma, ReportKind::corollary, ReportKind::theorem}) {
            std::vector<TestReport> subset;
            std::copy_if(reports.begin(), reports.end(), std::back_inserter(subset),
                         [&](const TestReport &r) { return r.kind == kind; });
            if (subset.empty())
                continue;
            const auto s = summarize(subset);
            summary[to_string(kind)] = Json{{"reports", s.reports}, {"violations", s.violations}, {"max_ratio", s.max_ratio}};
        }
        Json j{{"trials", v_trials}, {"seed", v_seed}, {"mode", v_mode}, {"summary", std::move(summary)}};
        if (v_mode == "perturbed")
            j["scale"] = v_scale;
        if (v_full) {
            Json list = Json::array();
            for (const auto &r : reports)
                list.push_back(report_json(r));
            j["reports"] = std::move(list);
        }
        return j;
    };
    auto *v_spectrum = verify->add_subcommand("spectrum", "Acceptance operator spectrum and gap");
    add_triple(v_spectrum);
    v_spectrum->callback([&] {
        action = [&] {
            const Partition mu = Partition::parse(k_mu), nu = Partition::parse(k_nu), lambda = Partition::parse(k_lambda);
            const auto op = verification_acceptance_operator(mu, nu, lambda);
            const int m = kronecker_coefficient(mu, nu, lambda).value;
            return Json{{"m", m},
                        {"dimensions", Json{{"span", m}, {"fixed_point", m * m}}},
                        {"eigenvalue_one_multiplicity", op.eigenvalue_one_multiplicity},
                        {"c", op.completeness},
                        {"s", op.soundness},
                        {"gap_ok", op.gap_ok},
                        {"s_le_8_9", op.soundness <= 8.0 / 9.0},
                        {"spectrum", op.spectrum}};
        };
    });
    auto *v_certify = verify->add_subcommand("certify", "Certify the closeness bounds on random trials");
    add_triple(v_certify);
    add_trials(v_certify);
    v_certify->callback([&] {
        action = [&] {
            const TrialOptions o{v_trials, v_seed, parse_mode(v_mode), v_scale};
            return certification_json(certify_corollary_bound(Partition::parse(k_mu), Partition::parse(k_nu),
                                                              Partition::parse(k_lambda), o));
        };
    });
    auto *v_lemma = verify->add_subcommand("lemma", "Certify the internal-test bound on I_m (x) rho^lambda");
    v_lemma->add_option("m", v_m)->required()->check(CLI::PositiveNumber);
    v_lemma->add_option("lambda", k_lambda)->required();
    add_trials(v_lemma);
    v_lemma->callback([&] {
        action = [&] {
            const TrialOptions o{v_trials, v_seed, parse_mode(v_mode), v_scale};
            return certification_json(certify_lemma_bound(v_m, Partition::parse(k_lambda), o));
        };
    });
    auto *v_run = verify->add_subcommand("run", "One sampled run of the verifier on a state");
    add_triple(v_run);
    v_run->add_option("--state", v_state, "State JSON path, '-' or phi-plus")->required();
    v_run->add_option("--seed", v_seed)->required();
    v_run->callback([&] {
        action = [&] {
            const Partition mu = Partition::parse(k_mu), nu = Partition::parse(k_nu), lambda = Partition::parse(k_lambda);
            require_same_n(mu, nu, lambda);
            const GroupRep sigma = tensor_rep(mu, nu);
            const auto run = run_verifier(sigma, lambda, load_state(v_state, sigma.dim()), v_seed);
            Json j{{"outcome", run.outcome.to_string()},
                   {"wfs_passed", run.wfs_passed},
                   {"wfs_probability", run.wfs_probability},
                   {"accepted", run.accepted}};
            if (run.wfs_passed)
                j["internal"] = internal_json(run.internal);
            return j;
        };
    });

    // selftest
    SelftestOptions st_opts;
    bool st_timing = false;
    auto *selftest = app.add_subcommand("selftest", "Run every invariant suite");
    selftest->add_option("--n-max", st_opts.n_max)->check(CLI::Range(1, kSelftestMaxN));
    selftest->add_option("--trials", st_opts.trials)->check(CLI::PositiveNumber);
    selftest->add_option("--seed", st_opts.seed);
    selftest->add_flag("--timing", st_timing, "Add wall-clock times (output is then not reproducible)");
    bool selftest_failed = false;
    selftest->callback([&] {
        action = [&] {
            const auto report = run_selftest(st_opts);
            selftest_failed = !report.ok();
            return selftest_json(report, st_timing);
        };
    });

    // bench
    std::string b_degrees = "4,5,6";
    unsigned b_threads = std::max(2u, std::thread::hardware_concurrency());
    int b_repeat = 3;
    auto *bench = app.add_subcommand("bench", "Time the isotypic group-sum kernel");
    bench->add_option("--n", b_degrees, "Comma-separated degrees");
    bench->add_option("--threads", b_threads)->check(CLI::PositiveNumber);
    bench->add_option("--repeat", b_repeat)->check(CLI::PositiveNumber);
    bench->callback([&] { action = [&] { return run_bench(parse_int_list(b_degrees), b_threads, b_repeat); }; });

    auto fail = [&](Status s, const std::string &kind, const std::string &message) {
        result.status = s;
        result.payload = Json{{"error", kind}, {"message", message}};
    };
    try {
        const auto subs = app.get_subcommands({});
        if (!args.empty() && !args.front().starts_with("-") &&
            std::none_of(subs.begin(), subs.end(), [&](const CLI::App *sub) { return sub->get_name() == args.front(); }))
            throw CLI::ValidationError("unknown subcommand '" + args.front() + "'");
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (!action)
            throw InvalidArgument("no command given");
        result.payload = action();
        if (selftest_failed)
            result.status = Status::numerical_consistency;
    } catch (const CLI::CallForHelp &) {
        result.text = app.help();
    } catch (const CLI::CallForAllHelp &) {
        result.text = app.help("", CLI::AppFormatMode::All);
    } catch (const CLI::ParseError &e) {
        fail(Status::invalid_argument, "invalid-argument", e.what());
        result.text = std::string(e.what()) + "\n\n" + app.help();
    } catch (const ResourceLimit &e) {
        fail(Status::resource_limit, "resource-limit", e.what());
    } catch (const NumericalConsistency &e) {
        fail(Status::numerical_consistency, "numerical-consistency", e.what());
    } catch (const std::invalid_argument &e) {
        fail(Status::invalid_argument, "invalid-argument", e.what());
    } catch (const nlohmann::json::exception &e) {
        fail(Status::invalid_argument, "invalid-argument", e.what());
    } catch (const std::exception &e) {
        fail(Status::numerical_consistency, "numerical-consistency", e.what());
    }
    result.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

/// Runs a command and writes its output: payload or help on stdout, errors on
/// stderr. Returns the process exit code.
inline int run_main(int argc, char **argv) {
    const auto r = run(std::vector<std::string>(argv + 1, argv + argc));
    if (r.payload.is_object() && r.payload.contains("error")) {
        std::cerr << r.payload.dump() << '\n';
        if (!r.text.empty())
            std::cerr << r.text;
    } else {
        std::cout << render(r);
        if (r.text.empty())
            std::cout << '\n';
    }
    return exit_code(r.status);
}

} // namespace symverify::cli
