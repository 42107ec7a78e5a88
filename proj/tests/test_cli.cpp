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

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <catch2/catch.hpp>

#include "symverify/cli.hpp"

using namespace symverify;
using cli::Json;
using cli::Status;

namespace {

cli::CommandResult run(std::initializer_list<std::string> args) { return cli::run(std::vector<std::string>(args)); }

std::string temp_path(const std::string &name) {
    return (std::filesystem::temp_directory_path() / ("symverify_test_" + name)).string();
}

} // namespace

TEST_CASE("documented examples", "[cli]") {
    const auto k = run({"kron", "2,1", "2,1", "2,1", "--route", "both"});
    CHECK(k.status == Status::ok);
    CHECK(k.payload == Json::parse(R"({"m": 1, "routes_agree": true})"));

    CHECK(run({"sym", "dim", "2,1"}).payload == Json::parse(R"({"d": 2})"));

    const auto l = run({"lightning", "2,1", "2,1"});
    CHECK(l.payload.size() == 3);
    CHECK(l.payload["(3)"].get<double>() == Approx(0.25).margin(1e-12));
    CHECK(l.payload["(1,1,1)"].get<double>() == Approx(0.25).margin(1e-12));
    CHECK(l.payload["(2,1)"].get<double>() == Approx(0.5).margin(1e-12));
}

TEST_CASE("exit codes", "[cli]") {
    CHECK(cli::exit_code(run({"frobnicate"}).status) == 2);
    CHECK(!run({"frobnicate"}).text.empty());
    CHECK(cli::exit_code(run({"sym", "dim", "1,2"}).status) == 2);
    CHECK(cli::exit_code(run({"kron", "2,1", "2,2", "2,1"}).status) == 2);
    CHECK(cli::exit_code(run({"sym", "partitions", "0"}).status) == 2);
    CHECK(cli::exit_code(run({"rep", "ft", "7"}).status) == 3);
    CHECK(cli::exit_code(run({"rep", "char", "2,2,2,1,1"}).status) == 3);
    CHECK(cli::exit_code(run({"selftest", "--n-max", "9"}).status) == 2);
    CHECK(cli::exit_code(run({"kron", "3", "3", "2,1"}).status) == 0);
    const auto err = run({"rep", "ft", "7"});
    CHECK(err.payload["error"] == "resource-limit");
    CHECK(err.payload["message"].get<std::string>().find("n!") != std::string::npos);
    CHECK(run({"--help"}).status == Status::ok);
    CHECK(!run({"--help"}).text.empty());
}

TEST_CASE("matrix and state schemas round-trip", "[cli]") {
    const auto m = run({"rep", "matrix", "2,1", "2,3,1"});
    REQUIRE(m.status == Status::ok);
    CHECK(m.payload["rows"] == 2);
    CHECK(m.payload["cols"] == 2);
    const ComplexMatrix want = rep_evaluate(irrep(Partition({2, 1})), Permutation({2, 3, 1}));
    for (Index i = 0; i < 2; ++i)
        for (Index j = 0; j < 2; ++j) {
            const auto &e = m.payload["data"][static_cast<std::size_t>(i * 2 + j)];
            CHECK(e[0].get<double>() == want(i, j).real());
            CHECK(e[1].get<double>() == want(i, j).imag());
        }

    const auto p = run({"wfs", "project", "tensor:2,1/2,1", "2,1"});
    CHECK(p.payload["lambda"] == "2,1");
    CHECK(p.payload["rank"] == 2);
    CHECK(run({"wfs", "povm", "tensor:2,1/2,1"}).payload.size() == 3);

    const auto phi = run({"state", "phi-pi", "tensor:2,1/2,1", "2,1"});
    REQUIRE(phi.status == Status::ok);
    const StateVector parsed = cli::state_from_json(phi.payload["state"]);
    CHECK(parsed.registers() == std::vector<Index>{4, 4});
    CHECK(cli::state_json(parsed) == phi.payload["state"]);

    // The witness state passes the verifier.
    const std::string path = temp_path("phi_xi.json");
    {
        std::ofstream out(path);
        out << phi.payload["state"].dump();
    }
    const auto v = run({"verify", "run", "2,1", "2,1", "2,1", "--state", path, "--seed", "5"});
    REQUIRE(v.status == Status::ok);
    CHECK(v.payload["wfs_passed"] == true);
    CHECK(v.payload["accepted"] == true);
    CHECK(v.payload["internal"]["formula_value"].get<double>() == Approx(1.0).margin(1e-9));
    std::remove(path.c_str());

    CHECK(run({"verify", "run", "2,1", "2,1", "2,1", "--state", "/nonexistent/x.json", "--seed", "1"}).status ==
          Status::invalid_argument);
}

TEST_CASE("verify subcommands", "[cli]") {
    const auto s = run({"verify", "spectrum", "2,1", "2,1", "2,1"});
    CHECK(s.payload["eigenvalue_one_multiplicity"] == 1);
    CHECK(s.payload["gap_ok"] == true);
    CHECK(s.payload["s"].get<double>() == Approx(0.5).margin(1e-9));
    CHECK(s.payload["dimensions"]["fixed_point"] == 1);

    const auto c = run({"verify", "certify", "2,1", "2,1", "2,1", "--trials", "50", "--seed", "2", "--reports"});
    CHECK(c.payload["summary"]["corollary"]["violations"] == 0);
    CHECK(c.payload["summary"]["theorem"]["violations"] == 0);
    CHECK(c.payload["reports"].size() == 100);
    CHECK(c.payload["reports"][0]["kind"] == "corollary");

    const auto lemma = run({"verify", "lemma", "2", "2,1", "--trials", "50", "--mode", "perturbed"});
    CHECK(lemma.payload["summary"]["lemma"]["violations"] == 0);
    CHECK(run({"verify", "lemma", "2", "2,1", "--mode", "bogus"}).status == Status::invalid_argument);
}

TEST_CASE("seeded commands are deterministic", "[cli]") {
    const auto a = run({"verify", "certify", "2,1", "2,1", "2,1", "--trials", "20", "--seed", "9", "--reports"});
    const auto b = run({"verify", "certify", "2,1", "2,1", "2,1", "--trials", "20", "--seed", "9", "--reports"});
    CHECK(cli::render(a) == cli::render(b));
    const auto m1 = run({"wfs", "measure", "tensor:2,1/2,1", "--state", "phi-plus", "--seed", "3"});
    const auto m2 = run({"wfs", "measure", "tensor:2,1/2,1", "--state", "phi-plus", "--seed", "3"});
    CHECK(cli::render(m1) == cli::render(m2));
    const auto s1 = run({"selftest", "--n-max", "3", "--seed", "7", "--trials", "10"});
    const auto s2 = run({"selftest", "--n-max", "3", "--seed", "7", "--trials", "10"});
    CHECK(s1.status == Status::ok);
    CHECK(s1.payload["ok"] == true);
    CHECK(cli::render(s1) == cli::render(s2));
    CHECK_FALSE(s1.payload["suites"][0].contains("elapsed_ms"));
    CHECK(run({"selftest", "--n-max", "2", "--trials", "2", "--timing"}).payload["suites"][0].contains("elapsed_ms"));
}

TEST_CASE("pretty output rounds to 6 significant digits", "[cli]") {
    const auto r = run({"rep", "matrix", "2,1", "2,3,1", "--pretty"});
    CHECK(r.pretty);
    const auto shown = Json::parse(cli::render(r));
    CHECK(shown["data"][1][0].get<double>() == 0.866025);
    CHECK(r.payload["data"][1][0].get<double>() == std::sqrt(3.0) / 2.0);
}

TEST_CASE("representation specs", "[cli]") {
    CHECK(cli::parse_sigma("2,1").dim() == 2);
    CHECK(cli::parse_sigma("tensor:2,1/2,1").dim() == 4);
    CHECK(cli::parse_sigma("left:3").dim() == 6);
    CHECK(cli::parse_sigma("right:3").kind() == RepKind::right_regular);
    CHECK(cli::parse_sigma("amp:2/2,1").dim() == 4);
    CHECK(cli::parse_sigma("lift:2,1/3").dim() == 6);
    CHECK_THROWS_AS(cli::parse_sigma("left:x"), InvalidArgument);
    CHECK_THROWS_AS(cli::parse_sigma("mystery:3"), InvalidArgument);
}
