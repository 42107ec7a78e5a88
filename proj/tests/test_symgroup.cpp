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

#include <catch2/catch.hpp>

#include "oracles.hpp"
#include "symverify/group.hpp"
#include "symverify/partition.hpp"
#include "symverify/permutation.hpp"
#include "symverify/random.hpp"
#include "symverify/tableau.hpp"

using namespace symverify;

TEST_CASE("enumerate_partitions matches the composition oracle", "[symgroup]") {
    CHECK(enumerate_partitions(1) == std::vector<Partition>{Partition({1})});

    const auto four = enumerate_partitions(4);
    REQUIRE(four.size() == 5);
    CHECK(four[0] == Partition({4}));
    CHECK(four[1] == Partition({3, 1}));
    CHECK(four[2] == Partition({2, 2}));
    CHECK(four[3] == Partition({2, 1, 1}));
    CHECK(four[4] == Partition({1, 1, 1, 1}));

    CHECK(enumerate_partitions(6).size() == 11);

    for (int n = 1; n <= 8; ++n) {
        const auto got = enumerate_partitions(n);
        const auto want = oracle::partitions_by_compositions(n);
        REQUIRE(got.size() == want.size());
        for (std::size_t k = 0; k < got.size(); ++k)
            CHECK(std::vector<int>(got[k].parts().begin(), got[k].parts().end()) == want[k]);
    }
}

TEST_CASE("enumerate_partitions rejects n < 1", "[symgroup]") {
    CHECK_THROWS_AS(enumerate_partitions(0), InvalidArgument);
    CHECK_THROWS_AS(enumerate_partitions(-3), InvalidArgument);
}

TEST_CASE("Partition validation and parsing", "[symgroup]") {
    CHECK_THROWS_AS(Partition({1, 2}), InvalidArgument);
    CHECK_THROWS_AS(Partition({2, 0}), InvalidArgument);
    CHECK_THROWS_AS(Partition(std::vector<int>{}), InvalidArgument);
    CHECK(Partition::parse("2,1") == Partition({2, 1}));
    CHECK(Partition::parse("(3, 1,1)") == Partition({3, 1, 1}));
    CHECK_THROWS_AS(Partition::parse("2,,1"), InvalidArgument);
    CHECK_THROWS_AS(Partition::parse("a"), InvalidArgument);
    CHECK(Partition({3, 1, 1}).to_string() == "3,1,1");
    CHECK(Partition({3, 1, 1}).transpose() == Partition({3, 1, 1}));
    CHECK(Partition({4, 2}).transpose() == Partition({2, 2, 1, 1}));
}

TEST_CASE("irrep_dimension by hook length", "[symgroup]") {
    CHECK(irrep_dimension(Partition({5})) == 1);
    CHECK(irrep_dimension(Partition({2, 1})) == 2);
    CHECK(irrep_dimension(Partition({2, 2})) == 2);
    CHECK(irrep_dimension(Partition({3, 2, 1})) == 16);
}

TEST_CASE("hook length agrees with tableau counts, and squares sum to n!", "[symgroup]") {
    for (int n = 1; n <= 6; ++n) {
        long long sum_sq = 0;
        for (const auto &p : enumerate_partitions(n)) {
            const auto d = hook_length_dimension(p);
            CHECK(static_cast<long long>(enumerate_tableaux(p).size()) == d);
            sum_sq += d * d;
        }
        CHECK(sum_sq == factorial(n));
    }
}

TEST_CASE("enumerate_tableaux order and exhaustive oracle", "[symgroup]") {
    const auto single = enumerate_tableaux(Partition({4}));
    REQUIRE(single.size() == 1);
    CHECK(single[0].rows() == std::vector<std::vector<int>>{{1, 2, 3, 4}});

    const auto hook = enumerate_tableaux(Partition({2, 1}));
    REQUIRE(hook.size() == 2);
    CHECK(hook[0].rows() == std::vector<std::vector<int>>{{1, 2}, {3}});
    CHECK(hook[1].rows() == std::vector<std::vector<int>>{{1, 3}, {2}});

    CHECK(enumerate_tableaux(Partition({1, 1, 1})).size() == 1);

    for (int n = 1; n <= 6; ++n)
        for (const auto &p : enumerate_partitions(n)) {
            const auto got = enumerate_tableaux(p);
            auto want = oracle::tableaux_by_exhaustion(std::vector<int>(p.parts().begin(), p.parts().end()));
            // Exhaustion visits reading words in lexicographic order already.
            REQUIRE(got.size() == want.size());
            for (std::size_t k = 0; k < got.size(); ++k)
                CHECK(got[k].rows() == want[k]);
        }
}

TEST_CASE("StandardTableau rejects non-standard fillings", "[symgroup]") {
    CHECK_THROWS_AS(StandardTableau({{2, 1}, {3}}), InvalidArgument);
    CHECK_THROWS_AS(StandardTableau({{1, 3}, {4}}), InvalidArgument);
    CHECK_THROWS_AS(StandardTableau({{1, 2}, {1}}), InvalidArgument);
    CHECK_THROWS_AS(StandardTableau({{1, 3}, {2}, {4, 5}}), InvalidArgument);
}

TEST_CASE("axial_distance sign convention", "[symgroup]") {
    const StandardTableau row_first({{1, 2}, {3}});
    const StandardTableau col_first({{1, 3}, {2}});
    CHECK(axial_distance(row_first, 1) == 1);
    CHECK(axial_distance(col_first, 1) == -1);
    CHECK(axial_distance(row_first, 2) == -2);
    CHECK(axial_distance(col_first, 2) == 2);
    CHECK_THROWS_AS(axial_distance(row_first, 3), InvalidArgument);
    CHECK_THROWS_AS(axial_distance(row_first, 0), InvalidArgument);
}

TEST_CASE("adjacent transposition words reproduce every permutation", "[symgroup]") {
    CHECK(adjacent_transposition_decomposition(Permutation::identity(4)).empty());
    CHECK(adjacent_transposition_decomposition(Permutation({2, 1, 3})) == std::vector<int>{1});

    // 1 -> 2 -> 3 -> 1 in one-line notation is 2,3,1.
    const Permutation cycle({2, 3, 1});
    const auto word = adjacent_transposition_decomposition(cycle);
    CHECK(word.size() == 2);
    // Independent check: compose the transpositions by hand.
    std::vector<int> acc{1, 2, 3};
    for (int i : word) {
        // acc <- acc o s_i swaps positions i-1, i.
        std::swap(acc[static_cast<std::size_t>(i - 1)], acc[static_cast<std::size_t>(i)]);
    }
    CHECK(acc == cycle.images());

    for (int n = 1; n <= 5; ++n)
        for (const auto &g : enumerate_group(n)) {
            const auto w1 = adjacent_transposition_decomposition(g);
            const auto w2 = adjacent_transposition_decomposition_by_values(g);
            CHECK(static_cast<int>(w1.size()) <= n * (n - 1) / 2);
            CHECK(word_product(n, w1) == g);
            CHECK(word_product(n, w2) == g);
        }
}

TEST_CASE("Permutation algebra", "[symgroup]") {
    Rng rng(11);
    const auto elements = enumerate_group(5);
    for (int trial = 0; trial < 50; ++trial) {
        const auto &p = elements[static_cast<std::size_t>(rng.uniform() * elements.size())];
        const auto &q = elements[static_cast<std::size_t>(rng.uniform() * elements.size())];
        CHECK((p * inverse(p)).is_identity());
        CHECK((inverse(p) * p).is_identity());
        // (p q)(x) = p(q(x))
        for (int x = 1; x <= 5; ++x)
            CHECK((p * q)(x) == p(q(x)));
    }
    CHECK_THROWS_AS(Permutation({1, 1, 2}), InvalidArgument);
    CHECK_THROWS_AS(Permutation({0, 1}), InvalidArgument);
    CHECK(Permutation::parse("2,3,1") == Permutation({2, 3, 1}));
    CHECK(Permutation({2, 3, 1}).to_string() == "2,3,1");
}

TEST_CASE("enumerate_group size, order and conjugacy classes", "[symgroup]") {
    CHECK(enumerate_group(3).size() == 6);
    CHECK(enumerate_group(4).size() == 24);
    CHECK(conjugacy_class_of(Permutation({2, 3, 1})) == Partition({3}));
    CHECK(conjugacy_class_of(Permutation({2, 1, 3})) == Partition({2, 1}));
    CHECK(conjugacy_class_of(Permutation::identity(3)) == Partition({1, 1, 1}));

    const auto s4 = enumerate_group(4);
    CHECK(std::is_sorted(s4.begin(), s4.end()));
    // Stable across calls: same serialization.
    std::string a, b;
    for (const auto &g : s4)
        a += g.to_string() + ";";
    for (const auto &g : enumerate_group(4))
        b += g.to_string() + ";";
    CHECK(a == b);

    CHECK_THROWS_AS(enumerate_group(8), ResourceLimit);
    try {
        enumerate_group(8);
    } catch (const ResourceLimit &e) {
        CHECK(std::string(e.what()).find("40320") != std::string::npos);
    }
}

TEST_CASE("SymmetricGroup bookkeeping", "[symgroup]") {
    for (int n = 1; n <= 5; ++n) {
        const SymmetricGroup g(n);
        std::size_t class_total = 0;
        for (std::size_t c = 0; c < g.classes().size(); ++c) {
            const auto rho = g.classes()[c];
            CHECK(static_cast<long long>(g.class_size(c)) ==
                  oracle::class_size(std::vector<int>(rho.parts().begin(), rho.parts().end())));
            class_total += g.class_size(c);
        }
        CHECK(class_total == g.order());
        for (std::size_t e = 0; e < g.order(); ++e) {
            CHECK(g.index_of(g[e]) == e);
            CHECK((g[e] * g[g.inverse_index(e)]).is_identity());
            const auto ct = oracle::cycle_lengths(g[e].images());
            CHECK(g.classes()[g.class_of(e)] == Partition(ct));
            if (e != g.identity_index())
                CHECK(g[g.parent(e)] * Permutation::adjacent(n, g.generator(e)) == g[e]);
        }
    }
}
