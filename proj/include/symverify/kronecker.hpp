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

#include <string>

#include "symverify/errors.hpp"
#include "symverify/partition.hpp"
#include "symverify/rep.hpp"
#include "symverify/wfs.hpp"

namespace symverify {

enum class MultiplicityRoute { character_sum, projector_rank };

inline const char *to_string(MultiplicityRoute r) {
    return r == MultiplicityRoute::character_sum ? "character-sum" : "projector-rank";
}

struct Multiplicity {
    int value = 0;
    MultiplicityRoute route = MultiplicityRoute::character_sum;
};

/// m_{sigma lambda} = (1/|G|) sum_g chi^lambda(g)^* chi^sigma(g).
inline Multiplicity multiplicity_character(const GroupRep &sigma, const Partition &lambda) {
    return {character_multiplicity(sigma, lambda), MultiplicityRoute::character_sum};
}

/// m_{sigma lambda} = rank(Xi_lambda) / d_lambda.
inline Multiplicity multiplicity_rank(const GroupRep &sigma, const Partition &lambda) {
    const int rank = wfs_projector(sigma, lambda).rank;
    const int d = irrep_dimension(lambda);
    if (rank % d != 0)
        throw NumericalConsistency("rank(Xi" + lambda.label() + ") = " + std::to_string(rank) +
                                   " is not divisible by d = " + std::to_string(d));
    return {rank / d, MultiplicityRoute::projector_rank};
}

inline void require_same_n(const Partition &mu, const Partition &nu, const Partition &lambda) {
    if (mu.n() != nu.n() || nu.n() != lambda.n())
        throw InvalidArgument("Kronecker coefficient needs partitions of one n, got " + mu.label() +
                              ", " + nu.label() + ", " + lambda.label());
}

/// Kronecker coefficient m_{mu nu lambda}: multiplicity of rho^lambda in
/// rho^mu (x) rho^nu.
inline Multiplicity kronecker_coefficient(const Partition &mu, const Partition &nu, const Partition &lambda,
                                          MultiplicityRoute route = MultiplicityRoute::character_sum) {
    require_same_n(mu, nu, lambda);
    const GroupRep sigma = tensor_rep(mu, nu);
    return route == MultiplicityRoute::character_sum ? multiplicity_character(sigma, lambda)
                                                     : multiplicity_rank(sigma, lambda);
}

struct KroneckerComparison {
    int character_sum = 0;
    int projector_rank = 0;
    bool agree() const noexcept { return character_sum == projector_rank; }
};

inline KroneckerComparison kronecker_both_routes(const Partition &mu, const Partition &nu,
                                                 const Partition &lambda) {
    require_same_n(mu, nu, lambda);
    const GroupRep sigma = tensor_rep(mu, nu);
    return {multiplicity_character(sigma, lambda).value, multiplicity_rank(sigma, lambda).value};
}

inline bool is_positive(const Partition &mu, const Partition &nu, const Partition &lambda) {
    return kronecker_coefficient(mu, nu, lambda).value > 0;
}

} // namespace symverify
