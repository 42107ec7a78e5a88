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

#include <cstdlib>
#include <string>

#include "symverify/errors.hpp"

namespace symverify {

/// Absolute entrywise tolerance for floating comparisons.
inline constexpr double kTolerance = 1e-9;
/// Tolerance when rounding a trace or character sum to an integer.
inline constexpr double kIntegralTolerance = 1e-6;

/// Largest n for which S_n is enumerated at all (|S_7| = 5040).
inline constexpr int kMaxGroupDegree = 7;
/// Default largest n for dense |G| x |G| objects (regular reps, FT).
inline constexpr int kDefaultDenseCap = 6;
/// Upper bound on amplitudes held by a single simulated statevector.
inline constexpr long long kMaxStateAmplitudes = 1LL << 24;

inline constexpr const char *kDenseCapEnv = "SYMVERIFY_DENSE_CAP";

inline long long factorial(int n) {
    long long f = 1;
    for (int k = 2; k <= n; ++k)
        f *= k;
    return f;
}

/// Dense cap in effect, honoring the SYMVERIFY_DENSE_CAP override (still
/// bounded by kMaxGroupDegree).
inline int dense_cap() {
    const char *env = std::getenv(kDenseCapEnv);
    if (env == nullptr || *env == '\0')
        return kDefaultDenseCap;
    char *end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1)
        throw InvalidArgument(std::string(kDenseCapEnv) + " must be a positive integer, got '" +
                              env + "'");
    return v > kMaxGroupDegree ? kMaxGroupDegree : static_cast<int>(v);
}

inline void require_dense(int n, const std::string &what) {
    const int cap = dense_cap();
    if (n > cap) {
        const long long g = factorial(n);
        throw ResourceLimit(what + ": n = " + std::to_string(n) + " exceeds the dense cap " +
                            std::to_string(cap) + " (|G| = n! = " + std::to_string(g) +
                            "; a dense |G|x|G| complex matrix needs 16*(n!)^2 = " +
                            std::to_string(16 * g * g) + " bytes); raise " + kDenseCapEnv +
                            " to override");
    }
}

} // namespace symverify
