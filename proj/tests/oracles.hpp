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

// Test-only reference computations. Nothing here calls into the library's
// representation code; the point is to have a second route to every value
// the tests freeze.

#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

/// Partitions of n as weakly decreasing compositions, reverse-lex sorted.
inline std::vector<std::vector<int>> partitions_by_compositions(int n) {
    std::vector<std::vector<int>> out;
    // Bit k of mask set = cut after position k.
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> parts;
        int run = 1;
        for (int k = 0; k < n - 1; ++k) {
            if (mask & (1u << k)) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        if (std::is_sorted(parts.begin(), parts.end(), std::greater<>()))
            out.push_back(parts);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

/// Standard fillings of a shape found by trying every permutation of 1..n
/// in reading order.
inline std::vector<std::vector<std::vector<int>>> tableaux_by_exhaustion(const std::vector<int> &shape) {
    const int n = std::accumulate(shape.begin(), shape.end(), 0);
    std::vector<int> word(n);
    std::iota(word.begin(), word.end(), 1);
    std::vector<std::vector<std::vector<int>>> out;
    do {
        std::vector<std::vector<int>> rows;
        int k = 0;
        for (int len : shape) {
            rows.emplace_back(word.begin() + k, word.begin() + k + len);
            k += len;
        }
        bool ok = true;
        for (std::size_t r = 0; r < rows.size() && ok; ++r)
            for (std::size_t c = 0; c < rows[r].size() && ok; ++c) {
                if (c > 0 && rows[r][c - 1] > rows[r][c])
                    ok = false;
                if (r > 0 && rows[r - 1][c] > rows[r][c])
                    ok = false;
            }
        if (ok)
            out.push_back(rows);
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

/// chi^lambda on cycle type rho by the Murnaghan-Nakayama rule, using beta
/// numbers: removing a rim hook of length k moves one bead from b to b - k,
/// with sign (-1)^(beads strictly between).
inline long long mn_character(const std::vector<int> &lambda, std::vector<int> rho) {
    if (rho.empty())
        return 1;
    const int k = rho.back();
    rho.pop_back();
    const int len = static_cast<int>(lambda.size());
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i)
        beta[i] = lambda[i] + (len - 1 - i);
    long long total = 0;
    for (int i = 0; i < len; ++i) {
        const int target = beta[i] - k;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end())
            continue;
        int between = 0;
        for (int b : beta)
            if (b > target && b < beta[i])
                ++between;
        std::vector<int> moved = beta;
        moved[i] = target;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        std::vector<int> smaller;
        for (int j = 0; j < len; ++j) {
            const int part = moved[j] - (len - 1 - j);
            if (part > 0)
                smaller.push_back(part);
        }
        total += (between % 2 == 0 ? 1 : -1) * mn_character(smaller, rho);
    }
    return total;
}

inline long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

/// Size of the conjugacy class with cycle type rho in S_n.
inline long long class_size(const std::vector<int> &rho) {
    const int n = std::accumulate(rho.begin(), rho.end(), 0);
    long long z = 1;
    std::vector<int> counts(n + 1, 0);
    for (int r : rho) {
        z *= r;
        ++counts[r];
    }
    for (int c : counts)
        z *= factorial(c);
    return factorial(n) / z;
}

/// Kronecker coefficient by exact integer character sums over classes.
inline long long kronecker(const std::vector<int> &mu, const std::vector<int> &nu, const std::vector<int> &lambda) {
    const int n = std::accumulate(mu.begin(), mu.end(), 0);
    long long sum = 0;
    for (const auto &rho : partitions_by_compositions(n))
        sum += class_size(rho) * mn_character(mu, rho) * mn_character(nu, rho) * mn_character(lambda, rho);
    return sum / factorial(n);
}

/// Cycle type by following cycles on a one-line permutation.
inline std::vector<int> cycle_lengths(const std::vector<int> &images) {
    std::vector<bool> seen(images.size(), false);
    std::vector<int> out;
    for (std::size_t s = 0; s < images.size(); ++s) {
        int len = 0;
        for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(images[x] - 1)) {
            seen[x] = true;
            ++len;
        }
        if (len > 0)
            out.push_back(len);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

} // namespace oracle
