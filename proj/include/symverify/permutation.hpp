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
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "symverify/errors.hpp"
#include "symverify/partition.hpp"

namespace symverify {

/// A permutation of {1..n} in one-line notation: images[k] = p(k+1).
///
/// Products compose as functions: (p * q)(x) = p(q(x)).
class Permutation {
  public:
    Permutation() = default;

    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size() + 1, false);
        for (int v : images_) {
            if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)])
                throw InvalidArgument("not a permutation of 1..n");
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> im(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k)
            im[static_cast<std::size_t>(k)] = k + 1;
        return Permutation(std::move(im));
    }

    /// The adjacent transposition (i, i+1), 1 <= i <= n-1.
    static Permutation adjacent(int n, int i) {
        if (i < 1 || i >= n)
            throw InvalidArgument("adjacent transposition index out of range");
        auto p = identity(n);
        std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(i)]);
        return p;
    }

    /// Parses comma-joined one-line notation, e.g. "2,3,1".
    static Permutation parse(std::string_view text) {
        std::vector<int> im;
        std::string token;
        auto flush = [&] {
            std::size_t used = 0;
            try {
                im.push_back(std::stoi(token, &used));
            } catch (const std::exception &) {
                used = 0;
            }
            if (token.empty() || used != token.size())
                throw InvalidArgument("malformed permutation '" + std::string(text) + "'");
            token.clear();
        };
        for (char c : text) {
            if (c == ',')
                flush();
            else if (c != ' ')
                token.push_back(c);
        }
        flush();
        return Permutation(std::move(im));
    }

    int n() const noexcept { return static_cast<int>(images_.size()); }
    const std::vector<int> &images() const noexcept { return images_; }

    /// p(x) for 1 <= x <= n.
    int operator()(int x) const { return images_.at(static_cast<std::size_t>(x - 1)); }

    bool is_identity() const noexcept {
        for (std::size_t k = 0; k < images_.size(); ++k)
            if (images_[k] != static_cast<int>(k) + 1)
                return false;
        return true;
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t k = 0; k < images_.size(); ++k) {
            if (k > 0)
                out += ',';
            out += std::to_string(images_[k]);
        }
        return out;
    }

    bool operator==(const Permutation &) const = default;
    std::strong_ordering operator<=>(const Permutation &other) const {
        return images_ <=> other.images_;
    }

  private:
    std::vector<int> images_;
};

inline Permutation compose(const Permutation &p, const Permutation &q) {
    if (p.n() != q.n())
        throw InvalidArgument("compose: degree mismatch");
    std::vector<int> im(static_cast<std::size_t>(p.n()));
    for (int x = 1; x <= p.n(); ++x)
        im[static_cast<std::size_t>(x - 1)] = p(q(x));
    return Permutation(std::move(im));
}

inline Permutation operator*(const Permutation &p, const Permutation &q) { return compose(p, q); }

inline Permutation inverse(const Permutation &p) {
    std::vector<int> im(static_cast<std::size_t>(p.n()));
    for (int x = 1; x <= p.n(); ++x)
        im[static_cast<std::size_t>(p(x) - 1)] = x;
    return Permutation(std::move(im));
}

/// Cycle lengths sorted weakly decreasing.
inline Partition cycle_type(const Permutation &p) {
    std::vector<bool> seen(static_cast<std::size_t>(p.n()), false);
    std::vector<int> lengths;
    for (int start = 1; start <= p.n(); ++start) {
        if (seen[static_cast<std::size_t>(start - 1)])
            continue;
        int len = 0;
        for (int x = start; !seen[static_cast<std::size_t>(x - 1)]; x = p(x)) {
            seen[static_cast<std::size_t>(x - 1)] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return Partition(std::move(lengths));
}

inline Partition conjugacy_class_of(const Permutation &p) { return cycle_type(p); }

/// Word i_1..i_k with g = s_{i_1} * ... * s_{i_k}, where s_i swaps i and i+1.
///
/// Bubble-sorts the one-line notation by right multiplication (which swaps
/// positions), so k equals the inversion count and never exceeds n(n-1)/2.
inline std::vector<int> adjacent_transposition_decomposition(const Permutation &g) {
    std::vector<int> im = g.images();
    std::vector<int> applied;
    const int n = g.n();
    for (int pass = 0; pass < n; ++pass) {
        bool swapped = false;
        for (int k = 0; k + 1 < n; ++k) {
            if (im[static_cast<std::size_t>(k)] > im[static_cast<std::size_t>(k + 1)]) {
                std::swap(im[static_cast<std::size_t>(k)], im[static_cast<std::size_t>(k + 1)]);
                applied.push_back(k + 1);
                swapped = true;
            }
        }
        if (!swapped)
            break;
    }
    // g * s_{a_1} * ... * s_{a_k} = e, hence g = s_{a_k} * ... * s_{a_1}.
    std::reverse(applied.begin(), applied.end());
    return applied;
}

/// A second, structurally different word for g: sorts values by left
/// multiplication (which swaps the values i and i+1).
inline std::vector<int> adjacent_transposition_decomposition_by_values(const Permutation &g) {
    const int n = g.n();
    // pos[v] = position of value v in the one-line notation.
    std::vector<int> pos(static_cast<std::size_t>(n + 1));
    for (int x = 1; x <= n; ++x)
        pos[static_cast<std::size_t>(g(x))] = x;
    std::vector<int> applied;
    for (int pass = 0; pass < n; ++pass) {
        bool swapped = false;
        for (int v = n - 1; v >= 1; --v) {
            if (pos[static_cast<std::size_t>(v)] > pos[static_cast<std::size_t>(v + 1)]) {
                std::swap(pos[static_cast<std::size_t>(v)], pos[static_cast<std::size_t>(v + 1)]);
                applied.push_back(v);
                swapped = true;
            }
        }
        if (!swapped)
            break;
    }
    // s_{b_k} * ... * s_{b_1} * g = e, hence g = s_{b_1} * ... * s_{b_k}.
    return applied;
}

/// Product s_{i_1} * ... * s_{i_k} in S_n.
inline Permutation word_product(int n, const std::vector<int> &word) {
    auto p = Permutation::identity(n);
    for (int i : word)
        p = p * Permutation::adjacent(n, i);
    return p;
}

} // namespace symverify
