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
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symverify/errors.hpp"

namespace symverify {

/// An integer partition lambda |- n, i.e. the label of an irrep of S_n.
///
/// Parts are stored weakly decreasing and strictly positive; the
/// constructor rejects anything else.
class Partition {
  public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty())
            throw InvalidArgument("partition must have at least one part");
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (parts_[k] < 1)
                throw InvalidArgument("partition parts must be positive");
            if (k > 0 && parts_[k] > parts_[k - 1])
                throw InvalidArgument("partition parts must be weakly decreasing");
            n_ += parts_[k];
        }
    }

    /// Parses "2,1" (whitespace tolerated, optional surrounding parens).
    static Partition parse(std::string_view text) {
        std::vector<int> parts;
        std::string token;
        auto flush = [&] {
            if (token.empty())
                throw InvalidArgument("malformed partition '" + std::string(text) + "'");
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(token, &used);
            } catch (const std::exception &) {
                throw InvalidArgument("malformed partition '" + std::string(text) + "'");
            }
            if (used != token.size())
                throw InvalidArgument("malformed partition '" + std::string(text) + "'");
            parts.push_back(v);
            token.clear();
        };
        std::string_view body = text;
        while (!body.empty() && body.front() == ' ')
            body.remove_prefix(1);
        while (!body.empty() && body.back() == ' ')
            body.remove_suffix(1);
        if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
            body = body.substr(1, body.size() - 2);
        for (char c : body) {
            if (c == ',')
                flush();
            else if (c != ' ')
                token.push_back(c);
        }
        flush();
        return Partition(std::move(parts));
    }

    int n() const noexcept { return n_; }
    std::size_t length() const noexcept { return parts_.size(); }
    std::span<const int> parts() const noexcept { return parts_; }
    int operator[](std::size_t row) const { return parts_.at(row); }

    /// Conjugate (transposed) partition.
    Partition transpose() const {
        std::vector<int> cols(static_cast<std::size_t>(parts_.front()), 0);
        for (int len : parts_)
            for (int c = 0; c < len; ++c)
                ++cols[static_cast<std::size_t>(c)];
        return Partition(std::move(cols));
    }

    /// "2,1"
    std::string to_string() const {
        std::string out;
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (k > 0)
                out += ',';
            out += std::to_string(parts_[k]);
        }
        return out;
    }

    /// "(2,1)"
    std::string label() const { return "(" + to_string() + ")"; }

    bool operator==(const Partition &) const = default;

    /// Lexicographic on parts; the canonical enumeration order is the reverse.
    std::strong_ordering operator<=>(const Partition &other) const {
        return parts_ <=> other.parts_;
    }

  private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
inline std::vector<Partition> enumerate_partitions(int n) {
    if (n < 1)
        throw InvalidArgument("enumerate_partitions: n must be >= 1, got " + std::to_string(n));
    std::vector<Partition> out;
    std::vector<int> current;
    // Depth-first with parts chosen largest-first gives reverse-lex order.
    std::function<void(int, int)> recurse = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            recurse(remaining - p, p);
            current.pop_back();
        }
    };
    recurse(n, n);
    return out;
}

} // namespace symverify

template <> struct std::hash<symverify::Partition> {
    std::size_t operator()(const symverify::Partition &p) const noexcept {
        std::size_t h = 0;
        for (int v : p.parts())
            h = h * 131 + static_cast<std::size_t>(v);
        return h;
    }
};
