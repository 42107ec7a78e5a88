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
#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "symverify/config.hpp"
#include "symverify/errors.hpp"
#include "symverify/partition.hpp"
#include "symverify/permutation.hpp"

namespace symverify {

/// All n! elements of S_n in lexicographic one-line order, with the
/// bookkeeping the group sums need: inverse indices, cycle types and a
/// length-ordered spanning tree of the Cayley graph.
class SymmetricGroup {
  public:
    explicit SymmetricGroup(int n) : n_(n) {
        if (n < 1)
            throw InvalidArgument("S_n needs n >= 1");
        if (n > kMaxGroupDegree)
            throw ResourceLimit("S_" + std::to_string(n) + " has n! = " +
                                std::to_string(factorial(n)) + " elements; the maximum degree is " +
                                std::to_string(kMaxGroupDegree) + " (n! <= " +
                                std::to_string(factorial(kMaxGroupDegree)) + ")");
        std::vector<int> im(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k)
            im[static_cast<std::size_t>(k)] = k + 1;
        do {
            elements_.emplace_back(im);
        } while (std::next_permutation(im.begin(), im.end()));

        const std::size_t order = elements_.size();
        inverse_.resize(order);
        class_index_.resize(order);
        parent_.assign(order, 0);
        generator_.assign(order, 0);
        length_.assign(order, 0);
        const auto partitions = enumerate_partitions(n);
        for (std::size_t c = 0; c < partitions.size(); ++c)
            class_lookup_.emplace(partitions[c], c);
        classes_ = partitions;
        class_size_.assign(partitions.size(), 0);
        class_representative_.assign(partitions.size(), order);
        for (std::size_t g = 0; g < order; ++g) {
            inverse_[g] = index_of(symverify::inverse(elements_[g]));
            const std::size_t c = class_lookup_.at(cycle_type(elements_[g]));
            class_index_[g] = c;
            ++class_size_[c];
            if (class_representative_[c] == order)
                class_representative_[c] = g;
            const auto word = adjacent_transposition_decomposition(elements_[g]);
            length_[g] = static_cast<int>(word.size());
            if (!word.empty()) {
                // g = parent * s_last with parent one step shorter.
                generator_[g] = word.back();
                parent_[g] = index_of(elements_[g] * Permutation::adjacent(n, word.back()));
            }
        }
        bfs_order_.resize(order);
        for (std::size_t g = 0; g < order; ++g)
            bfs_order_[g] = g;
        std::stable_sort(bfs_order_.begin(), bfs_order_.end(),
                         [&](std::size_t a, std::size_t b) { return length_[a] < length_[b]; });
    }

    int degree() const noexcept { return n_; }
    std::size_t order() const noexcept { return elements_.size(); }
    const std::vector<Permutation> &elements() const noexcept { return elements_; }
    const Permutation &operator[](std::size_t g) const { return elements_.at(g); }

    /// Lexicographic rank of p (Lehmer code).
    std::size_t index_of(const Permutation &p) const {
        if (p.n() != n_)
            throw InvalidArgument("permutation degree " + std::to_string(p.n()) +
                                  " does not match S_" + std::to_string(n_));
        std::size_t rank = 0;
        const auto &im = p.images();
        for (int k = 0; k < n_; ++k) {
            int smaller = 0;
            for (int j = k + 1; j < n_; ++j)
                if (im[static_cast<std::size_t>(j)] < im[static_cast<std::size_t>(k)])
                    ++smaller;
            rank = rank * static_cast<std::size_t>(n_ - k) + static_cast<std::size_t>(smaller);
        }
        return rank;
    }

    std::size_t identity_index() const noexcept { return 0; }
    std::size_t inverse_index(std::size_t g) const { return inverse_.at(g); }
    std::size_t product_index(std::size_t g, std::size_t h) const {
        return index_of(elements_[g] * elements_[h]);
    }

    /// Conjugacy classes, labelled by cycle type, in partition order.
    const std::vector<Partition> &classes() const noexcept { return classes_; }
    std::size_t class_of(std::size_t g) const { return class_index_.at(g); }
    std::size_t class_index(const Partition &cycle_type) const { return class_lookup_.at(cycle_type); }
    std::size_t class_size(std::size_t c) const { return class_size_.at(c); }
    std::size_t class_representative(std::size_t c) const { return class_representative_.at(c); }

    /// Elements sorted by word length; every element appears after its parent.
    const std::vector<std::size_t> &bfs_order() const noexcept { return bfs_order_; }
    /// For g != e: g = parent(g) * s_{generator(g)}.
    std::size_t parent(std::size_t g) const { return parent_.at(g); }
    int generator(std::size_t g) const { return generator_.at(g); }
    int word_length(std::size_t g) const { return length_.at(g); }

  private:
    int n_;
    std::vector<Permutation> elements_;
    std::vector<std::size_t> inverse_;
    std::vector<std::size_t> class_index_;
    std::vector<Partition> classes_;
    std::map<Partition, std::size_t> class_lookup_;
    std::vector<std::size_t> class_size_;
    std::vector<std::size_t> class_representative_;
    std::vector<std::size_t> parent_;
    std::vector<int> generator_;
    std::vector<int> length_;
    std::vector<std::size_t> bfs_order_;
};

/// Shared, immutable S_n instances so every module sees one element order.
inline std::shared_ptr<const SymmetricGroup> symmetric_group(int n) {
    if (n < 1 || n > kMaxGroupDegree)
        return std::make_shared<const SymmetricGroup>(n); // throws
    static std::mutex mutex;
    static std::array<std::shared_ptr<const SymmetricGroup>, kMaxGroupDegree + 1> cache;
    std::lock_guard lock(mutex);
    auto &slot = cache[static_cast<std::size_t>(n)];
    if (!slot)
        slot = std::make_shared<const SymmetricGroup>(n);
    return slot;
}

inline std::vector<Permutation> enumerate_group(int n) { return SymmetricGroup(n).elements(); }

} // namespace symverify
