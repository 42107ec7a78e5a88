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
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

#include "symverify/linalg.hpp"

namespace symverify {

/// Number of contiguous chunks a group sum is split into, independent of the
/// thread count.
inline constexpr std::size_t kSumChunks = 16;

/// Sum_{g < count} term(g) with a fixed reduction shape.
///
/// The index range is cut into kSumChunks contiguous chunks; each chunk is
/// Kahan-summed in index order and the chunk partials are combined by a
/// fixed pairwise tree. Threads only decide who computes which chunk, so the
/// result is bit-identical for every thread count.
template <class Term>
ComplexMatrix group_sum(std::size_t count, Index rows, Index cols, const Term &term,
                        unsigned threads = 1) {
    const std::size_t chunks = std::max<std::size_t>(1, std::min(kSumChunks, count));
    std::vector<CompensatedSum> partial(chunks, CompensatedSum(rows, cols));
    auto run_chunk = [&](std::size_t c) {
        const std::size_t begin = c * count / chunks;
        const std::size_t end = (c + 1) * count / chunks;
        for (std::size_t g = begin; g < end; ++g)
            partial[c].add(term(g));
    };
    if (threads <= 1 || chunks == 1) {
        for (std::size_t c = 0; c < chunks; ++c)
            run_chunk(c);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(chunks));
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t c = next++; c < chunks; c = next++)
                    run_chunk(c);
            });
        for (auto &t : pool)
            t.join();
    }
    for (std::size_t stride = 1; stride < chunks; stride *= 2)
        for (std::size_t c = 0; c + stride < chunks; c += 2 * stride)
            partial[c].merge(partial[c + stride]);
    return partial[0].value();
}

/// Scalar counterpart of group_sum, sequential Kahan in index order.
template <class Term> Complex scalar_group_sum(std::size_t count, const Term &term) {
    CompensatedScalar acc;
    for (std::size_t g = 0; g < count; ++g)
        acc.add(term(g));
    return acc.value();
}

} // namespace symverify
