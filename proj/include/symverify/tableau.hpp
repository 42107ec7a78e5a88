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
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symverify/errors.hpp"
#include "symverify/partition.hpp"

namespace symverify {

struct Cell {
    int row = 0;
    int col = 0;
    int content() const noexcept { return col - row; }
    bool operator==(const Cell &) const = default;
};

/// A standard Young tableau: the cells of a partition shape filled with
/// 1..n, strictly increasing along rows and down columns.
class StandardTableau {
  public:
    /// Validates the filling; throws InvalidArgument if it is not standard.
    explicit StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
        std::vector<int> lengths;
        for (const auto &r : rows_)
            lengths.push_back(static_cast<int>(r.size()));
        shape_ = Partition(lengths);
        const int n = shape_.n();
        cells_.assign(static_cast<std::size_t>(n), Cell{-1, -1});
        for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
            for (int c = 0; c < static_cast<int>(rows_[r].size()); ++c) {
                const int v = rows_[r][c];
                if (v < 1 || v > n || cells_[v - 1].row != -1)
                    throw InvalidArgument("tableau entries must be 1..n, each exactly once");
                cells_[v - 1] = Cell{r, c};
                if (c > 0 && rows_[r][c - 1] >= v)
                    throw InvalidArgument("tableau rows must strictly increase");
                if (r > 0 && rows_[r - 1][c] >= v)
                    throw InvalidArgument("tableau columns must strictly increase");
            }
        }
    }

    const Partition &shape() const noexcept { return shape_; }
    int n() const noexcept { return shape_.n(); }
    const std::vector<std::vector<int>> &rows() const noexcept { return rows_; }

    /// Cell holding the entry v (1-based).
    Cell cell_of(int v) const { return cells_.at(static_cast<std::size_t>(v - 1)); }

    /// Rows concatenated top to bottom; the canonical sort key.
    std::vector<int> reading_word() const {
        std::vector<int> w;
        for (const auto &r : rows_)
            w.insert(w.end(), r.begin(), r.end());
        return w;
    }

    /// The filling with entries i and i+1 exchanged, if that is still
    /// standard.
    std::optional<StandardTableau> swapped(int i) const {
        const Cell a = cell_of(i);
        const Cell b = cell_of(i + 1);
        if (a.row == b.row || a.col == b.col)
            return std::nullopt;
        auto rows = rows_;
        std::swap(rows[a.row][a.col], rows[b.row][b.col]);
        return StandardTableau(std::move(rows));
    }

    bool operator==(const StandardTableau &other) const { return rows_ == other.rows_; }

  private:
    std::vector<std::vector<int>> rows_;
    Partition shape_;
    std::vector<Cell> cells_;
};

/// d_lambda by the hook-length formula.
inline long long hook_length_dimension(const Partition &shape) {
    const Partition conj = shape.transpose();
    // n! / prod(hooks); exact in 64-bit integers for n <= 20.
    long long numerator = 1;
    for (int k = 2; k <= shape.n(); ++k)
        numerator *= k;
    long long hooks = 1;
    for (std::size_t r = 0; r < shape.length(); ++r)
        for (int c = 0; c < shape[r]; ++c)
            hooks *= (shape[r] - c - 1) + (conj[static_cast<std::size_t>(c)] - static_cast<int>(r) - 1) + 1;
    return numerator / hooks;
}

inline int irrep_dimension(const Partition &shape) {
    return static_cast<int>(hook_length_dimension(shape));
}

/// All standard tableaux of the given shape, sorted lexicographically by
/// reading word.
inline std::vector<StandardTableau> enumerate_tableaux(const Partition &shape) {
    const int n = shape.n();
    std::vector<std::vector<int>> rows(shape.length());
    std::vector<StandardTableau> out;
    // Place 1..n one at a time at an addable corner of the partial shape.
    auto recurse = [&](auto &self, int next) -> void {
        if (next > n) {
            out.emplace_back(rows);
            return;
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const auto len = rows[r].size();
            if (static_cast<int>(len) >= shape[r])
                continue;
            if (r > 0 && rows[r - 1].size() <= len)
                continue;
            rows[r].push_back(next);
            self(self, next + 1);
            rows[r].pop_back();
        }
    };
    recurse(recurse, 1);
    std::sort(out.begin(), out.end(), [](const StandardTableau &a, const StandardTableau &b) {
        return a.reading_word() < b.reading_word();
    });
    return out;
}

/// Signed content difference content(i+1) - content(i). Same row gives +1,
/// same column gives -1.
inline int axial_distance(const StandardTableau &t, int i) {
    if (i < 1 || i >= t.n())
        throw InvalidArgument("axial_distance: i must lie in 1..n-1");
    return t.cell_of(i + 1).content() - t.cell_of(i).content();
}

} // namespace symverify
