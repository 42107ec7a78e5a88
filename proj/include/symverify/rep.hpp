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

#include <cmath>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "symverify/config.hpp"
#include "symverify/errors.hpp"
#include "symverify/group.hpp"
#include "symverify/linalg.hpp"
#include "symverify/partition.hpp"
#include "symverify/permutation.hpp"
#include "symverify/tableau.hpp"

namespace symverify {

/// Young-Yamanouchi (orthogonal form) image of s_i = (i, i+1) in the irrep
/// labelled by shape. Basis: enumerate_tableaux(shape).
///
/// Column k carries 1/tau at row k and sqrt(1 - 1/tau^2) at the row of the
/// tableau with i, i+1 exchanged, when that tableau is standard.
inline ComplexMatrix yy_generator_matrix(const Partition &shape, int i) {
    if (i < 1 || i >= shape.n())
        throw InvalidArgument("yy_generator_matrix: i must lie in 1..n-1");
    const auto tableaux = enumerate_tableaux(shape);
    const auto d = static_cast<Index>(tableaux.size());
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    for (Index k = 0; k < d; ++k) {
        const auto &t = tableaux[static_cast<std::size_t>(k)];
        const double tau = axial_distance(t, i);
        m(k, k) = 1.0 / tau;
        if (auto partner = t.swapped(i)) {
            Index l = 0;
            while (!(tableaux[static_cast<std::size_t>(l)] == *partner))
                ++l;
            m(l, k) = std::sqrt(1.0 - 1.0 / (tau * tau));
        }
    }
    return m;
}

enum class RepKind { irrep, tensor, left_regular, right_regular, lifted, conjugate, amplified };

inline const char *to_string(RepKind k) {
    switch (k) {
    case RepKind::irrep:
        return "irrep";
    case RepKind::tensor:
        return "tensor";
    case RepKind::left_regular:
        return "left-regular";
    case RepKind::right_regular:
        return "right-regular";
    case RepKind::lifted:
        return "tensor-with-identity";
    case RepKind::conjugate:
        return "conjugate";
    case RepKind::amplified:
        return "identity-tensor";
    }
    return "?";
}

/// A unitary representation sigma: S_n -> U(D).
///
/// Immutable after construction. Images of group elements are produced per
/// kind (Kronecker products of the parts, permutation matrices for the
/// regular representations); irrep image tables are built once on first use
/// and shared between copies.
class GroupRep {
  public:
    int degree() const noexcept { return n_; }
    Index dim() const noexcept { return dim_; }
    RepKind kind() const noexcept { return kind_; }
    const SymmetricGroup &group() const noexcept { return *group_; }
    std::shared_ptr<const SymmetricGroup> group_ptr() const noexcept { return group_; }

    /// Irrep label (kind irrep only).
    const Partition &label() const {
        if (!label_)
            throw InvalidArgument("representation is not an irrep");
        return *label_;
    }
    const std::vector<std::shared_ptr<const GroupRep>> &parts() const noexcept { return parts_; }
    Index identity_dim() const noexcept { return identity_dim_; }

    /// Images of s_1..s_{n-1}.
    const std::vector<ComplexMatrix> &generator_images() const noexcept { return generators_; }

    /// sigma(g) for the g-th element of group() in lexicographic order.
    ComplexMatrix image(std::size_t g) const {
        switch (kind_) {
        case RepKind::irrep:
            return irrep_table()[g];
        case RepKind::tensor:
            return kron(parts_[0]->image(g), parts_[1]->image(g));
        case RepKind::lifted:
            return kron(parts_[0]->image(g), identity_matrix(identity_dim_));
        case RepKind::amplified:
            return kron(identity_matrix(identity_dim_), parts_[0]->image(g));
        case RepKind::conjugate:
            return parts_[0]->image(g).conjugate();
        case RepKind::left_regular:
        case RepKind::right_regular:
            return regular_image(g);
        }
        throw InvalidArgument("unknown representation kind");
    }

    ComplexMatrix image(const Permutation &p) const { return image(group_->index_of(p)); }

    /// Product of generator images along a word.
    ComplexMatrix evaluate_word(const std::vector<int> &word) const {
        ComplexMatrix out = identity_matrix(dim_);
        for (int i : word) {
            if (i < 1 || i >= n_)
                throw InvalidArgument("word letter out of range");
            out = out * generators_[static_cast<std::size_t>(i - 1)];
        }
        return out;
    }

    /// chi(g) by conjugacy class of S_n, cached per representation.
    Complex class_character(std::size_t cls) const {
        std::call_once(cache_->characters_once, [this] {
            const auto &classes = group_->classes();
            cache_->characters.resize(classes.size());
            for (std::size_t c = 0; c < classes.size(); ++c)
                cache_->characters[c] = compute_class_character(c);
        });
        return cache_->characters.at(cls);
    }

    std::string describe() const {
        switch (kind_) {
        case RepKind::irrep:
            return "irrep" + label_->label();
        case RepKind::tensor:
            return parts_[0]->describe() + "(x)" + parts_[1]->describe();
        case RepKind::lifted:
            return parts_[0]->describe() + "(x)I_" + std::to_string(identity_dim_);
        case RepKind::amplified:
            return "I_" + std::to_string(identity_dim_) + "(x)" + parts_[0]->describe();
        case RepKind::conjugate:
            return "conj(" + parts_[0]->describe() + ")";
        case RepKind::left_regular:
            return "left-regular S_" + std::to_string(n_);
        case RepKind::right_regular:
            return "right-regular S_" + std::to_string(n_);
        }
        return "?";
    }

    friend GroupRep irrep(const Partition &shape);
    friend GroupRep tensor_rep(const GroupRep &a, const GroupRep &b);
    friend GroupRep lift_with_identity(const GroupRep &sigma, Index extra);
    friend GroupRep identity_tensor(Index copies, const GroupRep &sigma);
    friend GroupRep conjugate_rep(const GroupRep &sigma);
    friend GroupRep left_regular(int n);
    friend GroupRep right_regular(int n);

  private:
    struct Cache {
        std::once_flag table_once;
        std::vector<ComplexMatrix> table;
        std::once_flag characters_once;
        std::vector<Complex> characters;
    };

    GroupRep(int n, Index dim, RepKind kind)
        : n_(n), dim_(dim), kind_(kind), group_(symmetric_group(n)), cache_(std::make_shared<Cache>()) {}

    void fill_generators() {
        generators_.clear();
        for (int i = 1; i < n_; ++i)
            generators_.push_back(image(Permutation::adjacent(n_, i)));
    }

    // Each element is its parent times one generator, walking outward from e.
    const std::vector<ComplexMatrix> &irrep_table() const {
        std::call_once(cache_->table_once, [this] {
            const auto &g = *group_;
            cache_->table.assign(g.order(), ComplexMatrix());
            for (std::size_t e : g.bfs_order()) {
                if (g.word_length(e) == 0)
                    cache_->table[e] = identity_matrix(dim_);
                else
                    cache_->table[e] = cache_->table[g.parent(e)] *
                                       generators_[static_cast<std::size_t>(g.generator(e) - 1)];
            }
        });
        return cache_->table;
    }

    ComplexMatrix regular_image(std::size_t h) const {
        const auto &g = *group_;
        ComplexMatrix m = ComplexMatrix::Zero(dim_, dim_);
        for (std::size_t x = 0; x < g.order(); ++x) {
            // left: |x> -> |h x>; right: |x> -> |x h^-1>
            const std::size_t y = kind_ == RepKind::left_regular
                                      ? g.product_index(h, x)
                                      : g.product_index(x, g.inverse_index(h));
            m(static_cast<Index>(y), static_cast<Index>(x)) = 1.0;
        }
        return m;
    }

    Complex compute_class_character(std::size_t c) const {
        switch (kind_) {
        case RepKind::tensor:
            return parts_[0]->class_character(c) * parts_[1]->class_character(c);
        case RepKind::lifted:
        case RepKind::amplified:
            return static_cast<double>(identity_dim_) * parts_[0]->class_character(c);
        case RepKind::conjugate:
            return std::conj(parts_[0]->class_character(c));
        default:
            return image(group_->class_representative(c)).trace();
        }
    }

    int n_ = 0;
    Index dim_ = 0;
    RepKind kind_ = RepKind::irrep;
    std::shared_ptr<const SymmetricGroup> group_;
    std::optional<Partition> label_;
    std::vector<std::shared_ptr<const GroupRep>> parts_;
    Index identity_dim_ = 0;
    std::vector<ComplexMatrix> generators_;
    std::shared_ptr<Cache> cache_;
};

/// The Young-Yamanouchi irrep rho^shape.
inline GroupRep irrep(const Partition &shape) {
    GroupRep r(shape.n(), irrep_dimension(shape), RepKind::irrep);
    r.label_ = shape;
    for (int i = 1; i < shape.n(); ++i)
        r.generators_.push_back(yy_generator_matrix(shape, i));
    return r;
}

inline void require_same_degree(const GroupRep &a, const GroupRep &b, const char *what) {
    if (a.degree() != b.degree())
        throw InvalidArgument(std::string(what) + ": degree mismatch (S_" +
                              std::to_string(a.degree()) + " vs S_" + std::to_string(b.degree()) + ")");
}

inline GroupRep tensor_rep(const GroupRep &a, const GroupRep &b) {
    require_same_degree(a, b, "tensor_rep");
    GroupRep r(a.degree(), a.dim() * b.dim(), RepKind::tensor);
    r.parts_ = {std::make_shared<const GroupRep>(a), std::make_shared<const GroupRep>(b)};
    for (int i = 0; i + 1 < a.degree(); ++i)
        r.generators_.push_back(kron(a.generators_[static_cast<std::size_t>(i)],
                                     b.generators_[static_cast<std::size_t>(i)]));
    return r;
}

/// rho^mu (x) rho^nu
inline GroupRep tensor_rep(const Partition &mu, const Partition &nu) {
    return tensor_rep(irrep(mu), irrep(nu));
}

/// sigma (x) I_extra, acting on the left register.
inline GroupRep lift_with_identity(const GroupRep &sigma, Index extra) {
    if (extra < 1)
        throw InvalidArgument("lift_with_identity: identity dimension must be >= 1");
    GroupRep r(sigma.degree(), sigma.dim() * extra, RepKind::lifted);
    r.parts_ = {std::make_shared<const GroupRep>(sigma)};
    r.identity_dim_ = extra;
    for (const auto &gen : sigma.generators_)
        r.generators_.push_back(kron(gen, identity_matrix(extra)));
    return r;
}

/// I_copies (x) sigma: copies of sigma stacked block-diagonally.
inline GroupRep identity_tensor(Index copies, const GroupRep &sigma) {
    if (copies < 1)
        throw InvalidArgument("identity_tensor: need at least one copy");
    GroupRep r(sigma.degree(), sigma.dim() * copies, RepKind::amplified);
    r.parts_ = {std::make_shared<const GroupRep>(sigma)};
    r.identity_dim_ = copies;
    for (const auto &gen : sigma.generators_)
        r.generators_.push_back(kron(identity_matrix(copies), gen));
    return r;
}

/// Entrywise complex conjugate sigma(g)^*.
inline GroupRep conjugate_rep(const GroupRep &sigma) {
    GroupRep r(sigma.degree(), sigma.dim(), RepKind::conjugate);
    r.parts_ = {std::make_shared<const GroupRep>(sigma)};
    for (const auto &gen : sigma.generators_)
        r.generators_.push_back(gen.conjugate());
    return r;
}

/// rho_L(h)|g> = |h g>.
inline GroupRep left_regular(int n) {
    require_dense(n, "left regular representation");
    GroupRep r(n, static_cast<Index>(factorial(n)), RepKind::left_regular);
    r.fill_generators();
    return r;
}

/// rho_R(h)|g> = |g h^-1>, the homomorphic form of right multiplication.
inline GroupRep right_regular(int n) {
    require_dense(n, "right regular representation");
    GroupRep r(n, static_cast<Index>(factorial(n)), RepKind::right_regular);
    r.fill_generators();
    return r;
}

/// (rho_L, rho_R)
inline std::pair<GroupRep, GroupRep> regular_representations(int n) {
    return {left_regular(n), right_regular(n)};
}

/// sigma(g) as the product of generator images along the adjacent
/// transposition word of g.
inline ComplexMatrix rep_evaluate(const GroupRep &sigma, const Permutation &g) {
    if (g.n() != sigma.degree())
        throw InvalidArgument("rep_evaluate: permutation of degree " + std::to_string(g.n()) +
                              " applied to a representation of S_" + std::to_string(sigma.degree()));
    return sigma.evaluate_word(adjacent_transposition_decomposition(g));
}

/// chi^sigma(g) = tr sigma(g), looked up by cycle type.
inline Complex character(const GroupRep &sigma, const Permutation &g) {
    if (g.n() != sigma.degree())
        throw InvalidArgument("character: degree mismatch");
    return sigma.class_character(sigma.group().class_index(cycle_type(g)));
}

/// Shared irreps of S_n in partition order, built once per degree.
inline const std::vector<GroupRep> &irreps_of(int n) {
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const std::vector<GroupRep>>> cache;
    std::lock_guard lock(mutex);
    auto &slot = cache[n];
    if (!slot) {
        auto reps = std::make_shared<std::vector<GroupRep>>();
        for (const auto &p : enumerate_partitions(n))
            reps->push_back(irrep(p));
        slot = reps;
    }
    return *slot;
}

inline const GroupRep &irrep_of(const Partition &shape) {
    const auto partitions = enumerate_partitions(shape.n());
    for (std::size_t k = 0; k < partitions.size(); ++k)
        if (partitions[k] == shape)
            return irreps_of(shape.n())[k];
    throw InvalidArgument("unknown partition " + shape.label());
}

/// chi^lambda on each conjugacy class of S_n (real for S_n).
inline std::vector<double> irrep_class_characters(const Partition &shape) {
    const auto &rho = irrep_of(shape);
    std::vector<double> out;
    for (std::size_t c = 0; c < rho.group().classes().size(); ++c)
        out.push_back(rho.class_character(c).real());
    return out;
}

/// (1/|G|) sum_g chi^lambda(g)^* chi^sigma(g), summed class by class.
inline Complex character_inner_product(const GroupRep &sigma, const Partition &shape) {
    if (shape.n() != sigma.degree())
        throw InvalidArgument("character_inner_product: " + shape.label() + " is not a partition of " +
                              std::to_string(sigma.degree()));
    const auto &rho = irrep_of(shape);
    const auto &group = sigma.group();
    CompensatedScalar acc;
    for (std::size_t c = 0; c < group.classes().size(); ++c)
        acc.add(static_cast<double>(group.class_size(c)) * std::conj(rho.class_character(c)) *
                sigma.class_character(c));
    return acc.value() / static_cast<double>(group.order());
}

/// The dense |G| x |G| Fourier transform. Row (lambda, i, j) runs
/// lambda-major in partition order, then (i, j) row-major; column pi holds
/// sqrt(d_lambda/|G|) rho^lambda_ij(pi).
inline ComplexMatrix fourier_transform_matrix(int n) {
    require_dense(n, "fourier_transform_matrix");
    const auto &group = *symmetric_group(n);
    const auto order = static_cast<Index>(group.order());
    ComplexMatrix ft(order, order);
    Index row = 0;
    for (const auto &rho : irreps_of(n)) {
        const Index d = rho.dim();
        const double scale = std::sqrt(static_cast<double>(d) / static_cast<double>(order));
        for (Index pi = 0; pi < order; ++pi) {
            const ComplexMatrix m = rho.image(static_cast<std::size_t>(pi));
            for (Index i = 0; i < d; ++i)
                for (Index j = 0; j < d; ++j)
                    ft(row + i * d + j, pi) = scale * m(i, j);
        }
        row += d * d;
    }
    return ft;
}

/// Row offset of the lambda block in fourier_transform_matrix(n).
inline Index fourier_block_offset(const Partition &shape) {
    Index row = 0;
    for (const auto &p : enumerate_partitions(shape.n())) {
        if (p == shape)
            return row;
        const Index d = irrep_dimension(p);
        row += d * d;
    }
    throw InvalidArgument("unknown partition " + shape.label());
}

} // namespace symverify
