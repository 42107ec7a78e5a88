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
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "symverify/config.hpp"
#include "symverify/errors.hpp"

namespace symverify {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Index = Eigen::Index;

inline ComplexMatrix identity_matrix(Index d) { return ComplexMatrix::Identity(d, d); }

/// Kronecker product with row index (i_a * rows_b + i_b).
inline ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

inline ComplexVector kron(const ComplexVector &a, const ComplexVector &b) {
    ComplexVector out(a.size() * b.size());
    for (Index i = 0; i < a.size(); ++i)
        out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

/// max_ij |a_ij - b_ij|
inline double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw InvalidArgument("shape mismatch in comparison");
    if (a.size() == 0)
        return 0.0;
    return (a - b).cwiseAbs().maxCoeff();
}

inline double max_abs(const ComplexMatrix &a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

inline double unitarity_residual(const ComplexMatrix &u) {
    return max_abs_diff(u.adjoint() * u, identity_matrix(u.cols()));
}

inline double hermiticity_residual(const ComplexMatrix &a) { return max_abs_diff(a, a.adjoint()); }

/// <A, B>_F = tr(A^dagger B)
inline Complex frobenius_inner(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw InvalidArgument("frobenius_inner: shape mismatch");
    return (a.conjugate().cwiseProduct(b)).sum();
}

/// Kahan-compensated accumulator, entrywise on real and imaginary parts.
/// Terms are added in call order, so the result is reproducible for a fixed
/// order.
class CompensatedSum {
  public:
    CompensatedSum(Index rows, Index cols)
        : sum_re_(Eigen::ArrayXXd::Zero(rows, cols)), sum_im_(Eigen::ArrayXXd::Zero(rows, cols)),
          c_re_(Eigen::ArrayXXd::Zero(rows, cols)), c_im_(Eigen::ArrayXXd::Zero(rows, cols)) {}

    void add(const ComplexMatrix &term) {
        accumulate(sum_re_, c_re_, term.real().array());
        accumulate(sum_im_, c_im_, term.imag().array());
    }

    void add(const ComplexMatrix &term, Complex scale) { add(ComplexMatrix(scale * term)); }

    void merge(const CompensatedSum &other) {
        accumulate(sum_re_, c_re_, other.sum_re_ - other.c_re_);
        accumulate(sum_im_, c_im_, other.sum_im_ - other.c_im_);
    }

    ComplexMatrix value() const {
        ComplexMatrix out(sum_re_.rows(), sum_re_.cols());
        out.real() = (sum_re_ - c_re_).matrix();
        out.imag() = (sum_im_ - c_im_).matrix();
        return out;
    }

  private:
    static void accumulate(Eigen::ArrayXXd &sum, Eigen::ArrayXXd &comp, const Eigen::ArrayXXd &term) {
        const Eigen::ArrayXXd y = term - comp;
        const Eigen::ArrayXXd t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }

    Eigen::ArrayXXd sum_re_, sum_im_, c_re_, c_im_;
};

/// Scalar Kahan sum.
class CompensatedScalar {
  public:
    void add(Complex v) {
        add_part(re_, cre_, v.real());
        add_part(im_, cim_, v.imag());
    }
    Complex value() const { return {re_ - cre_, im_ - cim_}; }

  private:
    static void add_part(double &sum, double &comp, double term) {
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    double re_ = 0, im_ = 0, cre_ = 0, cim_ = 0;
};

/// Modified Gram-Schmidt with one re-orthogonalization pass. Candidates are
/// processed in column order; those whose residual norm falls below
/// drop_tol are discarded. Returns orthonormal columns.
inline ComplexMatrix orthonormalize(const ComplexMatrix &candidates, double drop_tol = 1e-8) {
    std::vector<ComplexVector> basis;
    for (Index c = 0; c < candidates.cols(); ++c) {
        ComplexVector v = candidates.col(c);
        const double original = v.norm();
        if (original <= drop_tol)
            continue;
        for (int pass = 0; pass < 2; ++pass)
            for (const auto &b : basis)
                v -= b.dot(v) * b;
        const double residual = v.norm();
        if (residual <= drop_tol * std::max(1.0, original))
            continue;
        basis.push_back(v / residual);
    }
    ComplexMatrix out(candidates.rows(), static_cast<Index>(basis.size()));
    for (std::size_t k = 0; k < basis.size(); ++k)
        out.col(static_cast<Index>(k)) = basis[k];
    return out;
}

/// Real spectrum of a Hermitian matrix, descending.
inline std::vector<double> hermitian_spectrum(const ComplexMatrix &h) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NumericalConsistency("Hermitian eigensolver did not converge");
    std::vector<double> ev(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + solver.eigenvalues().size());
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
}

/// Orthonormal basis of the eigenspace of a Hermitian matrix for eigenvalues
/// within tol of target.
inline ComplexMatrix hermitian_eigenspace(const ComplexMatrix &h, double target, double tol) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    if (solver.info() != Eigen::Success)
        throw NumericalConsistency("Hermitian eigensolver did not converge");
    std::vector<Index> keep;
    for (Index k = 0; k < solver.eigenvalues().size(); ++k)
        if (std::abs(solver.eigenvalues()(k) - target) <= tol)
            keep.push_back(k);
    ComplexMatrix out(h.rows(), static_cast<Index>(keep.size()));
    for (std::size_t k = 0; k < keep.size(); ++k)
        out.col(static_cast<Index>(k)) = solver.eigenvectors().col(keep[k]);
    return out;
}

/// Rounds x to the nearest integer, insisting it was already that close.
inline long long checked_round(double x, double tol, const char *what) {
    const double r = std::round(x);
    if (std::abs(x - r) > tol)
        throw NumericalConsistency(std::string(what) + ": value " + std::to_string(x) +
                                   " is not within " + std::to_string(tol) + " of an integer");
    return static_cast<long long>(r);
}

} // namespace symverify
