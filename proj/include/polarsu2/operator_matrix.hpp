// Copyright 2026 The polarsu2 Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file operator_matrix.hpp
 * @brief Dense complex operator matrices with explicit basis labels.
 *
 * Entry (i, j) is <row_i| O |col_j>. Square operators share one basis;
 * operators between two spaces (tensor components mapping j2 into j1) keep
 * separate row and column bases. Products check that the inner bases agree.
 */

#pragma once

#include "polarsu2/labels.hpp"

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace polarsu2 {

using Complex = std::complex<double>;

class OperatorMatrix {
public:
    OperatorMatrix() = default;
    /// Square operator on `basis`.
    OperatorMatrix(Eigen::MatrixXcd entries, std::vector<BasisLabel> basis);
    /// Operator from the column space into the row space.
    OperatorMatrix(Eigen::MatrixXcd entries, std::vector<BasisLabel> row_basis,
                   std::vector<BasisLabel> col_basis);

    [[nodiscard]] static OperatorMatrix identity(std::vector<BasisLabel> basis);
    [[nodiscard]] static OperatorMatrix zero(std::vector<BasisLabel> row_basis,
                                             std::vector<BasisLabel> col_basis);

    [[nodiscard]] Eigen::Index rows() const noexcept { return entries_.rows(); }
    [[nodiscard]] Eigen::Index cols() const noexcept { return entries_.cols(); }
    [[nodiscard]] bool is_square() const noexcept { return row_basis_ == col_basis_; }
    /// Dimension of a square operator; throws std::logic_error otherwise.
    [[nodiscard]] Eigen::Index dim() const;

    [[nodiscard]] const Eigen::MatrixXcd& entries() const noexcept { return entries_; }
    [[nodiscard]] const std::vector<BasisLabel>& row_basis() const noexcept { return row_basis_; }
    [[nodiscard]] const std::vector<BasisLabel>& col_basis() const noexcept { return col_basis_; }
    [[nodiscard]] Complex operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }

    [[nodiscard]] OperatorMatrix adjoint() const;
    [[nodiscard]] OperatorMatrix power(int exponent) const;

    friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
    friend OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b);
    friend OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b);
    friend OperatorMatrix operator*(Complex c, const OperatorMatrix& a);
    friend OperatorMatrix operator*(const OperatorMatrix& a, Complex c) { return c * a; }

private:
    Eigen::MatrixXcd entries_;
    std::vector<BasisLabel> row_basis_;
    std::vector<BasisLabel> col_basis_;
};

[[nodiscard]] OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);

/// Largest entry modulus; 0 for an empty matrix.
[[nodiscard]] double max_abs(const Eigen::MatrixXcd& m);
/// max |a - b| entrywise; bases must agree.
[[nodiscard]] double max_residual(const OperatorMatrix& a, const OperatorMatrix& b);
/// max |a| entrywise.
[[nodiscard]] double max_abs(const OperatorMatrix& a);
/// Entrywise comparison with an explicit tolerance.
[[nodiscard]] bool approx_equal(const OperatorMatrix& a, const OperatorMatrix& b, double tol);

/// Kronecker product left (x) right on the concatenated Fock basis.
[[nodiscard]] Eigen::MatrixXcd kron(const Eigen::MatrixXcd& left, const Eigen::MatrixXcd& right);

/// exp(2 pi i num / den) with num reduced modulo den first.
[[nodiscard]] Complex root_of_unity(long long num, long long den);
/// exp(2 pi i x) for real x.
[[nodiscard]] Complex unit_phase(double x);

}  // namespace polarsu2
