// Copyright 2026 The polarsu2 Authors
// SPDX-License-Identifier: Apache-2.0

#include "polarsu2/operator_matrix.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace polarsu2 {

// ---------------------------------------------------------------------------
// Labels
// ---------------------------------------------------------------------------

AlphaLabel AlphaLabel::make(HalfInt j, double r, int s) {
    require_j(j);
    if (s < 0 || s > j.twice())
        throw std::invalid_argument("alpha step s = " + std::to_string(s) + " outside [0, 2j] for j = " +
                                    j.to_string());
    if (!std::isfinite(r)) throw std::invalid_argument("non-finite r");
    AlphaLabel a;
    a.j_ = j;
    a.r_ = r;
    a.s_ = s;
    return a;
}

std::vector<AlphaLabel> alpha_labels(HalfInt j, double r) {
    require_j(j);
    std::vector<AlphaLabel> out;
    for (int s = 0; s <= j.twice(); ++s) out.push_back(AlphaLabel::make(j, r, s));
    return out;
}

std::string to_string(const BasisLabel& label) {
    struct Visitor {
        std::string operator()(const FockLabel& f) const {
            return "|" + std::to_string(f.n_a) + "," + std::to_string(f.n_b) + ")";
        }
        std::string operator()(const MLabel& l) const {
            return "|" + l.j.to_string() + "," + l.m.to_string() + ">";
        }
        std::string operator()(const AlphaLabel& a) const {
            std::ostringstream os;
            os << "|" << a.j().to_string() << ",alpha=" << a.alpha() << ";r=" << a.r() << ">";
            return os.str();
        }
    };
    return std::visit(Visitor{}, label);
}

std::vector<BasisLabel> fock_basis(int k) {
    std::vector<BasisLabel> out;
    out.reserve(static_cast<std::size_t>(k * k));
    for (int na = 0; na < k; ++na)
        for (int nb = 0; nb < k; ++nb) out.emplace_back(FockLabel{na, nb});
    return out;
}

std::vector<BasisLabel> m_basis(HalfInt j) {
    std::vector<BasisLabel> out;
    for (HalfInt m : m_values(j)) out.emplace_back(MLabel{j, m});
    return out;
}

std::vector<BasisLabel> alpha_basis(HalfInt j, double r) {
    std::vector<BasisLabel> out;
    for (const auto& a : alpha_labels(j, r)) out.emplace_back(a);
    return out;
}

// ---------------------------------------------------------------------------
// OperatorMatrix
// ---------------------------------------------------------------------------

OperatorMatrix::OperatorMatrix(Eigen::MatrixXcd entries, std::vector<BasisLabel> basis)
    : OperatorMatrix(std::move(entries), basis, basis) {}

OperatorMatrix::OperatorMatrix(Eigen::MatrixXcd entries, std::vector<BasisLabel> row_basis,
                               std::vector<BasisLabel> col_basis)
    : entries_(std::move(entries)), row_basis_(std::move(row_basis)), col_basis_(std::move(col_basis)) {
    if (entries_.rows() != static_cast<Eigen::Index>(row_basis_.size()) ||
        entries_.cols() != static_cast<Eigen::Index>(col_basis_.size()))
        throw std::invalid_argument("operator entries do not match basis sizes");
}

OperatorMatrix OperatorMatrix::identity(std::vector<BasisLabel> basis) {
    const auto n = static_cast<Eigen::Index>(basis.size());
    return {Eigen::MatrixXcd::Identity(n, n), std::move(basis)};
}

OperatorMatrix OperatorMatrix::zero(std::vector<BasisLabel> row_basis,
                                    std::vector<BasisLabel> col_basis) {
    const auto r = static_cast<Eigen::Index>(row_basis.size());
    const auto c = static_cast<Eigen::Index>(col_basis.size());
    return {Eigen::MatrixXcd::Zero(r, c), std::move(row_basis), std::move(col_basis)};
}

Eigen::Index OperatorMatrix::dim() const {
    if (!is_square()) throw std::logic_error("dim() of a non-square operator");
    return entries_.rows();
}

OperatorMatrix OperatorMatrix::adjoint() const {
    return {entries_.adjoint(), col_basis_, row_basis_};
}

OperatorMatrix OperatorMatrix::power(int exponent) const {
    if (exponent < 0) throw std::invalid_argument("negative operator power");
    OperatorMatrix result = identity(row_basis_);
    if (!is_square()) throw std::logic_error("power of a non-square operator");
    OperatorMatrix base = *this;
    for (int e = exponent; e > 0; e >>= 1) {
        if (e & 1) result = result * base;
        if (e > 1) base = base * base;
    }
    return result;
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (a.col_basis_ != b.row_basis_) throw std::invalid_argument("operator product: basis mismatch");
    return {a.entries_ * b.entries_, a.row_basis_, b.col_basis_};
}

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (a.row_basis_ != b.row_basis_ || a.col_basis_ != b.col_basis_)
        throw std::invalid_argument("operator sum: basis mismatch");
    return {a.entries_ + b.entries_, a.row_basis_, a.col_basis_};
}

OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
    return a + Complex(-1.0) * b;
}

OperatorMatrix operator*(Complex c, const OperatorMatrix& a) {
    return {c * a.entries_, a.row_basis_, a.col_basis_};
}

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) { return a * b - b * a; }

double max_abs(const Eigen::MatrixXcd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double max_abs(const OperatorMatrix& a) { return max_abs(a.entries()); }

double max_residual(const OperatorMatrix& a, const OperatorMatrix& b) { return max_abs(a - b); }

bool approx_equal(const OperatorMatrix& a, const OperatorMatrix& b, double tol) {
    return max_residual(a, b) <= tol;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& left, const Eigen::MatrixXcd& right) {
    Eigen::MatrixXcd out(left.rows() * right.rows(), left.cols() * right.cols());
    for (Eigen::Index i = 0; i < left.rows(); ++i)
        for (Eigen::Index j = 0; j < left.cols(); ++j)
            out.block(i * right.rows(), j * right.cols(), right.rows(), right.cols()) = left(i, j) * right;
    return out;
}

Complex root_of_unity(long long num, long long den) {
    if (den <= 0) throw std::invalid_argument("root_of_unity: non-positive denominator");
    long long p = num % den;
    if (p < 0) p += den;
    if (p == 0) return {1.0, 0.0};
    if (2 * p == den) return {-1.0, 0.0};
    if (4 * p == den) return {0.0, 1.0};
    if (4 * p == 3 * den) return {0.0, -1.0};
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(p) / static_cast<double>(den);
    return {std::cos(theta), std::sin(theta)};
}

Complex unit_phase(double x) {
    const double frac = x - std::floor(x);
    const double theta = 2.0 * std::numbers::pi * frac;
    return {std::cos(theta), std::sin(theta)};
}

}  // namespace polarsu2
