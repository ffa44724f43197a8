// Copyright 2026 The polarsu2 Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file nonstandard.hpp
 * @brief Wigner-Racah algebra of SU(2) in the {J^2, U_r} scheme.
 *
 * The non-standard basis diagonalizes J^2 and U_r together:
 *
 *   |j, alpha; r> = (2j+1)^{-1/2} sum_m exp(i alpha m 2 pi / (2j+1)) |j, m>,
 *   U_r |j, alpha; r> = exp(-i alpha 2 pi / (2j+1)) |j, alpha; r>,
 *
 * with alpha = -jr, -jr+1, ..., -jr+2j. Coupling coefficients, f-bar and f
 * symbols in this basis are unitary transforms of the standard ones, which
 * come from the exact layer in standard_wra.hpp and are rounded only here.
 *
 * All coupled quantities share one value of r. Mixing labels with different
 * r throws std::invalid_argument.
 */

#pragma once

#include "polarsu2/operator_matrix.hpp"
#include "polarsu2/su2gen.hpp"

#include <string>
#include <vector>

namespace polarsu2 {

// ---------------------------------------------------------------------------
// Inter-basis transformation
// ---------------------------------------------------------------------------

/// <j m | j alpha; r> = (2j+1)^{-1/2} exp(i alpha m 2 pi / (2j+1)).
[[nodiscard]] Complex overlap(HalfInt j, HalfInt m, const AlphaLabel& a);

/// Unitary with entry (m index, s index) = <j m | j alpha_s; r>.
[[nodiscard]] Eigen::MatrixXcd overlap_matrix(HalfInt j, double r);

/// Components of a state in the alpha basis, given its m-basis components.
[[nodiscard]] Eigen::VectorXcd to_nonstandard(HalfInt j, double r, const Eigen::VectorXcd& m_components);
/// Inverse of to_nonstandard.
[[nodiscard]] Eigen::VectorXcd to_standard(HalfInt j, double r, const Eigen::VectorXcd& alpha_components);

/// Operator between m bases re-expressed between the matching alpha bases.
[[nodiscard]] OperatorMatrix to_nonstandard(const OperatorMatrix& op, double r);
/// Operator between alpha bases re-expressed between m bases.
[[nodiscard]] OperatorMatrix to_standard(const OperatorMatrix& op);

struct EigenbasisReport {
    double u_eigen = 0;        ///< max_alpha |U_r v - e^{-i alpha 2pi/(2j+1)} v|
    double casimir_eigen = 0;  ///< max_alpha |J^2 v - j(j+1) v|
    double unitarity = 0;      ///< |M^dag M - 1| for the overlap matrix
    std::vector<Complex> eigenvalues;  ///< e^{-i alpha 2pi/(2j+1)}, s ascending

    [[nodiscard]] double max() const;
};

[[nodiscard]] EigenbasisReport verify_eigenbasis(HalfInt j, double r);

// ---------------------------------------------------------------------------
// Coupling coefficients
// ---------------------------------------------------------------------------

/// Standard CG coefficients (j1 j2 m1 m2 | j, m1+m2) as doubles, indexed by
/// (m1 index, m2 index); zero where m1+m2 is not a projection of j. Cached.
[[nodiscard]] const Eigen::MatrixXd& standard_cg_table(HalfInt j1, HalfInt j2, HalfInt j);

/// (j1 j2 alpha1 alpha2 | j alpha; r).
[[nodiscard]] Complex cg_nonstandard(HalfInt j1, HalfInt j2, const AlphaLabel& a1, const AlphaLabel& a2,
                                     HalfInt j, const AlphaLabel& a);

/// Every (j1 j2 alpha1 alpha2 | j alpha; r) for one (j1, j2, j, r), indexed by steps (s1, s2, s).
class NonstandardCgBlock {
public:
    NonstandardCgBlock(HalfInt j1, HalfInt j2, HalfInt j, double r);

    [[nodiscard]] Complex operator()(int s1, int s2, int s) const {
        return values_[static_cast<std::size_t>((s1 * d2_ + s2) * d_ + s)];
    }
    [[nodiscard]] HalfInt j1() const noexcept { return j1_; }
    [[nodiscard]] HalfInt j2() const noexcept { return j2_; }
    [[nodiscard]] HalfInt j() const noexcept { return j_; }
    [[nodiscard]] double r() const noexcept { return r_; }
    [[nodiscard]] int d1() const noexcept { return d1_; }
    [[nodiscard]] int d2() const noexcept { return d2_; }
    [[nodiscard]] int d() const noexcept { return d_; }

private:
    HalfInt j1_, j2_, j_;
    double r_;
    int d1_, d2_, d_;
    std::vector<Complex> values_;
};

struct OrthonormalityReport {
    double completeness = 0;      ///< sum_{j alpha} (..|j alpha)(..'|j alpha)^* - delta delta
    double orthonormality = 0;    ///< sum_{alpha1 alpha2} (..|j alpha)^*(..|j' alpha') - Delta delta delta
    double outside_triangle = 0;  ///< largest coefficient with j outside j1 (x) j2

    [[nodiscard]] double max() const;
};

[[nodiscard]] OrthonormalityReport verify_cg_orthonormality(HalfInt j1, HalfInt j2, double r);

/// max |(j2 j1 a2 a1 | j a) - (-1)^{j1+j2-j} (j1 j2 a1 a2 | j a)| over all labels.
[[nodiscard]] double verify_cg_interchange(HalfInt j1, HalfInt j2, double r);

// ---------------------------------------------------------------------------
// f-bar and f symbols
// ---------------------------------------------------------------------------

/// f-bar_r symbol: the 3-jm symbol dressed with exp(-i alpha_a m_a 2 pi/(2 j_a + 1)).
[[nodiscard]] Complex fbar(HalfInt j1, HalfInt j2, HalfInt j3, const AlphaLabel& a1, const AlphaLabel& a2,
                           const AlphaLabel& a3);

struct FbarSymmetryReport {
    double even_permutations = 0;  ///< |f(perm) - f|
    double odd_permutations = 0;   ///< |f(perm) - (-1)^{j1+j2+j3} f|
    double conjugation = 0;        ///< |f^* - (-1)^{j1+j2+j3} f|
    double realness_parity = 0;    ///< |Im f| (sum even) or |Re f| (sum odd)

    [[nodiscard]] double max() const;
};

/// All column permutations and the conjugation rule, over every alpha triple
/// of one (j1, j2, j3) at one r.
[[nodiscard]] FbarSymmetryReport verify_fbar_symmetry(HalfInt j1, HalfInt j2, HalfInt j3, double r);

/// f_r = (-1)^{2 j3} (2 j1 + 1)^{-1/2} (j2 j3 alpha2 alpha3 | j1 alpha1; r)^*.
[[nodiscard]] Complex f_small(HalfInt j1, HalfInt j2, HalfInt j3, const AlphaLabel& a1, const AlphaLabel& a2,
                              const AlphaLabel& a3);

// ---------------------------------------------------------------------------
// Tensor operators and the Wigner-Eckart theorem
// ---------------------------------------------------------------------------

/**
 * Irreducible tensor operator in standard spherical components.
 *
 * components[i] is T^(k)_q with q = -k + i, each an operator from the m basis
 * of the ket space into the m basis of the bra space. The tag stands for any
 * additional quantum numbers and carries no algebra.
 */
struct TensorOperator {
    HalfInt rank;
    std::vector<OperatorMatrix> components;
    std::string source_tag;

    /// Validates component count (2k+1) and that all components share bases.
    [[nodiscard]] static TensorOperator make(HalfInt rank, std::vector<OperatorMatrix> components,
                                             std::string source_tag = {});

    [[nodiscard]] HalfInt bra_j() const;
    [[nodiscard]] HalfInt ket_j() const;
};

/// Rank-1 tensor (-J+/sqrt2, J3, J-/sqrt2) in q = -1, 0, +1 order.
[[nodiscard]] TensorOperator spin_vector_tensor(const SpinOperatorSet& ops);
/// [A (x) B]^(rank)_q = sum cg(ka kb qa qb | rank q) A_qa B_qb.
[[nodiscard]] TensorOperator couple_tensors(const TensorOperator& a, const TensorOperator& b, HalfInt rank);
/// Wigner unit tensor: <j1 m1| u_q |j2 m2> = (j2 k m2 q | j1 m1).
[[nodiscard]] TensorOperator unit_tensor(HalfInt j1, HalfInt j2, HalfInt rank);
/// Rank-0 identity on the spin-j space.
[[nodiscard]] TensorOperator scalar_identity(HalfInt j);

/// T_alpha(r) = (2k+1)^{-1/2} sum_q exp(i alpha q 2 pi/(2k+1)) T_q, alpha ascending,
/// still as matrices between m bases.
[[nodiscard]] std::vector<OperatorMatrix> alpha_components(const TensorOperator& t, double r);
/// alpha_components with bra and ket spaces also moved to their alpha bases.
[[nodiscard]] std::vector<OperatorMatrix> tensor_to_alpha(const TensorOperator& t, double r);

struct WignerEckartReport {
    Complex reduced_element{};
    double max_residual = 0;  ///< max |<a1|T_a|a2> - reduced * f_r(j1 j2 k; a1 a2 a)|
    double max_element = 0;   ///< largest matrix element modulus
    bool selection_allowed = false;  ///< triangle(j2, k, j1)
};

/// T must map the spin-j2 space into the spin-j1 space.
[[nodiscard]] WignerEckartReport wigner_eckart_check(const TensorOperator& t, HalfInt j1, HalfInt j2, double r);

// ---------------------------------------------------------------------------
// Recoupling
// ---------------------------------------------------------------------------

struct RecouplingReport {
    double sixj_exact = 0;
    Complex sixj_nonstandard{};  ///< at the alpha of j with the largest deviation
    double deviation = 0;        ///< max over alpha of |6-j(nonstandard) - 6-j(exact)|
};

/**
 * <(j1 j2) j12, j3; j alpha | j1, (j2 j3) j23; j alpha> contracted from four
 * non-standard coupling coefficients, converted to a 6-j symbol with the
 * usual factor (-1)^{j1+j2+j3+j} sqrt((2 j12 + 1)(2 j23 + 1)) and compared with
 * the exact {j1 j2 j12; j3 j j23}.
 */
[[nodiscard]] RecouplingReport recoupling_invariance_check(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j12,
                                                           HalfInt j23, HalfInt j, double r);

}  // namespace polarsu2
