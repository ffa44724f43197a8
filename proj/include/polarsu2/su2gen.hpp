// Copyright 2026 The polarsu2 Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file su2gen.hpp
 * @brief su(2) on the spin-j subspace F_j of the two-quon Fock space.
 *
 * The Schwinger map |n_a, n_b) = |j+m, j-m) = |j, m> picks out the diagonal
 * n_a + n_b = k - 1 of F, so j = (k - 1)/2. On F_j (basis m = -j..j,
 * ascending) the polar factors act as
 *   H   |j,m> = sqrt((j+m)(j-m+1)) |j,m>
 *   U_r |j,m> = |j,m+1> for m < j,   U_r |j,j> = e^{i phi_r} |j,-j>
 * with phi_r = 2 pi j r, and J+ = H U_r, J- = U_r^dag H, J3 = (N_a - N_b)/2.
 */

#pragma once

#include "polarsu2/operator_matrix.hpp"

#include <vector>

namespace polarsu2 {

struct SpinSpace {
    HalfInt j;
    int k = 1;           ///< 2j + 1
    double r = 0.0;
    double phi_r = 0.0;  ///< 2 pi j r
    std::vector<BasisLabel> basis;

    /// Throws std::invalid_argument for negative j or non-finite r.
    [[nodiscard]] static SpinSpace make(HalfInt j, double r);
    [[nodiscard]] int dim() const noexcept { return k; }
};

/// phi_r = 2 pi j r.
[[nodiscard]] double phi_of(HalfInt j, double r);

/// Bijection between the Fock diagonal n_a + n_b = k - 1 and the m labels of j = (k-1)/2.
struct SchwingerMap {
    int k = 2;
    HalfInt j;
    std::vector<FockLabel> fock;  ///< index i <-> m = -j + i
    std::vector<HalfInt> m;

    [[nodiscard]] FockLabel to_fock(HalfInt m_value) const;
    [[nodiscard]] HalfInt to_m(const FockLabel& label) const;
};

/// Throws std::invalid_argument for k < 2.
[[nodiscard]] SchwingerMap schwinger_embed(int k);

/// Restriction of an operator on F (order k) to F_j, in the ascending-m basis.
[[nodiscard]] OperatorMatrix restrict_to_spin(const OperatorMatrix& on_fock, int k);

/// Largest entry of an F-operator that maps F_j outside F_j.
[[nodiscard]] double leakage_from_spin(const OperatorMatrix& on_fock, int k);

struct SpinOperatorSet {
    SpinSpace space;
    OperatorMatrix h, u_r, u_r_dag, j_plus, j_minus, j3, casimir;
};

/// j = 0 yields the one-dimensional space with vanishing generators.
[[nodiscard]] SpinOperatorSet build_spin_ops(HalfInt j, double r);

struct Su2Report {
    double j3_jplus = 0;      ///< |[J3, J+] - J+|
    double j3_jminus = 0;     ///< |[J3, J-] + J-|
    double jplus_jminus = 0;  ///< |[J+, J-] - 2 J3|
    double jplus_closed_form = 0;
    double jminus_closed_form = 0;
    double j3_diagonal = 0;
    double jminus_adjoint = 0;  ///< |J- - J+^dag|
    double polar_factors = 0;   ///< |J+ - H U_r|, |J- - U_r^dag H|

    [[nodiscard]] double max() const;
};

[[nodiscard]] Su2Report verify_su2(const SpinOperatorSet& ops);

struct CasimirReport {
    double h_form = 0;         ///< |J^2 - H^2 - J3^2 + J3|
    double ur_form = 0;        ///< |J^2 - U^dag H^2 U - J3^2 - J3|
    double commutes_ur = 0;    ///< |[J^2, U_r]|
    double eigenvalue = 0;     ///< |J^2 - j(j+1) 1|

    [[nodiscard]] double max() const;
};

[[nodiscard]] CasimirReport casimir_identities(const SpinOperatorSet& ops);

struct SpinCyclicReport {
    double cyclicity = 0;   ///< |U_r^{2j+1} - e^{i phi_r} 1|
    double unitarity = 0;   ///< |U^dag U - 1|
    double h_hermitean = 0;
};

[[nodiscard]] SpinCyclicReport verify_spin_cyclic(const SpinOperatorSet& ops);

/// Largest entrywise deviation between the F_j restriction of the quon-built
/// H, U_r and U_r^dag (order k) and the closed-form F_j matrices, plus any
/// leakage of F_j under them. phi_r = 2 pi j r.
[[nodiscard]] double quon_restriction_residual(int k, double r);

}  // namespace polarsu2
