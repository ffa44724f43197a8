// Copyright 2026 The polarsu2 Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file quon.hpp
 * @brief Truncated quon oscillators at q = exp(2 pi i / k) and the operators
 *        H, U_r and T_(m1,m2) they generate on F = F_a (x) F_b.
 *
 * Representations (k x k, basis |0), ..., |k-1)):
 *   a+ |n) = |n+1),          a- |n) = [n]_q |n-1)
 *   b+ |n) = [n+1]_q |n+1),  b- |n) = |n-1)
 * with a+|k-1) = b+|k-1) = 0 and a-|0) = b-|0) = 0. F is ordered n_a-major.
 */

#pragma once

#include "polarsu2/operator_matrix.hpp"

#include <utility>

namespace polarsu2 {

/// Largest truncation order accepted (F has dimension k^2).
inline constexpr int kMaxQuonOrder = 64;

class QDeformation {
public:
    /// Throws std::invalid_argument unless 2 <= k <= kMaxQuonOrder.
    explicit QDeformation(int k);

    [[nodiscard]] int k() const noexcept { return k_; }
    [[nodiscard]] Complex q() const noexcept { return root_of_unity(1, k_); }
    /// q^p for integer p, reduced modulo k before exponentiation.
    [[nodiscard]] Complex power(long long p) const noexcept { return root_of_unity(p, k_); }
    /// q^x for real x.
    [[nodiscard]] Complex power(double x) const;

private:
    int k_;
};

/// [x]_q = (1 - q^x) / (1 - q).
[[nodiscard]] Complex q_number(double x, const QDeformation& d);
/// [n]_q! = [1]_q ... [n]_q, [0]_q! = 1. Throws std::out_of_range unless 0 <= n <= k-1.
[[nodiscard]] Complex q_factorial(int n, const QDeformation& d);

struct QuonRep {
    QDeformation deformation;
    OperatorMatrix a_plus, a_minus, n_a;
    OperatorMatrix b_plus, b_minus, n_b;

    [[nodiscard]] int k() const noexcept { return deformation.k(); }
};

[[nodiscard]] QuonRep build_rep(int k);

/// Embeds a k x k operator of algebra A (resp. B) into F as op (x) 1 (resp. 1 (x) op).
[[nodiscard]] OperatorMatrix embed_a(const QuonRep& rep, const OperatorMatrix& op);
[[nodiscard]] OperatorMatrix embed_b(const QuonRep& rep, const OperatorMatrix& op);

/// H = sqrt(N_a (N_b + 1)) on F.
[[nodiscard]] OperatorMatrix build_h(const QuonRep& rep);

/// U_r = [a+ + e^{i phi/2} (a-)^{k-1}/[k-1]_q!] [b- + e^{i phi/2} (b+)^{k-1}/[k-1]_q!] on F.
[[nodiscard]] OperatorMatrix build_ur(const QuonRep& rep, double phi_r);

/// V = q^{N_a - N_b} on F.
[[nodiscard]] OperatorMatrix build_v(const QuonRep& rep);

using WIndex = std::pair<int, int>;

/// T_(m1,m2) = q^{m1 m2} U_r^{m1} V^{m2}.
[[nodiscard]] OperatorMatrix w_generator(const QuonRep& rep, double phi_r, int m1, int m2);

/// max |[T_m, T_n] + 2 i sin((2 pi / k) m x n) T_{m+n}|.
[[nodiscard]] double w_commutator_check(const QuonRep& rep, double phi_r, WIndex m, WIndex n);

/// Largest commutator residual over all m, n in [0, max_index]^2 (default k-1).
[[nodiscard]] double w_commutator_sweep(const QuonRep& rep, double phi_r, int max_index = -1);

/// Residuals of the defining and consequence relations of one representation.
struct QuonRelationReport {
    double a_deformed_commutator = 0;  ///< |a- a+ - q a+ a- - 1|
    double b_deformed_commutator = 0;
    double a_number_relations = 0;  ///< |[N_a, a+-] -+ a+-|
    double b_number_relations = 0;
    double nilpotency = 0;           ///< largest |(a+-)^k|, |(b+-)^k| entry; exactly 0 expected
    double consequence_relations = 0;  ///< a-(a+)^k - (a+)^k a-, N_a (a+)^k - (a+)^k (N_a + k), ...
    double ab_commute = 0;             ///< a and b operators commute on F

    [[nodiscard]] double max_numeric() const;
};

[[nodiscard]] QuonRelationReport verify_quon_relations(const QuonRep& rep);

/// Residuals of the U_r identities on F.
struct UrReport {
    double unitarity = 0;        ///< |U^dag U - 1|
    double cyclicity = 0;        ///< |U^k - e^{i phi} 1|
    double action = 0;           ///< explicit four-case action on F
    double h_hermitean = 0;      ///< |H - H^dag|
};

[[nodiscard]] UrReport verify_ur(const QuonRep& rep, double phi_r);

}  // namespace polarsu2
