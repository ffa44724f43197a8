// Copyright 2026 The polarsu2 Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file standard_wra.hpp
 * @brief Wigner-Racah algebra of SU(2) in the standard {J^2, J_3} scheme.
 *
 * Clebsch-Gordan coefficients, 3-jm, 6-j and 9-j symbols in the
 * Condon-Shortley phase convention, evaluated by the classical Racah sums in
 * exact big-integer arithmetic. These values are the reference against which
 * the non-standard scheme is checked, so nothing here is rounded until the
 * caller asks for a double.
 *
 * Selection-rule violations (m1+m2 != m, failed triangles) return exact zero.
 * Malformed labels (negative j, m not a projection of its j) throw
 * std::invalid_argument.
 */

#pragma once

#include "polarsu2/exact.hpp"
#include "polarsu2/halfint.hpp"

namespace polarsu2 {

/// Default factorial table size; covers every Racah sum with 2j <= 200.
inline constexpr int kDefaultFactorialBound = 512;

/// Sets the size of the shared factorial table. Only effective before the
/// first symbol is evaluated; returns false once the table exists.
bool set_factorial_bound(int bound);

/// n! from the shared read-only table. Throws std::out_of_range past the bound.
[[nodiscard]] const BigInt& factorial(int n);

/// Clebsch-Gordan coefficient (j1 j2 m1 m2 | j m).
[[nodiscard]] ExactSqrtRational cg(HalfInt j1, HalfInt j2, HalfInt m1, HalfInt m2, HalfInt j,
                                   HalfInt m);

/// Wigner 3-jm symbol (j1 j2 j3; m1 m2 m3).
[[nodiscard]] ExactSqrtRational threejm(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2,
                                        HalfInt m3);

/// 6-j symbol {j1 j2 j3; j4 j5 j6}.
[[nodiscard]] ExactSqrtRational sixj(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5,
                                     HalfInt j6);

/// 9-j symbol with rows (j1 j2 j3), (j4 j5 j6), (j7 j8 j9).
[[nodiscard]] ExactSqrtRational ninej(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5,
                                      HalfInt j6, HalfInt j7, HalfInt j8, HalfInt j9);

/// Herring-Wigner metric (j m m') = (-1)^(j-m) delta(m', -m).
[[nodiscard]] ExactSqrtRational metric_standard(HalfInt j, HalfInt m, HalfInt mp);

}  // namespace polarsu2
