// Copyright 2026 The polarsu2 Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file labels.hpp
 * @brief Basis labels shared by the Fock, spin and non-standard bases.
 */

#pragma once

#include "polarsu2/halfint.hpp"

#include <string>
#include <variant>
#include <vector>

namespace polarsu2 {

/// Occupation numbers |n_a, n_b) of the two-oscillator Fock space.
struct FockLabel {
    int n_a = 0;
    int n_b = 0;
    friend bool operator==(const FockLabel&, const FockLabel&) = default;
};

/// Standard basis label |j, m>.
struct MLabel {
    HalfInt j;
    HalfInt m;
    friend bool operator==(const MLabel&, const MLabel&) = default;
};

/**
 * Non-standard basis label |j, alpha; r>.
 *
 * alpha = -j r + s with integer step s in [0, 2j]. Labels compare by
 * (j, r, s); alpha itself is generically irrational and is derived on demand.
 */
class AlphaLabel {
public:
    /// Throws std::invalid_argument unless 0 <= s <= 2j.
    [[nodiscard]] static AlphaLabel make(HalfInt j, double r, int s);

    [[nodiscard]] HalfInt j() const noexcept { return j_; }
    [[nodiscard]] double r() const noexcept { return r_; }
    [[nodiscard]] int s() const noexcept { return s_; }
    [[nodiscard]] double alpha() const noexcept { return -j_.value() * r_ + s_; }

    friend bool operator==(const AlphaLabel&, const AlphaLabel&) = default;

private:
    HalfInt j_;
    double r_ = 0.0;
    int s_ = 0;
};

/// All 2j+1 labels for (j, r) in increasing s.
[[nodiscard]] std::vector<AlphaLabel> alpha_labels(HalfInt j, double r);

using BasisLabel = std::variant<FockLabel, MLabel, AlphaLabel>;

[[nodiscard]] std::string to_string(const BasisLabel& label);

/// n_a-major lexicographic Fock basis for truncation order k.
[[nodiscard]] std::vector<BasisLabel> fock_basis(int k);
/// m ascending from -j to j.
[[nodiscard]] std::vector<BasisLabel> m_basis(HalfInt j);
/// s ascending from 0 to 2j.
[[nodiscard]] std::vector<BasisLabel> alpha_basis(HalfInt j, double r);

}  // namespace polarsu2
