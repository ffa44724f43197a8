// Copyright 2026 The polarsu2 Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file halfint.hpp
 * @brief Exact half-integer labels for angular momentum quantum numbers.
 *
 * A HalfInt stores twice its value, so j = 3/2 is held as 3. All label
 * arithmetic (sums, differences, parity tests) stays in the integers.
 */

#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace polarsu2 {

class HalfInt {
public:
    constexpr HalfInt() noexcept = default;

    [[nodiscard]] static constexpr HalfInt from_twice(int twice) noexcept {
        HalfInt h;
        h.twice_ = twice;
        return h;
    }
    [[nodiscard]] static constexpr HalfInt integer(int n) noexcept { return from_twice(2 * n); }

    /// Parses "3/2", "-1/2", "2", "-1". Any other denominator is rejected.
    [[nodiscard]] static HalfInt parse(std::string_view text);

    [[nodiscard]] constexpr int twice() const noexcept { return twice_; }
    [[nodiscard]] constexpr double value() const noexcept { return 0.5 * twice_; }
    [[nodiscard]] constexpr bool is_integer() const noexcept { return twice_ % 2 == 0; }

    /// Reduced textual form: "3/2", "-1/2", "1", "0".
    [[nodiscard]] std::string to_string() const;

    constexpr HalfInt operator-() const noexcept { return from_twice(-twice_); }
    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) noexcept {
        return from_twice(a.twice_ + b.twice_);
    }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) noexcept {
        return from_twice(a.twice_ - b.twice_);
    }
    friend constexpr bool operator==(HalfInt, HalfInt) noexcept = default;
    friend constexpr auto operator<=>(HalfInt, HalfInt) noexcept = default;

private:
    int twice_ = 0;
};

inline namespace literals {
/// 3_h2 is the half-integer 3/2.
constexpr HalfInt operator""_h2(unsigned long long twice) noexcept {
    return HalfInt::from_twice(static_cast<int>(twice));
}
}  // namespace literals

/// j-type label: twice >= 0.
[[nodiscard]] constexpr bool is_valid_j(HalfInt j) noexcept { return j.twice() >= 0; }

/// m is a projection of j: |m| <= j and m - j integral.
[[nodiscard]] constexpr bool is_projection_of(HalfInt j, HalfInt m) noexcept {
    const int tm = m.twice() < 0 ? -m.twice() : m.twice();
    return is_valid_j(j) && tm <= j.twice() && (j.twice() - m.twice()) % 2 == 0;
}

/// Throws std::invalid_argument unless j is a valid j-type label.
void require_j(HalfInt j);
/// Throws std::invalid_argument unless m is a projection of j.
void require_projection(HalfInt j, HalfInt m);

/// Kronecker-product containment Delta(j3 | j1 x j2): |j1-j2| <= j3 <= j1+j2
/// and j1+j2+j3 integral. Total on valid labels.
[[nodiscard]] constexpr bool triangle(HalfInt j1, HalfInt j2, HalfInt j3) noexcept {
    const int a = j1.twice(), b = j2.twice(), c = j3.twice();
    const int lo = a > b ? a - b : b - a;
    return c >= lo && c <= a + b && (a + b + c) % 2 == 0;
}

/// -j, -j+1, ..., j. Throws std::invalid_argument for negative j.
[[nodiscard]] std::vector<HalfInt> m_values(HalfInt j);

/// 0, 1/2, 1, ..., jmax.
[[nodiscard]] std::vector<HalfInt> j_values_up_to(HalfInt jmax);

/// (-1)^e for an integral half-integer exponent; throws if e is not integral.
[[nodiscard]] int phase_sign(HalfInt e);

}  // namespace polarsu2
