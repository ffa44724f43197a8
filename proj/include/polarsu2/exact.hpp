// Copyright 2026 The polarsu2 Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file exact.hpp
 * @brief Signed square roots of non-negative rationals, held exactly.
 *
 * Every Condon-Shortley coupling and recoupling coefficient has the form
 * sign * sqrt(p/q). ExactSqrtRational keeps sign and p/q as big-integer
 * rationals; to_double() is the only lossy step.
 */

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace polarsu2 {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

class ExactSqrtRational {
public:
    /// Exact zero.
    ExactSqrtRational() = default;

    /// The rational value itself (not its square root).
    [[nodiscard]] static ExactSqrtRational from_rational(const BigRational& value);
    /// sign * sqrt(magnitude_squared). A zero magnitude forces sign 0.
    [[nodiscard]] static ExactSqrtRational signed_sqrt(int sign, const BigRational& magnitude_squared);

    [[nodiscard]] int sign() const noexcept { return sign_; }
    [[nodiscard]] const BigRational& magnitude_squared() const noexcept { return square_; }
    [[nodiscard]] bool is_zero() const noexcept { return sign_ == 0; }

    [[nodiscard]] double to_double() const;
    /// "0", "-1/2", "sqrt(2/3)", "-sqrt(1/6)".
    [[nodiscard]] std::string to_string() const;

    ExactSqrtRational operator-() const;
    friend ExactSqrtRational operator*(const ExactSqrtRational& a, const ExactSqrtRational& b);

    /// Exact sum. The radicands must differ by a rational square factor
    /// (true for all sums arising in SU(2) recoupling); otherwise the sum is
    /// not of this form and std::domain_error is thrown.
    friend ExactSqrtRational operator+(const ExactSqrtRational& a, const ExactSqrtRational& b);
    friend ExactSqrtRational operator-(const ExactSqrtRational& a, const ExactSqrtRational& b) {
        return a + (-b);
    }
    ExactSqrtRational& operator+=(const ExactSqrtRational& other) { return *this = *this + other; }

    friend bool operator==(const ExactSqrtRational& a, const ExactSqrtRational& b) {
        return a.sign_ == b.sign_ && a.square_ == b.square_;
    }

private:
    int sign_ = 0;
    BigRational square_ = 0;
};

/// Exact square root of a rational if it is a perfect square, else false.
[[nodiscard]] bool rational_sqrt(const BigRational& value, BigRational& root);

}  // namespace polarsu2
