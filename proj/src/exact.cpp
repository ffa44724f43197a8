// Copyright 2026 The polarsu2 Authors
// SPDX-License-Identifier: Apache-2.0

#include "polarsu2/exact.hpp"

#include <cmath>
#include <stdexcept>

namespace polarsu2 {

namespace {

bool integer_sqrt(const BigInt& n, BigInt& root) {
    if (n < 0) return false;
    root = boost::multiprecision::sqrt(n);
    return root * root == n;
}

}  // namespace

bool rational_sqrt(const BigRational& value, BigRational& root) {
    BigInt num_root, den_root;
    if (!integer_sqrt(numerator(value), num_root) || !integer_sqrt(denominator(value), den_root))
        return false;
    root = BigRational(num_root, den_root);
    return true;
}

ExactSqrtRational ExactSqrtRational::from_rational(const BigRational& value) {
    return signed_sqrt(value < 0 ? -1 : 1, value * value);
}

ExactSqrtRational ExactSqrtRational::signed_sqrt(int sign, const BigRational& magnitude_squared) {
    if (magnitude_squared < 0) throw std::domain_error("negative radicand");
    ExactSqrtRational out;
    if (sign == 0 || magnitude_squared == 0) return out;
    out.sign_ = sign > 0 ? 1 : -1;
    out.square_ = magnitude_squared;
    return out;
}

double ExactSqrtRational::to_double() const {
    if (sign_ == 0) return 0.0;
    // Take the ratio before converting so huge factorial numerators stay finite.
    return sign_ * std::sqrt(square_.convert_to<double>());
}

std::string ExactSqrtRational::to_string() const {
    if (sign_ == 0) return "0";
    const std::string prefix = sign_ < 0 ? "-" : "";
    BigRational root;
    if (rational_sqrt(square_, root)) return prefix + root.str();
    return prefix + "sqrt(" + square_.str() + ")";
}

ExactSqrtRational ExactSqrtRational::operator-() const {
    ExactSqrtRational out = *this;
    out.sign_ = -sign_;
    return out;
}

ExactSqrtRational operator*(const ExactSqrtRational& a, const ExactSqrtRational& b) {
    return ExactSqrtRational::signed_sqrt(a.sign_ * b.sign_, a.square_ * b.square_);
}

ExactSqrtRational operator+(const ExactSqrtRational& a, const ExactSqrtRational& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    // a + b = sqrt(B) * (sa * sqrt(A/B) + sb)
    BigRational ratio_root;
    if (!rational_sqrt(a.square_ / b.square_, ratio_root))
        throw std::domain_error("sum of incommensurable square roots: " + a.to_string() + " + " +
                                b.to_string());
    const BigRational coefficient = a.sign_ * ratio_root + b.sign_;
    if (coefficient == 0) return {};
    return ExactSqrtRational::signed_sqrt(coefficient < 0 ? -1 : 1,
                                          b.square_ * coefficient * coefficient);
}

}  // namespace polarsu2
