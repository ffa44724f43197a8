// Copyright 2026 The polarsu2 Authors
// SPDX-License-Identifier: Apache-2.0

#include "polarsu2/standard_wra.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>
#include <vector>

namespace polarsu2 {

namespace {

std::atomic<int> g_factorial_bound{kDefaultFactorialBound};
std::atomic<bool> g_factorial_built{false};

const std::vector<BigInt>& factorial_table() {
    static const std::vector<BigInt> table = [] {
        const int bound = g_factorial_bound.load();
        std::vector<BigInt> t(static_cast<std::size_t>(bound) + 1);
        t[0] = 1;
        for (int n = 1; n <= bound; ++n) t[n] = t[n - 1] * n;
        g_factorial_built = true;
        return t;
    }();
    return table;
}

// Factorial of a half-integer-valued combination that must be integral and
// non-negative; `twice` is twice the argument.
const BigInt& fact2(int twice) {
    if (twice % 2 != 0) throw std::logic_error("factorial of a half-integer");
    return factorial(twice / 2);
}

BigRational delta_squared(HalfInt a, HalfInt b, HalfInt c) {
    const int ta = a.twice(), tb = b.twice(), tc = c.twice();
    return BigRational(fact2(ta + tb - tc) * fact2(ta - tb + tc) * fact2(-ta + tb + tc),
                       fact2(ta + tb + tc + 2));
}

int sign_of(const BigRational& x) { return x < 0 ? -1 : (x > 0 ? 1 : 0); }

}  // namespace

bool set_factorial_bound(int bound) {
    if (g_factorial_built.load() || bound < 1) return false;
    g_factorial_bound = bound;
    return true;
}

const BigInt& factorial(int n) {
    const auto& table = factorial_table();
    if (n < 0 || n >= static_cast<int>(table.size()))
        throw std::out_of_range("factorial(" + std::to_string(n) + ") beyond cached bound " +
                                std::to_string(table.size() - 1));
    return table[static_cast<std::size_t>(n)];
}

ExactSqrtRational cg(HalfInt j1, HalfInt j2, HalfInt m1, HalfInt m2, HalfInt j, HalfInt m) {
    require_projection(j1, m1);
    require_projection(j2, m2);
    require_projection(j, m);
    if (m1 + m2 != m || !triangle(j1, j2, j)) return {};

    const int t1 = j1.twice(), t2 = j2.twice(), t = j.twice();
    const int tm1 = m1.twice(), tm2 = m2.twice(), tm = m.twice();

    BigRational radicand = (t + 1) * delta_squared(j1, j2, j);
    radicand *= BigRational(fact2(t1 + tm1) * fact2(t1 - tm1) * fact2(t2 + tm2) * fact2(t2 - tm2) *
                            fact2(t + tm) * fact2(t - tm));

    // Racah's single sum; bounds keep every factorial argument non-negative.
    const int kmin = std::max({0, (t2 - t - tm1) / 2, (t1 + tm2 - t) / 2});
    const int kmax = std::min({(t1 + t2 - t) / 2, (t1 - tm1) / 2, (t2 + tm2) / 2});
    BigRational sum = 0;
    for (int k = kmin; k <= kmax; ++k) {
        const BigInt den = factorial(k) * fact2(t1 + t2 - t - 2 * k) * fact2(t1 - tm1 - 2 * k) *
                           fact2(t2 + tm2 - 2 * k) * fact2(t - t2 + tm1 + 2 * k) *
                           fact2(t - t1 - tm2 + 2 * k);
        sum += BigRational(k % 2 == 0 ? 1 : -1, den);
    }
    return ExactSqrtRational::signed_sqrt(sign_of(sum), radicand * sum * sum);
}

ExactSqrtRational threejm(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3) {
    require_projection(j1, m1);
    require_projection(j2, m2);
    require_projection(j3, m3);
    if ((m1 + m2 + m3).twice() != 0 || !triangle(j1, j2, j3)) return {};
    const int phase = phase_sign(j1 - j2 - m3);
    const auto c = cg(j1, j2, m1, m2, j3, -m3);
    return ExactSqrtRational::signed_sqrt(phase * c.sign(),
                                          c.magnitude_squared() / BigRational(j3.twice() + 1));
}

ExactSqrtRational sixj(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5, HalfInt j6) {
    for (HalfInt x : {j1, j2, j3, j4, j5, j6}) require_j(x);
    if (!triangle(j1, j2, j3) || !triangle(j1, j5, j6) || !triangle(j4, j2, j6) ||
        !triangle(j4, j5, j3))
        return {};

    const BigRational radicand = delta_squared(j1, j2, j3) * delta_squared(j1, j5, j6) *
                                 delta_squared(j4, j2, j6) * delta_squared(j4, j5, j3);

    const int a1 = (j1 + j2 + j3).twice() / 2;
    const int a2 = (j1 + j5 + j6).twice() / 2;
    const int a3 = (j4 + j2 + j6).twice() / 2;
    const int a4 = (j4 + j5 + j3).twice() / 2;
    const int b1 = (j1 + j2 + j4 + j5).twice() / 2;
    const int b2 = (j2 + j3 + j5 + j6).twice() / 2;
    const int b3 = (j3 + j1 + j6 + j4).twice() / 2;

    BigRational sum = 0;
    for (int z = std::max({a1, a2, a3, a4}); z <= std::min({b1, b2, b3}); ++z) {
        const BigInt den = factorial(z - a1) * factorial(z - a2) * factorial(z - a3) *
                           factorial(z - a4) * factorial(b1 - z) * factorial(b2 - z) *
                           factorial(b3 - z);
        sum += BigRational((z % 2 == 0 ? 1 : -1) * factorial(z + 1), den);
    }
    return ExactSqrtRational::signed_sqrt(sign_of(sum), radicand * sum * sum);
}

ExactSqrtRational ninej(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5, HalfInt j6,
                        HalfInt j7, HalfInt j8, HalfInt j9) {
    for (HalfInt x : {j1, j2, j3, j4, j5, j6, j7, j8, j9}) require_j(x);
    if (!triangle(j1, j2, j3) || !triangle(j4, j5, j6) || !triangle(j7, j8, j9) ||
        !triangle(j1, j4, j7) || !triangle(j2, j5, j8) || !triangle(j3, j6, j9))
        return {};

    // x must couple with (j1, j9), (j8, j4) and (j2, j6).
    auto lower = [](HalfInt a, HalfInt b) { return std::abs(a.twice() - b.twice()); };
    const int lo = std::max({lower(j1, j9), lower(j8, j4), lower(j2, j6)});
    const int hi = std::min({(j1 + j9).twice(), (j8 + j4).twice(), (j2 + j6).twice()});

    ExactSqrtRational sum;
    for (int tx = lo; tx <= hi; tx += 2) {
        const HalfInt x = HalfInt::from_twice(tx);
        const auto product = sixj(j1, j4, j7, j8, j9, x) * sixj(j2, j5, j8, j4, x, j6) *
                             sixj(j3, j6, j9, x, j1, j2);
        const int phase = tx % 2 == 0 ? 1 : -1;
        sum += ExactSqrtRational::from_rational(BigRational(phase * (tx + 1))) * product;
    }
    return sum;
}

ExactSqrtRational metric_standard(HalfInt j, HalfInt m, HalfInt mp) {
    require_projection(j, m);
    require_projection(j, mp);
    if (mp != -m) return {};
    return ExactSqrtRational::from_rational(BigRational(phase_sign(j - m)));
}

}  // namespace polarsu2
