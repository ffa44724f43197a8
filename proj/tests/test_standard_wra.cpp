// Copyright 2026 The polarsu2 Authors
// SPDX-License-Identifier: Apache-2.0

#include "polarsu2/exact.hpp"
#include "polarsu2/standard_wra.hpp"

#include "oracles/oracles.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

using namespace polarsu2;

namespace {

ExactSqrtRational root(int sign, long long num, long long den) {
    return ExactSqrtRational::signed_sqrt(sign, BigRational(num, den));
}

}  // namespace

TEST(ExactSqrtRational, ArithmeticStaysExact) {
    const auto half = root(1, 1, 2);
    EXPECT_EQ(half * half, ExactSqrtRational::from_rational(BigRational(1, 2)));
    EXPECT_EQ(half + half, root(1, 2, 1));
    EXPECT_TRUE((half - half).is_zero());
    EXPECT_EQ(root(1, 1, 8) + root(-1, 1, 2), root(-1, 1, 8));
    EXPECT_THROW((void)(root(1, 2, 1) + root(1, 3, 1)), std::domain_error);
}

TEST(ExactSqrtRational, FormatsAndConverts) {
    EXPECT_EQ(root(-1, 1, 2).to_string(), "-sqrt(1/2)");
    EXPECT_EQ(root(1, 9, 4).to_string(), "3/2");
    EXPECT_EQ(ExactSqrtRational{}.to_string(), "0");
    EXPECT_NEAR(root(1, 2, 3).to_double(), std::sqrt(2.0 / 3.0), 1e-15);
}

TEST(StandardCg, FrozenValues) {
    // <1 0; 1/2 1/2 | 1/2 1/2> = -sqrt(1/3), <1 1; 1/2 -1/2 | 1/2 1/2> = sqrt(2/3)
    EXPECT_EQ(cg(2_h2, 1_h2, 0_h2, 1_h2, 1_h2, 1_h2), root(-1, 1, 3));
    EXPECT_EQ(cg(2_h2, 1_h2, 2_h2, -(1_h2), 1_h2, 1_h2), root(1, 2, 3));
    // <1/2 1/2; 1/2 -1/2 | 0 0> = sqrt(1/2), <1/2 -1/2; 1/2 1/2 | 0 0> = -sqrt(1/2)
    EXPECT_EQ(cg(1_h2, 1_h2, 1_h2, -(1_h2), 0_h2, 0_h2), root(1, 1, 2));
    EXPECT_EQ(cg(1_h2, 1_h2, -(1_h2), 1_h2, 0_h2, 0_h2), root(-1, 1, 2));
    EXPECT_TRUE(cg(1_h2, 1_h2, 1_h2, 1_h2, 0_h2, 0_h2).is_zero());
    EXPECT_TRUE(cg(2_h2, 2_h2, 0_h2, 0_h2, 2_h2, 0_h2).is_zero());
}

TEST(StandardCg, InvalidProjectionThrows) {
    EXPECT_THROW((void)cg(1_h2, 1_h2, 2_h2, 0_h2, 1_h2, 1_h2), std::invalid_argument);
    EXPECT_THROW((void)cg(1_h2, 1_h2, 1_h2, -(1_h2), 2_h2, 1_h2), std::invalid_argument);
    // valid labels outside the triangle give zero
    EXPECT_TRUE(cg(1_h2, 1_h2, 1_h2, -(1_h2), 1_h2, 1_h2).is_zero());
}

TEST(StandardCg, MatchesDiagonalizationOracle) {
    for (int t1 = 0; t1 <= 6; ++t1)
        for (int t2 = 0; t2 <= 6; ++t2)
            for (int t = std::abs(t1 - t2); t <= t1 + t2; t += 2)
                for (int m1 = -t1; m1 <= t1; m1 += 2)
                    for (int m2 = -t2; m2 <= t2; m2 += 2) {
                        const int m = m1 + m2;
                        if (std::abs(m) > t) continue;
                        const double got = cg(HalfInt::from_twice(t1), HalfInt::from_twice(t2), HalfInt::from_twice(m1),
                                              HalfInt::from_twice(m2), HalfInt::from_twice(t), HalfInt::from_twice(m))
                                               .to_double();
                        EXPECT_NEAR(got, oracle::cg2(t1, t2, m1, m2, t, m), 1e-12)
                            << t1 << " " << t2 << " " << m1 << " " << m2 << " " << t << " " << m;
                    }
}

TEST(ThreeJm, MatchesOracleAndFrozenValue) {
    // (1 1 0; 0 0 0) = -sqrt(1/3)
    EXPECT_EQ(threejm(2_h2, 2_h2, 0_h2, 0_h2, 0_h2, 0_h2), root(-1, 1, 3));
    gen::Gen g(21);
    for (int n = 0; n < 300; ++n) {
        const auto [a, b, c] = g.triad(6);
        const auto m1 = g.projection(a), m2 = g.projection(b);
        const HalfInt m3 = -(m1 + m2);
        if (!is_projection_of(c, m3)) continue;
        EXPECT_NEAR(threejm(a, b, c, m1, m2, m3).to_double(),
                    oracle::threejm2(a.twice(), b.twice(), c.twice(), m1.twice(), m2.twice(), m3.twice()), 1e-12);
    }
}

TEST(SixJ, FrozenValues) {
    // {1/2 1/2 1; 1/2 1/2 0} = 1/2, {1 1 1; 1 1 1} = 1/6, {1/2 1/2 0; 1/2 1/2 1} = 1/2
    EXPECT_EQ(sixj(1_h2, 1_h2, 2_h2, 1_h2, 1_h2, 0_h2), ExactSqrtRational::from_rational(BigRational(1, 2)));
    EXPECT_EQ(sixj(2_h2, 2_h2, 2_h2, 2_h2, 2_h2, 2_h2), ExactSqrtRational::from_rational(BigRational(1, 6)));
    EXPECT_EQ(sixj(1_h2, 1_h2, 0_h2, 1_h2, 1_h2, 2_h2), ExactSqrtRational::from_rational(BigRational(1, 2)));
    EXPECT_TRUE(sixj(1_h2, 1_h2, 1_h2, 1_h2, 1_h2, 1_h2).is_zero());
}

TEST(SixJ, MatchesContractionOracle) {
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
            for (int c = 0; c <= 4; ++c)
                for (int d = 0; d <= 4; ++d)
                    for (int e = 0; e <= 4; ++e)
                        for (int f = 0; f <= 4; ++f) {
                            const double got = sixj(HalfInt::from_twice(a), HalfInt::from_twice(b), HalfInt::from_twice(c),
                                                    HalfInt::from_twice(d), HalfInt::from_twice(e), HalfInt::from_twice(f))
                                                   .to_double();
                            ASSERT_NEAR(got, oracle::sixj2(a, b, c, d, e, f), 1e-12)
                                << a << b << c << d << e << f;
                        }
}

TEST(NineJ, ReducesToSixJWithZeroEntry) {
    // {a b e; c d e; f f 0} = (-1)^{b+c+e+f} {a b e; d c f} / sqrt((2e+1)(2f+1))
    gen::Gen g(31);
    int checked = 0;
    while (checked < 60) {
        const auto a = g.spin(4), b = g.spin(4), c = g.spin(4), d = g.spin(4), e = g.spin(4), f = g.spin(4);
        if (!triangle(a, b, e) || !triangle(c, d, e) || !triangle(a, c, f) || !triangle(b, d, f)) continue;
        ++checked;
        const auto lhs = ninej(a, b, e, c, d, e, f, f, 0_h2);
        const auto rhs = ExactSqrtRational::signed_sqrt(phase_sign(b + c + e + f),
                                                        BigRational(1, (e.twice() + 1) * (f.twice() + 1))) *
                         sixj(a, b, e, d, c, f);
        EXPECT_EQ(lhs, rhs);
    }
}

TEST(NineJ, FrozenValue) {
    // {1/2 1/2 1; 1/2 1/2 1; 1 1 0} = -1/18
    EXPECT_EQ(ninej(1_h2, 1_h2, 2_h2, 1_h2, 1_h2, 2_h2, 2_h2, 2_h2, 0_h2),
              ExactSqrtRational::from_rational(BigRational(-1, 18)));
}

TEST(Metric, HerringWignerForm) {
    EXPECT_EQ(metric_standard(1_h2, 1_h2, -(1_h2)), ExactSqrtRational::from_rational(1));
    EXPECT_EQ(metric_standard(1_h2, -(1_h2), 1_h2), ExactSqrtRational::from_rational(-1));
    EXPECT_TRUE(metric_standard(2_h2, 2_h2, 2_h2).is_zero());
    EXPECT_EQ(metric_standard(2_h2, 0_h2, 0_h2), ExactSqrtRational::from_rational(-1));
}

TEST(Factorial, BoundIsEnforced) {
    EXPECT_EQ(factorial(5), BigInt(120));
    EXPECT_THROW((void)factorial(-1), std::out_of_range);
    EXPECT_THROW((void)factorial(kDefaultFactorialBound + 1), std::out_of_range);
}

TEST(StandardProperty, CgOrthogonalityExact) {
    gen::Gen g(41);
    for (int n = 0; n < 40; ++n) {
        const auto j1 = g.spin(5), j2 = g.spin(5);
        const auto m1 = g.projection(j1), m2 = g.projection(j2);
        const auto m1p = g.projection(j1), m2p = HalfInt(m1 + m2 - m1p);
        if (!is_projection_of(j2, m2p)) continue;
        ExactSqrtRational sum;
        for (int t = std::abs(j1.twice() - j2.twice()); t <= j1.twice() + j2.twice(); t += 2) {
            const HalfInt j = HalfInt::from_twice(t);
            if (!is_projection_of(j, m1 + m2)) continue;
            sum += cg(j1, j2, m1, m2, j, m1 + m2) * cg(j1, j2, m1p, m2p, j, m1 + m2);
        }
        EXPECT_EQ(sum, m1 == m1p ? ExactSqrtRational::from_rational(1) : ExactSqrtRational{});
    }
}

TEST(StandardProperty, CgValuesAreRealAndBounded) {
    gen::Gen g(42);
    for (int n = 0; n < 300; ++n) {
        const auto [j1, j2, j] = g.triad(10);
        const auto m1 = g.projection(j1), m2 = g.projection(j2);
        if (!is_projection_of(j, m1 + m2)) continue;
        const auto c = cg(j1, j2, m1, m2, j, m1 + m2);
        EXPECT_LE(c.magnitude_squared(), BigRational(1));
    }
}
