// Copyright 2026 The polarsu2 Authors
// SPDX-License-Identifier: Apache-2.0

#include "polarsu2/quon.hpp"
#include "polarsu2/su2gen.hpp"

#include "oracles/oracles.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

using namespace polarsu2;

TEST(SchwingerMap, LabelsRoundTrip) {
    const auto map = schwinger_embed(4);
    EXPECT_EQ(map.j, 3_h2);
    for (HalfInt m : m_values(map.j)) {
        const auto f = map.to_fock(m);
        EXPECT_EQ(f.n_a + f.n_b, 3);
        EXPECT_EQ(map.to_m(f), m);
    }
    // j = (n_a + n_b)/2, m = (n_a - n_b)/2
    EXPECT_EQ(map.to_fock(3_h2).n_a, 3);
    EXPECT_THROW((void)schwinger_embed(1), std::invalid_argument);
}

TEST(SpinOps, SpinOneAtRZero) {
    const auto ops = build_spin_ops(2_h2, 0.0);
    ASSERT_EQ(ops.u_r.dim(), 3);
    // U_r|1,1> = |1,-1> with phase 1; U_r|1,m> = |1,m+1> otherwise
    EXPECT_NEAR(std::abs(ops.u_r(0, 2) - Complex(1, 0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(ops.u_r(1, 0) - Complex(1, 0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(ops.u_r(2, 1) - Complex(1, 0)), 0.0, 1e-15);
    EXPECT_NEAR(ops.j_plus(1, 0).real(), std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(ops.j3(2, 2).real(), 1.0, 0.0);
}

TEST(SpinOps, TopPhaseFollowsR) {
    const HalfInt j = 3_h2;
    const double r = 0.37;
    const auto ops = build_spin_ops(j, r);
    const Complex expected = std::exp(Complex(0, 2 * oracle::kPi * j.value() * r));
    EXPECT_NEAR(std::abs(ops.u_r(0, 3) - expected), 0.0, 1e-14);
}

TEST(SpinOps, TrivialSpace) {
    const auto ops = build_spin_ops(0_h2, 1.3);
    EXPECT_EQ(ops.u_r.dim(), 1);
    EXPECT_EQ(max_abs(ops.j_plus), 0.0);
    EXPECT_EQ(max_abs(ops.casimir), 0.0);
}

TEST(SpinOps, MatchesStandardLadderMatrices) {
    for (int t = 0; t <= 12; ++t) {
        const HalfInt j = HalfInt::from_twice(t);
        const auto ops = build_spin_ops(j, 2.5);
        for (int i = 0; i + 1 <= t; ++i) {
            const double m = -j.value() + i;
            EXPECT_NEAR(std::abs(ops.j_plus(i + 1, i)), std::sqrt(j.value() * (j.value() + 1) - m * (m + 1)), 1e-13);
        }
    }
}

TEST(Su2, AlgebraAndCasimirAcrossSweep) {
    for (double r : {0.0, 0.37, 1.0, 2.5})
        for (int t = 0; t <= 25; ++t) {
            const auto ops = build_spin_ops(HalfInt::from_twice(t), r);
            EXPECT_LE(verify_su2(ops).max(), 1e-11) << t << " " << r;
            EXPECT_LE(casimir_identities(ops).max(), 1e-11) << t << " " << r;
            const auto cyc = verify_spin_cyclic(ops);
            EXPECT_LE(cyc.cyclicity, 1e-10);
            EXPECT_LE(cyc.unitarity, 1e-12);
        }
}

TEST(Su2, QuonRestrictionAgrees) {
    for (double r : {0.0, 0.37, 1.0, 2.5})
        for (int k = 2; k <= 10; ++k) EXPECT_LE(quon_restriction_residual(k, r), 1e-12) << k << " " << r;
}

TEST(Su2, RestrictionLeavesSpinSubspaceInvariant) {
    const int k = 5;
    const auto rep = build_rep(k);
    const auto u = build_ur(rep, 0.7);
    EXPECT_EQ(leakage_from_spin(u, k), 0.0);
}

TEST(Su2Property, UrSpectrumIsShiftedRootsOfUnity) {
    gen::Gen g(99);
    for (int n = 0; n < 30; ++n) {
        const HalfInt j = g.spin(16);
        const double r = g.r_value();
        const auto ops = build_spin_ops(j, r);
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(ops.u_r.entries(), false);
        const int d = j.twice() + 1;
        for (int e = 0; e < d; ++e) {
            const Complex lambda = es.eigenvalues()(e);
            EXPECT_NEAR(std::abs(lambda), 1.0, 1e-12);
            // lambda^d = e^{i phi_r}
            EXPECT_NEAR(std::abs(std::pow(lambda, d) - std::exp(Complex(0, phi_of(j, r)))), 0.0, 1e-10);
        }
    }
}

TEST(Su2Property, RandomHermiticityOfJ3AndJ2) {
    gen::Gen g(100);
    for (int n = 0; n < 30; ++n) {
        const auto ops = build_spin_ops(g.spin(20), g.r_value());
        EXPECT_LE(max_residual(ops.j3, ops.j3.adjoint()), 0.0);
        EXPECT_LE(max_residual(ops.casimir, ops.casimir.adjoint()), 1e-12);
        EXPECT_LE(max_residual(ops.j_minus, ops.j_plus.adjoint()), 1e-13);
    }
}
