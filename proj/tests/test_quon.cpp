// Copyright 2026 The polarsu2 Authors
// SPDX-License-Identifier: Apache-2.0

#include "polarsu2/quon.hpp"
#include "polarsu2/su2gen.hpp"

#include "oracles/oracles.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

using namespace polarsu2;

namespace {

double diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST(QDeformation, RejectsOutOfRangeOrders) {
    EXPECT_THROW(QDeformation(1), std::invalid_argument);
    EXPECT_THROW(QDeformation(kMaxQuonOrder + 1), std::invalid_argument);
    EXPECT_NO_THROW(QDeformation(2));
}

TEST(QDeformation, QNumbers) {
    const QDeformation d(4);  // q = i
    EXPECT_NEAR(std::abs(q_number(1, d) - Complex(1, 0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(q_number(2, d) - Complex(1, 1)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(q_number(3, d) - Complex(0, 1)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(q_number(4, d)), 0.0, 1e-15);
    // [1]![2]![3]! = 1 * (1+i) * i
    EXPECT_NEAR(std::abs(q_factorial(3, d) - Complex(-1, 1)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(q_factorial(0, d) - Complex(1, 0)), 0.0, 0.0);
    EXPECT_THROW((void)q_factorial(4, d), std::out_of_range);
}

TEST(QuonRep, MatchesDefiningAction) {
    for (int k = 2; k <= 9; ++k) {
        const auto rep = build_rep(k);
        const auto o = oracle::quon(k);
        EXPECT_LT(diff(rep.a_plus.entries(), o.ap), 1e-14) << k;
        EXPECT_LT(diff(rep.a_minus.entries(), o.am), 1e-14) << k;
        EXPECT_LT(diff(rep.b_plus.entries(), o.bp), 1e-14) << k;
        EXPECT_LT(diff(rep.b_minus.entries(), o.bm), 1e-14) << k;
        EXPECT_EQ(diff(rep.n_a.entries(), o.na), 0.0) << k;
    }
}

TEST(QuonRep, RelationsHold) {
    for (int k = 2; k <= 12; ++k) {
        const auto report = verify_quon_relations(build_rep(k));
        EXPECT_LE(report.max_numeric(), 1e-12) << k;
        EXPECT_EQ(report.nilpotency, 0.0) << k;
        EXPECT_EQ(report.consequence_relations, 0.0) << k;
    }
}

TEST(QuonRep, KEqualsTwoIsFermionic) {
    // q = -1: a- a+ + a+ a- = 1
    const auto rep = build_rep(2);
    const Eigen::MatrixXcd anti = rep.a_minus.entries() * rep.a_plus.entries() + rep.a_plus.entries() * rep.a_minus.entries();
    EXPECT_LT(diff(anti, Eigen::MatrixXcd::Identity(2, 2)), 1e-15);
}

TEST(Ur, MatchesFourCaseActionOracle) {
    gen::Gen g(7);
    for (int k = 2; k <= 10; ++k)
        for (int n = 0; n < 4; ++n) {
            const double phi = g.real(-10.0, 10.0);
            const auto u = build_ur(build_rep(k), phi);
            EXPECT_LT(diff(u.entries(), oracle::ur_action(k, phi)), 1e-12) << k << " " << phi;
        }
}

TEST(Ur, HIsDiagonalSqrt) {
    const int k = 4;
    const auto h = build_h(build_rep(k));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) EXPECT_NEAR(h(a * k + b, a * k + b).real(), std::sqrt(a * (b + 1.0)), 1e-15);
}

TEST(Ur, CyclicAndUnitary) {
    for (double r : {0.0, 0.37, 1.0, 2.5})
        for (int k = 2; k <= 12; ++k) {
            const auto rep = build_rep(k);
            const auto report = verify_ur(rep, phi_of(HalfInt::from_twice(k - 1), r));
            EXPECT_LE(report.cyclicity, 1e-10);
            EXPECT_LE(report.unitarity, 1e-12);
            EXPECT_LE(report.action, 1e-12);
            EXPECT_EQ(report.h_hermitean, 0.0);
        }
}

TEST(WInfinity, GeneratorAlgebra) {
    for (int k = 2; k <= 6; ++k) {
        const auto rep = build_rep(k);
        EXPECT_LE(w_commutator_sweep(rep, 0.9), 1e-10) << k;
    }
}

TEST(WInfinity, IdentityGenerator) {
    const auto rep = build_rep(3);
    const auto t00 = w_generator(rep, 0.3, 0, 0);
    EXPECT_LT(diff(t00.entries(), Eigen::MatrixXcd::Identity(9, 9)), 1e-14);
}

TEST(QuonProperty, ConsequenceRelationsAtRandomOrders) {
    gen::Gen g(8);
    for (int n = 0; n < 10; ++n) {
        const int k = g.integer(2, 20);
        const auto rep = build_rep(k);
        const auto ak = rep.a_plus.power(k);
        EXPECT_EQ(max_abs(ak), 0.0);
        const auto lhs = rep.a_minus * rep.a_plus - rep.deformation.q() * (rep.a_plus * rep.a_minus);
        EXPECT_LE(max_residual(lhs, OperatorMatrix::identity(rep.a_plus.row_basis())), 1e-12);
    }
}
