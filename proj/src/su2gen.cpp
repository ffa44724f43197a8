// Copyright 2026 The polarsu2 Authors
// SPDX-License-Identifier: Apache-2.0

#include "polarsu2/su2gen.hpp"

#include "polarsu2/quon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace polarsu2 {

double phi_of(HalfInt j, double r) { return 2.0 * std::numbers::pi * j.value() * r; }

SpinSpace SpinSpace::make(HalfInt j, double r) {
    require_j(j);
    if (!std::isfinite(r)) throw std::invalid_argument("non-finite r");
    return SpinSpace{j, j.twice() + 1, r, phi_of(j, r), m_basis(j)};
}

FockLabel SchwingerMap::to_fock(HalfInt m_value) const {
    require_projection(j, m_value);
    return fock[static_cast<std::size_t>((m_value + j).twice() / 2)];
}

HalfInt SchwingerMap::to_m(const FockLabel& label) const {
    if (label.n_a + label.n_b != k - 1 || label.n_a < 0 || label.n_b < 0)
        throw std::invalid_argument("Fock state outside the spin-j diagonal");
    return m[static_cast<std::size_t>(label.n_a)];
}

SchwingerMap schwinger_embed(int k) {
    if (k < 2) throw std::invalid_argument("Schwinger map needs k >= 2");
    SchwingerMap map;
    map.k = k;
    map.j = HalfInt::from_twice(k - 1);
    for (int na = 0; na < k; ++na) {
        map.fock.push_back(FockLabel{na, k - 1 - na});
        map.m.push_back(HalfInt::from_twice(na - (k - 1 - na)));
    }
    return map;
}

namespace {

std::vector<Eigen::Index> diagonal_indices(int k) {
    std::vector<Eigen::Index> idx;
    for (int na = 0; na < k; ++na) idx.push_back(static_cast<Eigen::Index>(na) * k + (k - 1 - na));
    return idx;
}

}  // namespace

OperatorMatrix restrict_to_spin(const OperatorMatrix& on_fock, int k) {
    if (on_fock.rows() != static_cast<Eigen::Index>(k) * k || !on_fock.is_square())
        throw std::invalid_argument("restrict_to_spin: operator is not on F for this k");
    const auto idx = diagonal_indices(k);
    Eigen::MatrixXcd out(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) out(i, j) = on_fock(idx[i], idx[j]);
    return {out, m_basis(HalfInt::from_twice(k - 1))};
}

double leakage_from_spin(const OperatorMatrix& on_fock, int k) {
    const auto idx = diagonal_indices(k);
    double worst = 0.0;
    for (Eigen::Index row = 0; row < on_fock.rows(); ++row) {
        if (std::find(idx.begin(), idx.end(), row) != idx.end()) continue;
        for (auto col : idx) worst = std::max(worst, std::abs(on_fock(row, col)));
    }
    return worst;
}

SpinOperatorSet build_spin_ops(HalfInt j, double r) {
    const SpinSpace space = SpinSpace::make(j, r);
    const int d = space.dim();
    const int tj = j.twice();

    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(d, d);
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(d, d);
    Eigen::MatrixXcd j3 = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 0; i < d; ++i) {
        const int tm = -tj + 2 * i;
        // (j+m)(j-m+1) = (tj+tm)(tj-tm+2)/4
        h(i, i) = 0.5 * std::sqrt(static_cast<double>((tj + tm) * (tj - tm + 2)));
        j3(i, i) = 0.5 * tm;
        if (i + 1 < d)
            u(i + 1, i) = 1.0;
        else
            u(0, i) = std::polar(1.0, space.phi_r);
    }
    const auto& basis = space.basis;
    OperatorMatrix hm(h, basis), um(u, basis), j3m(j3, basis);
    OperatorMatrix udag = um.adjoint();
    OperatorMatrix jp = hm * um;
    OperatorMatrix jm = udag * hm;
    OperatorMatrix casimir = Complex(0.5) * (jp * jm + jm * jp) + j3m * j3m;
    return SpinOperatorSet{space,         std::move(hm), std::move(um), std::move(udag),
                           std::move(jp), std::move(jm), std::move(j3m), std::move(casimir)};
}

double Su2Report::max() const {
    return std::max({j3_jplus, j3_jminus, jplus_jminus, jplus_closed_form, jminus_closed_form,
                     j3_diagonal, jminus_adjoint, polar_factors});
}

Su2Report verify_su2(const SpinOperatorSet& ops) {
    const int d = ops.space.dim();
    const int tj = ops.space.j.twice();
    Eigen::MatrixXcd jp = Eigen::MatrixXcd::Zero(d, d), jm = jp, j3 = jp;
    for (int i = 0; i < d; ++i) {
        const int tm = -tj + 2 * i;
        j3(i, i) = 0.5 * tm;
        // J+|m> = sqrt((j-m)(j+m+1)) |m+1>,  J-|m> = sqrt((j+m)(j-m+1)) |m-1>
        if (i + 1 < d) jp(i + 1, i) = 0.5 * std::sqrt(static_cast<double>((tj - tm) * (tj + tm + 2)));
        if (i > 0) jm(i - 1, i) = 0.5 * std::sqrt(static_cast<double>((tj + tm) * (tj - tm + 2)));
    }
    Su2Report out;
    out.j3_jplus = max_abs(commutator(ops.j3, ops.j_plus) - ops.j_plus);
    out.j3_jminus = max_abs(commutator(ops.j3, ops.j_minus) + ops.j_minus);
    out.jplus_jminus = max_abs(commutator(ops.j_plus, ops.j_minus) - Complex(2.0) * ops.j3);
    out.jplus_closed_form = max_abs(ops.j_plus.entries() - jp);
    out.jminus_closed_form = max_abs(ops.j_minus.entries() - jm);
    out.j3_diagonal = max_abs(ops.j3.entries() - j3);
    out.jminus_adjoint = max_abs(ops.j_minus - ops.j_plus.adjoint());
    out.polar_factors = std::max(max_abs(ops.j_plus - ops.h * ops.u_r),
                                 max_abs(ops.j_minus - ops.u_r_dag * ops.h));
    return out;
}

double CasimirReport::max() const { return std::max({h_form, ur_form, commutes_ur, eigenvalue}); }

CasimirReport casimir_identities(const SpinOperatorSet& ops) {
    const auto& j2 = ops.casimir;
    const auto h2 = ops.h * ops.h;
    const auto j3sq = ops.j3 * ops.j3;
    const double jj1 = ops.space.j.value() * (ops.space.j.value() + 1.0);
    CasimirReport out;
    out.h_form = max_abs(j2 - h2 - j3sq + ops.j3);
    out.ur_form = max_abs(j2 - ops.u_r_dag * h2 * ops.u_r - j3sq - ops.j3);
    out.commutes_ur = max_abs(commutator(j2, ops.u_r));
    out.eigenvalue = max_abs(j2 - Complex(jj1) * OperatorMatrix::identity(ops.space.basis));
    return out;
}

SpinCyclicReport verify_spin_cyclic(const SpinOperatorSet& ops) {
    const auto one = OperatorMatrix::identity(ops.space.basis);
    SpinCyclicReport out;
    out.cyclicity = max_abs(ops.u_r.power(ops.space.dim()) - std::polar(1.0, ops.space.phi_r) * one);
    out.unitarity = max_abs(ops.u_r_dag * ops.u_r - one);
    out.h_hermitean = max_abs(ops.h - ops.h.adjoint());
    return out;
}

double quon_restriction_residual(int k, double r) {
    const HalfInt j = HalfInt::from_twice(k - 1);
    const auto rep = build_rep(k);
    const double phi = phi_of(j, r);
    const auto h_f = build_h(rep);
    const auto u_f = build_ur(rep, phi);
    const auto udag_f = u_f.adjoint();
    const auto ops = build_spin_ops(j, r);
    return std::max({max_residual(restrict_to_spin(h_f, k), ops.h),
                     max_residual(restrict_to_spin(u_f, k), ops.u_r),
                     max_residual(restrict_to_spin(udag_f, k), ops.u_r_dag),
                     leakage_from_spin(h_f, k), leakage_from_spin(u_f, k),
                     leakage_from_spin(udag_f, k)});
}

}  // namespace polarsu2
