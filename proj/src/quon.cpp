// Copyright 2026 The polarsu2 Authors
// SPDX-License-Identifier: Apache-2.0

#include "polarsu2/quon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace polarsu2 {

namespace {

Eigen::Index fock_index(int k, int na, int nb) { return static_cast<Eigen::Index>(na) * k + nb; }

std::vector<BasisLabel> single_basis(int k, bool is_a) {
    std::vector<BasisLabel> out;
    for (int n = 0; n < k; ++n) out.emplace_back(is_a ? FockLabel{n, 0} : FockLabel{0, n});
    return out;
}

Complex half_phase(double phi_r) { return std::polar(1.0, 0.5 * phi_r); }

}  // namespace

QDeformation::QDeformation(int k) : k_(k) {
    if (k < 2) throw std::invalid_argument("quon order k must be >= 2, got " + std::to_string(k));
    if (k > kMaxQuonOrder)
        throw std::invalid_argument("quon order k = " + std::to_string(k) + " exceeds the dimension guard " +
                                    std::to_string(kMaxQuonOrder));
}

Complex QDeformation::power(double x) const {
    const double rounded = std::round(x);
    if (rounded == x && std::abs(x) < 1e15) return power(static_cast<long long>(rounded));
    return unit_phase(x / k_);
}

Complex q_number(double x, const QDeformation& d) {
    return (Complex(1.0) - d.power(x)) / (Complex(1.0) - d.q());
}

Complex q_factorial(int n, const QDeformation& d) {
    if (n < 0 || n > d.k() - 1)
        throw std::out_of_range("q-factorial [" + std::to_string(n) + "]_q! outside [0, k-1] for k = " +
                                std::to_string(d.k()));
    Complex out(1.0);
    for (int i = 1; i <= n; ++i) out *= q_number(static_cast<double>(i), d);
    return out;
}

QuonRep build_rep(int k) {
    const QDeformation d(k);
    Eigen::MatrixXcd ap = Eigen::MatrixXcd::Zero(k, k), am = ap, bp = ap, bm = ap, na = ap;
    for (int n = 0; n < k; ++n) {
        na(n, n) = static_cast<double>(n);
        if (n + 1 < k) {
            ap(n + 1, n) = 1.0;
            bp(n + 1, n) = q_number(n + 1.0, d);
        }
        if (n > 0) {
            am(n - 1, n) = q_number(static_cast<double>(n), d);
            bm(n - 1, n) = 1.0;
        }
    }
    const auto ba = single_basis(k, true);
    const auto bb = single_basis(k, false);
    return QuonRep{d,
                   OperatorMatrix(ap, ba), OperatorMatrix(am, ba), OperatorMatrix(na, ba),
                   OperatorMatrix(bp, bb), OperatorMatrix(bm, bb), OperatorMatrix(na, bb)};
}

OperatorMatrix embed_a(const QuonRep& rep, const OperatorMatrix& op) {
    const int k = rep.k();
    return {kron(op.entries(), Eigen::MatrixXcd::Identity(k, k)), fock_basis(k)};
}

OperatorMatrix embed_b(const QuonRep& rep, const OperatorMatrix& op) {
    const int k = rep.k();
    return {kron(Eigen::MatrixXcd::Identity(k, k), op.entries()), fock_basis(k)};
}

OperatorMatrix build_h(const QuonRep& rep) {
    const auto na = embed_a(rep, rep.n_a);
    const auto nb1 = embed_b(rep, rep.n_b) + OperatorMatrix::identity(fock_basis(rep.k()));
    // N_a (N_b + 1) is diagonal; its square root is taken entrywise on the diagonal.
    Eigen::MatrixXcd product = (na * nb1).entries();
    Eigen::MatrixXcd root = Eigen::MatrixXcd::Zero(product.rows(), product.cols());
    for (Eigen::Index i = 0; i < product.rows(); ++i) root(i, i) = std::sqrt(product(i, i).real());
    return {root, fock_basis(rep.k())};
}

OperatorMatrix build_ur(const QuonRep& rep, double phi_r) {
    const int k = rep.k();
    const Complex inv_fact = Complex(1.0) / q_factorial(k - 1, rep.deformation);
    const Complex e = half_phase(phi_r);
    const OperatorMatrix left = rep.a_plus + (e * inv_fact) * rep.a_minus.power(k - 1);
    const OperatorMatrix right = rep.b_minus + (e * inv_fact) * rep.b_plus.power(k - 1);
    return embed_a(rep, left) * embed_b(rep, right);
}

OperatorMatrix build_v(const QuonRep& rep) {
    const int k = rep.k();
    Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(k * k, k * k);
    for (int na = 0; na < k; ++na)
        for (int nb = 0; nb < k; ++nb) {
            const auto i = fock_index(k, na, nb);
            v(i, i) = rep.deformation.power(static_cast<long long>(na - nb));
        }
    return {v, fock_basis(k)};
}

OperatorMatrix w_generator(const QuonRep& rep, double phi_r, int m1, int m2) {
    if (m1 < 0 || m2 < 0) throw std::invalid_argument("W generator indices must be non-negative");
    const auto u = build_ur(rep, phi_r);
    const auto v = build_v(rep);
    const Complex prefactor = rep.deformation.power(static_cast<long long>(m1) * m2);
    return prefactor * (u.power(m1) * v.power(m2));
}

double w_commutator_check(const QuonRep& rep, double phi_r, WIndex m, WIndex n) {
    const auto tm = w_generator(rep, phi_r, m.first, m.second);
    const auto tn = w_generator(rep, phi_r, n.first, n.second);
    const auto tmn = w_generator(rep, phi_r, m.first + n.first, m.second + n.second);
    const long long cross = static_cast<long long>(m.first) * n.second -
                            static_cast<long long>(m.second) * n.first;
    const double s = std::sin(2.0 * std::numbers::pi * static_cast<double>(cross) / rep.k());
    return max_abs(commutator(tm, tn) + Complex(0.0, 2.0 * s) * tmn);
}

double w_commutator_sweep(const QuonRep& rep, double phi_r, int max_index) {
    const int top = max_index < 0 ? rep.k() - 1 : max_index;
    const auto u = build_ur(rep, phi_r);
    const auto v = build_v(rep);
    // Cache U^p and V^p so the sweep costs O(top^2) products instead of O(top^4 * k).
    std::vector<OperatorMatrix> up{OperatorMatrix::identity(u.row_basis())};
    std::vector<OperatorMatrix> vp{OperatorMatrix::identity(v.row_basis())};
    for (int p = 1; p <= 2 * top; ++p) {
        up.push_back(up.back() * u);
        vp.push_back(vp.back() * v);
    }
    auto t = [&](int a, int b) {
        return rep.deformation.power(static_cast<long long>(a) * b) * (up[a] * vp[b]);
    };
    std::vector<OperatorMatrix> table;
    for (int a = 0; a <= 2 * top; ++a)
        for (int b = 0; b <= 2 * top; ++b) table.push_back(t(a, b));
    auto at = [&](int a, int b) -> const OperatorMatrix& { return table[a * (2 * top + 1) + b]; };

    double worst = 0.0;
    for (int m1 = 0; m1 <= top; ++m1)
        for (int m2 = 0; m2 <= top; ++m2)
            for (int n1 = 0; n1 <= top; ++n1)
                for (int n2 = 0; n2 <= top; ++n2) {
                    const long long cross = static_cast<long long>(m1) * n2 - static_cast<long long>(m2) * n1;
                    const double s = std::sin(2.0 * std::numbers::pi * static_cast<double>(cross) / rep.k());
                    const auto res = commutator(at(m1, m2), at(n1, n2)) +
                                     Complex(0.0, 2.0 * s) * at(m1 + n1, m2 + n2);
                    worst = std::max(worst, max_abs(res));
                }
    return worst;
}

double QuonRelationReport::max_numeric() const {
    return std::max({a_deformed_commutator, b_deformed_commutator, a_number_relations,
                     b_number_relations, nilpotency, consequence_relations, ab_commute});
}

QuonRelationReport verify_quon_relations(const QuonRep& rep) {
    const int k = rep.k();
    const Complex q = rep.deformation.q();
    const auto one = OperatorMatrix::identity(rep.a_plus.row_basis());
    const auto one_b = OperatorMatrix::identity(rep.b_plus.row_basis());

    QuonRelationReport out;
    out.a_deformed_commutator =
        max_abs(rep.a_minus * rep.a_plus - q * (rep.a_plus * rep.a_minus) - one);
    out.b_deformed_commutator =
        max_abs(rep.b_minus * rep.b_plus - q * (rep.b_plus * rep.b_minus) - one_b);
    out.a_number_relations = std::max(max_abs(commutator(rep.n_a, rep.a_plus) - rep.a_plus),
                                      max_abs(commutator(rep.n_a, rep.a_minus) + rep.a_minus));
    out.b_number_relations = std::max(max_abs(commutator(rep.n_b, rep.b_plus) - rep.b_plus),
                                      max_abs(commutator(rep.n_b, rep.b_minus) + rep.b_minus));

    const auto apk = rep.a_plus.power(k), amk = rep.a_minus.power(k);
    const auto bpk = rep.b_plus.power(k), bmk = rep.b_minus.power(k);
    out.nilpotency = std::max({max_abs(apk), max_abs(amk), max_abs(bpk), max_abs(bmk)});

    const Complex kk(static_cast<double>(k));
    out.consequence_relations = std::max(
        {max_abs(rep.a_minus * apk - apk * rep.a_minus), max_abs(amk * rep.a_plus - rep.a_plus * amk),
         max_abs(rep.n_a * apk - apk * (rep.n_a + kk * one)),
         max_abs(amk * rep.n_a - (rep.n_a + kk * one) * amk),
         max_abs(rep.b_minus * bpk - bpk * rep.b_minus), max_abs(bmk * rep.b_plus - rep.b_plus * bmk),
         max_abs(rep.n_b * bpk - bpk * (rep.n_b + kk * one_b)),
         max_abs(bmk * rep.n_b - (rep.n_b + kk * one_b) * bmk)});

    double ab = 0.0;
    for (const auto* a : {&rep.a_plus, &rep.a_minus, &rep.n_a})
        for (const auto* b : {&rep.b_plus, &rep.b_minus, &rep.n_b})
            ab = std::max(ab, max_abs(commutator(embed_a(rep, *a), embed_b(rep, *b))));
    out.ab_commute = ab;
    return out;
}

UrReport verify_ur(const QuonRep& rep, double phi_r) {
    const int k = rep.k();
    const auto u = build_ur(rep, phi_r);
    const auto h = build_h(rep);
    const auto one = OperatorMatrix::identity(fock_basis(k));

    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(k * k, k * k);
    const Complex e_half = half_phase(phi_r);
    for (int na = 0; na < k; ++na)
        for (int nb = 0; nb < k; ++nb) {
            const auto col = fock_index(k, na, nb);
            if (na == k - 1 && nb == 0)
                expected(fock_index(k, 0, k - 1), col) = std::polar(1.0, phi_r);
            else if (na == k - 1)
                expected(fock_index(k, 0, nb - 1), col) = e_half;
            else if (nb == 0)
                expected(fock_index(k, na + 1, k - 1), col) = e_half;
            else
                expected(fock_index(k, na + 1, nb - 1), col) = 1.0;
        }

    UrReport out;
    out.unitarity = max_abs(u.adjoint() * u - one);
    out.cyclicity = max_abs(u.power(k) - std::polar(1.0, phi_r) * one);
    out.action = max_abs(u.entries() - expected);
    out.h_hermitean = max_abs(h - h.adjoint());
    return out;
}

}  // namespace polarsu2
