// Copyright 2026 The polarsu2 Authors
// SPDX-License-Identifier: Apache-2.0

// Independent reference computations used only by the tests. Nothing here
// calls into the library's coefficient code.

#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <map>
#include <tuple>

namespace oracle {

using cd = std::complex<double>;
inline constexpr double kPi = 3.14159265358979323846;

/// Standard CG coefficient <j1 m1; j2 m2 | j m> from diagonalizing J^2 on the
/// product space. Arguments are doubled. Condon-Shortley phase:
/// <j1 j1; j2 j-j1 | j j> > 0.
inline double cg2(int tj1, int tj2, int tm1, int tm2, int tj, int tm) {
    if (tm1 + tm2 != tm) return 0.0;
    if (tj < std::abs(tj1 - tj2) || tj > tj1 + tj2 || (tj1 + tj2 + tj) % 2) return 0.0;
    if (std::abs(tm1) > tj1 || std::abs(tm2) > tj2 || std::abs(tm) > tj) return 0.0;
    if ((tj1 - tm1) % 2 || (tj2 - tm2) % 2 || (tj - tm) % 2) return 0.0;

    using Key = std::tuple<int, int, int>;
    static std::map<Key, Eigen::MatrixXd> cache;  // columns: m of |j m>, rows: (m1, m2) product index
    const Key key{tj1, tj2, tj};
    auto it = cache.find(key);
    if (it == cache.end()) {
        const int d1 = tj1 + 1, d2 = tj2 + 1, d = tj + 1;
        const int n = d1 * d2;
        // single-spin matrices, index i <-> 2m = -tj + 2i
        auto jz = [](int tjx) {
            Eigen::MatrixXd z = Eigen::MatrixXd::Zero(tjx + 1, tjx + 1);
            for (int i = 0; i <= tjx; ++i) z(i, i) = 0.5 * (-tjx + 2 * i);
            return z;
        };
        auto jp = [](int tjx) {
            Eigen::MatrixXd p = Eigen::MatrixXd::Zero(tjx + 1, tjx + 1);
            const double j = 0.5 * tjx;
            for (int i = 0; i < tjx; ++i) {
                const double m = 0.5 * (-tjx + 2 * i);
                p(i + 1, i) = std::sqrt(j * (j + 1) - m * (m + 1));
            }
            return p;
        };
        auto kr = [](const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
            Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
            for (int i = 0; i < a.rows(); ++i)
                for (int k = 0; k < a.cols(); ++k) out.block(i * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(i, k) * b;
            return out;
        };
        const Eigen::MatrixXd i1 = Eigen::MatrixXd::Identity(d1, d1), i2 = Eigen::MatrixXd::Identity(d2, d2);
        const Eigen::MatrixXd Jz = kr(jz(tj1), i2) + kr(i1, jz(tj2));
        const Eigen::MatrixXd Jp = kr(jp(tj1), i2) + kr(i1, jp(tj2));
        const Eigen::MatrixXd Jm = Jp.transpose();
        const Eigen::MatrixXd J2 = Jz * Jz + 0.5 * (Jp * Jm + Jm * Jp);

        // Highest weight: J2 eigenvector with eigenvalue j(j+1) inside M = j.
        std::vector<int> idx;
        for (int a = 0; a < d1; ++a)
            for (int b = 0; b < d2; ++b)
                if ((-tj1 + 2 * a) + (-tj2 + 2 * b) == tj) idx.push_back(a * d2 + b);
        Eigen::MatrixXd block(idx.size(), idx.size());
        for (std::size_t p = 0; p < idx.size(); ++p)
            for (std::size_t q = 0; q < idx.size(); ++q) block(p, q) = J2(idx[p], idx[q]);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(block);
        const double target = 0.5 * tj * (0.5 * tj + 1);
        int best = 0;
        for (int e = 0; e < es.eigenvalues().size(); ++e)
            if (std::abs(es.eigenvalues()(e) - target) < std::abs(es.eigenvalues()(best) - target)) best = e;
        Eigen::VectorXd top = Eigen::VectorXd::Zero(n);
        for (std::size_t p = 0; p < idx.size(); ++p) top(idx[p]) = es.eigenvectors()(p, best);
        // sign: component with m1 = j1 positive
        const int a_top = tj1;  // index of m1 = j1
        const int b_top = (tj - tj1 + tj2) / 2;
        if (top(a_top * d2 + b_top) < 0) top = -top;

        Eigen::MatrixXd cols(n, d);
        cols.col(d - 1) = top;
        for (int c = d - 1; c > 0; --c) {
            const double j = 0.5 * tj, m = 0.5 * (-tj + 2 * c);
            cols.col(c - 1) = Jm * cols.col(c) / std::sqrt(j * (j + 1) - m * (m - 1));
        }
        it = cache.emplace(key, cols).first;
    }
    const int a = (tm1 + tj1) / 2, b = (tm2 + tj2) / 2, c = (tm + tj) / 2;
    return it->second(a * (tj2 + 1) + b, c);
}

inline double threejm2(int tj1, int tj2, int tj3, int tm1, int tm2, int tm3) {
    const int e = (tj1 - tj2 - tm3) / 2;
    const double sign = (e % 2 == 0) ? 1.0 : -1.0;
    return sign / std::sqrt(tj3 + 1.0) * cg2(tj1, tj2, tm1, tm2, tj3, -tm3);
}

/// 6-j symbol {a b c; d e f} from the four-CG recoupling overlap at M = J.
/// Uses <(j1 j2)j12, j3; J | j1, (j2 j3)j23; J> with (j1 j2 j12 j3 J j23) = (a b c d e f).
inline double sixj2(int a, int b, int c, int d, int e, int f) {
    auto tri = [](int x, int y, int z) { return z >= std::abs(x - y) && z <= x + y && (x + y + z) % 2 == 0; };
    if (!tri(a, b, c) || !tri(c, d, e) || !tri(b, d, f) || !tri(a, f, e)) return 0.0;
    double sum = 0.0;
    const int tm = e;
    for (int m1 = -a; m1 <= a; m1 += 2)
        for (int m2 = -b; m2 <= b; m2 += 2) {
            const int m3 = tm - m1 - m2;
            if (std::abs(m3) > d) continue;
            sum += cg2(a, b, m1, m2, c, m1 + m2) * cg2(c, d, m1 + m2, m3, e, tm) * cg2(b, d, m2, m3, f, m2 + m3) *
                   cg2(a, f, m1, m2 + m3, e, tm);
        }
    const int ph = (a + b + d + e) / 2;
    return ((ph % 2 == 0) ? 1.0 : -1.0) * sum / std::sqrt((c + 1.0) * (f + 1.0));
}

/// <j m | j alpha; r> straight from the defining expansion.
inline cd overlap(int tj, int tm, double alpha) {
    const double d = tj + 1.0;
    return std::exp(cd(0, alpha * (0.5 * tm) * 2 * kPi / d)) / std::sqrt(d);
}

inline double alpha_of(int tj, double r, int s) { return -0.5 * tj * r + s; }

/// Non-standard coupling coefficient by direct summation over all projections.
inline cd cg_ns(int tj1, int tj2, int s1, int s2, int tj, int s, double r) {
    cd sum = 0.0;
    for (int m1 = -tj1; m1 <= tj1; m1 += 2)
        for (int m2 = -tj2; m2 <= tj2; m2 += 2) {
            const int m = m1 + m2;
            if (std::abs(m) > tj) continue;
            sum += cg2(tj1, tj2, m1, m2, tj, m) * std::conj(overlap(tj1, m1, alpha_of(tj1, r, s1))) *
                   std::conj(overlap(tj2, m2, alpha_of(tj2, r, s2))) * overlap(tj, m, alpha_of(tj, r, s));
        }
    return sum;
}

/// f-bar symbol from its triple sum over 3-jm symbols.
inline cd fbar(int tj1, int tj2, int tj3, double a1, double a2, double a3) {
    cd sum = 0.0;
    const double d1 = tj1 + 1.0, d2 = tj2 + 1.0, d3 = tj3 + 1.0;
    for (int m1 = -tj1; m1 <= tj1; m1 += 2)
        for (int m2 = -tj2; m2 <= tj2; m2 += 2) {
            const int m3 = -m1 - m2;
            if (std::abs(m3) > tj3) continue;
            const double phase = -2 * kPi * (a1 * 0.5 * m1 / d1 + a2 * 0.5 * m2 / d2 + a3 * 0.5 * m3 / d3);
            sum += std::exp(cd(0, phase)) * threejm2(tj1, tj2, tj3, m1, m2, m3);
        }
    return sum / std::sqrt(d1 * d2 * d3);
}

/// Quon operators on F_a and F_b from their defining action, with
/// [x]_q = (1 - q^x) / (1 - q), q = exp(2 pi i / k).
struct Quon {
    int k;
    Eigen::MatrixXcd ap, am, bp, bm, na, nb;
};

inline cd qnum(double x, int k) {
    const cd q = std::exp(cd(0, 2 * kPi / k));
    return (1.0 - std::pow(q, x)) / (1.0 - q);
}

inline Quon quon(int k) {
    Quon out{k, Eigen::MatrixXcd::Zero(k, k), Eigen::MatrixXcd::Zero(k, k), Eigen::MatrixXcd::Zero(k, k),
             Eigen::MatrixXcd::Zero(k, k), Eigen::MatrixXcd::Zero(k, k), Eigen::MatrixXcd::Zero(k, k)};
    for (int n = 0; n < k; ++n) {
        if (n + 1 < k) {
            out.ap(n + 1, n) = 1.0;
            out.bp(n + 1, n) = qnum(n + 1, k);
        }
        if (n > 0) {
            out.am(n - 1, n) = qnum(n, k);
            out.bm(n - 1, n) = 1.0;
        }
        out.na(n, n) = n;
        out.nb(n, n) = n;
    }
    return out;
}

/// U_r on F (index n_a * k + n_b) from its four-case action.
inline Eigen::MatrixXcd ur_action(int k, double phi) {
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(k * k, k * k);
    const cd half = std::exp(cd(0, phi / 2)), full = std::exp(cd(0, phi));
    auto at = [k](int a, int b) { return a * k + b; };
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            if (a == k - 1 && b != 0) u(at(0, b - 1), at(a, b)) = half;
            else if (a != k - 1 && b != 0) u(at(a + 1, b - 1), at(a, b)) = 1.0;
            else if (a != k - 1 && b == 0) u(at(a + 1, k - 1), at(a, b)) = half;
            else u(at(0, k - 1), at(a, b)) = full;
        }
    return u;
}

}  // namespace oracle
