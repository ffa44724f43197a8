// Copyright 2026 The polarsu2 Authors
// SPDX-License-Identifier: Apache-2.0

#include "polarsu2/nonstandard.hpp"

#include "polarsu2/standard_wra.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

namespace polarsu2 {

namespace {

int dim_of(HalfInt j) { return j.twice() + 1; }

HalfInt m_at(HalfInt j, int index) { return HalfInt::from_twice(-j.twice() + 2 * index); }

int index_of(HalfInt j, HalfInt m) { return (m.twice() + j.twice()) / 2; }

void require_label(HalfInt j, const AlphaLabel& a) {
    if (a.j() != j)
        throw std::invalid_argument("alpha label belongs to j = " + a.j().to_string() + ", expected j = " +
                                    j.to_string());
}

void require_same_r(std::initializer_list<const AlphaLabel*> labels) {
    const double r = (*labels.begin())->r();
    for (const auto* a : labels)
        if (a->r() != r) throw std::invalid_argument("alpha labels with different r cannot be coupled");
}

HalfInt spin_of_m_basis(const std::vector<BasisLabel>& basis) {
    if (basis.empty() || !std::holds_alternative<MLabel>(basis.front()))
        throw std::invalid_argument("expected an operator on a standard |j,m> basis");
    const HalfInt j = std::get<MLabel>(basis.front()).j;
    if (basis != m_basis(j)) throw std::invalid_argument("basis is not the ascending-m basis of one j");
    return j;
}

std::pair<HalfInt, double> spin_of_alpha_basis(const std::vector<BasisLabel>& basis) {
    if (basis.empty() || !std::holds_alternative<AlphaLabel>(basis.front()))
        throw std::invalid_argument("expected an operator on a |j,alpha;r> basis");
    const auto& first = std::get<AlphaLabel>(basis.front());
    if (basis != alpha_basis(first.j(), first.r()))
        throw std::invalid_argument("basis is not the ascending-alpha basis of one (j, r)");
    return {first.j(), first.r()};
}

// (2j+1)-th roots carried by the labels: exp(i alpha m 2pi/(2j+1)) without normalization.
Complex raw_phase(HalfInt j, HalfInt m, int s, double r) {
    const long long d = dim_of(j);
    // alpha m / d = s (2m) / (2d) - j r m / d; the first part is an exact rational.
    const Complex exact = root_of_unity(static_cast<long long>(s) * m.twice(), 2 * d);
    if (r == 0.0) return exact;
    return exact * unit_phase(-j.value() * r * m.value() / static_cast<double>(d));
}

}  // namespace

// ---------------------------------------------------------------------------
// Inter-basis transformation
// ---------------------------------------------------------------------------

Complex overlap(HalfInt j, HalfInt m, const AlphaLabel& a) {
    require_projection(j, m);
    require_label(j, a);
    return raw_phase(j, m, a.s(), a.r()) / std::sqrt(static_cast<double>(dim_of(j)));
}

Eigen::MatrixXcd overlap_matrix(HalfInt j, double r) {
    require_j(j);
    const int d = dim_of(j);
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    Eigen::MatrixXcd v(d, d);
    for (int i = 0; i < d; ++i)
        for (int s = 0; s < d; ++s) v(i, s) = norm * raw_phase(j, m_at(j, i), s, r);
    return v;
}

Eigen::VectorXcd to_nonstandard(HalfInt j, double r, const Eigen::VectorXcd& m_components) {
    if (m_components.size() != dim_of(j)) throw std::invalid_argument("to_nonstandard: dimension mismatch");
    return overlap_matrix(j, r).adjoint() * m_components;
}

Eigen::VectorXcd to_standard(HalfInt j, double r, const Eigen::VectorXcd& alpha_components) {
    if (alpha_components.size() != dim_of(j)) throw std::invalid_argument("to_standard: dimension mismatch");
    return overlap_matrix(j, r) * alpha_components;
}

OperatorMatrix to_nonstandard(const OperatorMatrix& op, double r) {
    const HalfInt jr = spin_of_m_basis(op.row_basis());
    const HalfInt jc = spin_of_m_basis(op.col_basis());
    Eigen::MatrixXcd out = overlap_matrix(jr, r).adjoint() * op.entries() * overlap_matrix(jc, r);
    return {std::move(out), alpha_basis(jr, r), alpha_basis(jc, r)};
}

OperatorMatrix to_standard(const OperatorMatrix& op) {
    const auto [jr, rr] = spin_of_alpha_basis(op.row_basis());
    const auto [jc, rc] = spin_of_alpha_basis(op.col_basis());
    if (rr != rc) throw std::invalid_argument("to_standard: bra and ket bases use different r");
    Eigen::MatrixXcd out = overlap_matrix(jr, rr) * op.entries() * overlap_matrix(jc, rc).adjoint();
    return {std::move(out), m_basis(jr), m_basis(jc)};
}

double EigenbasisReport::max() const { return std::max({u_eigen, casimir_eigen, unitarity}); }

EigenbasisReport verify_eigenbasis(HalfInt j, double r) {
    const auto ops = build_spin_ops(j, r);
    const auto v = overlap_matrix(j, r);
    const int d = dim_of(j);
    const double jj1 = j.value() * (j.value() + 1.0);

    EigenbasisReport out;
    for (const auto& a : alpha_labels(j, r)) {
        // exp(-i alpha 2pi/d) with alpha = -jr + s
        const Complex lambda = root_of_unity(-a.s(), d) * unit_phase(j.value() * r / d);
        const Eigen::VectorXcd col = v.col(a.s());
        out.u_eigen = std::max(out.u_eigen, (ops.u_r.entries() * col - lambda * col).cwiseAbs().maxCoeff());
        out.casimir_eigen =
            std::max(out.casimir_eigen, (ops.casimir.entries() * col - jj1 * col).cwiseAbs().maxCoeff());
        out.eigenvalues.push_back(lambda);
    }
    out.unitarity = max_abs(v.adjoint() * v - Eigen::MatrixXcd::Identity(d, d));
    return out;
}

// ---------------------------------------------------------------------------
// Coupling coefficients
// ---------------------------------------------------------------------------

const Eigen::MatrixXd& standard_cg_table(HalfInt j1, HalfInt j2, HalfInt j) {
    require_j(j1);
    require_j(j2);
    require_j(j);
    using Key = std::tuple<int, int, int>;
    static std::shared_mutex mutex;
    static std::map<Key, std::unique_ptr<Eigen::MatrixXd>> cache;

    const Key key{j1.twice(), j2.twice(), j.twice()};
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return *it->second;
    }
    auto table = std::make_unique<Eigen::MatrixXd>(Eigen::MatrixXd::Zero(dim_of(j1), dim_of(j2)));
    if (triangle(j1, j2, j)) {
        for (int i1 = 0; i1 < dim_of(j1); ++i1)
            for (int i2 = 0; i2 < dim_of(j2); ++i2) {
                const HalfInt m1 = m_at(j1, i1), m2 = m_at(j2, i2);
                if (is_projection_of(j, m1 + m2)) (*table)(i1, i2) = cg(j1, j2, m1, m2, j, m1 + m2).to_double();
            }
    }
    std::unique_lock lock(mutex);
    auto [it, inserted] = cache.emplace(key, std::move(table));
    return *it->second;
}

Complex cg_nonstandard(HalfInt j1, HalfInt j2, const AlphaLabel& a1, const AlphaLabel& a2, HalfInt j,
                       const AlphaLabel& a) {
    require_label(j1, a1);
    require_label(j2, a2);
    require_label(j, a);
    require_same_r({&a1, &a2, &a});
    if (!triangle(j1, j2, j)) return {};

    const auto& c = standard_cg_table(j1, j2, j);
    Complex sum{};
    for (int i1 = 0; i1 < dim_of(j1); ++i1) {
        const HalfInt m1 = m_at(j1, i1);
        const Complex w1 = std::conj(overlap(j1, m1, a1));
        for (int i2 = 0; i2 < dim_of(j2); ++i2) {
            const double value = c(i1, i2);
            if (value == 0.0) continue;
            const HalfInt m2 = m_at(j2, i2);
            sum += w1 * std::conj(overlap(j2, m2, a2)) * overlap(j, m1 + m2, a) * value;
        }
    }
    return sum;
}

NonstandardCgBlock::NonstandardCgBlock(HalfInt j1, HalfInt j2, HalfInt j, double r)
    : j1_(j1), j2_(j2), j_(j), r_(r), d1_(dim_of(j1)), d2_(dim_of(j2)), d_(dim_of(j)),
      values_(static_cast<std::size_t>(d1_) * d2_ * d_) {
    if (!triangle(j1, j2, j)) return;
    const auto& c = standard_cg_table(j1, j2, j);
    const Eigen::MatrixXcd v1 = overlap_matrix(j1, r).conjugate();
    const Eigen::MatrixXcd v2 = overlap_matrix(j2, r).conjugate();
    const Eigen::MatrixXcd v = overlap_matrix(j, r);
    for (int i1 = 0; i1 < d1_; ++i1)
        for (int i2 = 0; i2 < d2_; ++i2) {
            const double value = c(i1, i2);
            if (value == 0.0) continue;
            const int i = index_of(j, m_at(j1, i1) + m_at(j2, i2));
            for (int s1 = 0; s1 < d1_; ++s1) {
                const Complex a = value * v1(i1, s1);
                for (int s2 = 0; s2 < d2_; ++s2) {
                    const Complex b = a * v2(i2, s2);
                    Complex* row = &values_[static_cast<std::size_t>((s1 * d2_ + s2) * d_)];
                    for (int s = 0; s < d_; ++s) row[s] += b * v(i, s);
                }
            }
        }
}

double OrthonormalityReport::max() const { return std::max({completeness, orthonormality, outside_triangle}); }

OrthonormalityReport verify_cg_orthonormality(HalfInt j1, HalfInt j2, double r) {
    require_j(j1);
    require_j(j2);
    const int d1 = dim_of(j1), d2 = dim_of(j2);
    const int rows = d1 * d2;

    // Columns: every admissible (j, alpha). Rows: (alpha1, alpha2).
    std::vector<NonstandardCgBlock> blocks;
    OrthonormalityReport out;
    const int top = j1.twice() + j2.twice() + 2;
    int cols = 0;
    for (int tj = 0; tj <= top; ++tj) {
        const HalfInt j = HalfInt::from_twice(tj);
        NonstandardCgBlock block(j1, j2, j, r);
        if (!triangle(j1, j2, j)) {
            for (int s1 = 0; s1 < d1; ++s1)
                for (int s2 = 0; s2 < d2; ++s2)
                    for (int s = 0; s < block.d(); ++s)
                        out.outside_triangle = std::max(out.outside_triangle, std::abs(block(s1, s2, s)));
            continue;
        }
        cols += block.d();
        blocks.push_back(std::move(block));
    }

    Eigen::MatrixXcd w(rows, cols);
    int col = 0;
    for (const auto& block : blocks)
        for (int s = 0; s < block.d(); ++s, ++col)
            for (int s1 = 0; s1 < d1; ++s1)
                for (int s2 = 0; s2 < d2; ++s2) w(s1 * d2 + s2, col) = block(s1, s2, s);

    out.completeness = max_abs(w * w.adjoint() - Eigen::MatrixXcd::Identity(rows, rows));
    out.orthonormality = max_abs(w.adjoint() * w - Eigen::MatrixXcd::Identity(cols, cols));
    return out;
}

double verify_cg_interchange(HalfInt j1, HalfInt j2, double r) {
    double worst = 0.0;
    for (int tj = std::abs(j1.twice() - j2.twice()); tj <= j1.twice() + j2.twice(); tj += 2) {
        const HalfInt j = HalfInt::from_twice(tj);
        const NonstandardCgBlock forward(j1, j2, j, r), swapped(j2, j1, j, r);
        const int sign = phase_sign(j1 + j2 - j);
        for (int s1 = 0; s1 < forward.d1(); ++s1)
            for (int s2 = 0; s2 < forward.d2(); ++s2)
                for (int s = 0; s < forward.d(); ++s)
                    worst = std::max(worst, std::abs(swapped(s2, s1, s) - double(sign) * forward(s1, s2, s)));
    }
    return worst;
}

// ---------------------------------------------------------------------------
// f-bar and f symbols
// ---------------------------------------------------------------------------

namespace {

// f-bar for all step triples of one (j1, j2, j3, r), indexed (s1 * d2 + s2) * d3 + s3.
std::vector<Complex> fbar_table(HalfInt j1, HalfInt j2, HalfInt j3, double r) {
    const int d1 = dim_of(j1), d2 = dim_of(j2), d3 = dim_of(j3);
    std::vector<Complex> out(static_cast<std::size_t>(d1) * d2 * d3);
    if (!triangle(j1, j2, j3)) return out;
    const auto& c = standard_cg_table(j1, j2, j3);
    const Eigen::MatrixXcd v1 = overlap_matrix(j1, r).conjugate();
    const Eigen::MatrixXcd v2 = overlap_matrix(j2, r).conjugate();
    const Eigen::MatrixXcd v3 = overlap_matrix(j3, r).conjugate();
    const double norm3 = 1.0 / std::sqrt(static_cast<double>(d3));
    for (int i1 = 0; i1 < d1; ++i1)
        for (int i2 = 0; i2 < d2; ++i2) {
            if (c(i1, i2) == 0.0) continue;
            const HalfInt m1 = m_at(j1, i1), m2 = m_at(j2, i2);
            // (j1 j2 j3; m1 m2 m3) = (-1)^{j1-j2-m3} (2j3+1)^{-1/2} (j1 j2 m1 m2 | j3 -m3), m3 = -m1-m2
            const double tjm = phase_sign(j1 - j2 + m1 + m2) * norm3 * c(i1, i2);
            const int i3 = index_of(j3, -(m1 + m2));
            for (int s1 = 0; s1 < d1; ++s1)
                for (int s2 = 0; s2 < d2; ++s2) {
                    const Complex w = tjm * v1(i1, s1) * v2(i2, s2);
                    for (int s3 = 0; s3 < d3; ++s3)
                        out[static_cast<std::size_t>((s1 * d2 + s2) * d3 + s3)] += w * v3(i3, s3);
                }
        }
    return out;
}

}  // namespace

Complex fbar(HalfInt j1, HalfInt j2, HalfInt j3, const AlphaLabel& a1, const AlphaLabel& a2,
             const AlphaLabel& a3) {
    require_label(j1, a1);
    require_label(j2, a2);
    require_label(j3, a3);
    require_same_r({&a1, &a2, &a3});
    if (!triangle(j1, j2, j3)) return {};

    const auto& c = standard_cg_table(j1, j2, j3);
    const double norm3 = 1.0 / std::sqrt(static_cast<double>(dim_of(j3)));
    Complex sum{};
    for (int i1 = 0; i1 < dim_of(j1); ++i1) {
        const HalfInt m1 = m_at(j1, i1);
        for (int i2 = 0; i2 < dim_of(j2); ++i2) {
            if (c(i1, i2) == 0.0) continue;
            const HalfInt m2 = m_at(j2, i2);
            const HalfInt m3 = -(m1 + m2);
            const double tjm = phase_sign(j1 - j2 - m3) * norm3 * c(i1, i2);
            sum += std::conj(overlap(j1, m1, a1) * overlap(j2, m2, a2) * overlap(j3, m3, a3)) * tjm;
        }
    }
    return sum;
}

double FbarSymmetryReport::max() const {
    return std::max({even_permutations, odd_permutations, conjugation, realness_parity});
}

FbarSymmetryReport verify_fbar_symmetry(HalfInt j1, HalfInt j2, HalfInt j3, double r) {
    const std::array<HalfInt, 3> js{j1, j2, j3};
    const std::array<int, 3> ds{dim_of(j1), dim_of(j2), dim_of(j3)};
    const auto base = fbar_table(j1, j2, j3, r);
    FbarSymmetryReport out;
    const HalfInt total = j1 + j2 + j3;
    if (!total.is_integer()) {
        for (const auto& v : base) out.conjugation = std::max(out.conjugation, std::abs(v));
        return out;
    }
    const int sign = phase_sign(total);

    for (const auto& v : base) {
        out.conjugation = std::max(out.conjugation, std::abs(std::conj(v) - double(sign) * v));
        out.realness_parity = std::max(out.realness_parity, sign > 0 ? std::abs(v.imag()) : std::abs(v.real()));
    }

    // perm[p] = which original column sits in position p; parity from the cycle type.
    const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}}};
    for (std::size_t p = 1; p < perms.size(); ++p) {
        const auto& perm = perms[p];
        const bool odd = p >= 3;
        const auto permuted = fbar_table(js[perm[0]], js[perm[1]], js[perm[2]], r);
        const int pd1 = ds[perm[1]], pd2 = ds[perm[2]];
        std::array<int, 3> s{};
        for (s[0] = 0; s[0] < ds[0]; ++s[0])
            for (s[1] = 0; s[1] < ds[1]; ++s[1])
                for (s[2] = 0; s[2] < ds[2]; ++s[2]) {
                    const Complex original = base[static_cast<std::size_t>((s[0] * ds[1] + s[1]) * ds[2] + s[2])];
                    const Complex moved =
                        permuted[static_cast<std::size_t>((s[perm[0]] * pd1 + s[perm[1]]) * pd2 + s[perm[2]])];
                    if (odd)
                        out.odd_permutations = std::max(out.odd_permutations, std::abs(moved - double(sign) * original));
                    else
                        out.even_permutations = std::max(out.even_permutations, std::abs(moved - original));
                }
    }
    return out;
}

Complex f_small(HalfInt j1, HalfInt j2, HalfInt j3, const AlphaLabel& a1, const AlphaLabel& a2,
                const AlphaLabel& a3) {
    const double sign = j3.twice() % 2 == 0 ? 1.0 : -1.0;
    return sign / std::sqrt(static_cast<double>(dim_of(j1))) * std::conj(cg_nonstandard(j2, j3, a2, a3, j1, a1));
}

// ---------------------------------------------------------------------------
// Tensor operators
// ---------------------------------------------------------------------------

TensorOperator TensorOperator::make(HalfInt rank, std::vector<OperatorMatrix> components, std::string source_tag) {
    require_j(rank);
    if (static_cast<int>(components.size()) != dim_of(rank))
        throw std::invalid_argument("tensor of rank " + rank.to_string() + " needs " +
                                    std::to_string(dim_of(rank)) + " components");
    for (const auto& c : components) {
        if (c.row_basis() != components.front().row_basis() || c.col_basis() != components.front().col_basis())
            throw std::invalid_argument("tensor components act between different spaces");
    }
    spin_of_m_basis(components.front().row_basis());
    spin_of_m_basis(components.front().col_basis());
    return TensorOperator{rank, std::move(components), std::move(source_tag)};
}

HalfInt TensorOperator::bra_j() const { return spin_of_m_basis(components.front().row_basis()); }
HalfInt TensorOperator::ket_j() const { return spin_of_m_basis(components.front().col_basis()); }

TensorOperator spin_vector_tensor(const SpinOperatorSet& ops) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<OperatorMatrix> comps{Complex(inv_sqrt2) * ops.j_minus, ops.j3, Complex(-inv_sqrt2) * ops.j_plus};
    return TensorOperator::make(HalfInt::integer(1), std::move(comps), "J");
}

TensorOperator couple_tensors(const TensorOperator& a, const TensorOperator& b, HalfInt rank) {
    if (!triangle(a.rank, b.rank, rank))
        throw std::invalid_argument("coupled rank " + rank.to_string() + " not in " + a.rank.to_string() + " x " +
                                    b.rank.to_string());
    std::vector<OperatorMatrix> comps;
    const auto& c = standard_cg_table(a.rank, b.rank, rank);
    for (HalfInt q : m_values(rank)) {
        OperatorMatrix sum = OperatorMatrix::zero(a.components.front().row_basis(), b.components.front().col_basis());
        for (int ia = 0; ia < dim_of(a.rank); ++ia)
            for (int ib = 0; ib < dim_of(b.rank); ++ib) {
                if (m_at(a.rank, ia) + m_at(b.rank, ib) != q || c(ia, ib) == 0.0) continue;
                sum = sum + Complex(c(ia, ib)) * (a.components[ia] * b.components[ib]);
            }
        comps.push_back(std::move(sum));
    }
    return TensorOperator::make(rank, std::move(comps), "[" + a.source_tag + " x " + b.source_tag + "]^" + rank.to_string());
}

TensorOperator unit_tensor(HalfInt j1, HalfInt j2, HalfInt rank) {
    std::vector<OperatorMatrix> comps;
    for (HalfInt q : m_values(rank)) {
        Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim_of(j1), dim_of(j2));
        for (int i1 = 0; i1 < dim_of(j1); ++i1)
            for (int i2 = 0; i2 < dim_of(j2); ++i2) {
                const HalfInt m1 = m_at(j1, i1), m2 = m_at(j2, i2);
                u(i1, i2) = cg(j2, rank, m2, q, j1, m1).to_double();
            }
        comps.emplace_back(std::move(u), m_basis(j1), m_basis(j2));
    }
    return TensorOperator::make(rank, std::move(comps), "unit");
}

TensorOperator scalar_identity(HalfInt j) {
    return TensorOperator::make(HalfInt{}, {OperatorMatrix::identity(m_basis(j))}, "1");
}

std::vector<OperatorMatrix> alpha_components(const TensorOperator& t, double r) {
    std::vector<OperatorMatrix> out;
    const auto qs = m_values(t.rank);
    for (const auto& a : alpha_labels(t.rank, r)) {
        OperatorMatrix sum = OperatorMatrix::zero(t.components.front().row_basis(), t.components.front().col_basis());
        for (std::size_t i = 0; i < qs.size(); ++i) sum = sum + overlap(t.rank, qs[i], a) * t.components[i];
        out.push_back(std::move(sum));
    }
    return out;
}

std::vector<OperatorMatrix> tensor_to_alpha(const TensorOperator& t, double r) {
    auto comps = alpha_components(t, r);
    for (auto& c : comps) c = to_nonstandard(c, r);
    return comps;
}

WignerEckartReport wigner_eckart_check(const TensorOperator& t, HalfInt j1, HalfInt j2, double r) {
    if (t.bra_j() != j1 || t.ket_j() != j2)
        throw std::invalid_argument("tensor does not map the j2 space into the j1 space");
    const HalfInt k = t.rank;
    const auto elements = tensor_to_alpha(t, r);
    const NonstandardCgBlock block(j2, k, j1, r);
    const double prefactor = (k.twice() % 2 == 0 ? 1.0 : -1.0) / std::sqrt(static_cast<double>(dim_of(j1)));
    const int d1 = dim_of(j1), d2 = dim_of(j2), dk = dim_of(k);

    // f_r(j1 j2 k; a1 a2 a) = (-1)^{2k} (2j1+1)^{-1/2} (j2 k a2 a | j1 a1)^*
    auto f_at = [&](int s1, int s2, int s) { return prefactor * std::conj(block(s2, s, s1)); };

    WignerEckartReport out;
    out.selection_allowed = triangle(j2, k, j1);
    Complex num{};
    double den = 0.0;
    for (int s = 0; s < dk; ++s)
        for (int s1 = 0; s1 < d1; ++s1)
            for (int s2 = 0; s2 < d2; ++s2) {
                const Complex f = f_at(s1, s2, s);
                const Complex m = elements[s](s1, s2);
                num += std::conj(f) * m;
                den += std::norm(f);
                out.max_element = std::max(out.max_element, std::abs(m));
            }
    out.reduced_element = den > 0.0 ? num / den : Complex{};
    for (int s = 0; s < dk; ++s)
        for (int s1 = 0; s1 < d1; ++s1)
            for (int s2 = 0; s2 < d2; ++s2)
                out.max_residual = std::max(
                    out.max_residual, std::abs(elements[s](s1, s2) - out.reduced_element * f_at(s1, s2, s)));
    return out;
}

// ---------------------------------------------------------------------------
// Recoupling
// ---------------------------------------------------------------------------

RecouplingReport recoupling_invariance_check(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j12, HalfInt j23,
                                             HalfInt j, double r) {
    for (HalfInt x : {j1, j2, j3, j12, j23, j}) require_j(x);
    RecouplingReport out;
    out.sixj_exact = sixj(j1, j2, j12, j3, j, j23).to_double();

    const NonstandardCgBlock b12(j1, j2, j12, r), b12_3(j12, j3, j, r);
    const NonstandardCgBlock b23(j2, j3, j23, r), b1_23(j1, j23, j, r);
    const int d1 = dim_of(j1), d2 = dim_of(j2), d3 = dim_of(j3);
    const int d12 = dim_of(j12), d23 = dim_of(j23), d = dim_of(j);

    const HalfInt phase_exp = j1 + j2 + j3 + j;
    const double factor = phase_exp.is_integer()
                              ? phase_sign(phase_exp) / std::sqrt(static_cast<double>(d12) * d23)
                              : 0.0;
    for (int s = 0; s < d; ++s) {
        Complex overlap_sum{};
        for (int s1 = 0; s1 < d1; ++s1)
            for (int s2 = 0; s2 < d2; ++s2)
                for (int s3 = 0; s3 < d3; ++s3) {
                    // <alpha1 alpha2 alpha3 | (j1 j2) j12, j3; j alpha>
                    Complex left{};
                    for (int s12 = 0; s12 < d12; ++s12) left += b12(s1, s2, s12) * b12_3(s12, s3, s);
                    if (left == Complex{}) continue;
                    Complex right{};
                    for (int s23 = 0; s23 < d23; ++s23) right += b23(s2, s3, s23) * b1_23(s1, s23, s);
                    overlap_sum += std::conj(left) * right;
                }
        const Complex value = factor * overlap_sum;
        const double dev = phase_exp.is_integer() ? std::abs(value - out.sixj_exact) : std::abs(overlap_sum);
        if (s == 0 || dev > out.deviation) {
            out.deviation = std::max(out.deviation, dev);
            out.sixj_nonstandard = value;
        }
    }
    return out;
}

}  // namespace polarsu2
