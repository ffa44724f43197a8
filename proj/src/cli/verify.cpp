// Copyright 2026 The polarsu2 Authors
// SPDX-License-Identifier: Apache-2.0

#include "polarsu2/verify.hpp"

#include "polarsu2/nonstandard.hpp"
#include "polarsu2/quon.hpp"
#include "polarsu2/standard_wra.hpp"
#include "polarsu2/su2gen.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <random>
#include <thread>
#include <tuple>

namespace polarsu2::verify {

namespace {

using Clock = std::chrono::steady_clock;

double tol_or(const Options& o, double fallback) { return o.tol ? *o.tol : fallback; }

/// Accumulates the worst residual of one named check over a sweep.
class Worst {
public:
    Worst(std::string name, double tolerance, nlohmann::json parameters, bool exact = false)
        : start_(Clock::now()) {
        rec_.name = std::move(name);
        rec_.tolerance = exact ? 0.0 : tolerance;
        rec_.exact = exact;
        rec_.parameters = std::move(parameters);
    }
    void add(double residual, const nlohmann::json& where) {
        if (!std::isfinite(residual)) residual = std::numeric_limits<double>::infinity();
        if (first_ || residual > rec_.residual) {
            rec_.residual = residual;
            rec_.parameters["worst_case"] = where;
            first_ = false;
        }
    }
    /// Exact checks count violations instead.
    void count(bool violated, const nlohmann::json& where) {
        if (violated) {
            if (rec_.residual == 0.0) rec_.parameters["first_violation"] = where;
            rec_.residual += 1.0;
        }
    }
    [[nodiscard]] CheckRecord done() {
        rec_.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
        return rec_;
    }

private:
    CheckRecord rec_;
    bool first_ = true;
    Clock::time_point start_;
};

nlohmann::json hj(HalfInt h) { return h.to_string(); }

std::vector<HalfInt> spins(HalfInt max) { return j_values_up_to(max); }

nlohmann::json range_j(HalfInt max) { return nlohmann::json{{"j_min", "0"}, {"j_max", max.to_string()}}; }

}  // namespace

// ---------------------------------------------------------------------------
// quon
// ---------------------------------------------------------------------------

std::vector<CheckRecord> quon_suite(const Options& o) {
    const nlohmann::json krange{{"k_min", 2}, {"k_max", o.k_max}};
    Worst relations("quon.defining_relations", tol_or(o, 1e-12), krange);
    Worst nilpotent("quon.nilpotency", 0.0, krange, true);
    Worst consequences("quon.consequence_relations", 0.0, krange, true);
    for (int k = 2; k <= o.k_max; ++k) {
        const auto rep = build_rep(k);
        const auto report = verify_quon_relations(rep);
        relations.add(std::max({report.a_deformed_commutator, report.b_deformed_commutator,
                                report.a_number_relations, report.b_number_relations, report.ab_commute}),
                      {{"k", k}});
        nilpotent.count(report.nilpotency != 0.0, {{"k", k}});
        consequences.count(report.consequence_relations != 0.0, {{"k", k}});
    }
    std::vector<CheckRecord> out{relations.done(), nilpotent.done(), consequences.done()};

    for (double r : o.r_values) {
        nlohmann::json p = krange;
        p["r"] = r;
        Worst unitary("quon.ur_unitarity", tol_or(o, 1e-12), p);
        Worst cyclic("quon.ur_cyclicity", tol_or(o, 1e-10), p);
        Worst action("quon.ur_action", tol_or(o, 1e-12), p);
        Worst herm("quon.h_hermitean", 0.0, p, true);
        for (int k = 2; k <= o.k_max; ++k) {
            const auto rep = build_rep(k);
            const auto rep_ur = verify_ur(rep, phi_of(HalfInt::from_twice(k - 1), r));
            unitary.add(rep_ur.unitarity, {{"k", k}});
            cyclic.add(rep_ur.cyclicity, {{"k", k}});
            action.add(rep_ur.action, {{"k", k}});
            herm.count(rep_ur.h_hermitean != 0.0, {{"k", k}});
        }
        Worst restriction("su2gen.quon_restriction", tol_or(o, 1e-12),
                          {{"k_min", 2}, {"k_max", std::min(o.k_max, 10)}, {"r", r}});
        for (int k = 2; k <= std::min(o.k_max, 10); ++k) restriction.add(quon_restriction_residual(k, r), {{"k", k}});
        for (auto* w : {&unitary, &cyclic, &action, &herm, &restriction}) out.push_back(w->done());
    }
    return out;
}

std::vector<CheckRecord> w_infinity_suite(const Options& o) {
    std::vector<CheckRecord> out;
    for (double r : o.r_values) {
        Worst w("quon.w_infinity_commutators", tol_or(o, 1e-10),
                {{"k_min", 2}, {"k_max", o.w_k_max}, {"index_range", "[0,k-1]"}, {"r", r}});
        for (int k = 2; k <= o.w_k_max; ++k) {
            const auto rep = build_rep(k);
            w.add(w_commutator_sweep(rep, phi_of(HalfInt::from_twice(k - 1), r)), {{"k", k}});
        }
        out.push_back(w.done());
    }
    return out;
}

// ---------------------------------------------------------------------------
// su2gen
// ---------------------------------------------------------------------------

namespace {

// Multiset distance between two spectra, matched greedily.
double spectrum_distance(std::vector<Complex> a, std::vector<Complex> b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (const auto& x : a) {
        auto best = std::min_element(b.begin(), b.end(),
                                     [&](const Complex& p, const Complex& q) { return std::abs(p - x) < std::abs(q - x); });
        worst = std::max(worst, std::abs(*best - x));
        b.erase(best);
    }
    return worst;
}

}  // namespace

std::vector<CheckRecord> su2_suite(const Options& o) {
    std::vector<CheckRecord> out;
    for (double r : o.r_values) {
        nlohmann::json p = range_j(o.spin_max);
        p["r"] = r;
        Worst comm("su2gen.commutators", tol_or(o, 1e-11), p);
        Worst closed("su2gen.closed_form_actions", tol_or(o, 1e-12), p);
        Worst adjoint("su2gen.polar_decomposition", tol_or(o, 1e-12), p);
        Worst casimir("su2gen.casimir_identities", tol_or(o, 1e-11), p);
        Worst cyclic("su2gen.ur_cyclicity", tol_or(o, 1e-10), p);
        Worst unitary("su2gen.ur_unitarity", tol_or(o, 1e-12), p);
        Worst spectrum("su2gen.ur_spectrum", tol_or(o, 1e-10), p);
        for (HalfInt j : spins(o.spin_max)) {
            const auto ops = build_spin_ops(j, r);
            const auto su2 = verify_su2(ops);
            const nlohmann::json where{{"j", hj(j)}};
            comm.add(std::max({su2.j3_jplus, su2.j3_jminus, su2.jplus_jminus}), where);
            closed.add(std::max({su2.jplus_closed_form, su2.jminus_closed_form, su2.j3_diagonal}), where);
            adjoint.add(std::max(su2.jminus_adjoint, su2.polar_factors), where);
            casimir.add(casimir_identities(ops).max(), where);
            const auto cyc = verify_spin_cyclic(ops);
            cyclic.add(cyc.cyclicity, where);
            unitary.add(std::max(cyc.unitarity, cyc.h_hermitean), where);

            Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(ops.u_r.entries(), false);
            std::vector<Complex> numeric(solver.eigenvalues().data(),
                                         solver.eigenvalues().data() + solver.eigenvalues().size());
            spectrum.add(spectrum_distance(numeric, verify_eigenbasis(j, r).eigenvalues), where);
        }
        for (auto* w : {&comm, &closed, &adjoint, &casimir, &cyclic, &unitary, &spectrum}) out.push_back(w->done());
    }
    return out;
}

// ---------------------------------------------------------------------------
// nonstandard
// ---------------------------------------------------------------------------

std::vector<CheckRecord> eigenbasis_suite(const Options& o) {
    std::vector<CheckRecord> out;
    for (double r : o.r_values) {
        nlohmann::json p = range_j(o.spin_max);
        p["r"] = r;
        Worst eigen("nonstandard.eigenbasis", tol_or(o, 1e-10), p);
        Worst unitary("nonstandard.overlap_unitarity", tol_or(o, 1e-12), p);
        Worst roundtrip("nonstandard.basis_roundtrip", tol_or(o, 1e-12), p);
        for (HalfInt j : spins(o.spin_max)) {
            const auto report = verify_eigenbasis(j, r);
            eigen.add(std::max(report.u_eigen, report.casimir_eigen), {{"j", hj(j)}});
            unitary.add(report.unitarity, {{"j", hj(j)}});
            const auto ops = build_spin_ops(j, r);
            roundtrip.add(max_residual(to_standard(to_nonstandard(ops.j3, r)), ops.j3), {{"j", hj(j)}});
        }
        for (auto* w : {&eigen, &unitary, &roundtrip}) out.push_back(w->done());
    }
    return out;
}

std::vector<CheckRecord> coupling_suite(const Options& o) {
    std::vector<CheckRecord> out;
    for (double r : o.r_values) {
        nlohmann::json p = range_j(o.j_max);
        p["r"] = r;
        Worst ortho("nonstandard.cg_orthonormality", tol_or(o, 1e-10), p);
        Worst swap("nonstandard.cg_interchange_symmetry", tol_or(o, 1e-10), p);
        for (HalfInt j1 : spins(o.j_max))
            for (HalfInt j2 : spins(o.j_max)) {
                const nlohmann::json where{{"j1", hj(j1)}, {"j2", hj(j2)}};
                ortho.add(verify_cg_orthonormality(j1, j2, r).max(), where);
                swap.add(verify_cg_interchange(j1, j2, r), where);
            }
        out.push_back(ortho.done());
        out.push_back(swap.done());
    }
    return out;
}

std::vector<CheckRecord> random_coupling_suite(const Options& o) {
    std::vector<CheckRecord> out;
    std::mt19937_64 rng(o.seed);
    const int top = o.random_j_max.twice();
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

    for (double r : o.r_values) {
        Worst w("nonstandard.cg_orthonormality_random", tol_or(o, 1e-10),
                {{"j_max", o.random_j_max.to_string()}, {"samples", o.samples}, {"seed", o.seed}, {"r", r}});
        for (int n = 0; n < o.samples; ++n) {
            const HalfInt j1 = HalfInt::from_twice(uniform(0, top));
            const HalfInt j2 = HalfInt::from_twice(uniform(0, top));
            const int d1 = j1.twice() + 1, d2 = j2.twice() + 1;
            std::map<int, NonstandardCgBlock> blocks;
            auto block = [&](int tj) -> const NonstandardCgBlock& {
                auto it = blocks.find(tj);
                if (it == blocks.end()) it = blocks.emplace(tj, NonstandardCgBlock(j1, j2, HalfInt::from_twice(tj), r)).first;
                return it->second;
            };

            // First relation at random (a1, a2), (a1', a2').
            const int s1 = uniform(0, d1 - 1), s2 = uniform(0, d2 - 1);
            const int t1 = uniform(0, d1 - 1), t2 = uniform(0, d2 - 1);
            Complex sum1{};
            for (int tj = std::abs(j1.twice() - j2.twice()); tj <= j1.twice() + j2.twice(); tj += 2)
                for (int s = 0; s <= tj; ++s) sum1 += block(tj)(s1, s2, s) * std::conj(block(tj)(t1, t2, s));
            const double expect1 = (s1 == t1 && s2 == t2) ? 1.0 : 0.0;

            // Second relation at random (j, a), (j', a'), j of either parity up to j1+j2+1.
            const int tj = uniform(0, j1.twice() + j2.twice() + 2);
            const int tjp = uniform(0, 1) == 0 ? tj : uniform(0, j1.twice() + j2.twice() + 2);
            const int sa = uniform(0, tj), sb = uniform(0, tjp);
            Complex sum2{};
            for (int a1 = 0; a1 < d1; ++a1)
                for (int a2 = 0; a2 < d2; ++a2) sum2 += std::conj(block(tj)(a1, a2, sa)) * block(tjp)(a1, a2, sb);
            const bool delta = triangle(j1, j2, HalfInt::from_twice(tj)) && tj == tjp && sa == sb;

            w.add(std::max(std::abs(sum1 - expect1), std::abs(sum2 - (delta ? 1.0 : 0.0))),
                  {{"sample", n}, {"j1", hj(j1)}, {"j2", hj(j2)}});
        }
        out.push_back(w.done());
    }
    return out;
}

std::vector<CheckRecord> fbar_suite(const Options& o) {
    std::vector<CheckRecord> out;
    const int sum_max = 3 * o.j_max.twice();
    for (double r : o.r_values) {
        const nlohmann::json p{{"j_sum_max", HalfInt::from_twice(sum_max).to_string()}, {"r", r}};
        Worst perm("nonstandard.fbar_permutation_symmetry", tol_or(o, 1e-10), p);
        Worst conj("nonstandard.fbar_conjugation", tol_or(o, 1e-10), p);
        for (int t1 = 0; t1 <= sum_max; ++t1)
            for (int t2 = 0; t1 + t2 <= sum_max; ++t2)
                for (int t3 = 0; t1 + t2 + t3 <= sum_max; ++t3) {
                    const HalfInt j1 = HalfInt::from_twice(t1), j2 = HalfInt::from_twice(t2), j3 = HalfInt::from_twice(t3);
                    if (!triangle(j1, j2, j3)) continue;
                    const auto rep = verify_fbar_symmetry(j1, j2, j3, r);
                    const nlohmann::json where{{"j1", hj(j1)}, {"j2", hj(j2)}, {"j3", hj(j3)}};
                    perm.add(std::max(rep.even_permutations, rep.odd_permutations), where);
                    conj.add(std::max(rep.conjugation, rep.realness_parity), where);
                }
        out.push_back(perm.done());
        out.push_back(conj.done());
    }
    return out;
}

std::vector<CheckRecord> recoupling_suite(const Options& o) {
    std::vector<CheckRecord> out;
    const auto js = spins(o.j_max);
    using Key = std::array<int, 6>;
    std::map<Key, Complex> first_r;
    Worst across("nonstandard.recoupling_r_independence", tol_or(o, 1e-9), {{"j_max", o.j_max.to_string()}});
    for (double r : o.r_values) {
        Worst w("nonstandard.recoupling_invariance", tol_or(o, 1e-9), {{"j_max", o.j_max.to_string()}, {"r", r}});
        for (HalfInt j1 : js)
            for (HalfInt j2 : js)
                for (HalfInt j3 : js)
                    for (HalfInt j12 : js) {
                        if (!triangle(j1, j2, j12)) continue;
                        for (HalfInt j23 : js) {
                            if (!triangle(j2, j3, j23)) continue;
                            for (HalfInt j : js) {
                                if (!triangle(j12, j3, j) || !triangle(j1, j23, j)) continue;
                                const auto rep = recoupling_invariance_check(j1, j2, j3, j12, j23, j, r);
                                const nlohmann::json where{{"j1", hj(j1)}, {"j2", hj(j2)}, {"j3", hj(j3)},
                                                           {"j12", hj(j12)}, {"j23", hj(j23)}, {"j", hj(j)}};
                                w.add(rep.deviation, where);
                                const Key key{j1.twice(), j2.twice(), j3.twice(), j12.twice(), j23.twice(), j.twice()};
                                if (auto it = first_r.find(key); it == first_r.end())
                                    first_r.emplace(key, rep.sixj_nonstandard);
                                else
                                    across.add(std::abs(it->second - rep.sixj_nonstandard), where);
                            }
                        }
                    }
        out.push_back(w.done());
    }
    if (o.r_values.size() > 1) out.push_back(across.done());
    return out;
}

std::vector<CheckRecord> wigner_eckart_suite(const Options& o) {
    const HalfInt jmax = HalfInt::from_twice(2 * o.j_max.twice());
    std::vector<CheckRecord> out;
    Worst w("nonstandard.wigner_eckart_proportionality", tol_or(o, 1e-9),
            {{"j_max", jmax.to_string()}, {"tensors", {"J (rank 1)", "[J x J]^2", "identity", "unit tensors"}}});
    Worst ind("nonstandard.wigner_eckart_r_independence", tol_or(o, 1e-9), {{"j_max", jmax.to_string()}});
    for (HalfInt j : spins(jmax)) {
        std::optional<Complex> r1_ref, r2_ref, r0_ref;
        for (double r : o.r_values) {
            const auto ops = build_spin_ops(j, r);
            const auto t1 = spin_vector_tensor(ops);
            const auto t2 = couple_tensors(t1, t1, HalfInt::integer(2));
            const auto t0 = scalar_identity(j);
            const nlohmann::json where{{"j", hj(j)}, {"r", r}};
            const auto w1 = wigner_eckart_check(t1, j, j, r);
            const auto w2 = wigner_eckart_check(t2, j, j, r);
            const auto w0 = wigner_eckart_check(t0, j, j, r);
            w.add(std::max({w1.max_residual, w2.max_residual, w0.max_residual}), where);
            if (!r1_ref) {
                r1_ref = w1.reduced_element;
                r2_ref = w2.reduced_element;
                r0_ref = w0.reduced_element;
            } else {
                ind.add(std::max({std::abs(*r1_ref - w1.reduced_element), std::abs(*r2_ref - w2.reduced_element),
                                  std::abs(*r0_ref - w0.reduced_element)}),
                        where);
            }
        }
    }
    // Operators between different spaces, including forbidden couplings.
    for (HalfInt j1 : spins(o.j_max))
        for (HalfInt j2 : spins(o.j_max))
            for (HalfInt k : spins(o.j_max))
                for (double r : o.r_values) {
                    const auto t = unit_tensor(j1, j2, k);
                    w.add(wigner_eckart_check(t, j1, j2, r).max_residual,
                          {{"j1", hj(j1)}, {"j2", hj(j2)}, {"k", hj(k)}, {"r", r}});
                }
    out.push_back(w.done());
    if (o.r_values.size() > 1) out.push_back(ind.done());
    return out;
}

// ---------------------------------------------------------------------------
// standard (exact)
// ---------------------------------------------------------------------------

std::vector<CheckRecord> standard_suite(const Options& o) {
    const HalfInt jmax = HalfInt::from_twice(std::min(o.j_max.twice() + 1, 4));
    const auto js = spins(jmax);
    const nlohmann::json p = range_j(jmax);
    std::vector<CheckRecord> out;

    {
        Worst w("standard.cg_orthogonality_exact", 0.0, p, true);
        for (HalfInt j1 : js)
            for (HalfInt j2 : js)
                for (int tj = 0; tj <= j1.twice() + j2.twice() + 1; ++tj)
                    for (int tjp = tj % 2; tjp <= j1.twice() + j2.twice() + 1; tjp += 2) {
                        const HalfInt j = HalfInt::from_twice(tj), jp = HalfInt::from_twice(tjp);
                        for (HalfInt m : m_values(j))
                            for (HalfInt mp : m_values(jp)) {
                                ExactSqrtRational sum;
                                for (HalfInt m1 : m_values(j1))
                                    for (HalfInt m2 : m_values(j2))
                                        sum += cg(j1, j2, m1, m2, j, m) * cg(j1, j2, m1, m2, jp, mp);
                                const bool expect = j == jp && m == mp && triangle(j1, j2, j);
                                const auto target = expect ? ExactSqrtRational::from_rational(1) : ExactSqrtRational{};
                                w.count(!(sum == target), {{"j1", hj(j1)}, {"j2", hj(j2)}, {"j", hj(j)}, {"jp", hj(jp)}});
                            }
                    }
        out.push_back(w.done());
    }
    {
        Worst w("standard.threejm_symmetry_exact", 0.0, p, true);
        for (HalfInt j1 : js)
            for (HalfInt j2 : js)
                for (HalfInt j3 : js) {
                    if (!triangle(j1, j2, j3)) continue;
                    const int sign = phase_sign(j1 + j2 + j3);
                    for (HalfInt m1 : m_values(j1))
                        for (HalfInt m2 : m_values(j2)) {
                            const HalfInt m3 = -(m1 + m2);
                            if (!is_projection_of(j3, m3)) continue;
                            const auto v = threejm(j1, j2, j3, m1, m2, m3);
                            const auto odd = sign > 0 ? v : -v;
                            const nlohmann::json where{{"j", {hj(j1), hj(j2), hj(j3)}}, {"m", {hj(m1), hj(m2), hj(m3)}}};
                            w.count(!(threejm(j2, j3, j1, m2, m3, m1) == v), where);
                            w.count(!(threejm(j3, j1, j2, m3, m1, m2) == v), where);
                            w.count(!(threejm(j2, j1, j3, m2, m1, m3) == odd), where);
                            w.count(!(threejm(j1, j3, j2, m1, m3, m2) == odd), where);
                            w.count(!(threejm(j3, j2, j1, m3, m2, m1) == odd), where);
                            w.count(!(threejm(j1, j2, j3, -m1, -m2, -m3) == odd), where);
                        }
                }
        out.push_back(w.done());
    }
    {
        Worst w("standard.sixj_symmetry_exact", 0.0, p, true);
        for (HalfInt a : js)
            for (HalfInt b : js)
                for (HalfInt c : js)
                    for (HalfInt d : js)
                        for (HalfInt e : js)
                            for (HalfInt f : js) {
                                const auto v = sixj(a, b, c, d, e, f);
                                const nlohmann::json where{{"args", {hj(a), hj(b), hj(c), hj(d), hj(e), hj(f)}}};
                                // column permutations
                                w.count(!(sixj(b, a, c, e, d, f) == v), where);
                                w.count(!(sixj(a, c, b, d, f, e) == v), where);
                                w.count(!(sixj(c, b, a, f, e, d) == v), where);
                                w.count(!(sixj(b, c, a, e, f, d) == v), where);
                                // upper/lower exchange in two columns
                                w.count(!(sixj(d, e, c, a, b, f) == v), where);
                                w.count(!(sixj(a, e, f, d, b, c) == v), where);
                                w.count(!(sixj(d, b, f, a, e, c) == v), where);
                            }
        out.push_back(w.done());
    }
    {
        Worst w("standard.sixj_racah_vs_cg_contraction_exact", 0.0, p, true);
        for (HalfInt j1 : js)
            for (HalfInt j2 : js)
                for (HalfInt j3 : js)
                    for (HalfInt j12 : js)
                        for (HalfInt j23 : js)
                            for (HalfInt j : js) {
                                if (!triangle(j1, j2, j12) || !triangle(j12, j3, j) || !triangle(j2, j3, j23) ||
                                    !triangle(j1, j23, j))
                                    continue;
                                // <(j1 j2) j12, j3; j m | j1, (j2 j3) j23; j m> at m = j
                                ExactSqrtRational sum;
                                for (HalfInt m1 : m_values(j1))
                                    for (HalfInt m2 : m_values(j2)) {
                                        const HalfInt m3 = j - m1 - m2;
                                        if (!is_projection_of(j3, m3) || !is_projection_of(j12, m1 + m2) ||
                                            !is_projection_of(j23, m2 + m3))
                                            continue;
                                        sum += cg(j1, j2, m1, m2, j12, m1 + m2) * cg(j12, j3, m1 + m2, m3, j, j) *
                                               cg(j2, j3, m2, m3, j23, m2 + m3) * cg(j1, j23, m1, m2 + m3, j, j);
                                    }
                                const auto six = sixj(j1, j2, j12, j3, j, j23);
                                const auto norm = ExactSqrtRational::signed_sqrt(
                                    phase_sign(j1 + j2 + j3 + j), BigRational((j12.twice() + 1) * (j23.twice() + 1)));
                                w.count(!(sum == norm * six),
                                        {{"args", {hj(j1), hj(j2), hj(j3), hj(j12), hj(j23), hj(j)}}});
                            }
        out.push_back(w.done());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Driver
// ---------------------------------------------------------------------------

std::vector<NamedSuite> all_suites() {
    return {{"quon", quon_suite},
            {"w_infinity", w_infinity_suite},
            {"su2gen", su2_suite},
            {"eigenbasis", eigenbasis_suite},
            {"coupling", coupling_suite},
            {"coupling_random", random_coupling_suite},
            {"fbar", fbar_suite},
            {"recoupling", recoupling_suite},
            {"wigner_eckart", wigner_eckart_suite},
            {"standard", standard_suite}};
}

std::vector<CheckRecord> run_all(const Options& options) {
    const auto suites = all_suites();
    std::vector<std::vector<CheckRecord>> results(suites.size());
    std::vector<std::exception_ptr> errors(suites.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < suites.size(); i = next++) {
            try {
                results[i] = suites[i].run(options);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const int n = std::max(1, std::min<int>(options.threads, static_cast<int>(suites.size())));
    {
        std::vector<std::jthread> pool;
        for (int t = 1; t < n; ++t) pool.emplace_back(worker);
        worker();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<CheckRecord> out;
    for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
    return out;
}

nlohmann::json to_json(const CheckRecord& record) {
    return {{"name", record.name},
            {"parameters", record.parameters},
            {"residual", record.residual},
            {"tolerance", record.tolerance},
            {"exact", record.exact},
            {"pass", record.pass()},
            {"seconds", record.seconds}};
}

nlohmann::json report_json(const Options& options, const std::vector<CheckRecord>& records) {
    nlohmann::json checks = nlohmann::json::array();
    bool all = true;
    for (const auto& r : records) {
        checks.push_back(to_json(r));
        all = all && r.pass();
    }
    nlohmann::json config{{"j_max", options.j_max.to_string()},
                          {"spin_max", options.spin_max.to_string()},
                          {"random_j_max", options.random_j_max.to_string()},
                          {"r", options.r_values},
                          {"k_max", options.k_max},
                          {"w_k_max", options.w_k_max},
                          {"samples", options.samples}};
    if (options.tol) config["tol"] = *options.tol;
    return {{"seed", options.seed}, {"config", config}, {"checks", checks}, {"all_pass", all}};
}

}  // namespace polarsu2::verify
