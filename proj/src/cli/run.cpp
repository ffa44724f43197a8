// Copyright 2026 The polarsu2 Authors
// SPDX-License-Identifier: Apache-2.0

#include "polarsu2/cli.hpp"

#include "output.hpp"
#include "polarsu2/nonstandard.hpp"
#include "polarsu2/quon.hpp"
#include "polarsu2/standard_wra.hpp"
#include "polarsu2/su2gen.hpp"
#include "polarsu2/verify.hpp"

#include <algorithm>
#include <ostream>

namespace polarsu2::cli {

namespace {

std::vector<RValue> r_values_or(const JobConfig& cfg, std::vector<RValue> fallback) {
    auto values = cfg.r_values.empty() ? std::move(fallback) : cfg.r_values;
    std::stable_sort(values.begin(), values.end(), [](const RValue& a, const RValue& b) { return a.value < b.value; });
    return values;
}

HalfInt need(const std::optional<HalfInt>& v, const char* flag, const JobConfig& cfg) {
    if (!v) throw UsageError(command_name(cfg.command) + " requires " + flag);
    return *v;
}

std::string render(const Table& table, const JobConfig& cfg, nlohmann::json meta) {
    if (cfg.format == Format::Csv) return table_csv(table);
    meta["table"] = table_json(table);
    return meta.dump(2) + "\n";
}

// j values coupling j1 and j2, optionally restricted to one.
std::vector<HalfInt> coupled_js(HalfInt j1, HalfInt j2, const std::optional<HalfInt>& only) {
    std::vector<HalfInt> out;
    for (int t = std::abs(j1.twice() - j2.twice()); t <= j1.twice() + j2.twice(); t += 2)
        if (!only || only->twice() == t) out.push_back(HalfInt::from_twice(t));
    return out;
}

int tabulate_cg(const JobConfig& cfg, std::ostream& out) {
    const HalfInt j1 = need(cfg.j1, "--j1", cfg), j2 = need(cfg.j2, "--j2", cfg);
    Table t{{{"r", ColumnKind::Label},
             {"j1", ColumnKind::Label},
             {"j2", ColumnKind::Label},
             {"j", ColumnKind::Label},
             {"s1", ColumnKind::Label},
             {"s2", ColumnKind::Label},
             {"s", ColumnKind::Label},
             {"alpha1", ColumnKind::Label},
             {"alpha2", ColumnKind::Label},
             {"alpha", ColumnKind::Label},
             {"value", ColumnKind::Complex}},
            {}};
    for (const auto& r : r_values_or(cfg, {parse_r("0")}))
        for (HalfInt j : coupled_js(j1, j2, cfg.j)) {
            const NonstandardCgBlock block(j1, j2, j, r.value);
            for (int s1 = 0; s1 < block.d1(); ++s1)
                for (int s2 = 0; s2 < block.d2(); ++s2)
                    for (int s = 0; s < block.d(); ++s)
                        t.rows.push_back({r.text, j1.to_string(), j2.to_string(), j.to_string(), s1, s2, s,
                                          alpha_text(j1, r, s1), alpha_text(j2, r, s2), alpha_text(j, r, s),
                                          complex_json(block(s1, s2, s))});
        }
    write_output(cfg.output, render(t, cfg, {{"symbol", "cg_nonstandard"}}), out);
    return 0;
}

int tabulate_fbar(const JobConfig& cfg, std::ostream& out) {
    std::vector<std::array<HalfInt, 3>> triples;
    if (cfg.j1 || cfg.j2 || cfg.j3) {
        const std::array<HalfInt, 3> tr{need(cfg.j1, "--j1", cfg), need(cfg.j2, "--j2", cfg), need(cfg.j3, "--j3", cfg)};
        if (triangle(tr[0], tr[1], tr[2])) triples.push_back(tr);
    } else {
        for (HalfInt a : j_values_up_to(cfg.j_max))
            for (HalfInt b : j_values_up_to(cfg.j_max))
                for (HalfInt c : j_values_up_to(cfg.j_max))
                    if (triangle(a, b, c)) triples.push_back({a, b, c});
    }
    Table t{{{"r", ColumnKind::Label},
             {"j1", ColumnKind::Label},
             {"j2", ColumnKind::Label},
             {"j3", ColumnKind::Label},
             {"s1", ColumnKind::Label},
             {"s2", ColumnKind::Label},
             {"s3", ColumnKind::Label},
             {"alpha1", ColumnKind::Label},
             {"alpha2", ColumnKind::Label},
             {"alpha3", ColumnKind::Label},
             {"value", ColumnKind::Complex}},
            {}};
    for (const auto& r : r_values_or(cfg, {parse_r("0")}))
        for (const auto& [a, b, c] : triples) {
            const auto la = alpha_labels(a, r.value), lb = alpha_labels(b, r.value), lc = alpha_labels(c, r.value);
            for (const auto& x : la)
                for (const auto& y : lb)
                    for (const auto& z : lc)
                        t.rows.push_back({r.text, a.to_string(), b.to_string(), c.to_string(), x.s(), y.s(), z.s(),
                                          alpha_text(a, r, x.s()), alpha_text(b, r, y.s()), alpha_text(c, r, z.s()),
                                          complex_json(fbar(a, b, c, x, y, z))});
        }
    write_output(cfg.output, render(t, cfg, {{"symbol", "fbar"}}), out);
    return 0;
}

int tabulate_standard(const JobConfig& cfg, std::ostream& out) {
    Table t;
    auto add_value_columns = [&] {
        t.columns.push_back({"exact", ColumnKind::Text});
        t.columns.push_back({"value", ColumnKind::Real});
    };
    auto push = [&](std::vector<nlohmann::json> labels, const ExactSqrtRational& v) {
        labels.push_back(v.to_string());
        labels.push_back(v.to_double());
        t.rows.push_back(std::move(labels));
    };
    const auto js = j_values_up_to(cfg.j_max);

    if (cfg.symbol == "cg") {
        const HalfInt j1 = need(cfg.j1, "--j1", cfg), j2 = need(cfg.j2, "--j2", cfg);
        for (const char* n : {"j1", "j2", "j", "m1", "m2", "m"}) t.columns.push_back({n, ColumnKind::Label});
        add_value_columns();
        for (HalfInt j : coupled_js(j1, j2, cfg.j))
            for (HalfInt m1 : m_values(j1))
                for (HalfInt m2 : m_values(j2)) {
                    const HalfInt m = m1 + m2;
                    if (!is_projection_of(j, m)) continue;
                    push({j1.to_string(), j2.to_string(), j.to_string(), m1.to_string(), m2.to_string(), m.to_string()},
                         cg(j1, j2, m1, m2, j, m));
                }
    } else if (cfg.symbol == "3jm") {
        const HalfInt j1 = need(cfg.j1, "--j1", cfg), j2 = need(cfg.j2, "--j2", cfg), j3 = need(cfg.j3, "--j3", cfg);
        for (const char* n : {"j1", "j2", "j3", "m1", "m2", "m3"}) t.columns.push_back({n, ColumnKind::Label});
        add_value_columns();
        if (triangle(j1, j2, j3))
            for (HalfInt m1 : m_values(j1))
                for (HalfInt m2 : m_values(j2)) {
                    const HalfInt m3 = -(m1 + m2);
                    if (!is_projection_of(j3, m3)) continue;
                    push({j1.to_string(), j2.to_string(), j3.to_string(), m1.to_string(), m2.to_string(), m3.to_string()},
                         threejm(j1, j2, j3, m1, m2, m3));
                }
    } else if (cfg.symbol == "6j") {
        for (const char* n : {"j1", "j2", "j3", "j4", "j5", "j6"}) t.columns.push_back({n, ColumnKind::Label});
        add_value_columns();
        for (HalfInt a : js)
            for (HalfInt b : js)
                for (HalfInt c : js) {
                    if (!triangle(a, b, c)) continue;
                    for (HalfInt d : js)
                        for (HalfInt e : js) {
                            if (!triangle(d, e, c)) continue;
                            for (HalfInt f : js)
                                if (triangle(a, e, f) && triangle(d, b, f))
                                    push({a.to_string(), b.to_string(), c.to_string(), d.to_string(), e.to_string(),
                                          f.to_string()},
                                         sixj(a, b, c, d, e, f));
                        }
                }
    } else {
        for (const char* n : {"j1", "j2", "j3", "j4", "j5", "j6", "j7", "j8", "j9"})
            t.columns.push_back({n, ColumnKind::Label});
        add_value_columns();
        // rows (j1 j2 j3), (j4 j5 j6), (j7 j8 j9); columns likewise
        for (HalfInt a : js)
            for (HalfInt b : js)
                for (HalfInt c : js) {
                    if (!triangle(a, b, c)) continue;
                    for (HalfInt d : js)
                        for (HalfInt e : js)
                            for (HalfInt f : js) {
                                if (!triangle(d, e, f)) continue;
                                for (HalfInt g : js) {
                                    if (!triangle(a, d, g)) continue;
                                    for (HalfInt h : js) {
                                        if (!triangle(b, e, h)) continue;
                                        for (HalfInt i : js)
                                            if (triangle(g, h, i) && triangle(c, f, i))
                                                push({a.to_string(), b.to_string(), c.to_string(), d.to_string(),
                                                      e.to_string(), f.to_string(), g.to_string(), h.to_string(),
                                                      i.to_string()},
                                                     ninej(a, b, c, d, e, f, g, h, i));
                                    }
                                }
                            }
                }
    }
    write_output(cfg.output, render(t, cfg, {{"symbol", cfg.symbol}}), out);
    return 0;
}

int export_ops(const JobConfig& cfg, std::ostream& out) {
    if (!cfg.j && cfg.k_values.empty()) throw UsageError("export-ops requires --j or --k");
    const auto rs = r_values_or(cfg, {parse_r("0")});

    // name -> operator, in a fixed order
    using Named = std::vector<std::pair<std::string, OperatorMatrix>>;
    struct Space {
        nlohmann::json header;
        Named ops;
    };
    std::vector<Space> spin_spaces, fock_spaces;

    for (const auto& r : rs) {
        if (cfg.j) {
            const auto ops = build_spin_ops(*cfg.j, r.value);
            nlohmann::json basis = nlohmann::json::array();
            for (const auto& l : ops.space.basis) basis.push_back(label_json(l));
            spin_spaces.push_back({{{"j", cfg.j->to_string()}, {"r", r.text}, {"phi_r", ops.space.phi_r}, {"basis", basis}},
                                   {{"H", ops.h},
                                    {"U_r", ops.u_r},
                                    {"U_r_dag", ops.u_r_dag},
                                    {"J_plus", ops.j_plus},
                                    {"J_minus", ops.j_minus},
                                    {"J3", ops.j3},
                                    {"J2", ops.casimir}}});
        }
        for (int k : cfg.k_values) {
            const auto rep = build_rep(k);
            const double phi = phi_of(HalfInt::from_twice(k - 1), r.value);
            nlohmann::json basis = nlohmann::json::array();
            for (const auto& l : fock_basis(k)) basis.push_back(label_json(l));
            fock_spaces.push_back({{{"k", k}, {"r", r.text}, {"phi_r", phi}, {"basis", basis}},
                                   {{"a_plus", embed_a(rep, rep.a_plus)},
                                    {"a_minus", embed_a(rep, rep.a_minus)},
                                    {"N_a", embed_a(rep, rep.n_a)},
                                    {"b_plus", embed_b(rep, rep.b_plus)},
                                    {"b_minus", embed_b(rep, rep.b_minus)},
                                    {"N_b", embed_b(rep, rep.n_b)},
                                    {"H", build_h(rep)},
                                    {"U_r", build_ur(rep, phi)},
                                    {"V", build_v(rep)}}});
        }
    }

    std::string content;
    if (cfg.format == Format::Json) {
        auto dump = [](const std::vector<Space>& spaces) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& s : spaces) {
                nlohmann::json obj = s.header;
                nlohmann::json ops = nlohmann::json::object();
                for (const auto& [name, op] : s.ops) ops[name] = matrix_json(op);
                obj["operators"] = ops;
                arr.push_back(std::move(obj));
            }
            return arr;
        };
        nlohmann::json doc{{"spin_spaces", dump(spin_spaces)}, {"fock_spaces", dump(fock_spaces)}};
        content = doc.dump(2) + "\n";
    } else {
        Table t{{{"space", ColumnKind::Label},
                 {"r", ColumnKind::Label},
                 {"operator", ColumnKind::Label},
                 {"row", ColumnKind::Label},
                 {"col", ColumnKind::Label},
                 {"row_label", ColumnKind::Label},
                 {"col_label", ColumnKind::Label},
                 {"value", ColumnKind::Complex}},
                {}};
        auto emit = [&](const std::vector<Space>& spaces, const char* key) {
            for (const auto& s : spaces)
                for (const auto& [name, op] : s.ops)
                    for (Eigen::Index i = 0; i < op.rows(); ++i)
                        for (Eigen::Index c = 0; c < op.cols(); ++c)
                            t.rows.push_back({std::string(key) + "=" + s.header[key].dump(), s.header["r"], name, i, c,
                                              to_string(op.row_basis()[static_cast<std::size_t>(i)]),
                                              to_string(op.col_basis()[static_cast<std::size_t>(c)]),
                                              complex_json(op(i, c))});
        };
        emit(spin_spaces, "j");
        emit(fock_spaces, "k");
        content = table_csv(t);
    }
    write_output(cfg.output, content, out);
    return 0;
}

int run_verify(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
    verify::Options o;
    o.j_max = cfg.j_max;
    o.spin_max = cfg.spin_max;
    o.random_j_max = cfg.random_j_max;
    if (!cfg.r_values.empty()) {
        o.r_values.clear();
        for (const auto& r : cfg.r_values) o.r_values.push_back(r.value);
    }
    if (!cfg.k_values.empty()) {
        o.k_max = *std::max_element(cfg.k_values.begin(), cfg.k_values.end());
        o.w_k_max = std::min(o.w_k_max, o.k_max);
    }
    o.samples = cfg.samples;
    o.seed = cfg.seed;
    o.tol = cfg.tol;
    o.threads = effective_threads(cfg.threads);

    const auto records = verify::run_all(o);
    std::size_t failed = 0;
    for (const auto& r : records)
        if (!r.pass()) ++failed;

    std::string content;
    if (cfg.format == Format::Json) {
        content = verify::report_json(o, records).dump(2) + "\n";
    } else {
        Table t{{{"name", ColumnKind::Label},
                 {"parameters", ColumnKind::Text},
                 {"residual", ColumnKind::Real},
                 {"tolerance", ColumnKind::Real},
                 {"exact", ColumnKind::Label},
                 {"pass", ColumnKind::Label},
                 {"seconds", ColumnKind::Real}},
                {}};
        for (const auto& r : records)
            t.rows.push_back({r.name, r.parameters.dump(), r.residual, r.tolerance, r.exact ? "true" : "false",
                              r.pass() ? "true" : "false", r.seconds});
        content = table_csv(t);
    }
    write_output(cfg.output, content, out);
    err << "verify: " << records.size() - failed << "/" << records.size() << " checks passed (seed " << cfg.seed
        << ")\n";
    for (const auto& r : records)
        if (!r.pass()) err << "  FAIL " << r.name << " residual=" << r.residual << " tol=" << r.tolerance << "\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int run(const JobConfig& config, std::ostream& out, std::ostream& err) {
    config.validate();
    switch (config.command) {
        case Command::TabulateCg: return tabulate_cg(config, out);
        case Command::TabulateFbar: return tabulate_fbar(config, out);
        case Command::TabulateStandard: return tabulate_standard(config, out);
        case Command::ExportOps: return export_ops(config, out);
        case Command::Verify: return run_verify(config, out, err);
    }
    return 2;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    try {
        const auto config = parse_args(argc, argv, out);
        if (!config) return 0;
        return run(*config, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace polarsu2::cli
