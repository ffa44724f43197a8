// Copyright 2026 The polarsu2 Authors
// SPDX-License-Identifier: Apache-2.0

#include "output.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <unistd.h>

namespace polarsu2::cli {

nlohmann::json complex_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

nlohmann::json label_json(const BasisLabel& label) {
    return std::visit(
        [](const auto& l) -> nlohmann::json {
            using T = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<T, FockLabel>) {
                return {{"n_a", l.n_a}, {"n_b", l.n_b}};
            } else if constexpr (std::is_same_v<T, MLabel>) {
                return {{"j", l.j.to_string()}, {"m", l.m.to_string()}};
            } else {
                return {{"j", l.j().to_string()}, {"r", l.r()}, {"s", l.s()}, {"alpha", l.alpha()}};
            }
        },
        label);
}

nlohmann::json matrix_json(const OperatorMatrix& op) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < op.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index k = 0; k < op.cols(); ++k) row.push_back(complex_json(op(i, k)));
        rows.push_back(std::move(row));
    }
    nlohmann::json rb = nlohmann::json::array(), cb = nlohmann::json::array();
    for (const auto& l : op.row_basis()) rb.push_back(label_json(l));
    for (const auto& l : op.col_basis()) cb.push_back(label_json(l));
    return {{"rows", op.rows()}, {"cols", op.cols()}, {"row_basis", rb}, {"col_basis", cb}, {"entries", rows}};
}

nlohmann::json table_json(const Table& table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t c = 0; c < table.columns.size(); ++c) obj[table.columns[c].name] = row[c];
        rows.push_back(std::move(obj));
    }
    nlohmann::json cols = nlohmann::json::array();
    for (const auto& c : table.columns) cols.push_back(c.name);
    return {{"columns", cols}, {"rows", rows}};
}

namespace {

std::string csv_field(const nlohmann::json& cell) {
    std::string s = cell.is_string() ? cell.get<std::string>() : cell.dump();
    if (s.find_first_of(",\"\n") != std::string::npos) {
        std::string quoted = "\"";
        for (char ch : s) {
            if (ch == '"') quoted += '"';
            quoted += ch;
        }
        return quoted + "\"";
    }
    return s;
}

std::string number(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

}  // namespace

std::string table_csv(const Table& table) {
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << ',';
        first = false;
    };
    for (const auto& c : table.columns) {
        if (c.kind == ColumnKind::Complex) {
            for (const char* suffix : {"_re", "_im", "_abs", "_phase"}) {
                sep();
                os << c.name << suffix;
            }
        } else {
            sep();
            os << c.name;
        }
    }
    os << '\n';
    for (const auto& row : table.rows) {
        first = true;
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            if (table.columns[c].kind == ColumnKind::Complex) {
                const Complex z(row[c][0].get<double>(), row[c][1].get<double>());
                for (double v : {z.real(), z.imag(), std::abs(z), std::abs(z) == 0.0 ? 0.0 : std::arg(z)}) {
                    sep();
                    os << number(v);
                }
            } else if (table.columns[c].kind == ColumnKind::Real) {
                sep();
                os << number(row[c].get<double>());
            } else {
                sep();
                os << csv_field(row[c]);
            }
        }
        os << '\n';
    }
    return os.str();
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty()) {
        out << content;
        out.flush();
        return;
    }
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path temp = target;
    temp += ".tmp." + std::to_string(::getpid());
    try {
        {
            std::ofstream file(temp, std::ios::binary | std::ios::trunc);
            if (!file) throw std::runtime_error("cannot open '" + temp.string() + "' for writing");
            file << content;
            file.close();
            if (!file) throw std::runtime_error("failed writing '" + temp.string() + "'");
        }
        fs::rename(temp, target);
    } catch (...) {
        std::error_code ec;
        fs::remove(temp, ec);
        throw;
    }
}

}  // namespace polarsu2::cli
