// Copyright 2026 The polarsu2 Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "polarsu2/cli.hpp"
#include "polarsu2/operator_matrix.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace polarsu2::cli {

enum class ColumnKind { Label, Real, Complex, Text };

struct Column {
    std::string name;
    ColumnKind kind;
};

/// Rows hold one JSON cell per column. Complex cells are [re, im].
struct Table {
    std::vector<Column> columns;
    std::vector<std::vector<nlohmann::json>> rows;
};

[[nodiscard]] nlohmann::json complex_json(Complex z);
[[nodiscard]] nlohmann::json label_json(const BasisLabel& label);
[[nodiscard]] nlohmann::json matrix_json(const OperatorMatrix& op);

[[nodiscard]] nlohmann::json table_json(const Table& table);
/// Complex columns expand to re, im, abs and phase (radians).
[[nodiscard]] std::string table_csv(const Table& table);

/// Writes to `path` through a temporary file and rename; empty path writes to `out`.
void write_output(const std::string& path, const std::string& content, std::ostream& out);

}  // namespace polarsu2::cli
