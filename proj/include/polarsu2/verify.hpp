// Copyright 2026 The polarsu2 Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file verify.hpp
 * @brief The invariant suites behind `polarsu2 verify`.
 *
 * Each suite returns CheckRecords holding the worst residual over its
 * parameter sweep. Exact checks (standard layer) report the number of
 * violations with tolerance 0.
 */

#pragma once

#include "polarsu2/halfint.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace polarsu2::verify {

struct CheckRecord {
    std::string name;
    nlohmann::json parameters = nlohmann::json::object();
    double residual = 0.0;
    double tolerance = 0.0;
    bool exact = false;
    double seconds = 0.0;

    [[nodiscard]] bool pass() const { return exact ? residual == 0.0 : residual <= tolerance; }
};

struct Options {
    HalfInt j_max = HalfInt::from_twice(3);
    HalfInt spin_max = HalfInt::from_twice(25);
    HalfInt random_j_max = HalfInt::integer(4);
    std::vector<double> r_values{0.0, 0.37, 1.0, 2.5};
    int k_max = 12;
    int w_k_max = 6;
    int samples = 100;
    std::uint64_t seed = 20260101;
    std::optional<double> tol;  ///< overrides every numeric tolerance when set
    int threads = 1;
};

using Suite = std::function<std::vector<CheckRecord>(const Options&)>;

struct NamedSuite {
    std::string name;
    Suite run;
};

/// quon, su2gen, nonstandard and standard suites in a fixed order.
[[nodiscard]] std::vector<NamedSuite> all_suites();

/// Runs every suite (in parallel up to options.threads); output order is fixed.
[[nodiscard]] std::vector<CheckRecord> run_all(const Options& options);

[[nodiscard]] nlohmann::json to_json(const CheckRecord& record);
[[nodiscard]] nlohmann::json report_json(const Options& options, const std::vector<CheckRecord>& records);

// Individual suites, exposed for tests.
std::vector<CheckRecord> quon_suite(const Options& o);
std::vector<CheckRecord> w_infinity_suite(const Options& o);
std::vector<CheckRecord> su2_suite(const Options& o);
std::vector<CheckRecord> eigenbasis_suite(const Options& o);
std::vector<CheckRecord> coupling_suite(const Options& o);
std::vector<CheckRecord> random_coupling_suite(const Options& o);
std::vector<CheckRecord> fbar_suite(const Options& o);
std::vector<CheckRecord> recoupling_suite(const Options& o);
std::vector<CheckRecord> wigner_eckart_suite(const Options& o);
std::vector<CheckRecord> standard_suite(const Options& o);

}  // namespace polarsu2::verify
