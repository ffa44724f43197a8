// Copyright 2026 The polarsu2 Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file cli.hpp
 * @brief Job configuration and entry points of the polarsu2 command-line tool.
 *
 * Subcommands: tabulate-cg, tabulate-fbar, tabulate-standard, export-ops,
 * verify. Options come from flags and, optionally, a `key = value` config
 * file given with --config; flags win over the file.
 */

#pragma once

#include "polarsu2/halfint.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polarsu2::cli {

enum class Command { TabulateCg, TabulateFbar, TabulateStandard, ExportOps, Verify };
enum class Format { Json, Csv };

/// Bad command line or config; maps to exit status 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// r given as a decimal or "p/q". Decimals are kept as exact fractions too.
struct RValue {
    double value = 0.0;
    long long num = 0;
    long long den = 1;
    bool exact = true;  ///< num/den is the exact value
    std::string text;
};

/// Throws UsageError on malformed input.
[[nodiscard]] RValue parse_r(std::string_view text);
/// Comma-separated list of r values.
[[nodiscard]] std::vector<RValue> parse_r_list(std::string_view text);
/// alpha = -j r + s as a reduced fraction string when r is exact, else a decimal.
[[nodiscard]] std::string alpha_text(HalfInt j, const RValue& r, int s);

/// Bound on 2j accepted from the command line.
inline constexpr int kMaxTwiceJ = 128;

struct JobConfig {
    Command command = Command::Verify;
    std::optional<HalfInt> j1, j2, j3, j;
    HalfInt j_max = HalfInt::from_twice(3);      ///< coupling-level sweeps
    HalfInt spin_max = HalfInt::from_twice(25);  ///< operator-level sweeps
    HalfInt random_j_max = HalfInt::integer(4);
    int samples = 100;
    std::vector<RValue> r_values;
    std::vector<int> k_values;
    std::optional<double> tol;
    Format format = Format::Json;
    std::string symbol = "cg";  ///< tabulate-standard: cg, 3jm, 6j, 9j
    std::string output;         ///< empty: stdout
    std::uint64_t seed = 20260101;
    int threads = 0;            ///< 0: hardware concurrency, capped by WIGNER_NONSTD_THREADS

    /// Throws UsageError on tol <= 0, empty ranges or 2j above kMaxTwiceJ.
    void validate() const;
};

[[nodiscard]] std::string command_name(Command c);

/// Parses argv (argv[0] is the program name). Throws UsageError.
/// Returns std::nullopt when help was printed.
[[nodiscard]] std::optional<JobConfig> parse_args(int argc, const char* const* argv, std::ostream& out);

/// Runs one job. Returns 0 on success, 1 when verification fails.
/// Throws UsageError for inconsistent options.
int run(const JobConfig& config, std::ostream& out, std::ostream& err);

/// Full CLI: parse, run, map exceptions to exit status (2 usage, 1 failure).
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Effective worker count: requested (or hardware) capped by WIGNER_NONSTD_THREADS.
[[nodiscard]] int effective_threads(int requested);

}  // namespace polarsu2::cli
