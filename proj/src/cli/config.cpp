// Copyright 2026 The polarsu2 Authors
// SPDX-License-Identifier: Apache-2.0

#include "polarsu2/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <thread>

namespace polarsu2::cli {

namespace {

long long parse_integer(std::string_view text, std::string_view whole) {
    long long value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (!text.empty() && text.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last)
        throw UsageError("invalid r value '" + std::string(whole) + "'");
    return value;
}

void reduce(long long& num, long long& den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

HalfInt parse_j(const std::string& text) {
    try {
        return HalfInt::parse(text);
    } catch (const std::exception& e) {
        throw UsageError("invalid half-integer '" + text + "': " + e.what());
    }
}

}  // namespace

RValue parse_r(std::string_view raw) {
    const std::string text = trim(raw);
    if (text.empty()) throw UsageError("empty r value");
    RValue r;
    r.text = text;
    if (const auto slash = text.find('/'); slash != std::string::npos) {
        r.num = parse_integer(std::string_view(text).substr(0, slash), text);
        r.den = parse_integer(std::string_view(text).substr(slash + 1), text);
        if (r.den == 0) throw UsageError("zero denominator in r value '" + text + "'");
        reduce(r.num, r.den);
        r.value = static_cast<double>(r.num) / static_cast<double>(r.den);
        return r;
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value))
        throw UsageError("invalid r value '" + text + "'");
    r.value = value;

    // Plain decimals map to an exact fraction.
    std::string_view digits = text;
    bool negative = false;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        negative = digits.front() == '-';
        digits.remove_prefix(1);
    }
    const auto dot = digits.find('.');
    const std::string_view ip = digits.substr(0, dot);
    const std::string_view fp = dot == std::string_view::npos ? std::string_view{} : digits.substr(dot + 1);
    const bool plain = std::all_of(ip.begin(), ip.end(), ::isdigit) && std::all_of(fp.begin(), fp.end(), ::isdigit) &&
                       ip.size() + fp.size() <= 15;
    if (!plain) {
        r.exact = false;
        return r;
    }
    long long num = 0;
    for (char c : ip) num = num * 10 + (c - '0');
    long long den = 1;
    for (char c : fp) {
        num = num * 10 + (c - '0');
        den *= 10;
    }
    r.num = negative ? -num : num;
    r.den = den;
    reduce(r.num, r.den);
    return r;
}

std::vector<RValue> parse_r_list(std::string_view text) {
    std::vector<RValue> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        out.push_back(parse_r(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string alpha_text(HalfInt j, const RValue& r, int s) {
    if (!r.exact) {
        std::ostringstream os;
        os.precision(17);
        os << -j.value() * r.value + s;
        return os.str();
    }
    // (-2j num + 2 s den) / (2 den)
    long long num = -static_cast<long long>(j.twice()) * r.num + 2LL * s * r.den;
    long long den = 2 * r.den;
    reduce(num, den);
    if (num == 0) return "0";
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::string command_name(Command c) {
    switch (c) {
        case Command::TabulateCg: return "tabulate-cg";
        case Command::TabulateFbar: return "tabulate-fbar";
        case Command::TabulateStandard: return "tabulate-standard";
        case Command::ExportOps: return "export-ops";
        case Command::Verify: return "verify";
    }
    return "unknown";
}

void JobConfig::validate() const {
    if (tol && !(*tol > 0.0 && std::isfinite(*tol))) throw UsageError("--tol must be positive");
    auto check_j = [](const char* name, HalfInt v) {
        if (v.twice() < 0) throw UsageError(std::string(name) + " must be non-negative");
        if (v.twice() > kMaxTwiceJ)
            throw UsageError(std::string(name) + " exceeds the dimension guard 2j <= " + std::to_string(kMaxTwiceJ));
    };
    for (const auto& [name, v] : {std::pair{"--j1", j1}, {"--j2", j2}, {"--j3", j3}, {"--j", j}})
        if (v) check_j(name, *v);
    check_j("--j-max", j_max);
    check_j("--spin-max", spin_max);
    check_j("--random-j-max", random_j_max);
    if (samples <= 0) throw UsageError("--samples must be positive");
    if (threads < 0) throw UsageError("--threads must be non-negative");
    for (const auto& r : r_values)
        if (!std::isfinite(r.value)) throw UsageError("r values must be finite");
    for (int k : k_values)
        if (k < 2 || k > 64) throw UsageError("--k values must lie in [2, 64]");
    static const std::vector<std::string> symbols{"cg", "3jm", "6j", "9j"};
    if (std::find(symbols.begin(), symbols.end(), symbol) == symbols.end())
        throw UsageError("--symbol must be one of cg, 3jm, 6j, 9j");
}

int effective_threads(int requested) {
    int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    n = std::max(n, 1);
    if (const char* env = std::getenv("WIGNER_NONSTD_THREADS")) {
        int cap = 0;
        const std::string_view s(env);
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), cap);
        if (ec == std::errc{} && ptr == s.data() + s.size() && cap > 0) n = std::min(n, cap);
    }
    return n;
}

std::optional<JobConfig> parse_args(int argc, const char* const* argv, std::ostream& out) {
    CLI::App app{"SU(2) in the polar {J^2, U_r} scheme: tables, operator exports and verification", "polarsu2"};
    app.set_config("--config", "", "key = value file; command-line flags take precedence");

    const std::map<std::string, Command> commands{{"tabulate-cg", Command::TabulateCg},
                                                  {"tabulate-fbar", Command::TabulateFbar},
                                                  {"tabulate-standard", Command::TabulateStandard},
                                                  {"export-ops", Command::ExportOps},
                                                  {"verify", Command::Verify}};
    JobConfig cfg;
    std::string command;
    std::string j1, j2, j3, j, j_max, spin_max, random_j_max;
    std::vector<std::string> r_list;
    std::vector<int> k_list;
    double tol = 0.0;
    std::string format = "json";

    app.add_option("command", command, "tabulate-cg | tabulate-fbar | tabulate-standard | export-ops | verify")
        ->required()
        ->check(CLI::IsMember({"tabulate-cg", "tabulate-fbar", "tabulate-standard", "export-ops", "verify"}));
    app.add_option("--j1", j1, "first angular momentum (e.g. 1/2)");
    app.add_option("--j2", j2, "second angular momentum");
    app.add_option("--j3", j3, "third angular momentum");
    app.add_option("--j", j, "coupled or single angular momentum");
    app.add_option("--j-max", j_max, "upper bound for coupling sweeps (default 3/2)");
    app.add_option("--spin-max", spin_max, "upper bound for operator sweeps (default 25/2)");
    app.add_option("--random-j-max", random_j_max, "upper bound for random coupling samples (default 4)");
    app.add_option("--samples", cfg.samples, "number of random coupling samples (default 100)");
    app.add_option("--r", r_list, "comma-separated r values, decimal or p/q")->delimiter(',');
    app.add_option("--k", k_list, "comma-separated quon orders")->delimiter(',');
    auto* tol_opt = app.add_option("--tol", tol, "override numeric tolerances");
    app.add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--symbol", cfg.symbol, "tabulate-standard symbol: cg | 3jm | 6j | 9j");
    app.add_option("--output,-o", cfg.output, "output path (default stdout)");
    app.add_option("--seed", cfg.seed, "seed for random label sampling");
    app.add_option("--threads", cfg.threads, "worker threads (0: hardware)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return std::nullopt;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    cfg.command = commands.at(command);
    if (!j1.empty()) cfg.j1 = parse_j(j1);
    if (!j2.empty()) cfg.j2 = parse_j(j2);
    if (!j3.empty()) cfg.j3 = parse_j(j3);
    if (!j.empty()) cfg.j = parse_j(j);
    if (!j_max.empty()) cfg.j_max = parse_j(j_max);
    if (!spin_max.empty()) cfg.spin_max = parse_j(spin_max);
    if (!random_j_max.empty()) cfg.random_j_max = parse_j(random_j_max);
    for (const auto& r : r_list) cfg.r_values.push_back(parse_r(r));
    cfg.k_values = k_list;
    if (tol_opt->count() > 0) cfg.tol = tol;
    cfg.format = format == "csv" ? Format::Csv : Format::Json;
    cfg.validate();
    return cfg;
}

}  // namespace polarsu2::cli
