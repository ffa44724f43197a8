// Copyright 2026 The polarsu2 Authors
// SPDX-License-Identifier: Apache-2.0

#include "polarsu2/halfint.hpp"

#include <charconv>
#include <stdexcept>

namespace polarsu2 {

namespace {

int parse_int(std::string_view s, std::string_view whole) {
    int value = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (s.empty() || ec != std::errc{} || ptr != last)
        throw std::invalid_argument("not a half-integer: '" + std::string(whole) + "'");
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

HalfInt HalfInt::parse(std::string_view text) {
    const auto s = trim(text);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return integer(parse_int(s, text));
    const int num = parse_int(s.substr(0, slash), text);
    const int den = parse_int(s.substr(slash + 1), text);
    if (den == 1) return integer(num);
    if (den != 2) throw std::invalid_argument("not a half-integer: '" + std::string(text) + "'");
    return from_twice(num);
}

std::string HalfInt::to_string() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

void require_j(HalfInt j) {
    if (!is_valid_j(j)) throw std::invalid_argument("negative angular momentum j = " + j.to_string());
}

void require_projection(HalfInt j, HalfInt m) {
    require_j(j);
    if (!is_projection_of(j, m))
        throw std::invalid_argument("m = " + m.to_string() + " is not a projection of j = " +
                                    j.to_string());
}

std::vector<HalfInt> m_values(HalfInt j) {
    require_j(j);
    std::vector<HalfInt> out;
    out.reserve(static_cast<std::size_t>(j.twice()) + 1);
    for (int tm = -j.twice(); tm <= j.twice(); tm += 2) out.push_back(HalfInt::from_twice(tm));
    return out;
}

std::vector<HalfInt> j_values_up_to(HalfInt jmax) {
    require_j(jmax);
    std::vector<HalfInt> out;
    for (int t = 0; t <= jmax.twice(); ++t) out.push_back(HalfInt::from_twice(t));
    return out;
}

int phase_sign(HalfInt e) {
    if (!e.is_integer()) throw std::invalid_argument("non-integral phase exponent " + e.to_string());
    return (e.twice() / 2) % 2 == 0 ? 1 : -1;
}

}  // namespace polarsu2
