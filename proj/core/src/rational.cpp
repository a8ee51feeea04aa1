// rational.cpp
// Copyright 2026 the reqkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "reqkit/rational.hpp"

#include <cctype>

namespace reqkit {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

std::optional<std::int64_t> to_int(std::string_view s) {
    if (!all_digits(s) || s.size() > 18)
        return std::nullopt;
    std::int64_t v = 0;
    for (char c : s)
        v = v * 10 + (c - '0');
    return v;
}

} // namespace

std::optional<Rational> Rational::parse(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty())
        return std::nullopt;

    const auto slash = text.find('/');
    const auto dot = text.find('.');
    if (slash != std::string_view::npos) {
        const auto num = to_int(text.substr(0, slash));
        const auto den = to_int(text.substr(slash + 1));
        if (!num || !den || *den == 0)
            return std::nullopt;
        return Rational(negative ? -*num : *num, *den);
    }
    if (dot != std::string_view::npos) {
        const auto whole = text.substr(0, dot);
        const auto frac = text.substr(dot + 1);
        if (!all_digits(whole) || !all_digits(frac) || frac.size() > 12)
            return std::nullopt;
        const auto w = to_int(whole);
        const auto f = to_int(frac);
        if (!w || !f)
            return std::nullopt;
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i)
            scale *= 10;
        const std::int64_t num = *w * scale + *f;
        return Rational(negative ? -num : num, scale);
    }
    const auto v = to_int(text);
    if (!v)
        return std::nullopt;
    return Rational(negative ? -*v : *v);
}

std::string Rational::str() const {
    if (den_ == 1)
        return std::to_string(num_);

    // Finite decimal expansion exists iff den = 2^a 5^b.
    std::int64_t d = den_;
    int twos = 0, fives = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++twos;
    }
    while (d % 5 == 0) {
        d /= 5;
        ++fives;
    }
    if (d != 1)
        return std::to_string(num_) + "/" + std::to_string(den_);

    const int digits = twos > fives ? twos : fives;
    __int128 scaled = num_;
    for (int i = 0; i < digits; ++i)
        scaled *= 10;
    scaled /= den_;

    bool negative = scaled < 0;
    if (negative)
        scaled = -scaled;
    std::string raw;
    if (scaled == 0)
        raw = "0";
    while (scaled > 0) {
        raw.insert(raw.begin(), static_cast<char>('0' + static_cast<int>(scaled % 10)));
        scaled /= 10;
    }
    while (static_cast<int>(raw.size()) <= digits)
        raw.insert(raw.begin(), '0');
    raw.insert(raw.size() - digits, ".");
    // trim trailing zeros but keep at least one fractional digit
    while (raw.back() == '0' && raw[raw.size() - 2] != '.')
        raw.pop_back();
    return (negative ? "-" : "") + raw;
}

} // namespace reqkit
