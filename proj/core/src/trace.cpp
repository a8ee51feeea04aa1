// trace.cpp
// Copyright 2026 the reqkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "reqkit/trace.hpp"

#include <algorithm>
#include <sstream>

namespace reqkit::monitoring {

std::vector<Minutes> Trace::observation_points() const {
    std::vector<Minutes> points;
    points.reserve(events.size() + samples.size() + 1);
    for (const auto& e : events)
        points.push_back(e.t);
    for (const auto& s : samples)
        points.push_back(s.t);
    points.push_back(end_time);
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

namespace {

std::vector<std::string> split_ws(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    std::string word;
    while (in >> word)
        out.push_back(word);
    return out;
}

Minutes parse_time(const std::string& text, int lineno) {
    const auto value = Rational::parse(text);
    if (!value || value->den() != 1)
        throw ParseError("malformed timestamp '" + text + "'", lineno);
    if (value->num() < 0)
        throw ParseError("negative timestamp '" + text + "'", lineno);
    return value->num();
}

} // namespace

Trace load_trace(std::string_view text) {
    Trace trace;
    bool have_end = false;
    Minutes last_t = 0;

    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        auto line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        ++lineno;
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        const auto words = split_ws(line);
        if (words.empty())
            continue;

        if (have_end)
            throw ParseError("record after 'end'", lineno);

        if (words[0] == "event") {
            if (words.size() != 3 && words.size() != 4)
                throw ParseError("malformed event record (want: event <name> [<key>] <t>)", lineno);
            Event e;
            e.name = words[1];
            if (words.size() == 4)
                e.key = words[2];
            e.t = parse_time(words.back(), lineno);
            if (e.t < last_t)
                throw ParseError("decreasing timestamp " + std::to_string(e.t), lineno);
            last_t = e.t;
            trace.events.push_back(std::move(e));
        } else if (words[0] == "sample") {
            if (words.size() != 4)
                throw ParseError("malformed sample record (want: sample <var> <value> <t>)", lineno);
            Sample s;
            s.variable = words[1];
            const auto value = Rational::parse(words[2]);
            if (!value)
                throw ParseError("malformed sample value '" + words[2] + "'", lineno);
            s.value = *value;
            s.t = parse_time(words[3], lineno);
            if (s.t < last_t)
                throw ParseError("decreasing timestamp " + std::to_string(s.t), lineno);
            last_t = s.t;
            trace.samples.push_back(std::move(s));
        } else if (words[0] == "end") {
            if (words.size() != 2)
                throw ParseError("malformed end record (want: end <t>)", lineno);
            trace.end_time = parse_time(words[1], lineno);
            if (trace.end_time < last_t)
                throw ParseError("end time precedes the last record", lineno);
            have_end = true;
        } else {
            throw ParseError("unknown record '" + words[0] + "'", lineno);
        }
    }

    if (!have_end)
        throw ParseError("missing 'end <t>' declaration", lineno);
    return trace;
}

} // namespace reqkit::monitoring
