// switching_parser.cpp - the switching-system file format
// Copyright 2026 the reqkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <algorithm>
#include <cctype>
#include <sstream>

#include "reqkit/switching.hpp"

namespace reqkit::switching {

namespace {

struct Scanner {
    std::string text;
    int lineno;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c))
            throw ParseError(std::string("expected '") + c + "'", lineno);
    }

    // '@' appears in machine ids written out by flatten
    std::string word() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '_' || text[pos] == '-' || text[pos] == '@'))
            ++pos;
        if (pos == start)
            throw ParseError("expected an identifier", lineno);
        return text.substr(start, pos - start);
    }

    // {a,!b} or {} -> condition; reject '!' when literals are plain ids
    Condition condition(bool allow_negation = true) {
        Condition c;
        expect('{');
        while (!accept('}')) {
            Literal lit;
            lit.positive = !(allow_negation && accept('!'));
            lit.var = word();
            c.literals.insert(std::move(lit));
            if (peek() != '}')
                expect(',');
        }
        return c;
    }
};

bool conditions_overlap(const Condition& a, const Condition& b) {
    return a.consistent() && b.consistent() && Condition::union_of(a, b).consistent();
}

} // namespace

SwitchingFile parse_switching_file(std::string_view text) {
    SwitchingFile file;
    std::vector<MachinePair> top_pairs;
    std::vector<ModePair> mode_pairs;
    std::vector<std::pair<Condition, std::set<std::string>>> table_rows;
    std::set<std::string> declared_machines;
    bool have_vars = false;

    // Collect physical lines; a 'mode' statement may span lines until its
    // braces balance.
    std::vector<std::pair<int, std::string>> lines;
    {
        int lineno = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const auto eol = text.find('\n', pos);
            auto line = std::string(
                text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos));
            ++lineno;
            pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
            if (const auto hash = line.find('#'); hash != std::string::npos)
                line = line.substr(0, hash);
            lines.emplace_back(lineno, std::move(line));
        }
    }

    const auto require_vars = [&](int lineno) {
        if (!have_vars)
            throw ParseError("'vars' must be declared first", lineno);
    };

    for (std::size_t li = 0; li < lines.size(); ++li) {
        auto [lineno, line] = lines[li];
        {
            std::istringstream probe(line);
            std::string head;
            if (!(probe >> head))
                continue;
        }

        // join continuation lines while braces are unbalanced
        auto balance = [](const std::string& s) {
            long depth = 0;
            for (char c : s)
                depth += c == '{' ? 1 : c == '}' ? -1 : 0;
            return depth;
        };
        while (balance(line) > 0 && li + 1 < lines.size()) {
            ++li;
            line += " " + lines[li].second;
        }

        Scanner scan{line, lineno};
        const std::string head = scan.word();

        if (head == "vars") {
            if (have_vars)
                throw ParseError("duplicate 'vars' declaration", lineno);
            while (!scan.at_end())
                file.vars.push_back(scan.word());
            if (file.vars.empty())
                throw ParseError("'vars' needs at least one variable", lineno);
            have_vars = true;
        } else if (head == "machine") {
            declared_machines.insert(scan.word());
            while (!scan.at_end())
                declared_machines.insert(scan.word());
        } else if (head == "pair") {
            require_vars(lineno);
            MachinePair p;
            p.assumptions = scan.condition();
            p.machine = scan.word();
            if (!scan.at_end())
                throw ParseError("trailing input after pair", lineno);
            top_pairs.push_back(std::move(p));
        } else if (head == "mode") {
            require_vars(lineno);
            ModePair mp;
            mp.mode = scan.condition();
            scan.expect('{');
            std::vector<MachinePair> inner;
            while (!scan.accept('}')) {
                if (scan.accept(';'))
                    continue;
                const std::string kw = scan.word();
                if (kw != "pair")
                    throw ParseError("expected 'pair' inside mode block, got '" + kw + "'", lineno);
                MachinePair p;
                p.assumptions = scan.condition();
                p.machine = scan.word();
                inner.push_back(std::move(p));
            }
            if (!scan.at_end())
                throw ParseError("trailing input after mode block", lineno);
            try {
                mp.system = build_machine_switching(file.vars, std::move(inner), &file.warnings);
            } catch (const ValidationError& e) {
                throw ParseError(e.what(), lineno);
            }
            mode_pairs.push_back(std::move(mp));
        } else if (head == "modes-reqs") {
            require_vars(lineno);
            Condition mode = scan.condition();
            Condition ids = scan.condition(false);
            if (!scan.at_end())
                throw ParseError("trailing input after modes-reqs row", lineno);
            std::set<std::string> requirement_ids;
            for (const auto& lit : ids.literals)
                requirement_ids.insert(lit.var);
            for (const auto& [existing, existing_ids] : table_rows)
                if (conditions_overlap(existing, mode))
                    throw ParseError("modes-reqs rows must be pairwise disjoint; " +
                                         format_condition(mode) + " overlaps " + format_condition(existing),
                                     lineno);
            table_rows.emplace_back(std::move(mode), std::move(requirement_ids));
        } else {
            throw ParseError("unknown statement '" + head + "'", lineno);
        }
    }

    if (!top_pairs.empty() && !mode_pairs.empty())
        throw ParseError("a file defines either a machine-switching or a mode-switching system, not both",
                         static_cast<int>(lines.size()));

    const auto check_declared = [&](const std::string& machine) {
        if (!declared_machines.empty() && !declared_machines.count(machine))
            throw ValidationError("machine '" + machine + "' is not declared");
    };
    for (const auto& p : top_pairs)
        check_declared(p.machine);
    for (const auto& mp : mode_pairs)
        for (const auto& p : mp.system.pairs)
            check_declared(p.machine);

    if (!top_pairs.empty())
        file.machine_system = build_machine_switching(file.vars, std::move(top_pairs), &file.warnings);
    if (!mode_pairs.empty())
        file.mode_system = build_mode_switching(file.vars, std::move(mode_pairs), &file.warnings);
    if (!table_rows.empty()) {
        ModeRequirementTable table;
        table.vars = file.vars;
        for (const auto& [mode, ids] : table_rows)
            for (const auto& lit : mode.literals)
                if (std::find(table.vars.begin(), table.vars.end(), lit.var) == table.vars.end())
                    throw ValidationError("modes-reqs row uses undeclared variable '" + lit.var + "'");
        table.rows = std::move(table_rows);
        file.table = std::move(table);
    }

    if (!file.machine_system && !file.mode_system && !file.table)
        throw ParseError("file defines no system and no mode-requirement table", 1);
    return file;
}

std::vector<Valuation> parse_valuation_sequence(std::string_view text, const std::vector<std::string>& vars) {
    std::vector<Valuation> out;

    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        auto line = std::string(text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos));
        ++lineno;
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line = line.substr(0, hash);

        std::istringstream in(line);
        std::string token;
        Valuation v;
        while (in >> token) {
            const auto eq = token.find('=');
            if (eq == std::string::npos)
                throw ParseError("expected var=0|1, got '" + token + "'", lineno);
            const std::string var = token.substr(0, eq);
            const std::string value = token.substr(eq + 1);
            bool b;
            if (value == "0" || value == "false")
                b = false;
            else if (value == "1" || value == "true")
                b = true;
            else
                throw ParseError("boolean value must be 0/1/true/false, got '" + value + "'", lineno);
            if (std::find(vars.begin(), vars.end(), var) == vars.end())
                throw ParseError("unknown variable '" + var + "'", lineno);
            v.assignment[var] = b;
        }
        if (v.assignment.empty())
            continue;
        for (const auto& var : vars)
            if (!v.assignment.count(var))
                throw ParseError("valuation does not assign variable '" + var + "'", lineno);
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace reqkit::switching
