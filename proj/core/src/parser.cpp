// parser.cpp - recursive-descent parser for the requirements DSL
// Copyright 2026 the reqkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "reqkit/parser.hpp"

#include <cctype>
#include <map>
#include <set>
#include <vector>

namespace reqkit::dsl {

namespace {

enum class Tok { Word, Number, LParen, RParen, Colon, Percent, Arrow, Lt, Le, Eq, Ge, Gt, Comma, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    Rational number;
    int column = 0;
};

std::vector<Token> lex_line(std::string_view line, int lineno) {
    std::vector<Token> out;
    std::size_t i = 0;
    const auto col = [&] { return static_cast<int>(i) + 1; };
    while (i < line.size()) {
        const char c = line[i];
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        if (c == '#')
            break;
        const int start = col();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < line.size() &&
                   (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_'))
                ++j;
            out.push_back({Tok::Word, std::string(line.substr(i, j - i)), {}, start});
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '-' && i + 1 < line.size() && std::isdigit(static_cast<unsigned char>(line[i + 1])))) {
            std::size_t j = i + 1;
            while (j < line.size() && (std::isdigit(static_cast<unsigned char>(line[j])) || line[j] == '.' ||
                                       line[j] == '/'))
                ++j;
            const auto text = std::string(line.substr(i, j - i));
            const auto value = Rational::parse(text);
            if (!value)
                throw ParseError("malformed number '" + text + "'", lineno, start);
            out.push_back({Tok::Number, text, *value, start});
            i = j;
            continue;
        }
        switch (c) {
        case '(': out.push_back({Tok::LParen, "(", {}, start}); ++i; continue;
        case ')': out.push_back({Tok::RParen, ")", {}, start}); ++i; continue;
        case ':': out.push_back({Tok::Colon, ":", {}, start}); ++i; continue;
        case '%': out.push_back({Tok::Percent, "%", {}, start}); ++i; continue;
        case ',': out.push_back({Tok::Comma, ",", {}, start}); ++i; continue;
        case '=': out.push_back({Tok::Eq, "=", {}, start}); ++i; continue;
        case '<':
            if (i + 1 < line.size() && line[i + 1] == '=') {
                out.push_back({Tok::Le, "<=", {}, start});
                i += 2;
            } else {
                out.push_back({Tok::Lt, "<", {}, start});
                ++i;
            }
            continue;
        case '>':
            if (i + 1 < line.size() && line[i + 1] == '=') {
                out.push_back({Tok::Ge, ">=", {}, start});
                i += 2;
            } else {
                out.push_back({Tok::Gt, ">", {}, start});
                ++i;
            }
            continue;
        case '-':
            if (i + 1 < line.size() && line[i + 1] == '>') {
                out.push_back({Tok::Arrow, "->", {}, start});
                i += 2;
                continue;
            }
            throw ParseError("unexpected '-'", lineno, start);
        default:
            throw ParseError(std::string("unexpected character '") + c + "'", lineno, start);
        }
    }
    out.push_back({Tok::End, "", {}, static_cast<int>(line.size()) + 1});
    return out;
}

const std::map<std::string_view, VagueQualifier> kQualifiers = {
    {"as_soon_as_possible", VagueQualifier::AsSoonAsPossible},
    {"high", VagueQualifier::High},
    {"fairly", VagueQualifier::Fairly},
    {"unduly_long", VagueQualifier::UndulyLong},
    {"as_many_as_possible", VagueQualifier::AsManyAsPossible},
};

const std::map<std::string_view, TimeUnit> kUnits = {
    {"minute", TimeUnit::Minute}, {"minutes", TimeUnit::Minute}, {"hour", TimeUnit::Hour},
    {"hours", TimeUnit::Hour},    {"day", TimeUnit::Day},        {"days", TimeUnit::Day},
};

class StatementParser {
public:
    StatementParser(std::vector<Token> tokens, int lineno) : tokens_(std::move(tokens)), lineno_(lineno) {}

    Requirement parse_statement() {
        expect_word("req");
        Requirement r;
        r.id = expect_identifier("requirement id");
        expect(Tok::Colon, "':'");
        r.form = parse_form();
        if (!at_end())
            fail("unexpected trailing input '" + peek().text + "'");
        return r;
    }

private:
    RequirementForm parse_form() {
        const Token& head = peek();
        if (head.kind != Tok::Word)
            fail("expected a requirement form");
        if (head.text == "when")
            return parse_response_form();
        if (head.text == "always") {
            advance();
            return StateInvariant{parse_condition()};
        }
        if (head.text == "at") {
            advance();
            expect_word("every");
            expect_word("observation");
            Instantaneous inst;
            inst.condition = parse_condition();
            expect_word("implies");
            inst.consequent = parse_condition();
            return inst;
        }
        if (head.text == "rate") {
            advance();
            RateFloor rf;
            rf.event = parse_event();
            expect(Tok::Ge, "'>='");
            rf.min_count = expect_count("rate floor");
            expect_word("per");
            rf.window = parse_duration();
            if (rf.window.minutes() <= 0)
                fail("rate window must be positive");
            return rf;
        }
        if (head.text == "fifo") {
            advance();
            Fifo f;
            f.entry = parse_event();
            expect(Tok::Arrow, "'->'");
            f.exit = parse_event();
            if (!f.entry.key || !f.exit.key)
                fail("fifo requires correlation variables on both events");
            check_keys(f.entry, f.exit);
            return f;
        }
        fail("unknown requirement form starting at '" + head.text + "'");
    }

    // when <event> then [eventually|<qualifier>] <event>
    //   [within N <unit>] [in at least N % of instances [per N <unit>]]
    RequirementForm parse_response_form() {
        expect_word("when");
        EventPattern trigger = parse_event();
        expect_word("then");

        if (peek_word("eventually")) {
            advance();
            EventPattern response = parse_event();
            check_keys(trigger, response);
            if (!at_end())
                fail("'eventually' places no time bound; unexpected '" + peek().text + "'");
            return UnboundedResponse{trigger, response};
        }
        if (peek().kind == Tok::Word && kQualifiers.count(peek().text)) {
            const auto qualifier = kQualifiers.at(peek().text);
            advance();
            EventPattern response = parse_event();
            check_keys(trigger, response);
            if (!at_end())
                fail("a vague qualifier admits no deadline or ratio; unexpected '" + peek().text + "'");
            return VagueQualified{trigger, response, qualifier};
        }

        EventPattern response = parse_event();
        check_keys(trigger, response);

        std::optional<Duration> deadline;
        if (peek_word("within")) {
            advance();
            deadline = parse_duration();
        }

        if (peek_word("in")) {
            advance();
            expect_word("at");
            expect_word("least");
            const Token pct = expect(Tok::Number, "percentage");
            expect(Tok::Percent, "'%'");
            expect_word("of");
            expect_word("instances");
            if (pct.number <= Rational(0) || pct.number > Rational(100))
                fail("ratio must be in (0, 100] percent");
            if (!deadline)
                fail("a ratio clause requires a deadline ('within ...')");
            WindowedRatio wr;
            wr.trigger = trigger;
            wr.response = response;
            wr.deadline = *deadline;
            wr.min_ratio = pct.number / Rational(100);
            if (peek_word("per")) {
                advance();
                wr.window = parse_duration();
                if (wr.window->minutes() <= 0)
                    fail("ratio window must be positive");
            }
            return wr;
        }

        if (deadline)
            return BoundedResponse{trigger, response, *deadline};
        // No explicit time bound and no "eventually" keyword: the requirement
        // still promises only that the response happens some time.
        return UnboundedResponse{trigger, response};
    }

    EventPattern parse_event() {
        EventPattern e;
        e.name = expect_identifier("event name");
        expect(Tok::LParen, "'('");
        if (peek().kind == Tok::Word)
            e.key = expect_identifier("correlation variable");
        expect(Tok::RParen, "')'");
        return e;
    }

    StateCondition parse_condition() {
        StateCondition c;
        c.conjuncts.push_back(parse_atom());
        while (peek_word("and")) {
            advance();
            c.conjuncts.push_back(parse_atom());
        }
        return c;
    }

    ConditionAtom parse_atom() {
        ConditionAtom atom;
        if (peek_word("not")) {
            advance();
            atom.variable = expect_identifier("state variable");
            atom.cmp = Comparator::IsFalse;
            atom.threshold = Rational(0);
            return atom;
        }
        atom.variable = expect_identifier("state variable");
        switch (peek().kind) {
        case Tok::Lt: atom.cmp = Comparator::Lt; break;
        case Tok::Le: atom.cmp = Comparator::Le; break;
        case Tok::Eq: atom.cmp = Comparator::Eq; break;
        case Tok::Ge: atom.cmp = Comparator::Ge; break;
        case Tok::Gt: atom.cmp = Comparator::Gt; break;
        default:
            atom.cmp = Comparator::IsTrue;
            atom.threshold = Rational(1);
            return atom;
        }
        advance();
        atom.threshold = expect(Tok::Number, "threshold").number;
        return atom;
    }

    Duration parse_duration() {
        const Token n = expect(Tok::Number, "duration magnitude");
        if (n.number.den() != 1 || n.number.num() < 0)
            fail("duration magnitude must be a nonnegative integer");
        const Token u = expect(Tok::Word, "time unit");
        const auto it = kUnits.find(u.text);
        if (it == kUnits.end())
            fail("unknown time unit '" + u.text + "'");
        return Duration{n.number.num(), it->second};
    }

    std::int64_t expect_count(const char* what) {
        const Token n = expect(Tok::Number, "count");
        if (n.number.den() != 1 || n.number.num() <= 0)
            fail(std::string(what) + " count must be a positive integer");
        return n.number.num();
    }

    void check_keys(const EventPattern& a, const EventPattern& b) {
        if (a.key && b.key && *a.key != *b.key)
            fail("mismatched correlation keys '" + *a.key + "' vs '" + *b.key + "'");
    }

    // --- token plumbing ---

    const Token& peek() const { return tokens_[pos_]; }
    bool at_end() const { return peek().kind == Tok::End; }
    void advance() { ++pos_; }

    bool peek_word(std::string_view w) const { return peek().kind == Tok::Word && peek().text == w; }

    Token expect(Tok kind, const char* what) {
        if (peek().kind != kind)
            fail(std::string("expected ") + what + (at_end() ? "" : ", got '" + peek().text + "'"));
        Token t = peek();
        advance();
        return t;
    }

    void expect_word(std::string_view w) {
        if (!peek_word(w))
            fail("expected '" + std::string(w) + "'" + (at_end() ? "" : ", got '" + peek().text + "'"));
        advance();
    }

    std::string expect_identifier(const char* what) { return expect(Tok::Word, what).text; }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, lineno_, peek().column);
    }

    std::vector<Token> tokens_;
    int lineno_;
    std::size_t pos_ = 0;
};

} // namespace

RequirementSet parse_requirements(std::string_view text) {
    RequirementSet rs;
    std::set<std::string> seen;

    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        const auto line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        ++lineno;
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        auto tokens = lex_line(line, lineno);
        if (tokens.front().kind == Tok::End)
            continue;

        StatementParser parser(std::move(tokens), lineno);
        Requirement r = parser.parse_statement();
        if (!seen.insert(r.id).second)
            throw ParseError("duplicate requirement id '" + r.id + "'", lineno);
        rs.requirements.push_back(std::move(r));
    }
    return rs;
}

} // namespace reqkit::dsl
