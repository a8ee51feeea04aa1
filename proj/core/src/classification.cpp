// classification.cpp
// Copyright 2026 the reqkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "reqkit/classification.hpp"

#include <map>

#include "reqkit/printer.hpp"

namespace reqkit::classification {

namespace {

// Per-variable interval under intersection. Constraints are per-variable
// comparisons, so emptiness per variable decides consistency exactly.
struct Interval {
    bool has_lo = false, lo_strict = false;
    bool has_hi = false, hi_strict = false;
    Rational lo, hi;

    void constrain_lo(Rational v, bool strict) {
        if (!has_lo || v > lo || (v == lo && strict)) {
            has_lo = true;
            lo = v;
            lo_strict = strict;
        }
    }
    void constrain_hi(Rational v, bool strict) {
        if (!has_hi || v < hi || (v == hi && strict)) {
            has_hi = true;
            hi = v;
            hi_strict = strict;
        }
    }
    bool nonempty() const {
        if (!has_lo || !has_hi)
            return true;
        if (lo < hi)
            return true;
        return lo == hi && !lo_strict && !hi_strict;
    }
};

struct Classifier {
    Classification operator()(const dsl::BoundedResponse&) const { return {true, true}; }
    Classification operator()(const dsl::UnboundedResponse&) const { return {true, false}; }
    Classification operator()(const dsl::WindowedRatio& f) const {
        // Without a window the instance space of the percentage is unbounded,
        // so neither satisfaction nor violation can ever be concluded.
        if (!f.window)
            return {false, false};
        return {true, true};
    }
    Classification operator()(const dsl::Instantaneous&) const { return {true, true}; }
    Classification operator()(const dsl::StateInvariant& f) const {
        // An inconsistent invariant has an empty legal-state set: not
        // satisfiable, and trivially falsifiable (every state is illegal).
        return {check_invariant_consistency(f.condition), true};
    }
    Classification operator()(const dsl::RateFloor&) const { return {true, true}; }
    Classification operator()(const dsl::Fifo&) const { return {true, true}; }
    Classification operator()(const dsl::VagueQualified&) const { return {false, false}; }
};

void add_diagnostics(const dsl::Requirement& r, Classification cls, std::vector<std::string>& out) {
    if (const auto* wr = std::get_if<dsl::WindowedRatio>(&r.form); wr && !wr->window)
        out.push_back("ratio over an unbounded instance space: no evaluation window given");
    if (const auto* vq = std::get_if<dsl::VagueQualified>(&r.form))
        out.push_back(std::string("vague qualifier '") + dsl::qualifier_token(vq->qualifier) +
                      "': yields no criterion to judge violation");
    if (const auto* si = std::get_if<dsl::StateInvariant>(&r.form); si && !cls.satisfiable)
        out.push_back("inconsistent condition '" + dsl::format_condition(si->condition) +
                      "': every environment state is illegal");
    if (std::holds_alternative<dsl::UnboundedResponse>(r.form))
        out.push_back("no time bound: a violation can never be observed");
    if (vague(cls))
        out.push_back("neither satisfiable nor falsifiable: vague");
}

} // namespace

Classification classify(const dsl::Requirement& r) {
    return std::visit(Classifier{}, r.form);
}

bool check_invariant_consistency(const dsl::StateCondition& c) {
    std::map<std::string, Interval> intervals;
    for (const auto& atom : c.conjuncts) {
        Interval& iv = intervals[atom.variable];
        switch (atom.cmp) {
        case dsl::Comparator::Lt: iv.constrain_hi(atom.threshold, true); break;
        case dsl::Comparator::Le: iv.constrain_hi(atom.threshold, false); break;
        case dsl::Comparator::Eq:
            iv.constrain_lo(atom.threshold, false);
            iv.constrain_hi(atom.threshold, false);
            break;
        case dsl::Comparator::Ge: iv.constrain_lo(atom.threshold, false); break;
        case dsl::Comparator::Gt: iv.constrain_lo(atom.threshold, true); break;
        case dsl::Comparator::IsTrue:
            iv.constrain_lo(Rational(1), false);
            iv.constrain_hi(Rational(1), false);
            break;
        case dsl::Comparator::IsFalse:
            iv.constrain_lo(Rational(0), false);
            iv.constrain_hi(Rational(0), false);
            break;
        }
    }
    for (const auto& [var, iv] : intervals)
        if (!iv.nonempty())
            return false;
    return true;
}

std::vector<RequirementDiagnosis> classify_set(const dsl::RequirementSet& rs) {
    std::vector<RequirementDiagnosis> rows;
    rows.reserve(rs.requirements.size());
    for (const auto& r : rs.requirements) {
        RequirementDiagnosis row;
        row.id = r.id;
        row.form = dsl::form_name(r.form);
        row.cls = classify(r);
        add_diagnostics(r, row.cls, row.diagnostics);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace reqkit::classification
