// ast.cpp
// Copyright 2026 the reqkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "reqkit/ast.hpp"

namespace reqkit::dsl {

const char* form_name(const RequirementForm& form) {
    struct Namer {
        const char* operator()(const BoundedResponse&) const { return "bounded-response"; }
        const char* operator()(const UnboundedResponse&) const { return "unbounded-response"; }
        const char* operator()(const WindowedRatio&) const { return "windowed-ratio"; }
        const char* operator()(const Instantaneous&) const { return "instantaneous"; }
        const char* operator()(const StateInvariant&) const { return "state-invariant"; }
        const char* operator()(const RateFloor&) const { return "rate-floor"; }
        const char* operator()(const Fifo&) const { return "fifo"; }
        const char* operator()(const VagueQualified&) const { return "vague-qualified"; }
    };
    return std::visit(Namer{}, form);
}

const char* qualifier_token(VagueQualifier q) {
    switch (q) {
    case VagueQualifier::AsSoonAsPossible: return "as_soon_as_possible";
    case VagueQualifier::High: return "high";
    case VagueQualifier::Fairly: return "fairly";
    case VagueQualifier::UndulyLong: return "unduly_long";
    case VagueQualifier::AsManyAsPossible: return "as_many_as_possible";
    }
    return "?";
}

const char* comparator_token(Comparator cmp) {
    switch (cmp) {
    case Comparator::Lt: return "<";
    case Comparator::Le: return "<=";
    case Comparator::Eq: return "=";
    case Comparator::Ge: return ">=";
    case Comparator::Gt: return ">";
    case Comparator::IsTrue:
    case Comparator::IsFalse: return "";
    }
    return "";
}

const char* unit_token(TimeUnit unit, bool plural) {
    switch (unit) {
    case TimeUnit::Minute: return plural ? "minutes" : "minute";
    case TimeUnit::Hour: return plural ? "hours" : "hour";
    case TimeUnit::Day: return plural ? "days" : "day";
    }
    return "?";
}

} // namespace reqkit::dsl
