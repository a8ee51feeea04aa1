// printer.cpp
// Copyright 2026 the reqkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "reqkit/printer.hpp"

#include <sstream>

namespace reqkit::dsl {

std::string format_event(const EventPattern& e) {
    return e.name + "(" + (e.key ? *e.key : "") + ")";
}

std::string format_duration(const Duration& d) {
    return std::to_string(d.magnitude) + " " + unit_token(d.unit, d.magnitude != 1);
}

std::string format_condition(const StateCondition& c) {
    std::ostringstream out;
    bool first = true;
    for (const auto& atom : c.conjuncts) {
        if (!first)
            out << " and ";
        first = false;
        switch (atom.cmp) {
        case Comparator::IsTrue:
            out << atom.variable;
            break;
        case Comparator::IsFalse:
            out << "not " << atom.variable;
            break;
        default:
            out << atom.variable << " " << comparator_token(atom.cmp) << " " << atom.threshold.str();
        }
    }
    return out.str();
}

namespace {

struct FormPrinter {
    std::string operator()(const BoundedResponse& f) const {
        return "when " + format_event(f.trigger) + " then " + format_event(f.response) + " within " +
               format_duration(f.deadline);
    }
    std::string operator()(const UnboundedResponse& f) const {
        return "when " + format_event(f.trigger) + " then eventually " + format_event(f.response);
    }
    std::string operator()(const WindowedRatio& f) const {
        std::string out = "when " + format_event(f.trigger) + " then " + format_event(f.response) +
                          " within " + format_duration(f.deadline) + " in at least " +
                          (f.min_ratio * Rational(100)).str() + " % of instances";
        if (f.window)
            out += " per " + format_duration(*f.window);
        return out;
    }
    std::string operator()(const Instantaneous& f) const {
        return "at every observation " + format_condition(f.condition) + " implies " +
               format_condition(f.consequent);
    }
    std::string operator()(const StateInvariant& f) const { return "always " + format_condition(f.condition); }
    std::string operator()(const RateFloor& f) const {
        return "rate " + format_event(f.event) + " >= " + std::to_string(f.min_count) + " per " +
               format_duration(f.window);
    }
    std::string operator()(const Fifo& f) const {
        return "fifo " + format_event(f.entry) + " -> " + format_event(f.exit);
    }
    std::string operator()(const VagueQualified& f) const {
        return "when " + format_event(f.trigger) + " then " + std::string(qualifier_token(f.qualifier)) +
               " " + format_event(f.response);
    }
};

} // namespace

std::string format_requirement(const Requirement& r) {
    return "req " + r.id + ": " + std::visit(FormPrinter{}, r.form);
}

std::string format_requirement_set(const RequirementSet& rs) {
    std::string out;
    for (const auto& r : rs.requirements)
        out += format_requirement(r) + "\n";
    return out;
}

} // namespace reqkit::dsl
