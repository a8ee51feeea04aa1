// switching.cpp - selection, hold semantics, flattening, equivalence
// Copyright 2026 the reqkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "reqkit/switching.hpp"

#include <algorithm>

namespace reqkit::switching {

bool Valuation::value(const std::string& var) const {
    const auto it = assignment.find(var);
    if (it == assignment.end())
        throw ValidationError("valuation does not assign variable '" + var + "'");
    return it->second;
}

bool Condition::consistent() const {
    for (const auto& lit : literals)
        if (literals.count(Literal{lit.var, !lit.positive}))
            return false;
    return true;
}

bool Condition::satisfied_by(const Valuation& v) const {
    for (const auto& lit : literals)
        if (v.value(lit.var) != lit.positive)
            return false;
    return true;
}

Condition Condition::union_of(const Condition& a, const Condition& b) {
    Condition out = a;
    out.literals.insert(b.literals.begin(), b.literals.end());
    return out;
}

namespace {

std::vector<std::string> sorted_unique(std::vector<std::string> vars) {
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

void check_condition_vars(const Condition& c, const std::vector<std::string>& vars, const char* what) {
    for (const auto& lit : c.literals)
        if (!std::binary_search(vars.begin(), vars.end(), lit.var))
            throw ValidationError(std::string(what) + " uses undeclared variable '" + lit.var + "'");
}

// Conditions are conjunctions, so two consistent conditions overlap iff their
// union is consistent; the union extended with all-false elsewhere is then a
// witness valuation.
std::optional<Valuation> overlap_witness(const Condition& a, const Condition& b,
                                         const std::vector<std::string>& vars) {
    const Condition u = Condition::union_of(a, b);
    if (!a.consistent() || !b.consistent() || !u.consistent())
        return std::nullopt;
    Valuation v;
    for (const auto& var : vars)
        v.assignment[var] = false;
    for (const auto& lit : u.literals)
        v.assignment[lit.var] = lit.positive;
    return v;
}

} // namespace

MachineSwitchingSystem build_machine_switching(std::vector<std::string> vars, std::vector<MachinePair> pairs,
                                               std::vector<BuildWarning>* warnings) {
    MachineSwitchingSystem sys;
    sys.vars = sorted_unique(std::move(vars));
    if (sys.vars.empty())
        throw ValidationError("machine-switching system needs a nonempty variable universe");

    std::set<std::string> machines;
    std::set<Condition> conditions;
    for (auto& p : pairs) {
        check_condition_vars(p.assumptions, sys.vars, "domain assumption");
        if (!machines.insert(p.machine).second)
            throw ValidationError("duplicate machine '" + p.machine + "' (mu must be a bijection)");
        if (!p.assumptions.consistent()) {
            if (warnings)
                warnings->push_back(BuildWarning{"inconsistent domain assumptions " +
                                                 format_condition(p.assumptions) + " for machine '" +
                                                 p.machine + "': pair unreachable, dropped"});
            continue;
        }
        if (!conditions.insert(p.assumptions).second)
            throw ValidationError("duplicate domain assumptions " + format_condition(p.assumptions));
        for (const auto& other : sys.pairs) {
            if (const auto witness = overlap_witness(p.assumptions, other.assumptions, sys.vars))
                throw ValidationError("overlapping domain assumptions for machines '" + other.machine +
                                      "' and '" + p.machine + "': both match " + format_valuation(*witness));
        }
        sys.pairs.push_back(std::move(p));
    }
    return sys;
}

ModeSwitchingSystem build_mode_switching(std::vector<std::string> vars, std::vector<ModePair> pairs,
                                         std::vector<BuildWarning>* warnings) {
    ModeSwitchingSystem sys;
    sys.vars = sorted_unique(std::move(vars));
    if (sys.vars.empty())
        throw ValidationError("mode-switching system needs a nonempty variable universe");

    std::set<Condition> modes;
    std::vector<const MachineSwitchingSystem*> inner;
    for (auto& p : pairs) {
        check_condition_vars(p.mode, sys.vars, "mode");
        if (!p.mode.consistent()) {
            if (warnings)
                warnings->push_back(BuildWarning{"inconsistent mode " + format_condition(p.mode) +
                                                 ": unreachable, dropped"});
            continue;
        }
        if (!modes.insert(p.mode).second)
            throw ValidationError("duplicate mode " + format_condition(p.mode));
        for (const auto& other : sys.pairs) {
            if (const auto witness = overlap_witness(p.mode, other.mode, sys.vars))
                throw ValidationError("overlapping modes " + format_condition(other.mode) + " and " +
                                      format_condition(p.mode) + ": both match " + format_valuation(*witness));
        }
        for (const auto* seen : inner)
            if (*seen == p.system)
                throw ValidationError("two modes map to the same machine-switching system (xi must be a bijection)");
        sys.pairs.push_back(std::move(p));
        inner.push_back(&sys.pairs.back().system);
    }
    return sys;
}

namespace {

// A machine id used by more than one inner system names distinct machines;
// qualify such ids by their mode index. flatten() and the mode controller
// share this naming so that Theorem 1 instances compare machine-for-machine.
std::set<std::string> duplicated_inner_ids(const ModeSwitchingSystem& sys) {
    std::map<std::string, int> uses;
    for (const auto& mp : sys.pairs) {
        std::set<std::string> ids;
        for (const auto& p : mp.system.pairs)
            ids.insert(p.machine);
        for (const auto& id : ids)
            ++uses[id];
    }
    std::set<std::string> out;
    for (const auto& [id, n] : uses)
        if (n > 1)
            out.insert(id);
    return out;
}

std::string display_name(const std::string& machine, std::size_t mode_index,
                         const std::set<std::string>& duplicated) {
    if (duplicated.count(machine))
        return machine + "@" + std::to_string(mode_index);
    return machine;
}

} // namespace

std::optional<std::string> select(const MachineSwitchingSystem& sys, const Valuation& v) {
    for (const auto& p : sys.pairs)
        if (p.assumptions.satisfied_by(v))
            return p.machine;
    return std::nullopt;
}

std::optional<std::string> select(const ModeSwitchingSystem& sys, const Valuation& v) {
    const auto duplicated = duplicated_inner_ids(sys);
    for (std::size_t i = 0; i < sys.pairs.size(); ++i) {
        if (!sys.pairs[i].mode.satisfied_by(v))
            continue;
        if (const auto machine = select(sys.pairs[i].system, v))
            return display_name(*machine, i, duplicated);
        return std::nullopt; // mode matched, no inner K did: hold
    }
    return std::nullopt;
}

std::optional<std::string> Controller::step(const Valuation& v) {
    const auto selected =
        std::visit([&](const auto& sys) { return select(sys, v); }, *sys_);
    if (selected)
        current_ = selected;
    return current_;
}

std::vector<std::optional<std::string>> controller_run(const AnySystem& sys,
                                                       const std::vector<Valuation>& steps) {
    Controller controller(sys);
    std::vector<std::optional<std::string>> out;
    out.reserve(steps.size());
    for (const auto& v : steps)
        out.push_back(controller.step(v));
    return out;
}

MachineSwitchingSystem flatten(const ModeSwitchingSystem& ms) {
    const auto duplicated = duplicated_inner_ids(ms);
    MachineSwitchingSystem out;
    out.vars = ms.vars;
    for (std::size_t i = 0; i < ms.pairs.size(); ++i) {
        const auto& mode = ms.pairs[i];
        for (const auto& p : mode.system.pairs) {
            MachinePair flat;
            flat.assumptions = Condition::union_of(p.assumptions, mode.mode);
            flat.machine = display_name(p.machine, i, duplicated);
            // Inconsistent unions stay in: they are unreachable, and keeping
            // them makes this the literal Theorem 1 construction.
            out.pairs.push_back(std::move(flat));
        }
    }
    return out;
}

namespace {

std::optional<std::string> one_step_from_null(const AnySystem& sys, const Valuation& v) {
    return std::visit([&](const auto& s) { return select(s, v); }, sys);
}

const std::vector<std::string>& system_vars(const AnySystem& sys) {
    return std::visit([](const auto& s) -> const std::vector<std::string>& { return s.vars; }, sys);
}

} // namespace

EquivalenceResult equivalent(const AnySystem& a, const AnySystem& b, const std::vector<std::string>& vars) {
    const auto universe = sorted_unique(vars);
    if (universe.size() > 20)
        throw ValidationError("equivalence checking is exhaustive; at most 20 variables supported");
    if (system_vars(a) != universe || system_vars(b) != universe)
        throw ValidationError("variable universe mismatch between the systems under comparison");

    const std::size_t n = universe.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        Valuation v;
        for (std::size_t i = 0; i < n; ++i)
            v.assignment[universe[i]] = (mask & (std::size_t(1) << i)) != 0;
        if (one_step_from_null(a, v) != one_step_from_null(b, v))
            return EquivalenceResult{false, v};
    }
    return EquivalenceResult{true, std::nullopt};
}

std::map<std::string, Criticality> criticality(const ModeRequirementTable& t) {
    std::map<std::string, Criticality> out;
    std::set<std::string> all;
    for (const auto& [mode, ids] : t.rows)
        all.insert(ids.begin(), ids.end());
    for (const auto& id : all) {
        bool everywhere = true;
        for (const auto& [mode, ids] : t.rows)
            everywhere = everywhere && ids.count(id) > 0;
        out[id] = everywhere ? Criticality::Critical : Criticality::Noncritical;
    }
    return out;
}

const char* criticality_name(Criticality c) {
    return c == Criticality::Critical ? "CRITICAL" : "NONCRITICAL";
}

std::string format_condition(const Condition& c) {
    std::string out = "{";
    bool first = true;
    for (const auto& lit : c.literals) {
        if (!first)
            out += ",";
        first = false;
        if (!lit.positive)
            out += "!";
        out += lit.var;
    }
    return out + "}";
}

std::string format_valuation(const Valuation& v) {
    std::string out;
    for (const auto& [var, value] : v.assignment) {
        if (!out.empty())
            out += " ";
        out += var + "=" + (value ? "1" : "0");
    }
    return out;
}

} // namespace reqkit::switching
