// report.cpp - text and JSON rendering; JSON round-trips to identical text
// Copyright 2026 the reqkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "reqkit/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "reqkit/printer.hpp"

namespace reqkit::report {

using nlohmann::ordered_json;

namespace {

std::string pad(std::string s, std::size_t width) {
    while (s.size() < width)
        s += ' ';
    return s;
}

ordered_json parse_json(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw Error(std::string("malformed report JSON: ") + e.what());
    }
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (const auto& item : items) {
        if (!out.empty())
            out += sep;
        out += item;
    }
    return out;
}

std::string braced(const std::vector<std::string>& items) { return "{" + join(items, ",") + "}"; }

// --- judgments ---

struct JudgmentToJson {
    ordered_json operator()(const monitoring::InstanceSatisfied& j) const {
        ordered_json o{{"kind", "instance-satisfied"}};
        if (j.key)
            o["key"] = *j.key;
        o["tTrigger"] = j.t_trigger;
        o["tResponse"] = j.t_response;
        return o;
    }
    ordered_json operator()(const monitoring::Violated& j) const {
        return ordered_json{{"kind", "violated"}, {"t", j.t}, {"witness", j.witness}};
    }
    ordered_json operator()(const monitoring::WindowSatisfied& j) const {
        return ordered_json{{"kind", "window-satisfied"}, {"window", j.window_index}, {"ratio", j.ratio.str()}};
    }
    ordered_json operator()(const monitoring::WindowViolated& j) const {
        return ordered_json{{"kind", "window-violated"}, {"window", j.window_index}, {"ratio", j.ratio.str()}};
    }
    ordered_json operator()(const monitoring::Pending& j) const {
        ordered_json o{{"kind", "pending"}};
        if (j.key)
            o["key"] = *j.key;
        o["tTrigger"] = j.t_trigger;
        if (j.window_index)
            o["window"] = *j.window_index;
        return o;
    }
};

monitoring::Judgment judgment_from_json(const ordered_json& o) {
    const std::string kind = o.at("kind");
    if (kind == "instance-satisfied") {
        monitoring::InstanceSatisfied j;
        if (o.contains("key"))
            j.key = o.at("key").get<std::string>();
        j.t_trigger = o.at("tTrigger").get<Minutes>();
        j.t_response = o.at("tResponse").get<Minutes>();
        return j;
    }
    if (kind == "violated")
        return monitoring::Violated{o.at("t").get<Minutes>(), o.at("witness").get<std::string>()};
    if (kind == "window-satisfied" || kind == "window-violated") {
        const auto ratio = Rational::parse(o.at("ratio").get<std::string>());
        if (!ratio)
            throw Error("malformed ratio in report JSON");
        if (kind == "window-satisfied")
            return monitoring::WindowSatisfied{o.at("window").get<int>(), *ratio};
        return monitoring::WindowViolated{o.at("window").get<int>(), *ratio};
    }
    if (kind == "pending") {
        monitoring::Pending j;
        if (o.contains("key"))
            j.key = o.at("key").get<std::string>();
        j.t_trigger = o.at("tTrigger").get<Minutes>();
        if (o.contains("window"))
            j.window_index = o.at("window").get<int>();
        return j;
    }
    throw Error("unknown judgment kind '" + kind + "' in report JSON");
}

struct JudgmentToText {
    std::string operator()(const monitoring::InstanceSatisfied& j) const {
        std::string out = "satisfied instance";
        if (j.key)
            out += " key=" + *j.key;
        return out + " trigger=" + std::to_string(j.t_trigger) + " response=" + std::to_string(j.t_response);
    }
    std::string operator()(const monitoring::Violated& j) const {
        return "violated at t=" + std::to_string(j.t) + ": " + j.witness;
    }
    std::string operator()(const monitoring::WindowSatisfied& j) const {
        return "window " + std::to_string(j.window_index) + " satisfied (" + j.ratio.str() + ")";
    }
    std::string operator()(const monitoring::WindowViolated& j) const {
        return "window " + std::to_string(j.window_index) + " violated (" + j.ratio.str() + ")";
    }
    std::string operator()(const monitoring::Pending& j) const {
        std::string out = "pending";
        if (j.window_index)
            out += " window " + std::to_string(*j.window_index);
        if (j.key)
            out += " key=" + *j.key;
        return out + " since t=" + std::to_string(j.t_trigger);
    }
};

} // namespace

// --- classify ---------------------------------------------------------

bool MonitorSetReport::any_violated() const {
    for (const auto& entry : entries)
        if (entry.report && entry.report->overall == monitoring::Overall::Violated)
            return true;
    return false;
}

std::string to_text(const ClassifyReport& r) {
    std::size_t id_w = 2, form_w = 4;
    for (const auto& row : r.rows) {
        id_w = std::max(id_w, row.id.size());
        form_w = std::max(form_w, row.form.size());
    }
    std::ostringstream out;
    out << pad("id", id_w) << "  " << pad("form", form_w) << "  satisfiable  falsifiable  vague\n";
    for (const auto& row : r.rows) {
        out << pad(row.id, id_w) << "  " << pad(row.form, form_w) << "  "
            << pad(row.cls.satisfiable ? "yes" : "no", 11) << "  "
            << pad(row.cls.falsifiable ? "yes" : "no", 11) << "  "
            << (classification::vague(row.cls) ? "yes" : "no") << "\n";
        for (const auto& d : row.diagnostics)
            out << pad("", id_w) << "  - " << d << "\n";
    }
    return out.str();
}

std::string to_json_string(const ClassifyReport& r) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : r.rows) {
        rows.push_back(ordered_json{{"id", row.id},
                                    {"form", row.form},
                                    {"satisfiable", row.cls.satisfiable},
                                    {"falsifiable", row.cls.falsifiable},
                                    {"vague", classification::vague(row.cls)},
                                    {"diagnostics", row.diagnostics}});
    }
    return ordered_json{{"requirements", rows}}.dump(2) + "\n";
}

ClassifyReport classify_report_from_json(const std::string& text) {
    const auto o = parse_json(text);
    ClassifyReport r;
    for (const auto& row : o.at("requirements")) {
        classification::RequirementDiagnosis d;
        d.id = row.at("id").get<std::string>();
        d.form = row.at("form").get<std::string>();
        d.cls.satisfiable = row.at("satisfiable").get<bool>();
        d.cls.falsifiable = row.at("falsifiable").get<bool>();
        d.diagnostics = row.at("diagnostics").get<std::vector<std::string>>();
        r.rows.push_back(std::move(d));
    }
    return r;
}

// --- monitor ----------------------------------------------------------

std::string to_text(const MonitorSetReport& r) {
    std::ostringstream out;
    for (const auto& entry : r.entries) {
        if (entry.not_monitorable) {
            out << entry.id << ": not monitorable: " << *entry.not_monitorable << "\n";
            continue;
        }
        out << entry.id << ": " << monitoring::overall_name(entry.report->overall) << "\n";
        for (const auto& j : entry.report->judgments)
            out << "  " << std::visit(JudgmentToText{}, j) << "\n";
    }
    return out.str();
}

std::string to_json_string(const MonitorSetReport& r) {
    ordered_json reports = ordered_json::array();
    for (const auto& entry : r.entries) {
        ordered_json o{{"id", entry.id}};
        if (entry.not_monitorable) {
            o["monitorable"] = false;
            o["reason"] = *entry.not_monitorable;
        } else {
            o["monitorable"] = true;
            ordered_json judgments = ordered_json::array();
            for (const auto& j : entry.report->judgments)
                judgments.push_back(std::visit(JudgmentToJson{}, j));
            o["judgments"] = judgments;
            o["overall"] = monitoring::overall_name(entry.report->overall);
        }
        reports.push_back(std::move(o));
    }
    return ordered_json{{"reports", reports}}.dump(2) + "\n";
}

MonitorSetReport monitor_report_from_json(const std::string& text) {
    const auto o = parse_json(text);
    MonitorSetReport r;
    for (const auto& row : o.at("reports")) {
        MonitorSetReport::Entry entry;
        entry.id = row.at("id").get<std::string>();
        if (!row.at("monitorable").get<bool>()) {
            entry.not_monitorable = row.at("reason").get<std::string>();
        } else {
            monitoring::MonitorReport mr;
            mr.requirement_id = entry.id;
            for (const auto& j : row.at("judgments"))
                mr.judgments.push_back(judgment_from_json(j));
            mr.overall = row.at("overall").get<std::string>() == "VIOLATED"
                             ? monitoring::Overall::Violated
                             : monitoring::Overall::NoViolationObserved;
            entry.report = std::move(mr);
        }
        r.entries.push_back(std::move(entry));
    }
    return r;
}

// --- goals ------------------------------------------------------------

std::string to_text(const GoalSetsReport& r) {
    std::ostringstream out;
    out << r.kind << ":" << (r.sets.empty() ? " (none)" : "") << "\n";
    for (const auto& s : r.sets)
        out << "  " << braced(s) << "\n";
    if (r.diagnostic)
        out << "  " << *r.diagnostic << "\n";
    return out.str();
}

std::string to_json_string(const GoalSetsReport& r) {
    ordered_json o{{"kind", r.kind}, {"sets", r.sets}};
    if (r.diagnostic)
        o["diagnostic"] = *r.diagnostic;
    return o.dump(2) + "\n";
}

GoalSetsReport goal_sets_report_from_json(const std::string& text) {
    const auto o = parse_json(text);
    GoalSetsReport r;
    r.kind = o.at("kind").get<std::string>();
    r.sets = o.at("sets").get<std::vector<std::vector<std::string>>>();
    if (o.contains("diagnostic"))
        r.diagnostic = o.at("diagnostic").get<std::string>();
    return r;
}

namespace {

std::string observability_text(const goals::ObservabilityReport& o) {
    std::ostringstream out;
    out << "complete observability: " << (o.passed ? "PASS" : "FAIL") << "\n";
    for (const auto& e : o.entries)
        out << "  " << e.id << ": satisfiable=" << (e.cls.satisfiable ? "yes" : "no")
            << " falsifiable=" << (e.cls.falsifiable ? "yes" : "no") << "\n";
    for (const auto& f : o.failures)
        out << "  ! " << f << "\n";
    return out.str();
}

ordered_json observability_json(const goals::ObservabilityReport& o) {
    ordered_json entries = ordered_json::array();
    for (const auto& e : o.entries)
        entries.push_back(ordered_json{
            {"id", e.id}, {"satisfiable", e.cls.satisfiable}, {"falsifiable", e.cls.falsifiable}});
    return ordered_json{{"passed", o.passed}, {"entries", entries}, {"failures", o.failures}};
}

goals::ObservabilityReport observability_from_json(const ordered_json& o) {
    goals::ObservabilityReport out;
    out.passed = o.at("passed").get<bool>();
    for (const auto& e : o.at("entries")) {
        goals::ObservabilityEntry entry;
        entry.id = e.at("id").get<std::string>();
        entry.cls.satisfiable = e.at("satisfiable").get<bool>();
        entry.cls.falsifiable = e.at("falsifiable").get<bool>();
        out.entries.push_back(std::move(entry));
    }
    out.failures = o.at("failures").get<std::vector<std::string>>();
    return out;
}

} // namespace

std::string to_text(const DesignationReport& r) {
    std::ostringstream out;
    out << "designated set from " << braced(r.leaves) << ":\n";
    for (const auto& s : r.statements)
        out << "  " << s << "\n";
    out << observability_text(r.observability);
    return out.str();
}

std::string to_json_string(const DesignationReport& r) {
    return ordered_json{{"leaves", r.leaves},
                        {"requirements", r.statements},
                        {"observability", observability_json(r.observability)}}
               .dump(2) +
           "\n";
}

DesignationReport designation_report_from_json(const std::string& text) {
    const auto o = parse_json(text);
    DesignationReport r;
    r.leaves = o.at("leaves").get<std::vector<std::string>>();
    r.statements = o.at("requirements").get<std::vector<std::string>>();
    r.observability = observability_from_json(o.at("observability"));
    return r;
}

std::string to_text(const GoalsCheckReport& r) {
    std::ostringstream out;
    if (r.diagnostic)
        out << "no happy sets: " << *r.diagnostic << "\n";
    for (const auto& row : r.rows) {
        out << "happy set " << braced(row.leaves) << ": " << (row.passed ? "PASS" : "FAIL") << "\n";
        for (const auto& f : row.failures)
            out << "  ! " << f << "\n";
    }
    return out.str();
}

std::string to_json_string(const GoalsCheckReport& r) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : r.rows)
        rows.push_back(
            ordered_json{{"leaves", row.leaves}, {"passed", row.passed}, {"failures", row.failures}});
    ordered_json o{{"happySets", rows}};
    if (r.diagnostic)
        o["diagnostic"] = *r.diagnostic;
    return o.dump(2) + "\n";
}

GoalsCheckReport goals_check_report_from_json(const std::string& text) {
    const auto o = parse_json(text);
    GoalsCheckReport r;
    for (const auto& row : o.at("happySets")) {
        GoalsCheckReport::Row out;
        out.leaves = row.at("leaves").get<std::vector<std::string>>();
        out.passed = row.at("passed").get<bool>();
        out.failures = row.at("failures").get<std::vector<std::string>>();
        r.rows.push_back(std::move(out));
    }
    if (o.contains("diagnostic"))
        r.diagnostic = o.at("diagnostic").get<std::string>();
    return r;
}

// --- switch -----------------------------------------------------------

std::string to_text(const SwitchValidateReport& r) {
    std::ostringstream out;
    out << "kind: " << r.kind << "\n";
    out << "vars: " << join(r.vars, " ") << "\n";
    out << "pairs: " << r.pair_count << "\n";
    for (const auto& w : r.warnings)
        out << "warning: " << w << "\n";
    return out.str();
}

std::string to_json_string(const SwitchValidateReport& r) {
    return ordered_json{
               {"kind", r.kind}, {"vars", r.vars}, {"pairs", r.pair_count}, {"warnings", r.warnings}}
               .dump(2) +
           "\n";
}

SwitchValidateReport switch_validate_report_from_json(const std::string& text) {
    const auto o = parse_json(text);
    SwitchValidateReport r;
    r.kind = o.at("kind").get<std::string>();
    r.vars = o.at("vars").get<std::vector<std::string>>();
    r.pair_count = o.at("pairs").get<int>();
    r.warnings = o.at("warnings").get<std::vector<std::string>>();
    return r;
}

std::string to_text(const FlattenReport& r) {
    // Valid switching-file syntax, so the output can be fed back in.
    std::ostringstream out;
    out << "vars " << join(r.vars, " ") << "\n";
    for (const auto& row : r.rows) {
        out << "pair " << row.condition << " " << row.machine;
        if (!row.reachable)
            out << "  # unreachable";
        out << "\n";
    }
    return out.str();
}

std::string to_json_string(const FlattenReport& r) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : r.rows)
        rows.push_back(ordered_json{
            {"condition", row.condition}, {"machine", row.machine}, {"reachable", row.reachable}});
    return ordered_json{{"vars", r.vars}, {"pairs", rows}}.dump(2) + "\n";
}

FlattenReport flatten_report_from_json(const std::string& text) {
    const auto o = parse_json(text);
    FlattenReport r;
    r.vars = o.at("vars").get<std::vector<std::string>>();
    for (const auto& row : o.at("pairs")) {
        FlattenReport::Row out;
        out.condition = row.at("condition").get<std::string>();
        out.machine = row.at("machine").get<std::string>();
        out.reachable = row.at("reachable").get<bool>();
        r.rows.push_back(std::move(out));
    }
    return r;
}

std::string to_text(const SimulateReport& r) {
    std::ostringstream out;
    for (std::size_t i = 0; i < r.valuations.size(); ++i)
        out << "step " << i + 1 << ": " << r.valuations[i] << " -> " << r.machines[i] << "\n";
    return out.str();
}

std::string to_json_string(const SimulateReport& r) {
    ordered_json steps = ordered_json::array();
    for (std::size_t i = 0; i < r.valuations.size(); ++i)
        steps.push_back(ordered_json{{"valuation", r.valuations[i]}, {"machine", r.machines[i]}});
    return ordered_json{{"steps", steps}}.dump(2) + "\n";
}

SimulateReport simulate_report_from_json(const std::string& text) {
    const auto o = parse_json(text);
    SimulateReport r;
    for (const auto& step : o.at("steps")) {
        r.valuations.push_back(step.at("valuation").get<std::string>());
        r.machines.push_back(step.at("machine").get<std::string>());
    }
    return r;
}

std::string to_text(const EquivalenceReport& r) {
    std::ostringstream out;
    out << "equivalent: " << (r.equal ? "yes" : "no") << "\n";
    if (r.counterexample)
        out << "counterexample: " << *r.counterexample << "\n";
    return out.str();
}

std::string to_json_string(const EquivalenceReport& r) {
    ordered_json o{{"equal", r.equal}};
    if (r.counterexample)
        o["counterexample"] = *r.counterexample;
    return o.dump(2) + "\n";
}

EquivalenceReport equivalence_report_from_json(const std::string& text) {
    const auto o = parse_json(text);
    EquivalenceReport r;
    r.equal = o.at("equal").get<bool>();
    if (o.contains("counterexample"))
        r.counterexample = o.at("counterexample").get<std::string>();
    return r;
}

std::string to_text(const CriticalityReport& r) {
    std::size_t id_w = 0;
    for (const auto& [id, c] : r.rows)
        id_w = std::max(id_w, id.size());
    std::ostringstream out;
    for (const auto& [id, c] : r.rows)
        out << pad(id, id_w) << "  " << c << "\n";
    return out.str();
}

std::string to_json_string(const CriticalityReport& r) {
    ordered_json rows = ordered_json::array();
    for (const auto& [id, c] : r.rows)
        rows.push_back(ordered_json{{"id", id}, {"criticality", c}});
    return ordered_json{{"requirements", rows}}.dump(2) + "\n";
}

CriticalityReport criticality_report_from_json(const std::string& text) {
    const auto o = parse_json(text);
    CriticalityReport r;
    for (const auto& row : o.at("requirements"))
        r.rows.emplace_back(row.at("id").get<std::string>(), row.at("criticality").get<std::string>());
    return r;
}

// --- builders ---------------------------------------------------------

ClassifyReport make_classify_report(const dsl::RequirementSet& rs) {
    return ClassifyReport{classification::classify_set(rs)};
}

MonitorSetReport make_monitor_report(const dsl::RequirementSet& rs, const monitoring::Trace& trace) {
    MonitorSetReport out;
    for (auto& [id, entry] : monitoring::monitor_set(rs, trace)) {
        MonitorSetReport::Entry row;
        row.id = id;
        row.report = std::move(entry.report);
        row.not_monitorable = std::move(entry.not_monitorable);
        out.entries.push_back(std::move(row));
    }
    return out;
}

FlattenReport make_flatten_report(const switching::MachineSwitchingSystem& sys) {
    FlattenReport out;
    out.vars = sys.vars;
    for (const auto& p : sys.pairs)
        out.rows.push_back(FlattenReport::Row{switching::format_condition(p.assumptions), p.machine,
                                              p.assumptions.consistent()});
    return out;
}

CriticalityReport make_criticality_report(const switching::ModeRequirementTable& table) {
    CriticalityReport out;
    for (const auto& [id, c] : switching::criticality(table))
        out.rows.emplace_back(id, switching::criticality_name(c));
    return out;
}

} // namespace reqkit::report
