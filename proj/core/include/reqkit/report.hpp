// report.hpp - text and JSON rendering of analysis results
// Copyright 2026 the reqkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)
//
// Every report type serializes to JSON and back; re-rendering a re-read
// report yields byte-identical text. JSON is exposed as strings so the
// public headers stay free of the JSON library.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reqkit/classification.hpp"
#include "reqkit/goal_model.hpp"
#include "reqkit/monitoring.hpp"
#include "reqkit/switching.hpp"

namespace reqkit::report {

struct ClassifyReport {
    std::vector<classification::RequirementDiagnosis> rows;

    friend bool operator==(const ClassifyReport&, const ClassifyReport&) = default;
};

struct MonitorSetReport {
    struct Entry {
        std::string id;
        std::optional<monitoring::MonitorReport> report;
        std::optional<std::string> not_monitorable;

        friend bool operator==(const Entry&, const Entry&) = default;
    };
    std::vector<Entry> entries;

    bool any_violated() const;

    friend bool operator==(const MonitorSetReport&, const MonitorSetReport&) = default;
};

/// Output of `goals <model> variants|happy-sets`.
struct GoalSetsReport {
    std::string kind; // "variants" or "happy-sets"
    std::vector<std::vector<std::string>> sets; // each sorted
    std::optional<std::string> diagnostic;

    friend bool operator==(const GoalSetsReport&, const GoalSetsReport&) = default;
};

/// Output of `goals <model> designate <set>`: the designated requirements and
/// the complete-observability gate over them.
struct DesignationReport {
    std::vector<std::string> leaves;
    std::vector<std::string> statements; // canonical requirement statements
    goals::ObservabilityReport observability;

    friend bool operator==(const DesignationReport&, const DesignationReport&) = default;
};

/// Output of `goals <model> check`: the gate applied to every happy set.
struct GoalsCheckReport {
    struct Row {
        std::vector<std::string> leaves;
        bool passed = true;
        std::vector<std::string> failures;

        friend bool operator==(const Row&, const Row&) = default;
    };
    std::vector<Row> rows;
    std::optional<std::string> diagnostic; // set when the model has no happy sets

    friend bool operator==(const GoalsCheckReport&, const GoalsCheckReport&) = default;
};

struct SwitchValidateReport {
    std::string kind; // "machine-switching", "mode-switching" or "modes-reqs"
    std::vector<std::string> vars;
    int pair_count = 0;
    std::vector<std::string> warnings;

    friend bool operator==(const SwitchValidateReport&, const SwitchValidateReport&) = default;
};

struct FlattenReport {
    std::vector<std::string> vars;
    struct Row {
        std::string condition;
        std::string machine;
        bool reachable = true;

        friend bool operator==(const Row&, const Row&) = default;
    };
    std::vector<Row> rows;

    friend bool operator==(const FlattenReport&, const FlattenReport&) = default;
};

struct SimulateReport {
    std::vector<std::string> valuations;
    std::vector<std::string> machines; // "null" for the null machine

    friend bool operator==(const SimulateReport&, const SimulateReport&) = default;
};

struct EquivalenceReport {
    bool equal = true;
    std::optional<std::string> counterexample; // full valuation, formatted

    friend bool operator==(const EquivalenceReport&, const EquivalenceReport&) = default;
};

struct CriticalityReport {
    std::vector<std::pair<std::string, std::string>> rows; // id -> CRITICAL/NONCRITICAL

    friend bool operator==(const CriticalityReport&, const CriticalityReport&) = default;
};

// Rendering. to_text output is deterministic (byte-identical across runs for
// identical inputs); from_json(to_json(r)) re-renders to the same text.

std::string to_text(const ClassifyReport&);
std::string to_json_string(const ClassifyReport&);
ClassifyReport classify_report_from_json(const std::string&);

std::string to_text(const MonitorSetReport&);
std::string to_json_string(const MonitorSetReport&);
MonitorSetReport monitor_report_from_json(const std::string&);

std::string to_text(const GoalSetsReport&);
std::string to_json_string(const GoalSetsReport&);
GoalSetsReport goal_sets_report_from_json(const std::string&);

std::string to_text(const DesignationReport&);
std::string to_json_string(const DesignationReport&);
DesignationReport designation_report_from_json(const std::string&);

std::string to_text(const GoalsCheckReport&);
std::string to_json_string(const GoalsCheckReport&);
GoalsCheckReport goals_check_report_from_json(const std::string&);

std::string to_text(const SwitchValidateReport&);
std::string to_json_string(const SwitchValidateReport&);
SwitchValidateReport switch_validate_report_from_json(const std::string&);

std::string to_text(const FlattenReport&);
std::string to_json_string(const FlattenReport&);
FlattenReport flatten_report_from_json(const std::string&);

std::string to_text(const SimulateReport&);
std::string to_json_string(const SimulateReport&);
SimulateReport simulate_report_from_json(const std::string&);

std::string to_text(const EquivalenceReport&);
std::string to_json_string(const EquivalenceReport&);
EquivalenceReport equivalence_report_from_json(const std::string&);

std::string to_text(const CriticalityReport&);
std::string to_json_string(const CriticalityReport&);
CriticalityReport criticality_report_from_json(const std::string&);

// Builders from analysis results.
ClassifyReport make_classify_report(const dsl::RequirementSet& rs);
MonitorSetReport make_monitor_report(const dsl::RequirementSet& rs, const monitoring::Trace& trace);
FlattenReport make_flatten_report(const switching::MachineSwitchingSystem& sys);
CriticalityReport make_criticality_report(const switching::ModeRequirementTable& table);

} // namespace reqkit::report
