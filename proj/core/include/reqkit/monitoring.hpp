// monitoring.hpp - evaluating requirements over traces
// Copyright 2026 the reqkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "reqkit/ast.hpp"
#include "reqkit/errors.hpp"
#include "reqkit/trace.hpp"

namespace reqkit::monitoring {

// Judgments are instance- or window-level. There is deliberately no
// requirement-level "satisfied": the number of instances is unbounded, so the
// monitor can claim satisfaction only per instance or per window.

/// A trigger instance resolved in time (t_response - t_trigger < deadline for
/// bounded forms; any response for unbounded ones).
struct InstanceSatisfied {
    std::optional<std::string> key;
    Minutes t_trigger = 0;
    Minutes t_response = 0;

    friend bool operator==(const InstanceSatisfied&, const InstanceSatisfied&) = default;
};

/// The requirement is violated; t is the observation point at which the
/// violation is reported and witness describes the offending instance.
struct Violated {
    Minutes t = 0;
    std::string witness;

    friend bool operator==(const Violated&, const Violated&) = default;
};

/// Ratio windows: ratio is #resolved-in-deadline / #triggered.
/// Rate windows: ratio carries the event count.
struct WindowSatisfied {
    int window_index = 0;
    Rational ratio;

    friend bool operator==(const WindowSatisfied&, const WindowSatisfied&) = default;
};

struct WindowViolated {
    int window_index = 0;
    Rational ratio;

    friend bool operator==(const WindowViolated&, const WindowViolated&) = default;
};

/// Finite traces are honestly inconclusive: the instance (or the window, when
/// window_index is set) could still be resolved past end_time.
struct Pending {
    std::optional<std::string> key;
    Minutes t_trigger = 0;
    std::optional<int> window_index;

    friend bool operator==(const Pending&, const Pending&) = default;
};

using Judgment = std::variant<InstanceSatisfied, Violated, WindowSatisfied, WindowViolated, Pending>;

/// Overall is VIOLATED iff some Violated/WindowViolated judgment exists.
/// There is no overall "SATISFIED" on purpose.
enum class Overall { Violated, NoViolationObserved };

struct MonitorReport {
    std::string requirement_id;
    std::vector<Judgment> judgments;
    Overall overall = Overall::NoViolationObserved;

    friend bool operator==(const MonitorReport&, const MonitorReport&) = default;
};

/// Evaluates one requirement against a trace. Pure function of its inputs.
/// Preconditions: the requirement is not vague - vague requirements yield no
/// criterion to judge violation and raise NotMonitorableError naming the
/// qualifier or the missing window.
MonitorReport monitor(const dsl::Requirement& r, const Trace& trace);

/// Result entry of monitor_set: either a report or the reason the
/// requirement is not monitorable.
struct SetEntry {
    std::optional<MonitorReport> report;
    std::optional<std::string> not_monitorable;

    friend bool operator==(const SetEntry&, const SetEntry&) = default;
};

/// Elementwise monitoring; vague members are reported as not monitorable
/// without aborting the rest.
std::map<std::string, SetEntry> monitor_set(const dsl::RequirementSet& rs, const Trace& trace);

const char* overall_name(Overall o);

} // namespace reqkit::monitoring
