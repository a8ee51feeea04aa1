// ast.hpp - abstract syntax for the requirements DSL
// Copyright 2026 the reqkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "reqkit/rational.hpp"

namespace reqkit {

/// All timestamps and durations are canonical integer minutes.
using Minutes = std::int64_t;

namespace dsl {

enum class TimeUnit { Minute, Hour, Day };

struct Duration {
    std::int64_t magnitude = 0; // >= 0
    TimeUnit unit = TimeUnit::Minute;

    Minutes minutes() const {
        switch (unit) {
        case TimeUnit::Minute: return magnitude;
        case TimeUnit::Hour: return magnitude * 60;
        case TimeUnit::Day: return magnitude * 1440;
        }
        return magnitude;
    }

    friend bool operator==(const Duration&, const Duration&) = default;
};

/// An event predicate over the environment, e.g. requested(x). The key names
/// the correlation variable that ties trigger and response instances together;
/// a pattern has at most one.
struct EventPattern {
    std::string name;
    std::optional<std::string> key;

    friend bool operator==(const EventPattern&, const EventPattern&) = default;
};

enum class Comparator { Lt, Le, Eq, Ge, Gt, IsTrue, IsFalse };

/// One conjunct of a state condition. For IsTrue/IsFalse the threshold is
/// fixed to 1 resp. 0 (boolean state variables are sampled as 0/1).
struct ConditionAtom {
    std::string variable;
    Comparator cmp = Comparator::Eq;
    Rational threshold;

    friend bool operator==(const ConditionAtom&, const ConditionAtom&) = default;
};

/// Nonempty conjunction of per-variable constraints.
struct StateCondition {
    std::vector<ConditionAtom> conjuncts;

    friend bool operator==(const StateCondition&, const StateCondition&) = default;
};

// --- the requirement forms -------------------------------------------------

/// "when trigger then response within <deadline>"
struct BoundedResponse {
    EventPattern trigger;
    EventPattern response;
    Duration deadline;

    friend bool operator==(const BoundedResponse&, const BoundedResponse&) = default;
};

/// "when trigger then eventually response" (no time bound)
struct UnboundedResponse {
    EventPattern trigger;
    EventPattern response;

    friend bool operator==(const UnboundedResponse&, const UnboundedResponse&) = default;
};

/// "when trigger then response within <deadline> in at least <ratio> % of
/// instances [per <window>]". Without the window the instance space is
/// unbounded and the requirement is vague.
struct WindowedRatio {
    EventPattern trigger;
    EventPattern response;
    Duration deadline;
    Rational min_ratio; // in (0, 1]
    std::optional<Duration> window;

    friend bool operator==(const WindowedRatio&, const WindowedRatio&) = default;
};

/// "at every observation condition implies consequent" - to be met within the
/// same observation, not eventually.
struct Instantaneous {
    StateCondition condition;
    StateCondition consequent;

    friend bool operator==(const Instantaneous&, const Instantaneous&) = default;
};

/// "always condition"
struct StateInvariant {
    StateCondition condition;

    friend bool operator==(const StateInvariant&, const StateInvariant&) = default;
};

/// "rate event >= <min_count> per <window>"
struct RateFloor {
    EventPattern event;
    std::int64_t min_count = 1; // > 0
    Duration window;

    friend bool operator==(const RateFloor&, const RateFloor&) = default;
};

/// "fifo entry -> exit": instances must leave in the order they arrived.
struct Fifo {
    EventPattern entry;
    EventPattern exit;

    friend bool operator==(const Fifo&, const Fifo&) = default;
};

enum class VagueQualifier { AsSoonAsPossible, High, Fairly, UndulyLong, AsManyAsPossible };

/// A response requirement softened by a qualifier word. Parseable on purpose:
/// the toolkit diagnoses these instead of rejecting them at the syntax layer.
struct VagueQualified {
    EventPattern trigger;
    EventPattern response;
    VagueQualifier qualifier = VagueQualifier::AsSoonAsPossible;

    friend bool operator==(const VagueQualified&, const VagueQualified&) = default;
};

using RequirementForm = std::variant<BoundedResponse, UnboundedResponse, WindowedRatio, Instantaneous,
                                     StateInvariant, RateFloor, Fifo, VagueQualified>;

struct Requirement {
    std::string id;
    RequirementForm form;

    friend bool operator==(const Requirement&, const Requirement&) = default;
};

/// Ordered list of requirements with unique ids.
struct RequirementSet {
    std::vector<Requirement> requirements;

    const Requirement* find(std::string_view id) const {
        for (const auto& r : requirements)
            if (r.id == id)
                return &r;
        return nullptr;
    }

    friend bool operator==(const RequirementSet&, const RequirementSet&) = default;
};

/// Stable short name of a form, e.g. "bounded-response".
const char* form_name(const RequirementForm& form);

/// Surface token of a qualifier, e.g. "as_soon_as_possible".
const char* qualifier_token(VagueQualifier q);

/// Surface token of a comparator, e.g. "<=". IsTrue/IsFalse have no token.
const char* comparator_token(Comparator cmp);

/// Surface token of a time unit, e.g. "days" (plural form).
const char* unit_token(TimeUnit unit, bool plural = true);

} // namespace dsl
} // namespace reqkit
