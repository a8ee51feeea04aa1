// goal_model.hpp - AND-OR goal models, happy sets and the designated set
// Copyright 2026 the reqkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "reqkit/ast.hpp"
#include "reqkit/classification.hpp"
#include "reqkit/errors.hpp"

namespace reqkit::goals {

enum class GoalKind { Hard, Soft };
enum class DecompType { And, Or };
enum class ContribSign { Plus, Minus };

struct Goal {
    std::string id;
    GoalKind kind = GoalKind::Hard;
    bool mandatory = false;
    bool optional = false;
    std::optional<std::string> requirement_ref;

    friend bool operator==(const Goal&, const Goal&) = default;
};

struct Decomposition {
    std::string parent;
    DecompType type = DecompType::And;
    std::vector<std::string> children;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

struct Contribution {
    std::string source;
    ContribSign sign = ContribSign::Plus;
    std::string target; // must be a soft goal

    friend bool operator==(const Contribution&, const Contribution&) = default;
};

using LeafSet = std::set<std::string>;

struct GoalModel {
    std::vector<Goal> goals;
    std::vector<Decomposition> decompositions;
    std::vector<Contribution> contributions;
    std::vector<LeafSet> preferences; // stakeholder-declared selections

    const Goal* find(std::string_view id) const;
    bool is_leaf(std::string_view id) const;   // hard goal without a decomposition
    std::vector<std::string> leaves() const;   // sorted
    /// Hard goals that must hold in every adoption: non-optional roots plus
    /// goals explicitly marked mandatory.
    std::vector<std::string> obligations() const;

    friend bool operator==(const GoalModel&, const GoalModel&) = default;
};

/// Parses a goal model document. Line formats:
///
///   goal <id> [mandatory] [optional] [req <reqId>]
///   soft <id>
///   decompose <parent> AND|OR <child>+
///   contrib <goal> +|- <soft>
///   prefer {<leaf>,...}
///
/// Validates: acyclic decompositions, at most one decomposition per parent,
/// contributions target soft goals only, preference sets contain only leaves.
GoalModel parse_goal_model(std::string_view text);

/// AND-OR propagation: a leaf holds iff adopted, an AND node iff all children
/// hold, an OR node iff some child holds. Throws ValidationError if adoption
/// contains a non-leaf. The returned map covers every hard goal.
std::map<std::string, bool> propagate(const GoalModel& m, const LeafSet& adoption);

/// Adoption sets of leaves that satisfy every obligation, enumerated
/// exhaustively over leaf subsets (desk scale: at most 20 leaves).
std::vector<LeafSet> variants(const GoalModel& m);

/// A set of leaves whose joint satisfaction meets the stakeholder's minimum
/// expectations. Constructed only by happy_sets / designate.
struct HappySet {
    LeafSet leaves;

    friend bool operator==(const HappySet&, const HappySet&) = default;
};

struct HappySetsResult {
    std::vector<HappySet> sets;
    /// Set when conflicting softgoal contributions leave no happy set.
    std::optional<std::string> diagnostic;

    friend bool operator==(const HappySetsResult&, const HappySetsResult&) = default;
};

/// Happy sets of the model:
///  - preferences declared: exactly the declared selections (each must be a
///    variant, else ValidationError);
///  - conflicting contributions and no preference: empty, with the
///    "requires further elicitation" diagnostic;
///  - otherwise: the variants (optional goals may be present or absent).
HappySetsResult happy_sets(const GoalModel& m);

/// The happy set the engineer elevates for engineering. Every member is of
/// equal prescriptive status: the type carries no optional/preference/
/// criticality metadata, so none can survive designation.
struct DesignatedSet {
    dsl::RequirementSet requirements;

    friend bool operator==(const DesignatedSet&, const DesignatedSet&) = default;
};

/// Resolves each leaf's requirement reference and strips all annotations.
/// Throws ValidationError when h is not a happy set of m or a reference does
/// not resolve in rs.
DesignatedSet designate(const GoalModel& m, const HappySet& h, const dsl::RequirementSet& rs);

struct ObservabilityEntry {
    std::string id;
    classification::Classification cls;

    friend bool operator==(const ObservabilityEntry&, const ObservabilityEntry&) = default;
};

/// Result of the complete-observability gate: every member of the designated
/// set must be both satisfiable and falsifiable.
struct ObservabilityReport {
    bool passed = true;
    std::vector<ObservabilityEntry> entries;
    std::vector<std::string> failures; // human-readable, one per failing member

    friend bool operator==(const ObservabilityReport&, const ObservabilityReport&) = default;
};

ObservabilityReport check_designated(const DesignatedSet& d);

} // namespace reqkit::goals
