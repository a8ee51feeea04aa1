// classification.hpp - satisfiability / falsifiability flags per requirement
// Copyright 2026 the reqkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <string>
#include <vector>

#include "reqkit/ast.hpp"

namespace reqkit::classification {

/// A requirement separates legal from illegal environment states. It is
/// satisfiable when satisfaction of at least an instance can be observed,
/// falsifiable when a violation can be observed. Vagueness is derived, never
/// stored: vague iff neither satisfiable nor falsifiable.
struct Classification {
    bool satisfiable = false;
    bool falsifiable = false;

    friend bool operator==(const Classification&, const Classification&) = default;
};

constexpr bool vague(Classification c) { return !c.satisfiable && !c.falsifiable; }

/// Structural classification by form. Total and deterministic:
///
///   bounded response          S  F
///   unbounded response        S  -
///   windowed ratio w/ window  S  F
///   windowed ratio no window  -  -   (vague)
///   instantaneous             S  F
///   state invariant           S*  F   (* satisfiable iff condition consistent)
///   rate floor                S  F
///   fifo                      S  F
///   vague qualified           -  -   (vague)
Classification classify(const dsl::Requirement& r);

/// True iff for every variable the intersection of its interval constraints
/// is nonempty. "temp >= 18 and temp < 18" is inconsistent: every environment
/// state is illegal.
bool check_invariant_consistency(const dsl::StateCondition& c);

/// One row of the classification report.
struct RequirementDiagnosis {
    std::string id;
    std::string form;
    Classification cls;
    std::vector<std::string> diagnostics;

    friend bool operator==(const RequirementDiagnosis&, const RequirementDiagnosis&) = default;
};

std::vector<RequirementDiagnosis> classify_set(const dsl::RequirementSet& rs);

} // namespace reqkit::classification
