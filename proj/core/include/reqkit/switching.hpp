// switching.hpp - machine-switching and mode-switching adaptive systems
// Copyright 2026 the reqkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "reqkit/errors.hpp"

namespace reqkit::switching {

/// Total assignment of the declared environment variables.
struct Valuation {
    std::map<std::string, bool> assignment;

    bool value(const std::string& var) const;

    friend bool operator==(const Valuation&, const Valuation&) = default;
};

struct Literal {
    std::string var;
    bool positive = true;

    auto operator<=>(const Literal&) const = default;
};

/// Conjunction of literals; used both for domain assumptions (K) and for
/// modes (E). An empty condition holds everywhere. A condition containing a
/// variable with both polarities is inconsistent and holds nowhere.
struct Condition {
    std::set<Literal> literals;

    bool consistent() const;
    bool satisfied_by(const Valuation& v) const; // inconsistent -> false
    /// Set union of literals; the Theorem 1 construction K u E.
    static Condition union_of(const Condition& a, const Condition& b);

    friend bool operator==(const Condition&, const Condition&) = default;
    friend bool operator<(const Condition& a, const Condition& b) { return a.literals < b.literals; }
};

struct MachinePair {
    Condition assumptions; // K
    std::string machine;   // S, an opaque identifier; machines are not executed here

    friend bool operator==(const MachinePair&, const MachinePair&) = default;
};

/// The <K, S, mu> tuple as a list of (K, S) pairs over a declared variable
/// universe. Validated systems have distinct machines, distinct K's, and
/// pairwise disjoint K's (no valuation satisfies two).
struct MachineSwitchingSystem {
    std::vector<std::string> vars; // sorted universe
    std::vector<MachinePair> pairs;

    friend bool operator==(const MachineSwitchingSystem&, const MachineSwitchingSystem&) = default;
};

struct BuildWarning {
    std::string message;

    friend bool operator==(const BuildWarning&, const BuildWarning&) = default;
};

/// Validating constructor. Inconsistent K's are unreachable and are dropped
/// with a warning; duplicate machines and overlapping K's (witness valuation
/// reported) throw ValidationError.
MachineSwitchingSystem build_machine_switching(std::vector<std::string> vars, std::vector<MachinePair> pairs,
                                               std::vector<BuildWarning>* warnings = nullptr);

struct ModePair {
    Condition mode; // E
    MachineSwitchingSystem system;

    friend bool operator==(const ModePair&, const ModePair&) = default;
};

/// The <E, M, xi> tuple: one machine-switching system per mode. Requirements
/// appear nowhere in it - by the time a system exists they have been
/// engineered away into the (K, S) pairs.
struct ModeSwitchingSystem {
    std::vector<std::string> vars;
    std::vector<ModePair> pairs;

    friend bool operator==(const ModeSwitchingSystem&, const ModeSwitchingSystem&) = default;
};

ModeSwitchingSystem build_mode_switching(std::vector<std::string> vars, std::vector<ModePair> pairs,
                                         std::vector<BuildWarning>* warnings = nullptr);

/// The machine whose K the valuation mirrors, or nullopt (HOLD): the
/// controller then continues to operate its current machine.
std::optional<std::string> select(const MachineSwitchingSystem& sys, const Valuation& v);

/// Two-level selection: the matching mode's inner system selects the machine.
/// No match at either level is a HOLD. Machine names are reported with the
/// same disambiguation flatten uses, so mode systems and their flattenings
/// are comparable machine-for-machine.
std::optional<std::string> select(const ModeSwitchingSystem& sys, const Valuation& v);

using AnySystem = std::variant<MachineSwitchingSystem, ModeSwitchingSystem>;

/// Stateful controller with hold semantics. Starts at the null machine
/// (nullopt); a step that selects nothing leaves the state unchanged.
class Controller {
public:
    explicit Controller(const AnySystem& sys) : sys_(&sys) {}

    std::optional<std::string> step(const Valuation& v);
    std::optional<std::string> current() const { return current_; }

private:
    const AnySystem* sys_;
    std::optional<std::string> current_;
};

/// Folds the controller over the valuation sequence; element i is the machine
/// in operation after step i (nullopt = null machine).
std::vector<std::optional<std::string>> controller_run(const AnySystem& sys,
                                                       const std::vector<Valuation>& steps);

/// The Theorem 1 construction: pairs (K_j^i u E_i, S_j^i) for all i, j.
/// Inconsistent unions are retained (unreachable). When a machine id appears
/// in more than one inner system it is disambiguated as "id@<mode index>".
MachineSwitchingSystem flatten(const ModeSwitchingSystem& ms);

struct EquivalenceResult {
    bool equal = true;
    std::optional<Valuation> counterexample; // first differing valuation

    friend bool operator==(const EquivalenceResult&, const EquivalenceResult&) = default;
};

/// Exhaustive equivalence over all valuations of vars (at most 20 variables):
/// both systems must put the same machine into operation after one controller
/// step from the null state (HOLD counts as null on both sides). Throws
/// ValidationError on a variable-universe mismatch.
EquivalenceResult equivalent(const AnySystem& a, const AnySystem& b, const std::vector<std::string>& vars);

/// The modal requirement as a case statement: each mode maps to the
/// requirement ids that apply in it.
struct ModeRequirementTable {
    std::vector<std::string> vars;
    std::vector<std::pair<Condition, std::set<std::string>>> rows; // disjoint modes

    friend bool operator==(const ModeRequirementTable&, const ModeRequirementTable&) = default;
};

enum class Criticality { Critical, Noncritical };

/// CRITICAL iff the requirement is applicable in every mode.
std::map<std::string, Criticality> criticality(const ModeRequirementTable& t);

const char* criticality_name(Criticality c);

// --- file format -------------------------------------------------------

/// Contents of a switching-system document; at most one system kind per file.
struct SwitchingFile {
    std::vector<std::string> vars;
    std::optional<MachineSwitchingSystem> machine_system;
    std::optional<ModeSwitchingSystem> mode_system;
    std::optional<ModeRequirementTable> table;
    std::vector<BuildWarning> warnings;
};

/// Parses the switching-system format:
///
///   vars e k
///   machine S0 S1            # optional id declarations
///   pair {e,!k} S1           # machine-switching pair
///   mode {e} { pair {k} S0 ; pair {!k} S1 }
///   modes-reqs {e} {R1,R2}
///
/// `#` comments. Conditions are brace-enclosed literal lists over declared
/// variables; `!` negates.
SwitchingFile parse_switching_file(std::string_view text);

/// One valuation per line as `var=0|1` (or true/false) tokens; every declared
/// variable must be assigned.
std::vector<Valuation> parse_valuation_sequence(std::string_view text, const std::vector<std::string>& vars);

std::string format_condition(const Condition& c);
std::string format_valuation(const Valuation& v);

} // namespace reqkit::switching
