// printer.hpp - canonical printing of requirements
// Copyright 2026 the reqkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <string>

#include "reqkit/ast.hpp"

namespace reqkit::dsl {

/// One-line canonical statement, "req <id>: <form>". Round-trips:
/// parse_requirements(format_requirement(r)) reproduces r exactly.
std::string format_requirement(const Requirement& r);

/// The whole set, one statement per line.
std::string format_requirement_set(const RequirementSet& rs);

std::string format_condition(const StateCondition& c);
std::string format_event(const EventPattern& e);
std::string format_duration(const Duration& d);

} // namespace reqkit::dsl
