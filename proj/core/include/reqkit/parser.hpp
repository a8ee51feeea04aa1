// parser.hpp - requirements DSL parser
// Copyright 2026 the reqkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <string_view>

#include "reqkit/ast.hpp"
#include "reqkit/errors.hpp"

namespace reqkit::dsl {

/// Parses a requirements document. One statement per line:
///
///   req R1: when requested(x) then ordered(x) within 2 days
///
/// `#` starts a comment; blank lines are ignored. Throws ParseError with
/// line/column on syntax errors, duplicate ids and mismatched correlation
/// keys. Parsing is deterministic: the same input yields the same AST.
RequirementSet parse_requirements(std::string_view text);

} // namespace reqkit::dsl
