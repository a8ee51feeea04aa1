// trace.hpp - timed environment traces, the observable input of the monitor
// Copyright 2026 the reqkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reqkit/ast.hpp"
#include "reqkit/errors.hpp"

namespace reqkit::monitoring {

/// An event occurrence; the key is the instance value of the correlation
/// variable (e.g. the order id).
struct Event {
    std::string name;
    std::optional<std::string> key;
    Minutes t = 0;

    friend bool operator==(const Event&, const Event&) = default;
};

/// A state variable sample. Between samples the variable keeps its last
/// sampled value; before its first sample it is undefined.
struct Sample {
    std::string variable;
    Rational value;
    Minutes t = 0;

    friend bool operator==(const Sample&, const Sample&) = default;
};

/// A finite observation of the environment, closed at end_time. Events and
/// samples are nondecreasing in t, all timestamps are in [0, end_time].
struct Trace {
    std::vector<Event> events;
    std::vector<Sample> samples;
    Minutes end_time = 0;

    /// Sorted, deduplicated union of event times, sample times and end_time.
    std::vector<Minutes> observation_points() const;

    friend bool operator==(const Trace&, const Trace&) = default;
};

/// Parses a trace document. Line formats:
///
///   event <name> [<key>] <t>
///   sample <var> <value> <t>
///   end <t>
///
/// `#` comments. Timestamps are canonical minutes and must be nondecreasing
/// over the whole file; `end` must be the last record and is mandatory.
Trace load_trace(std::string_view text);

} // namespace reqkit::monitoring
