// monitoring.cpp - the observer: instance and window verdicts over traces
// Copyright 2026 the reqkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "reqkit/monitoring.hpp"

#include <algorithm>
#include <map>

#include "reqkit/classification.hpp"
#include "reqkit/printer.hpp"

namespace reqkit::monitoring {

namespace {

// An event matches a pattern by name; a keyed pattern additionally requires
// the event to carry an instance value.
bool pattern_matches(const dsl::EventPattern& p, const Event& e) {
    return e.name == p.name && (!p.key || e.key.has_value());
}

// Earliest time a response matching the instance occurred, anywhere in the
// trace. The derived predicate is closed-world: it holds at t iff a matching
// event occurred at some t' <= t, so an early response also covers later
// triggers of the same instance.
std::optional<Minutes> earliest_response(const dsl::EventPattern& response, const Trace& trace,
                                         const std::optional<std::string>& key) {
    for (const auto& e : trace.events) {
        if (!pattern_matches(response, e))
            continue;
        if (response.key && key && e.key != key)
            continue;
        return e.t;
    }
    return std::nullopt;
}

std::string instance_label(const dsl::EventPattern& p, const std::optional<std::string>& key) {
    return p.name + "(" + (key ? *key : "") + ")";
}

struct Evaluator {
    const dsl::Requirement& req;
    const Trace& trace;
    std::vector<Judgment> out;

    std::optional<std::string> instance_key(const dsl::EventPattern& trigger, const Event& e) const {
        return trigger.key ? e.key : std::nullopt;
    }

    void operator()(const dsl::BoundedResponse& f) {
        const Minutes deadline = f.deadline.minutes();
        const auto obs = trace.observation_points();
        for (const auto& e : trace.events) {
            if (!pattern_matches(f.trigger, e))
                continue;
            const auto key = instance_key(f.trigger, e);
            const auto response = earliest_response(f.response, trace, key);
            if (response && *response - e.t < deadline) {
                out.push_back(InstanceSatisfied{key, e.t, *response});
                continue;
            }
            if (response && *response - e.t == deadline) {
                // Exactly at the bound: diff(t', t) < deadline fails for the
                // instance, but no observable time falsifies the constraint
                // either. Neither judgment applies.
                continue;
            }
            if (trace.end_time - e.t >= deadline) {
                const auto witness = std::lower_bound(obs.begin(), obs.end(), e.t + deadline);
                out.push_back(Violated{*witness, instance_label(f.trigger, key) + " at t=" +
                                                     std::to_string(e.t) + ": no " + f.response.name +
                                                     " within " + std::to_string(deadline) + " minutes"});
            } else {
                out.push_back(Pending{key, e.t, std::nullopt});
            }
        }
    }

    void operator()(const dsl::UnboundedResponse& f) {
        // Never Violated: for any time without the response there is a later
        // time at which it may still occur.
        for (const auto& e : trace.events) {
            if (!pattern_matches(f.trigger, e))
                continue;
            const auto key = instance_key(f.trigger, e);
            if (const auto response = earliest_response(f.response, trace, key))
                out.push_back(InstanceSatisfied{key, e.t, *response});
            else
                out.push_back(Pending{key, e.t, std::nullopt});
        }
    }

    void operator()(const dsl::WindowedRatio& f) {
        const Minutes deadline = f.deadline.minutes();
        const Minutes window = f.window->minutes(); // precondition: not vague
        struct Tally {
            std::int64_t triggered = 0;
            std::int64_t resolved = 0;
        };
        std::map<std::int64_t, Tally> windows; // by trigger attribution
        for (const auto& e : trace.events) {
            if (!pattern_matches(f.trigger, e))
                continue;
            auto& tally = windows[e.t / window];
            ++tally.triggered;
            const auto response = earliest_response(f.response, trace, instance_key(f.trigger, e));
            if (response && *response - e.t < deadline)
                ++tally.resolved;
        }
        for (const auto& [index, tally] : windows) {
            // Judged one deadline after the window closes, so responses that
            // are late in the window but inside the deadline still count.
            if ((index + 1) * window + deadline <= trace.end_time) {
                const Rational ratio(tally.resolved, tally.triggered);
                if (ratio >= f.min_ratio)
                    out.push_back(WindowSatisfied{static_cast<int>(index), ratio});
                else
                    out.push_back(WindowViolated{static_cast<int>(index), ratio});
            } else {
                out.push_back(Pending{std::nullopt, index * window, static_cast<int>(index)});
            }
        }
    }

    void operator()(const dsl::Instantaneous& f) {
        // Sweep the latest-sample environment over every observation point.
        std::map<std::string, Rational> env;
        std::size_t next_sample = 0;
        for (const Minutes t : trace.observation_points()) {
            while (next_sample < trace.samples.size() && trace.samples[next_sample].t <= t) {
                env[trace.samples[next_sample].variable] = trace.samples[next_sample].value;
                ++next_sample;
            }
            if (holds(f.condition, env) && !holds(f.consequent, env))
                out.push_back(Violated{t, "'" + dsl::format_condition(f.condition) + "' holds but '" +
                                              dsl::format_condition(f.consequent) + "' does not"});
        }
    }

    void operator()(const dsl::StateInvariant& f) {
        // Samples only, no interpolation. Points where some conditioned
        // variable has not been sampled yet are not evaluable.
        std::map<std::string, Rational> env;
        std::size_t next_sample = 0;
        std::vector<Minutes> sample_times;
        for (const auto& s : trace.samples)
            if (sample_times.empty() || sample_times.back() != s.t)
                sample_times.push_back(s.t);
        for (const Minutes t : sample_times) {
            while (next_sample < trace.samples.size() && trace.samples[next_sample].t <= t) {
                env[trace.samples[next_sample].variable] = trace.samples[next_sample].value;
                ++next_sample;
            }
            bool evaluable = true;
            for (const auto& atom : f.condition.conjuncts)
                if (!env.count(atom.variable))
                    evaluable = false;
            if (!evaluable)
                continue;
            for (const auto& atom : f.condition.conjuncts) {
                if (!atom_holds(atom, env.at(atom.variable))) {
                    out.push_back(Violated{t, atom.variable + " = " + env.at(atom.variable).str() +
                                                  " breaks '" + dsl::format_condition(f.condition) + "'"});
                    break;
                }
            }
        }
    }

    void operator()(const dsl::RateFloor& f) {
        const Minutes window = f.window.minutes();
        for (std::int64_t index = 0; (index + 1) * window <= trace.end_time; ++index) {
            std::int64_t count = 0;
            for (const auto& e : trace.events)
                if (pattern_matches(f.event, e) && e.t >= index * window && e.t < (index + 1) * window)
                    ++count;
            if (count < f.min_count)
                out.push_back(WindowViolated{static_cast<int>(index), Rational(count)});
            else
                out.push_back(WindowSatisfied{static_cast<int>(index), Rational(count)});
        }
    }

    void operator()(const dsl::Fifo& f) {
        // Order is (t, position): the event list breaks timestamp ties.
        struct Occurrence {
            Minutes t = 0;
            std::size_t pos = 0;
        };
        std::map<std::string, Occurrence> first_entry, first_exit;
        for (std::size_t i = 0; i < trace.events.size(); ++i) {
            const auto& e = trace.events[i];
            if (!e.key)
                continue;
            if (pattern_matches(f.entry, e))
                first_entry.try_emplace(*e.key, Occurrence{e.t, i});
            if (pattern_matches(f.exit, e))
                first_exit.try_emplace(*e.key, Occurrence{e.t, i});
        }

        std::vector<std::pair<std::string, Occurrence>> exits(first_exit.begin(), first_exit.end());
        std::sort(exits.begin(), exits.end(),
                  [](const auto& a, const auto& b) { return a.second.pos < b.second.pos; });

        for (const auto& [key, exit] : exits) {
            const auto entry_it = first_entry.find(key);
            if (entry_it == first_entry.end())
                continue; // exit without an entry: nothing to order against
            const auto entered = entry_it->second;
            // Violated when some earlier-entered instance is still unserved
            // at this exit.
            const std::string* overtaken = nullptr;
            std::size_t overtaken_pos = 0;
            for (const auto& [other, other_entry] : first_entry) {
                if (other == key || other_entry.pos >= entered.pos)
                    continue;
                const auto other_exit = first_exit.find(other);
                if (other_exit != first_exit.end() && other_exit->second.pos < exit.pos)
                    continue;
                if (!overtaken || other_entry.pos < overtaken_pos) {
                    overtaken = &other;
                    overtaken_pos = other_entry.pos;
                }
            }
            if (overtaken)
                out.push_back(Violated{exit.t, key + " served before " + *overtaken});
            else if (entered.pos < exit.pos)
                out.push_back(InstanceSatisfied{key, entered.t, exit.t});
        }

        std::vector<std::pair<std::string, Occurrence>> waiting;
        for (const auto& [key, entry] : first_entry)
            if (!first_exit.count(key))
                waiting.emplace_back(key, entry);
        std::sort(waiting.begin(), waiting.end(),
                  [](const auto& a, const auto& b) { return a.second.pos < b.second.pos; });
        for (const auto& [key, entry] : waiting)
            out.push_back(Pending{key, entry.t, std::nullopt});
    }

    void operator()(const dsl::VagueQualified&) {
        // unreachable: monitor() rejects vague requirements up front
    }

    static bool atom_holds(const dsl::ConditionAtom& atom, const Rational& value) {
        switch (atom.cmp) {
        case dsl::Comparator::Lt: return value < atom.threshold;
        case dsl::Comparator::Le: return value <= atom.threshold;
        case dsl::Comparator::Eq: return value == atom.threshold;
        case dsl::Comparator::Ge: return value >= atom.threshold;
        case dsl::Comparator::Gt: return value > atom.threshold;
        case dsl::Comparator::IsTrue: return value == Rational(1);
        case dsl::Comparator::IsFalse: return value == Rational(0);
        }
        return false;
    }

    static bool holds(const dsl::StateCondition& c, const std::map<std::string, Rational>& env) {
        for (const auto& atom : c.conjuncts) {
            const auto it = env.find(atom.variable);
            if (it == env.end() || !atom_holds(atom, it->second))
                return false;
        }
        return true;
    }
};

std::optional<std::string> vagueness_reason(const dsl::Requirement& r) {
    if (!classification::vague(classification::classify(r)))
        return std::nullopt;
    if (const auto* vq = std::get_if<dsl::VagueQualified>(&r.form))
        return std::string("vague qualifier '") + dsl::qualifier_token(vq->qualifier) + "'";
    if (const auto* wr = std::get_if<dsl::WindowedRatio>(&r.form); wr && !wr->window)
        return std::string("ratio has no evaluation window");
    return std::string("neither satisfiable nor falsifiable");
}

} // namespace

MonitorReport monitor(const dsl::Requirement& r, const Trace& trace) {
    if (const auto reason = vagueness_reason(r))
        throw NotMonitorableError(r.id, *reason);

    Evaluator evaluator{r, trace, {}};
    std::visit(evaluator, r.form);

    MonitorReport report;
    report.requirement_id = r.id;
    report.judgments = std::move(evaluator.out);
    report.overall = Overall::NoViolationObserved;
    for (const auto& j : report.judgments)
        if (std::holds_alternative<Violated>(j) || std::holds_alternative<WindowViolated>(j))
            report.overall = Overall::Violated;
    return report;
}

std::map<std::string, SetEntry> monitor_set(const dsl::RequirementSet& rs, const Trace& trace) {
    std::map<std::string, SetEntry> out;
    for (const auto& r : rs.requirements) {
        SetEntry entry;
        if (const auto reason = vagueness_reason(r))
            entry.not_monitorable = *reason;
        else
            entry.report = monitor(r, trace);
        out.emplace(r.id, std::move(entry));
    }
    return out;
}

const char* overall_name(Overall o) {
    return o == Overall::Violated ? "VIOLATED" : "NO_VIOLATION_OBSERVED";
}

} // namespace reqkit::monitoring
