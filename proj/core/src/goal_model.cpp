// goal_model.cpp
// Copyright 2026 the reqkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "reqkit/goal_model.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace reqkit::goals {

const Goal* GoalModel::find(std::string_view id) const {
    for (const auto& g : goals)
        if (g.id == id)
            return &g;
    return nullptr;
}

bool GoalModel::is_leaf(std::string_view id) const {
    const Goal* g = find(id);
    if (!g || g->kind != GoalKind::Hard)
        return false;
    for (const auto& d : decompositions)
        if (d.parent == id)
            return false;
    return true;
}

std::vector<std::string> GoalModel::leaves() const {
    std::vector<std::string> out;
    for (const auto& g : goals)
        if (is_leaf(g.id))
            out.push_back(g.id);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> GoalModel::obligations() const {
    std::set<std::string> children;
    for (const auto& d : decompositions)
        for (const auto& c : d.children)
            children.insert(c);

    std::vector<std::string> out;
    for (const auto& g : goals) {
        if (g.kind != GoalKind::Hard)
            continue;
        const bool root = !children.count(g.id);
        if (g.mandatory || (root && !g.optional))
            out.push_back(g.id);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<std::string> split_ws(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    std::string word;
    while (in >> word)
        out.push_back(word);
    return out;
}

// "{a,b,c}" or "a,b,c" -> set of ids
LeafSet parse_id_set(std::string text, int lineno) {
    if (!text.empty() && text.front() == '{') {
        if (text.back() != '}')
            throw ParseError("unterminated '{'", lineno);
        text = text.substr(1, text.size() - 2);
    }
    LeafSet out;
    std::string current;
    std::istringstream in(text);
    while (std::getline(in, current, ',')) {
        // trim
        const auto b = current.find_first_not_of(" \t");
        const auto e = current.find_last_not_of(" \t");
        if (b == std::string::npos)
            continue;
        out.insert(current.substr(b, e - b + 1));
    }
    return out;
}

void validate(const GoalModel& m) {
    std::set<std::string> ids;
    for (const auto& g : m.goals) {
        if (!ids.insert(g.id).second)
            throw ValidationError("duplicate goal id '" + g.id + "'");
        if (g.mandatory && g.optional)
            throw ValidationError("goal '" + g.id + "' is both mandatory and optional");
    }

    std::set<std::string> parents;
    for (const auto& d : m.decompositions) {
        if (!parents.insert(d.parent).second)
            throw ValidationError("goal '" + d.parent + "' has more than one decomposition");
        const Goal* parent = m.find(d.parent);
        if (!parent)
            throw ValidationError("decomposition of unknown goal '" + d.parent + "'");
        if (parent->kind != GoalKind::Hard)
            throw ValidationError("soft goal '" + d.parent + "' cannot be decomposed");
        if (d.children.empty())
            throw ValidationError("decomposition of '" + d.parent + "' has no children");
        for (const auto& c : d.children) {
            const Goal* child = m.find(c);
            if (!child)
                throw ValidationError("decomposition child '" + c + "' is unknown");
            if (child->kind != GoalKind::Hard)
                throw ValidationError("soft goal '" + c + "' cannot be a decomposition child");
        }
    }

    for (const auto& c : m.contributions) {
        const Goal* source = m.find(c.source);
        const Goal* target = m.find(c.target);
        if (!source)
            throw ValidationError("contribution source '" + c.source + "' is unknown");
        if (!target)
            throw ValidationError("contribution target '" + c.target + "' is unknown");
        if (target->kind != GoalKind::Soft)
            throw ValidationError("contribution target '" + c.target + "' is not a soft goal");
    }

    // acyclicity of the decomposition graph
    std::map<std::string, int> state; // 0 fresh, 1 on stack, 2 done
    std::function<void(const std::string&)> visit = [&](const std::string& id) {
        if (state[id] == 1)
            throw ValidationError("decomposition cycle through '" + id + "'");
        if (state[id] == 2)
            return;
        state[id] = 1;
        for (const auto& d : m.decompositions)
            if (d.parent == id)
                for (const auto& c : d.children)
                    visit(c);
        state[id] = 2;
    };
    for (const auto& g : m.goals)
        visit(g.id);

    for (const auto& p : m.preferences)
        for (const auto& id : p)
            if (!m.is_leaf(id))
                throw ValidationError("preference member '" + id + "' is not a leaf goal");
}

} // namespace

GoalModel parse_goal_model(std::string_view text) {
    GoalModel m;

    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        auto line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        ++lineno;
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        const auto words = split_ws(line);
        if (words.empty())
            continue;

        if (words[0] == "goal") {
            if (words.size() < 2)
                throw ParseError("goal needs an id", lineno);
            Goal g;
            g.id = words[1];
            for (std::size_t i = 2; i < words.size(); ++i) {
                if (words[i] == "mandatory")
                    g.mandatory = true;
                else if (words[i] == "optional")
                    g.optional = true;
                else if (words[i] == "req" && i + 1 < words.size())
                    g.requirement_ref = words[++i];
                else
                    throw ParseError("unknown goal attribute '" + words[i] + "'", lineno);
            }
            m.goals.push_back(std::move(g));
        } else if (words[0] == "soft") {
            if (words.size() != 2)
                throw ParseError("soft needs exactly an id", lineno);
            m.goals.push_back(Goal{words[1], GoalKind::Soft, false, false, std::nullopt});
        } else if (words[0] == "decompose") {
            if (words.size() < 4)
                throw ParseError("decompose needs: decompose <parent> AND|OR <child>+", lineno);
            Decomposition d;
            d.parent = words[1];
            if (words[2] == "AND")
                d.type = DecompType::And;
            else if (words[2] == "OR")
                d.type = DecompType::Or;
            else
                throw ParseError("decomposition type must be AND or OR", lineno);
            d.children.assign(words.begin() + 3, words.end());
            m.decompositions.push_back(std::move(d));
        } else if (words[0] == "contrib") {
            if (words.size() != 4)
                throw ParseError("contrib needs: contrib <goal> +|- <soft>", lineno);
            Contribution c;
            c.source = words[1];
            if (words[2] == "+")
                c.sign = ContribSign::Plus;
            else if (words[2] == "-")
                c.sign = ContribSign::Minus;
            else
                throw ParseError("contribution sign must be + or -", lineno);
            c.target = words[3];
            m.contributions.push_back(std::move(c));
        } else if (words[0] == "prefer") {
            std::string rest;
            for (std::size_t i = 1; i < words.size(); ++i)
                rest += words[i];
            m.preferences.push_back(parse_id_set(rest, lineno));
        } else {
            throw ParseError("unknown record '" + words[0] + "'", lineno);
        }
    }

    validate(m);
    return m;
}

std::map<std::string, bool> propagate(const GoalModel& m, const LeafSet& adoption) {
    for (const auto& id : adoption)
        if (!m.is_leaf(id))
            throw ValidationError("adoption contains non-leaf '" + id + "'");

    std::map<std::string, bool> value;
    std::function<bool(const std::string&)> eval = [&](const std::string& id) -> bool {
        if (const auto it = value.find(id); it != value.end())
            return it->second;
        const Decomposition* d = nullptr;
        for (const auto& cand : m.decompositions)
            if (cand.parent == id)
                d = &cand;
        bool v;
        if (!d) {
            v = adoption.count(id) > 0;
        } else if (d->type == DecompType::And) {
            v = true;
            for (const auto& c : d->children)
                v = eval(c) && v;
        } else {
            v = false;
            for (const auto& c : d->children)
                v = eval(c) || v;
        }
        value[id] = v;
        return v;
    };

    std::map<std::string, bool> out;
    for (const auto& g : m.goals)
        if (g.kind == GoalKind::Hard)
            out[g.id] = eval(g.id);
    return out;
}

std::vector<LeafSet> variants(const GoalModel& m) {
    const auto leaves = m.leaves();
    if (leaves.size() > 20)
        throw ValidationError("model has more than 20 leaves; exhaustive enumeration is out of scope");
    const auto obligations = m.obligations();

    std::vector<LeafSet> out;
    const std::size_t n = leaves.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        LeafSet adoption;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t(1) << i))
                adoption.insert(leaves[i]);
        const auto value = propagate(m, adoption);
        bool ok = true;
        for (const auto& g : obligations)
            ok = ok && value.at(g);
        if (ok)
            out.push_back(std::move(adoption));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// A variant activates a contribution when its source goal holds under the
// variant's propagation. Opposite signs activated by one variant mean the
// trade-off is unresolved.
bool has_unresolved_conflict(const GoalModel& m, const std::vector<LeafSet>& vs) {
    if (m.contributions.empty())
        return false;
    for (const auto& v : vs) {
        const auto value = propagate(m, v);
        bool plus = false, minus = false;
        for (const auto& c : m.contributions) {
            const auto it = value.find(c.source);
            if (it == value.end() || !it->second)
                continue;
            if (c.sign == ContribSign::Plus)
                plus = true;
            else
                minus = true;
        }
        if (plus && minus)
            return true;
    }
    return false;
}

} // namespace

HappySetsResult happy_sets(const GoalModel& m) {
    const auto vs = variants(m);
    HappySetsResult result;

    if (!m.preferences.empty()) {
        // The stakeholder has already chosen; the declared selections are the
        // happy sets (each must be a variant).
        std::vector<LeafSet> chosen;
        for (const auto& p : m.preferences) {
            if (std::find(vs.begin(), vs.end(), p) == vs.end())
                throw ValidationError("declared preference is not a variant of the model");
            chosen.push_back(p);
        }
        std::sort(chosen.begin(), chosen.end());
        chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
        for (auto& s : chosen)
            result.sets.push_back(HappySet{std::move(s)});
        return result;
    }

    if (has_unresolved_conflict(m, vs)) {
        result.diagnostic = "conflicting softgoal contributions: requires further elicitation";
        return result;
    }

    for (const auto& v : vs)
        result.sets.push_back(HappySet{v});
    return result;
}

DesignatedSet designate(const GoalModel& m, const HappySet& h, const dsl::RequirementSet& rs) {
    const auto all = happy_sets(m);
    const bool member = std::any_of(all.sets.begin(), all.sets.end(),
                                    [&](const HappySet& s) { return s.leaves == h.leaves; });
    if (!member) {
        std::string listed;
        for (const auto& id : h.leaves)
            listed += (listed.empty() ? "" : ",") + id;
        throw ValidationError("{" + listed + "} is not a happy set of the model");
    }

    DesignatedSet d;
    std::set<std::string> seen;
    for (const auto& leaf : h.leaves) {
        const Goal* g = m.find(leaf);
        if (!g->requirement_ref)
            throw ValidationError("leaf '" + leaf + "' carries no requirement reference");
        const dsl::Requirement* r = rs.find(*g->requirement_ref);
        if (!r)
            throw ValidationError("requirement reference '" + *g->requirement_ref + "' of leaf '" + leaf +
                                  "' does not resolve");
        if (seen.insert(r->id).second)
            d.requirements.requirements.push_back(*r);
    }
    return d;
}

ObservabilityReport check_designated(const DesignatedSet& d) {
    ObservabilityReport report;
    for (const auto& r : d.requirements.requirements) {
        const auto cls = classification::classify(r);
        report.entries.push_back(ObservabilityEntry{r.id, cls});
        if (!cls.satisfiable || !cls.falsifiable) {
            report.passed = false;
            std::string why;
            if (!cls.satisfiable)
                why += "not satisfiable";
            if (!cls.falsifiable)
                why += std::string(why.empty() ? "" : ", ") + "not falsifiable";
            report.failures.push_back(r.id + ": " + why);
        }
    }
    return report;
}

} // namespace reqkit::goals
