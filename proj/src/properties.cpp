#include "mnet/properties.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace mnet {

const char* property_name(Property p) {
    switch (p) {
    case Property::Essential: return "Essential";
    case Property::UniversalEssential: return "UniversalEssential";
    case Property::MutuallyEssential: return "MutuallyEssential";
    case Property::Vicariate: return "Vicariate";
    case Property::Checkpoint: return "Checkpoint";
    case Property::Causes: return "Causes";
    case Property::Redundant: return "Redundant";
    case Property::Excludable: return "Excludable";
    case Property::StrongRobust: return "StrongRobust";
    case Property::WeakRobust: return "WeakRobust";
    }
    return "?";
}

const char* method_name(Method m) {
    switch (m) {
    case Method::Reachability: return "reachability";
    case Method::Enumeration: return "enumeration";
    case Method::Both: return "both";
    }
    return "?";
}

namespace {

std::vector<bool> mask_of(const CompiledNetwork& net, const RuleGroup& group) {
    std::vector<bool> mask(net.rules.size(), false);
    for (int i : group) mask[i] = true;
    return mask;
}

std::vector<bool> mask_union(std::vector<bool> a, const std::vector<bool>& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] = a[i] || b[i];
    return a;
}

std::vector<int> concluders(const CompiledNetwork& net, int metabolite) {
    std::vector<int> out;
    for (size_t i = 0; i < net.rules.size(); ++i)
        if (net.rules[i].conclusion == metabolite) out.push_back(static_cast<int>(i));
    return out;
}

bool group_contains(const RuleGroup& group, int rule) {
    return std::find(group.begin(), group.end(), rule) != group.end();
}

void require_target_not_initial(const CompiledNetwork& net, int target) {
    if (net.initial.test(target))
        throw AnalysisError(AnalysisError::Kind::TargetInSolution,
                            net.universe.name(target) + " is in the initial solution");
}

// Merges the reachability verdict with the enumeration one, tolerating an
// exceeded cap on the enumeration side.
PropertyVerdict run_both(const std::function<PropertyVerdict()>& reach,
                         const std::function<PropertyVerdict()>& enumerate) {
    PropertyVerdict r = reach();
    PropertyVerdict e;
    try {
        e = enumerate();
    } catch (const AnalysisError& err) {
        if (err.kind() != AnalysisError::Kind::LimitExceeded) throw;
        r.method_used = Method::Both;
        r.cap_exceeded = true;
        r.witnesses.push_back(Witness::note("enumeration exceeded the path cap; "
                                            "verdict rests on reachability"));
        return r;
    }
    if (e.holds != r.holds)
        throw AnalysisError(AnalysisError::Kind::MethodDisagreement,
                            std::string(property_name(r.property)) +
                                ": reachability says " + (r.holds ? "holds" : "refuted") +
                                ", enumeration says " + (e.holds ? "holds" : "refuted"));
    e.method_used = Method::Both;
    return e;
}

}  // namespace

RuleGroup resolve_rule_group(const CompiledNetwork& net, const std::string& id) {
    RuleGroup group;
    for (size_t i = 0; i < net.spec.rules.size(); ++i)
        if (net.spec.rules[i].id == id) group.push_back(static_cast<int>(i));
    if (!group.empty()) return group;

    const std::string prefix = id + ".";
    for (size_t i = 0; i < net.spec.rules.size(); ++i) {
        const std::string& rid = net.spec.rules[i].id;
        if (rid.size() > prefix.size() && rid.compare(0, prefix.size(), prefix) == 0 &&
            std::all_of(rid.begin() + prefix.size(), rid.end(),
                        [](unsigned char c) { return std::isdigit(c); }))
            group.push_back(static_cast<int>(i));
    }
    if (group.empty()) throw AnalysisError(AnalysisError::Kind::UnknownRule, id);
    return group;
}

std::vector<std::pair<std::string, RuleGroup>> reaction_groups(const CompiledNetwork& net) {
    std::vector<std::pair<std::string, RuleGroup>> out;
    auto base_of = [](const std::string& id) {
        size_t dot = id.rfind('.');
        if (dot == std::string::npos || dot + 1 == id.size()) return id;
        for (size_t i = dot + 1; i < id.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(id[i]))) return id;
        return id.substr(0, dot);
    };
    for (size_t i = 0; i < net.spec.rules.size(); ++i) {
        std::string base = base_of(net.spec.rules[i].id);
        auto it = std::find_if(out.begin(), out.end(),
                               [&](const auto& g) { return g.first == base; });
        if (it == out.end())
            out.push_back({std::move(base), {static_cast<int>(i)}});
        else
            it->second.push_back(static_cast<int>(i));
    }
    return out;
}

PropertyVerdict essential(const LtsGraph& g, const RuleGroup& group, int target, Method method,
                          size_t cap) {
    require_target_not_initial(g.net, target);
    PropertyVerdict v;
    v.property = Property::Essential;
    v.paths_cap = cap;

    auto reach = [&]() {
        PropertyVerdict r = v;
        r.method_used = Method::Reachability;
        if (!g.net.derivable(target)) {
            r.holds = false;
            r.witnesses.push_back(Witness::note("target is not derivable at all"));
            return r;
        }
        auto mask = mask_of(g.net, group);
        r.holds = !g.net.derivable(target, &mask);
        return r;
    };
    auto enumerate = [&]() {
        PropertyVerdict r = v;
        r.method_used = Method::Enumeration;
        auto paths = chi_paths_to(g, target, cap);
        if (paths.empty()) {
            r.holds = false;
            r.witnesses.push_back(Witness::note("target is not derivable at all"));
            return r;
        }
        r.holds = true;
        for (Path& p : paths) {
            bool hit = std::any_of(p.steps.begin(), p.steps.end(), [&](int t) {
                return group_contains(group, g.transitions[t].rule);
            });
            if (!hit) {
                r.holds = false;
                r.witnesses.push_back(Witness::of_path(std::move(p)));
                break;
            }
        }
        return r;
    };

    switch (method) {
    case Method::Reachability: return reach();
    case Method::Enumeration: return enumerate();
    case Method::Both: return run_both(reach, enumerate);
    }
    return v;
}

bool universal_essential(const CompiledNetwork& net, const RuleGroup& group, int target) {
    bool any = false;
    for (size_t i = 0; i < net.rules.size(); ++i) {
        const IndexedRule& r = net.rules[i];
        if (r.conclusion != target) continue;
        if (r.premise_set.test(target)) continue;  // needs the target itself
        any = true;
        if (!group_contains(group, static_cast<int>(i))) return false;
    }
    return any;
}

PropertyVerdict mutually_essential(const LtsGraph& g, const RuleGroup& g1, const RuleGroup& g2,
                                   int target, Method method, size_t cap) {
    require_target_not_initial(g.net, target);
    PropertyVerdict v;
    v.property = Property::MutuallyEssential;
    v.paths_cap = cap;

    auto reach = [&]() {
        PropertyVerdict r = v;
        r.method_used = Method::Reachability;
        auto m1 = mask_of(g.net, g1);
        auto m2 = mask_of(g.net, g2);
        auto both = mask_union(m1, m2);
        bool without_first = g.net.derivable(target, &m1);
        bool without_second = g.net.derivable(target, &m2);
        bool without_both = g.net.derivable(target, &both);
        r.holds = without_first && without_second && !without_both;
        return r;
    };
    auto enumerate = [&]() {
        PropertyVerdict r = v;
        r.method_used = Method::Enumeration;
        auto paths = chi_paths_to(g, target, cap);
        if (paths.empty()) {
            r.holds = false;
            return r;
        }
        bool avoids_first = false, avoids_second = false, all_hit = true;
        for (Path& p : paths) {
            bool hit1 = false, hit2 = false;
            for (int t : p.steps) {
                int rule = g.transitions[t].rule;
                hit1 = hit1 || group_contains(g1, rule);
                hit2 = hit2 || group_contains(g2, rule);
            }
            avoids_first = avoids_first || !hit1;
            avoids_second = avoids_second || !hit2;
            if (!hit1 && !hit2) {
                all_hit = false;
                r.witnesses.push_back(Witness::of_path(std::move(p)));
            }
        }
        r.holds = avoids_first && avoids_second && all_hit;
        return r;
    };

    switch (method) {
    case Method::Reachability: return reach();
    case Method::Enumeration: return enumerate();
    case Method::Both: return run_both(reach, enumerate);
    }
    return v;
}

bool vicarious(const LtsGraph& g, const Path& p1, const Path& p2) {
    return rule_ids_of(g, p1) != rule_ids_of(g, p2);
}

PropertyVerdict checkpoint(const LtsGraph& g, int gate, int target, Method method, size_t cap) {
    PropertyVerdict v;
    v.property = Property::Checkpoint;
    v.paths_cap = cap;

    auto reach = [&]() {
        PropertyVerdict r = v;
        r.method_used = Method::Reachability;
        std::vector<bool> mask(g.net.rules.size(), false);
        for (size_t i = 0; i < g.net.rules.size(); ++i)
            if (g.net.rules[i].premise_set.test(gate)) mask[i] = true;
        r.holds = !g.net.derivable(target, &mask);
        return r;
    };
    auto enumerate = [&]() {
        PropertyVerdict r = v;
        r.method_used = Method::Enumeration;
        const Metabolite& gate_name = g.net.universe.name(gate);
        r.holds = true;
        for (Path& p : chi_paths_to(g, target, cap)) {
            Explanation e = tr_p(g, p, target);
            if (!metabolites_of(e).count(gate_name)) {
                r.holds = false;
                r.witnesses.push_back(Witness::of_explanation(std::move(e)));
                r.witnesses.push_back(Witness::of_path(std::move(p)));
                break;
            }
        }
        return r;
    };

    switch (method) {
    case Method::Reachability: return reach();
    case Method::Enumeration: return enumerate();
    case Method::Both: return run_both(reach, enumerate);
    }
    return v;
}

PropertyVerdict causes(const LtsGraph& g, const RuleGroup& first, const RuleGroup& second,
                       Method method, size_t cap) {
    PropertyVerdict v;
    v.property = Property::Causes;
    v.paths_cap = cap;

    auto reach = [&]() {
        PropertyVerdict r = v;
        r.method_used = Method::Reachability;
        r.holds = true;
        auto first_mask = mask_of(g.net, first);
        for (int t2 : second) {
            int q = g.net.rules[t2].conclusion;
            // A rule whose conclusion is initially present only fires as a
            // self-loop and never occurs on a relevant path.
            if (g.net.initial.test(q)) continue;
            auto mask = first_mask;
            for (int c : concluders(g.net, q)) mask[c] = true;
            if (g.net.rules[t2].premise_set.subset_of(g.net.closure(g.net.initial, &mask))) {
                r.holds = false;
                r.witnesses.push_back(Witness::note(
                    "rule " + g.net.spec.rules[t2].id + " can fire without any causing rule"));
                break;
            }
        }
        return r;
    };
    auto enumerate = [&]() {
        PropertyVerdict r = v;
        r.method_used = Method::Enumeration;
        r.holds = true;
        for (Path& p : maximal_chi_paths(g, cap)) {
            bool seen_first = false;
            for (size_t i = 0; i < p.steps.size(); ++i) {
                int rule = g.transitions[p.steps[i]].rule;
                if (group_contains(second, rule) && !seen_first) {
                    r.holds = false;
                    Path prefix{std::vector<int>(p.steps.begin(), p.steps.begin() + i + 1)};
                    r.witnesses.push_back(Witness::of_path(std::move(prefix)));
                    break;
                }
                if (group_contains(first, rule)) seen_first = true;
            }
            if (!r.holds) break;
        }
        return r;
    };

    switch (method) {
    case Method::Reachability: return reach();
    case Method::Enumeration: return enumerate();
    case Method::Both: return run_both(reach, enumerate);
    }
    return v;
}

PropertyVerdict excludable(const LtsGraph& g, int member, int target, Method method, size_t cap) {
    if (!g.net.initial.test(member))
        throw AnalysisError(AnalysisError::Kind::NotInSolution, g.net.universe.name(member));
    require_target_not_initial(g.net, target);

    PropertyVerdict v;
    v.property = Property::Excludable;
    v.paths_cap = cap;

    auto reach = [&]() {
        PropertyVerdict r = v;
        r.method_used = Method::Reachability;
        Bitset start = g.net.initial;
        start.reset(member);
        r.holds = g.net.derivable_from(start, target);
        return r;
    };
    auto enumerate = [&]() {
        PropertyVerdict r = v;
        r.method_used = Method::Enumeration;
        r.holds = false;
        for (Path& p : rho_paths_to(g, target, cap)) {
            if (!used_initial(g, p).test(member)) {
                r.holds = true;
                r.witnesses.push_back(Witness::of_path(std::move(p)));
                break;
            }
        }
        return r;
    };

    switch (method) {
    case Method::Reachability: return reach();
    case Method::Enumeration: return enumerate();
    case Method::Both: return run_both(reach, enumerate);
    }
    return v;
}

PropertyVerdict redundant(const LtsGraph& g, int target, size_t cap) {
    require_target_not_initial(g.net, target);

    PropertyVerdict v;
    v.property = Property::Redundant;
    v.method_used = Method::Enumeration;
    v.paths_cap = cap;

    auto paths = chi_paths_to(g, target, cap);
    if (paths.empty()) {
        v.holds = false;
        v.witnesses.push_back(Witness::note("target is not derivable at all"));
        return v;
    }

    // A member survives if every path either never requires it, or admits a
    // qualifying self-loop re-producing it before its first use.
    Bitset candidates = g.net.initial;
    for (const Path& p : paths) {
        if (!candidates.any()) break;
        Bitset next(g.net.universe.size());
        candidates.for_each([&](int b) {
            int first_use = -1;
            for (int t : p.steps)
                if (g.s_hat(t).test(b)) {
                    first_use = t;
                    break;
                }
            if (first_use < 0) {
                next.set(b);
                return;
            }
            const Bitset& before = g.states[g.transitions[first_use].from];
            for (int producer : concluders(g.net, b))
                if (g.net.rules[producer].premise_set.subset_of(before)) {
                    next.set(b);
                    return;
                }
        });
        candidates = next;
    }

    v.holds = candidates.any();
    candidates.for_each(
        [&](int b) { v.witnesses.push_back(Witness::of_metabolite(g.net.universe.name(b))); });
    return v;
}

namespace {

// Structural rule matching between two independently encoded networks.
std::vector<int> match_rules(const CompiledNetwork& a, const CompiledNetwork& b) {
    std::vector<int> match(a.spec.rules.size(), -1);
    for (size_t i = 0; i < a.spec.rules.size(); ++i)
        for (size_t j = 0; j < b.spec.rules.size(); ++j)
            if (same_reaction(a.spec.rules[i], b.spec.rules[j])) {
                match[i] = static_cast<int>(j);
                break;
            }
    return match;
}

void require_same_solution(const LtsGraph& g1, const LtsGraph& g2) {
    if (g1.net.spec.initial.metabolites != g2.net.spec.initial.metabolites)
        throw AnalysisError(AnalysisError::Kind::MismatchedSolutions,
                            "the two networks start from different initial solutions");
}

// Whether some self-loop-free path leads to `target` and fires `rule` on the
// way. Decided by fixpoints: reach the rule's premises while producing
// neither its conclusion nor the target, fire it, then finish the target.
bool chi_path_through(const LtsGraph& g, int rule, int target) {
    const CompiledNetwork& net = g.net;
    if (net.initial.test(target)) return false;
    int q = net.rules[rule].conclusion;
    if (net.initial.test(q)) return false;  // the rule only self-loops

    std::vector<bool> mask(net.rules.size(), false);
    for (int c : concluders(net, target)) mask[c] = true;
    if (q == target) return net.rules[rule].premise_set.subset_of(net.closure(net.initial, &mask));

    auto prefix_mask = mask;
    for (int c : concluders(net, q)) prefix_mask[c] = true;
    Bitset prefix = net.closure(net.initial, &prefix_mask);
    if (!net.rules[rule].premise_set.subset_of(prefix)) return false;

    prefix.set(q);
    Bitset rest = net.closure(prefix, &mask);
    for (int producer : concluders(net, target))
        if (net.rules[producer].premise_set.subset_of(rest)) return true;
    return false;
}

}  // namespace

PropertyVerdict strong_robust(const LtsGraph& g1, const LtsGraph& g2, const Metabolite& target,
                              Method method, size_t cap) {
    require_same_solution(g1, g2);

    PropertyVerdict v;
    v.property = Property::StrongRobust;
    v.paths_cap = cap;

    int c1 = g1.net.universe.index_of(target);
    auto match = match_rules(g1.net, g2.net);

    auto reach = [&]() {
        PropertyVerdict r = v;
        r.method_used = Method::Reachability;
        r.holds = true;
        if (c1 < 0) return r;  // no path can lead to an unknown target
        for (size_t i = 0; i < g1.net.rules.size(); ++i) {
            if (match[i] >= 0) continue;
            if (chi_path_through(g1, static_cast<int>(i), c1)) {
                r.holds = false;
                r.witnesses.push_back(Witness::note("rule " + g1.net.spec.rules[i].id +
                                                    " has no counterpart and occurs on a path "
                                                    "to " + target));
                break;
            }
        }
        return r;
    };
    auto enumerate = [&]() {
        PropertyVerdict r = v;
        r.method_used = Method::Enumeration;
        r.holds = true;
        if (c1 < 0) return r;
        for (Path& p : chi_paths_to(g1, c1, cap)) {
            bool replays = true;
            Bitset state = g2.net.initial;
            for (int t : p.steps) {
                int m = match[g1.transitions[t].rule];
                if (m < 0 || !g2.net.rules[m].premise_set.subset_of(state)) {
                    replays = false;
                    break;
                }
                state.set(g2.net.rules[m].conclusion);
            }
            if (!replays) {
                r.holds = false;
                r.witnesses.push_back(Witness::of_path(std::move(p)));
                break;
            }
        }
        return r;
    };

    switch (method) {
    case Method::Reachability: return reach();
    case Method::Enumeration: return enumerate();
    case Method::Both: return run_both(reach, enumerate);
    }
    return v;
}

PropertyVerdict weak_robust(const LtsGraph& g1, const LtsGraph& g2, const Metabolite& target,
                            Method method, size_t cap) {
    require_same_solution(g1, g2);

    PropertyVerdict v;
    v.property = Property::WeakRobust;
    v.paths_cap = cap;

    int c1 = g1.net.universe.index_of(target);
    int c2 = g2.net.universe.index_of(target);

    auto reach = [&]() {
        PropertyVerdict r = v;
        r.method_used = Method::Reachability;
        bool in_first = c1 >= 0 && !g1.net.initial.test(c1) && g1.net.derivable(c1);
        bool in_second = c2 >= 0 && !g2.net.initial.test(c2) && g2.net.derivable(c2);
        r.holds = !in_first || in_second;
        return r;
    };
    auto enumerate = [&]() {
        PropertyVerdict r = v;
        r.method_used = Method::Enumeration;
        bool in_first = c1 >= 0 && !chi_paths_to(g1, c1, cap).empty();
        bool in_second = c2 >= 0 && !chi_paths_to(g2, c2, cap).empty();
        r.holds = !in_first || in_second;
        return r;
    };

    switch (method) {
    case Method::Reachability: return reach();
    case Method::Enumeration: return enumerate();
    case Method::Both: return run_both(reach, enumerate);
    }
    return v;
}

}  // namespace mnet
