#include "mnet/paths.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_set>

namespace mnet {

namespace {

void check_limit(size_t produced, size_t cap, const char* what) {
    if (produced > cap)
        throw AnalysisError(AnalysisError::Kind::LimitExceeded,
                            std::string(what) + " exceeds the cap of " + std::to_string(cap));
}

}  // namespace

bool is_chi_path(const LtsGraph& g, const Path& p) {
    int at = g.initial_state;
    for (int t : p.steps) {
        if (g.transitions[t].from != at) return false;
        if (g.self_loop(t)) return false;
        at = g.transitions[t].to;
    }
    return true;
}

bool is_rho_path(const LtsGraph& g, const Path& p) {
    int at = g.initial_state;
    Bitset produced(g.net.universe.size());
    Bitset required(g.net.universe.size());
    for (int t : p.steps) {
        if (g.transitions[t].from != at) return false;
        int x = g.produced(t);
        if (g.self_loop(t)) {
            if (!g.net.initial.test(x)) return false;  // (i)
            if (produced.test(x)) return false;        // (ii)
            if (required.test(x)) return false;        // (iii)
        }
        produced.set(x);
        required |= g.s_hat(t);
        at = g.transitions[t].to;
    }
    return true;
}

bool leads_to(const LtsGraph& g, const Path& p, int metabolite) {
    if (p.steps.empty()) return false;
    return g.produced(p.steps.back()) == metabolite;
}

std::vector<Path> chi_paths_to(const LtsGraph& g, int metabolite, size_t max_paths) {
    std::vector<Path> out;
    if (g.net.initial.test(metabolite)) return out;  // reproduction is a self-loop

    std::vector<int> steps;
    std::function<void(int)> dfs = [&](int state) {
        for (int t : g.out[state]) {
            if (g.self_loop(t)) continue;
            steps.push_back(t);
            if (g.produced(t) == metabolite) {
                out.push_back(Path{steps});
                check_limit(out.size(), max_paths, "number of paths");
            } else {
                dfs(g.transitions[t].to);
            }
            steps.pop_back();
        }
    };
    dfs(g.initial_state);
    return out;
}

std::vector<Path> rho_paths_to(const LtsGraph& g, int metabolite, size_t max_paths) {
    std::vector<Path> out;
    if (g.net.initial.test(metabolite)) return out;

    std::vector<int> steps;
    Bitset produced(g.net.universe.size());
    Bitset required(g.net.universe.size());

    std::function<void(int)> dfs = [&](int state) {
        for (int t : g.out[state]) {
            int x = g.produced(t);
            if (g.self_loop(t)) {
                if (!g.net.initial.test(x) || produced.test(x) || required.test(x)) continue;
            }
            Bitset saved_required = required;
            produced.set(x);
            required |= g.s_hat(t);
            steps.push_back(t);
            if (x == metabolite) {
                out.push_back(Path{steps});
                check_limit(out.size(), max_paths, "number of paths");
            } else {
                dfs(g.transitions[t].to);
            }
            steps.pop_back();
            produced.reset(x);
            required = std::move(saved_required);
        }
    };
    dfs(g.initial_state);
    return out;
}

std::vector<Path> maximal_chi_paths(const LtsGraph& g, size_t max_paths) {
    std::vector<Path> out;
    std::vector<int> steps;
    std::function<void(int)> dfs = [&](int state) {
        bool extended = false;
        for (int t : g.out[state]) {
            if (g.self_loop(t)) continue;
            extended = true;
            steps.push_back(t);
            dfs(g.transitions[t].to);
            steps.pop_back();
        }
        if (!extended) {
            out.push_back(Path{steps});
            check_limit(out.size(), max_paths, "number of paths");
        }
    };
    dfs(g.initial_state);
    return out;
}

Explanation tr_p(const LtsGraph& g, const Path& p, int metabolite) {
    // Producing step per metabolite; distinct in a self-loop-free path.
    std::map<int, int> producer;
    for (int t : p.steps) producer.emplace(g.produced(t), g.transitions[t].rule);

    std::map<int, Explanation> memo;
    std::function<const Explanation&(int)> build = [&](int m) -> const Explanation& {
        auto found = memo.find(m);
        if (found != memo.end()) return found->second;
        Explanation e;
        e.root = g.net.universe.name(m);
        auto it = producer.find(m);
        if (it == producer.end()) {
            if (!g.net.initial.test(m))
                throw AnalysisError(AnalysisError::Kind::InvalidExplanation,
                                    "path does not produce " + e.root +
                                        " and it is not in the initial solution");
        } else {
            const IndexedRule& r = g.net.rules[it->second];
            e.rule = g.net.spec.rules[it->second].id;
            for (int k = 0; k < r.premise_count; ++k) e.children.push_back(build(r.premises[k]));
        }
        return memo.emplace(m, std::move(e)).first->second;
    };
    return build(metabolite);
}

namespace {

// Structural sanity checks for an explanation against a graph: rules exist,
// children mirror premises, leaves are initial-solution members.
void validate_explanation(const LtsGraph& g, const Explanation& e) {
    if (e.is_leaf()) {
        int m = g.net.universe.index_of(e.root);
        if (m < 0 || !g.net.initial.test(m))
            throw AnalysisError(AnalysisError::Kind::InvalidExplanation,
                                "leaf " + e.root + " is not in the initial solution");
        return;
    }
    int ri = g.net.spec.rule_index(*e.rule);
    if (ri < 0) throw AnalysisError(AnalysisError::Kind::UnknownRule, *e.rule);
    const Rule& r = g.net.spec.rules[ri];
    if (r.conclusion != e.root)
        throw AnalysisError(AnalysisError::Kind::InvalidExplanation,
                            "rule " + r.id + " does not produce " + e.root);
    if (r.premises.size() != e.children.size())
        throw AnalysisError(AnalysisError::Kind::InvalidExplanation,
                            "rule " + r.id + " premise count mismatch");
    for (size_t k = 0; k < r.premises.size(); ++k)
        if (e.children[k].root != r.premises[k])
            throw AnalysisError(AnalysisError::Kind::InvalidExplanation,
                                "child " + e.children[k].root + " does not match premise " +
                                    r.premises[k] + " of rule " + r.id);
    for (const Explanation& c : e.children) validate_explanation(g, c);
}

// Simulates one linearization of the explanation's rules to confirm every
// premise is available at its scheduled point.
bool realizable(const LtsGraph& g, const Explanation& e) {
    std::map<int, int> rule_of;  // metabolite -> producing rule index
    std::function<void(const Explanation&)> collect = [&](const Explanation& node) {
        if (node.is_leaf()) return;
        rule_of.emplace(g.net.universe.require(node.root), g.net.spec.rule_index(*node.rule));
        for (const Explanation& c : node.children) collect(c);
    };
    collect(e);

    Bitset state = g.net.initial;
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& [m, ri] : rule_of) {
            if (state.test(m)) continue;
            if (g.net.rules[ri].premise_set.subset_of(state)) {
                state.set(m);
                changed = true;
            }
        }
    }
    for (auto& [m, ri] : rule_of)
        if (!state.test(m)) return false;
    return true;
}

}  // namespace

std::vector<Path> paths_of_explanation(const LtsGraph& g, const Explanation& e,
                                       size_t max_paths) {
    validate_explanation(g, e);
    if (e.is_leaf()) return {};
    if (!realizable(g, e))
        throw AnalysisError(AnalysisError::Kind::InvalidExplanation,
                            "some premise of " + to_string(e) + " is never available");

    int target = g.net.universe.require(e.root);
    std::vector<Path> out;
    for (Path& p : chi_paths_to(g, target, max_paths))
        if (tr_p(g, p, target) == e) out.push_back(std::move(p));
    return out;
}

Bitset used_initial(const LtsGraph& g, const Path& p) {
    Bitset required(g.net.universe.size());
    Bitset produced(g.net.universe.size());
    for (int t : p.steps) {
        required |= g.s_hat(t);
        produced.set(g.produced(t));
    }
    return required.minus(produced);
}

std::set<std::string> rule_ids_of(const LtsGraph& g, const Path& p) {
    std::set<std::string> out;
    for (int t : p.steps) out.insert(g.rule_id(t));
    return out;
}

size_t count_chi_rule_sets(const LtsGraph& g, int metabolite, size_t max_sets) {
    const size_t nrules = g.net.rules.size();
    std::unordered_set<Bitset, BitsetHash> visited;
    std::unordered_set<Bitset, BitsetHash> terminal;

    Bitset empty(static_cast<int>(nrules));
    visited.insert(empty);

    // The fired-rule set determines the reached state, so each set needs to
    // be expanded once regardless of the firing order that discovered it.
    std::function<void(const Bitset&, const Bitset&)> dfs = [&](const Bitset& state,
                                                                const Bitset& used) {
        for (size_t i = 0; i < nrules; ++i) {
            const IndexedRule& r = g.net.rules[i];
            if (state.test(r.conclusion)) continue;
            if (!r.premise_set.subset_of(state)) continue;
            Bitset next_used = used;
            next_used.set(static_cast<int>(i));
            if (r.conclusion == metabolite) {
                terminal.insert(next_used);
                check_limit(terminal.size(), max_sets, "number of rule sets");
                continue;
            }
            if (!visited.insert(next_used).second) continue;
            check_limit(visited.size(), max_sets, "number of rule sets");
            Bitset next_state = state;
            next_state.set(r.conclusion);
            dfs(next_state, next_used);
        }
    };
    if (!g.net.initial.test(metabolite)) dfs(g.net.initial, empty);
    return terminal.size();
}

Path path_from_rules(const LtsGraph& g, const std::vector<std::string>& rule_ids) {
    Path p;
    int at = g.initial_state;
    for (const std::string& id : rule_ids) {
        int ri = g.net.spec.rule_index(id);
        if (ri < 0) throw AnalysisError(AnalysisError::Kind::UnknownRule, id);
        bool found = false;
        for (int t : g.out[at]) {
            if (g.transitions[t].rule == ri) {
                p.steps.push_back(t);
                at = g.transitions[t].to;
                found = true;
                break;
            }
        }
        if (!found)
            throw AnalysisError(AnalysisError::Kind::InvalidExplanation,
                                "rule " + id + " is not enabled at " + g.state_name(at));
    }
    return p;
}

std::string to_string(const LtsGraph& g, const Path& p) {
    std::ostringstream os;
    os << g.state_name(g.initial_state);
    for (int t : p.steps)
        os << " -" << g.rule_id(t) << "/" << g.net.universe.name(g.produced(t)) << "-> "
           << g.state_name(g.transitions[t].to);
    return os.str();
}

}  // namespace mnet
