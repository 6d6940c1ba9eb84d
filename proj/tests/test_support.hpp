#pragma once

#include <random>
#include <string>

#include "mnet/textio.hpp"

namespace testsup {

inline std::string corpus_path(const std::string& name) {
    return std::string(MNET_CORPUS_DIR) + "/" + name;
}

inline mnet::LoadedNetwork load_fixture(const std::string& name) {
    return mnet::parse_network_file(corpus_path(name));
}

inline mnet::LtsGraph graph_fixture(const std::string& name) {
    mnet::LoadedNetwork loaded = load_fixture(name);
    return mnet::build_graph(mnet::encode(loaded.network, loaded.solution));
}

// Independent derivability oracle: plain set-based chaining over the rule
// structs, no bitsets, no compiled network.
inline std::set<std::string> naive_closure(const std::vector<mnet::Rule>& rules,
                                           const std::set<std::string>& solution,
                                           const std::set<std::string>& removed_ids = {}) {
    std::set<std::string> state = solution;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const mnet::Rule& r : rules) {
            if (removed_ids.count(r.id)) continue;
            if (state.count(r.conclusion)) continue;
            bool ready = true;
            for (const auto& p : r.premises) ready = ready && state.count(p) > 0;
            if (ready) {
                state.insert(r.conclusion);
                changed = true;
            }
        }
    }
    return state;
}

// Independent path oracle: enumerates rule-id sequences of self-loop-free
// paths leading to the target, following declaration order at each branch.
inline void naive_chi_rec(const std::vector<mnet::Rule>& rules, std::set<std::string>& state,
                          std::vector<std::string>& seq, const std::string& target,
                          std::vector<std::vector<std::string>>& out) {
    for (const mnet::Rule& r : rules) {
        if (state.count(r.conclusion)) continue;
        bool ready = true;
        for (const auto& p : r.premises) ready = ready && state.count(p) > 0;
        if (!ready) continue;
        seq.push_back(r.id);
        if (r.conclusion == target) {
            out.push_back(seq);
        } else {
            state.insert(r.conclusion);
            naive_chi_rec(rules, state, seq, target, out);
            state.erase(r.conclusion);
        }
        seq.pop_back();
    }
}

inline std::vector<std::vector<std::string>> naive_chi_paths(
    const std::vector<mnet::Rule>& rules, const std::set<std::string>& solution,
    const std::string& target) {
    std::vector<std::vector<std::string>> out;
    if (solution.count(target)) return out;
    std::set<std::string> state = solution;
    std::vector<std::string> seq;
    naive_chi_rec(rules, state, seq, target, out);
    return out;
}

inline std::vector<std::string> path_rule_ids(const mnet::LtsGraph& g, const mnet::Path& p) {
    std::vector<std::string> out;
    for (int t : p.steps) out.push_back(g.rule_id(t));
    return out;
}

struct RandomNetwork {
    mnet::MNetwork network;
    mnet::InitialSolution solution;
};

// Small random instances for cross-checking the two decision routes.
inline RandomNetwork random_network(std::mt19937& rng, int max_metabolites = 7,
                                    int max_rules = 9) {
    std::uniform_int_distribution<int> n_dist(3, max_metabolites);
    int n = n_dist(rng);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('A' + i)));

    std::uniform_int_distribution<int> k_dist(2, max_rules);
    int k = k_dist(rng);
    std::vector<mnet::Rule> rules;
    std::uniform_int_distribution<int> m_dist(0, n - 1);
    for (int i = 0; i < k; ++i) {
        mnet::Rule r;
        r.id = "r" + std::to_string(i + 1);
        r.premises.push_back(names[m_dist(rng)]);
        if (rng() % 2) {
            std::string second = names[m_dist(rng)];
            if (second != r.premises[0]) r.premises.push_back(second);
        }
        r.conclusion = names[m_dist(rng)];
        rules.push_back(std::move(r));
    }

    RandomNetwork out;
    out.network = mnet::validate_network(std::move(rules), "random");
    std::uniform_int_distribution<int> s_dist(1, std::max(1, n / 2));
    int s = s_dist(rng);
    for (int i = 0; i < s; ++i) out.solution.metabolites.insert(names[m_dist(rng)]);
    return out;
}

}  // namespace testsup
