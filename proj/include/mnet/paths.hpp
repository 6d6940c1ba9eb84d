#pragma once

#include "mnet/lts.hpp"

namespace mnet {

inline constexpr size_t kDefaultPathCap = 1'000'000;

// A transition sequence starting at the initial state; steps index into the
// graph's transition table.
struct Path {
    std::vector<int> steps;

    bool operator==(const Path&) const = default;
};

bool is_chi_path(const LtsGraph& g, const Path& p);
bool is_rho_path(const LtsGraph& g, const Path& p);

// True when the final step produces `metabolite`, i.e. the path's last state
// is the first one containing it.
bool leads_to(const LtsGraph& g, const Path& p, int metabolite);

// All self-loop-free paths leading to `metabolite`, in deterministic order.
// Each path ends at the first transition producing the target. Throws
// LimitExceeded when more than `max_paths` paths exist; callers must treat
// any property verdict built on a truncated enumeration as undecided.
std::vector<Path> chi_paths_to(const LtsGraph& g, int metabolite,
                               size_t max_paths = kDefaultPathCap);

// As chi_paths_to, but additionally admitting self-loop steps that
// (re)produce a metabolite of the initial solution which was neither
// produced nor required by any earlier step.
std::vector<Path> rho_paths_to(const LtsGraph& g, int metabolite,
                               size_t max_paths = kDefaultPathCap);

// Every maximal self-loop-free path from the initial state.
std::vector<Path> maximal_chi_paths(const LtsGraph& g, size_t max_paths = kDefaultPathCap);

// Translates a self-loop-free path leading to `metabolite` into the
// derivation tree that uses the producing step of each needed metabolite;
// initial-solution members never produced along the path become leaves. The
// result is uniform by construction.
Explanation tr_p(const LtsGraph& g, const Path& p, int metabolite);

// The inverse direction: all self-loop-free paths leading to the
// explanation's root whose translation equals the explanation (its rule
// linearizations, plus any interleaved productions that leave the needed
// sub-derivation unchanged). Throws InvalidExplanation when the tree does
// not fit the graph.
std::vector<Path> paths_of_explanation(const LtsGraph& g, const Explanation& e,
                                       size_t max_paths = kDefaultPathCap);

// Initial-solution metabolites strictly required by the path: the union of
// the steps' Ŝ sets minus everything the path itself produces.
Bitset used_initial(const LtsGraph& g, const Path& p);

std::set<std::string> rule_ids_of(const LtsGraph& g, const Path& p);

// Number of distinct rule sets over all self-loop-free paths leading to
// `metabolite`. Explores the rule-set lattice with memoization, so it stays
// feasible where path-level enumeration would explode combinatorially.
size_t count_chi_rule_sets(const LtsGraph& g, int metabolite,
                           size_t max_sets = kDefaultPathCap);

// Replays a rule-id sequence from the initial state. Throws UnknownRule or
// InvalidExplanation when a step is not enabled.
Path path_from_rules(const LtsGraph& g, const std::vector<std::string>& rule_ids);

std::string to_string(const LtsGraph& g, const Path& p);

}  // namespace mnet
