#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace mnet {

using Metabolite = std::string;

class AnalysisError : public std::runtime_error {
public:
    enum class Kind {
        BimolecularViolation,
        EmptyPremise,
        EmptyProduct,
        DuplicateRuleId,
        UnknownLabel,
        UnknownRule,
        UnknownMetabolite,
        TargetInSolution,
        NotInSolution,
        MismatchedSolutions,
        InvalidExplanation,
        LimitExceeded,
        MethodDisagreement,
        NotDerivable,
    };

    AnalysisError(Kind kind, const std::string& message);
    Kind kind() const { return kind_; }
    static const char* kind_name(Kind kind);

private:
    Kind kind_;
};

// A reaction rule with one or two premises and a single conclusion.
// Premises keep their declared order; semantic checks ignore it.
struct Rule {
    std::string id;
    std::vector<Metabolite> premises;
    Metabolite conclusion;

    bool operator==(const Rule&) const = default;
};

// Rule identity across independently parsed networks: premise set plus
// conclusion. Ids are file-local artifacts.
bool same_reaction(const Rule& a, const Rule& b);

struct MNetwork {
    std::string name;
    std::vector<Rule> rules;

    const Rule* find_rule(const std::string& id) const;
};

struct InitialSolution {
    std::set<Metabolite> metabolites;

    bool contains(const Metabolite& m) const { return metabolites.count(m) > 0; }
};

// Decomposes a multi-product reaction into one rule per product. All emitted
// rules share the premises; ids are `base_id` for a single product and
// `base_id.k` (k = 1..n in product order) otherwise.
std::vector<Rule> split_reaction(const std::vector<Metabolite>& premises,
                                 const std::vector<Metabolite>& products,
                                 const std::string& base_id);

// Checks rule invariants (non-empty premises, at most two, distinct ids) and
// assembles the network.
MNetwork validate_network(std::vector<Rule> rules, std::string name = "");

// All metabolites occurring in the solution or in any rule premise/conclusion.
std::set<Metabolite> universe(const MNetwork& network, const InitialSolution& solution);

// A causal derivation tree: a leaf stands for a metabolite taken from the
// initial solution, an inner node for a rule application with one child per
// premise in the rule's declared order.
struct Explanation {
    Metabolite root;
    std::optional<std::string> rule;
    std::vector<Explanation> children;

    bool is_leaf() const { return !rule.has_value(); }
    bool operator==(const Explanation&) const = default;
};

Explanation leaf(Metabolite m);
Explanation by_rule(Metabolite m, std::string rule_id, std::vector<Explanation> children);

// Metabolites required by the derivation: the leaf metabolite for a leaf,
// otherwise the node's premises joined with the children's requirements.
std::set<Metabolite> metabolites_of(const Explanation& e);

// Rule ids used by the derivation. A leaf contributes nothing: only rule
// applications count as reactions.
std::set<std::string> rules_of(const Explanation& e);

// True when every metabolite that occurs as a subtree root more than once is
// explained by structurally identical subtrees.
bool is_uniform(const Explanation& e);

// Reorders binary children into the producing rule's declared premise order.
Explanation canonicalize(const Explanation& e, const MNetwork& network);

std::string to_string(const Explanation& e);

}  // namespace mnet
