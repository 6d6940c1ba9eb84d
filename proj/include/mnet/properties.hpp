#pragma once

#include "mnet/paths.hpp"

namespace mnet {

enum class Property {
    Essential,
    UniversalEssential,
    MutuallyEssential,
    Vicariate,
    Checkpoint,
    Causes,
    Redundant,
    Excludable,
    StrongRobust,
    WeakRobust,
};

const char* property_name(Property p);

// Reachability decides through forward-chaining fixpoints; enumeration
// quantifies over explicit paths and serves as the correctness oracle within
// the configured cap. Both runs the two and insists they agree.
enum class Method { Reachability, Enumeration, Both };

const char* method_name(Method m);

struct Witness {
    enum class Kind { PathWitness, ExplanationWitness, MetaboliteWitness, Note };

    Kind kind;
    Path path;
    Explanation explanation;
    std::string text;

    static Witness of_path(Path p) { return {Kind::PathWitness, std::move(p), {}, {}}; }
    static Witness of_explanation(Explanation e) {
        return {Kind::ExplanationWitness, {}, std::move(e), {}};
    }
    static Witness of_metabolite(std::string name) {
        return {Kind::MetaboliteWitness, {}, {}, std::move(name)};
    }
    static Witness note(std::string text) { return {Kind::Note, {}, {}, std::move(text)}; }
};

struct PropertyVerdict {
    Property property;
    bool holds = false;
    Method method_used = Method::Reachability;
    std::vector<Witness> witnesses;
    size_t paths_cap = kDefaultPathCap;
    bool cap_exceeded = false;
};

// A what-if unit: one rule, or all split parts of one reaction.
using RuleGroup = std::vector<int>;

// Resolves `id` to an exact rule, or to the group of split rules `id.k`.
RuleGroup resolve_rule_group(const CompiledNetwork& net, const std::string& id);

// Base reaction ids in network order, each with its member rules.
std::vector<std::pair<std::string, RuleGroup>> reaction_groups(const CompiledNetwork& net);

// Whether removing `group` makes `target` underivable (equivalently, every
// self-loop-free path to the target fires a member).
PropertyVerdict essential(const LtsGraph& g, const RuleGroup& group, int target,
                          Method method = Method::Reachability, size_t cap = kDefaultPathCap);

// Solution-independent essentiality: the group holds the only producers of
// the target among rules not having the target in their premises.
bool universal_essential(const CompiledNetwork& net, const RuleGroup& group, int target);

// Neither group alone blocks the target, removing both does.
PropertyVerdict mutually_essential(const LtsGraph& g, const RuleGroup& g1, const RuleGroup& g2,
                                   int target, Method method = Method::Reachability,
                                   size_t cap = kDefaultPathCap);

// Two paths to the same metabolite embody vicarious derivations when their
// rule sets differ.
bool vicarious(const LtsGraph& g, const Path& p1, const Path& p2);

// `gate` is necessary for `target`: every derivation requires it as a
// premise. Reachability removes all rules consuming the gate; enumeration
// inspects the metabolites of every path's derivation tree.
PropertyVerdict checkpoint(const LtsGraph& g, int gate, int target,
                           Method method = Method::Reachability, size_t cap = kDefaultPathCap);

// Every firing of a `second` member is preceded by a `first` member, on
// every self-loop-free path.
PropertyVerdict causes(const LtsGraph& g, const RuleGroup& first, const RuleGroup& second,
                       Method method = Method::Reachability, size_t cap = kDefaultPathCap);

// `member` of the initial solution can be dropped without losing the target:
// definitionally, the target stays derivable from the reduced solution; the
// path formulation exhibits a relevant path whose strictly-required initial
// metabolites exclude the member.
PropertyVerdict excludable(const LtsGraph& g, int member, int target,
                           Method method = Method::Reachability, size_t cap = kDefaultPathCap);

// Some initial-solution member is dispensable along every path to the
// target: either never required, or re-producible by a qualifying self-loop
// before its first use. Witnesses list every such member.
PropertyVerdict redundant(const LtsGraph& g, int target, size_t cap = kDefaultPathCap);

// Every path of g1 leading to the target replays step-for-step in g2; rules
// are matched structurally (premises plus conclusion), not by id.
PropertyVerdict strong_robust(const LtsGraph& g1, const LtsGraph& g2, const Metabolite& target,
                              Method method = Method::Reachability, size_t cap = kDefaultPathCap);

// Derivability of the target in g1 implies derivability in g2.
PropertyVerdict weak_robust(const LtsGraph& g1, const LtsGraph& g2, const Metabolite& target,
                            Method method = Method::Reachability, size_t cap = kDefaultPathCap);

}  // namespace mnet
