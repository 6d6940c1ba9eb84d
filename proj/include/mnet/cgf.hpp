#pragma once

#include <map>

#include "mnet/model.hpp"

namespace mnet {

enum class ActionKind { Input, Output, Delay };

struct BasicAction {
    ActionKind kind;
    std::string label;    // distinct across the whole specification
    std::string channel;  // empty for delays

    bool operator==(const BasicAction&) const = default;
};

struct Summand {
    BasicAction action;
    std::vector<Metabolite> continuation;  // empty, or a single metabolite

    bool operator==(const Summand&) const = default;
};

struct MoleculeDef {
    Metabolite reagent;
    std::vector<Summand> summands;
};

// Identifies the reaction behind a transition: a single label for a
// delay-encoded unary rule, a label pair (input, output) for a
// synchronization-encoded binary rule.
struct ReactionId {
    std::string rule_id;
    bool is_delay = false;
    std::string label_in;   // the delay label when is_delay
    std::string label_out;  // empty when is_delay

    std::string theta() const;
    bool operator==(const ReactionId&) const = default;
};

// A reagent environment together with the initial solution. Every metabolite
// of the universe has a definition, possibly with zero summands.
struct CgfSpec {
    std::string name;
    std::map<Metabolite, MoleculeDef> environment;
    InitialSolution initial;
    std::vector<Rule> rules;                // encode order = network order
    std::vector<ReactionId> reaction_ids;   // parallel to rules

    const Rule* rule_for(const std::string& rule_id) const;
    int rule_index(const std::string& rule_id) const;  // -1 when absent
};

// Compiles a network into reagent definitions. A binary rule A∘B→C gets a
// fresh channel: A (first premise) receives the input summand with
// continuation C, B the output summand with empty continuation. A unary rule
// A→C appends a delay summand to A. Labels derive from rule ids
// (`r1/in`, `r1/out`, `r4/tau`), so encoding is deterministic.
CgfSpec encode(const MNetwork& network, const InitialSolution& solution);

// True when all basic action labels across all definitions are distinct.
bool check_well_labeled(const CgfSpec& spec);

// The unique summand of `reagent` carrying `label`. Throws UnknownLabel.
const Summand& lookup(const CgfSpec& spec, const Metabolite& reagent, const std::string& label);

}  // namespace mnet
