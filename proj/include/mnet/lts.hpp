#pragma once

#include <cstdint>
#include <unordered_map>

#include "mnet/cgf.hpp"

namespace mnet {

// Fixed-width bit set over a universe of indices.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    int size_bits() const { return bits_; }
    void set(int i) { words_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    int count() const;
    bool any() const;
    bool subset_of(const Bitset& other) const;
    Bitset& operator|=(const Bitset& other);
    Bitset minus(const Bitset& other) const;

    bool operator==(const Bitset&) const = default;

    // Ascending index visitation.
    template <class F>
    void for_each(F f) const {
        for (size_t w = 0; w < words_.size(); ++w) {
            uint64_t word = words_[w];
            while (word) {
                int bit = __builtin_ctzll(word);
                f(static_cast<int>(w * 64 + bit));
                word &= word - 1;
            }
        }
    }

    std::vector<int> to_indices() const;
    size_t hash() const;

    // Orders by cardinality, then by contents read as a sorted sequence of
    // indices (the side owning the lowest differing index comes first).
    static bool state_less(const Bitset& a, const Bitset& b);

private:
    int bits_ = 0;
    std::vector<uint64_t> words_;
};

struct BitsetHash {
    size_t operator()(const Bitset& b) const { return b.hash(); }
};

// Metabolite names in lexicographic order; index is positional.
class Universe {
public:
    Universe() = default;
    explicit Universe(const std::set<Metabolite>& names);

    int index_of(const Metabolite& name) const;  // -1 when absent
    int require(const Metabolite& name) const;   // throws UnknownMetabolite
    const Metabolite& name(int index) const { return names_[index]; }
    int size() const { return static_cast<int>(names_.size()); }

private:
    std::vector<Metabolite> names_;
    std::map<Metabolite, int> index_;
};

struct IndexedRule {
    int premises[2] = {-1, -1};
    int premise_count = 0;
    int conclusion = -1;
    Bitset premise_set;
    Bitset s_hat;  // premises ∩ initial solution; constant per rule
};

// Index-level view of a specification, shared by the closure oracle, the
// graph builder and the property checkers.
struct CompiledNetwork {
    CgfSpec spec;
    Universe universe;
    std::vector<IndexedRule> rules;
    Bitset initial;

    // Forward-chaining fixpoint from `start`; rules flagged in `removed` do
    // not fire.
    Bitset closure(const Bitset& start, const std::vector<bool>* removed = nullptr) const;
    bool derivable(int metabolite, const std::vector<bool>* removed = nullptr) const;
    bool derivable_from(const Bitset& start, int metabolite,
                        const std::vector<bool>* removed = nullptr) const;
};

CompiledNetwork compile(const CgfSpec& spec);

// One enabled move from a state: a unary rule with its premise present fires
// as a delay, a binary rule with both premises present as a synchronization.
struct Move {
    int rule;
    int produced;
    Bitset target;
    bool self_loop;
};

std::vector<Move> enabled(const CompiledNetwork& net, const Bitset& state);

struct Transition {
    int from;
    int to;
    int rule;
};

struct LtsGraph {
    CompiledNetwork net;
    std::vector<Bitset> states;           // sorted by (size, lexicographic contents)
    int initial_state = 0;
    std::vector<Transition> transitions;  // sorted by (from, rule)
    std::vector<std::vector<int>> out;    // per-state transition indices

    int state_index(const Bitset& s) const;
    bool self_loop(int t) const { return transitions[t].from == transitions[t].to; }
    int produced(int t) const { return net.rules[transitions[t].rule].conclusion; }
    const Bitset& s_hat(int t) const { return net.rules[transitions[t].rule].s_hat; }
    const std::string& rule_id(int t) const { return net.spec.rules[transitions[t].rule].id; }
    std::string state_name(int i) const { return "S" + std::to_string(i); }
    std::string state_label(int i) const;  // contents as {A, B, ...}

    std::unordered_map<Bitset, int, BitsetHash> index;
};

// Breadth-first closure of `enabled` from the initial solution. States only
// grow, so the construction terminates within the finite universe.
LtsGraph build_graph(const CgfSpec& spec);

}  // namespace mnet
