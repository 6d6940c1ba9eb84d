#include "mnet/lts.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace mnet {

int Bitset::count() const {
    int n = 0;
    for (uint64_t w : words_) n += __builtin_popcountll(w);
    return n;
}

bool Bitset::any() const {
    for (uint64_t w : words_)
        if (w) return true;
    return false;
}

bool Bitset::subset_of(const Bitset& other) const {
    for (size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

Bitset& Bitset::operator|=(const Bitset& other) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

Bitset Bitset::minus(const Bitset& other) const {
    Bitset out = *this;
    for (size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~other.words_[i];
    return out;
}

std::vector<int> Bitset::to_indices() const {
    std::vector<int> out;
    for_each([&](int i) { out.push_back(i); });
    return out;
}

size_t Bitset::hash() const {
    size_t h = 0xcbf29ce484222325ull;
    for (uint64_t w : words_) {
        h ^= w;
        h *= 0x100000001b3ull;
    }
    return h;
}

bool Bitset::state_less(const Bitset& a, const Bitset& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    for (size_t i = 0; i < a.words_.size(); ++i) {
        uint64_t diff = a.words_[i] ^ b.words_[i];
        if (diff) {
            uint64_t low = diff & (~diff + 1);
            // Equal cardinality: the set holding the lowest differing index
            // is lexicographically smaller.
            return (a.words_[i] & low) != 0;
        }
    }
    return false;
}

Universe::Universe(const std::set<Metabolite>& names) {
    names_.assign(names.begin(), names.end());
    for (size_t i = 0; i < names_.size(); ++i) index_[names_[i]] = static_cast<int>(i);
}

int Universe::index_of(const Metabolite& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

int Universe::require(const Metabolite& name) const {
    int i = index_of(name);
    if (i < 0) throw AnalysisError(AnalysisError::Kind::UnknownMetabolite, name);
    return i;
}

Bitset CompiledNetwork::closure(const Bitset& start, const std::vector<bool>* removed) const {
    Bitset state = start;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < rules.size(); ++i) {
            if (removed && (*removed)[i]) continue;
            const IndexedRule& r = rules[i];
            if (!state.test(r.conclusion) && r.premise_set.subset_of(state)) {
                state.set(r.conclusion);
                changed = true;
            }
        }
    }
    return state;
}

bool CompiledNetwork::derivable(int metabolite, const std::vector<bool>* removed) const {
    return derivable_from(initial, metabolite, removed);
}

bool CompiledNetwork::derivable_from(const Bitset& start, int metabolite,
                                     const std::vector<bool>* removed) const {
    return closure(start, removed).test(metabolite);
}

CompiledNetwork compile(const CgfSpec& spec) {
    CompiledNetwork net;
    net.spec = spec;

    std::set<Metabolite> names = spec.initial.metabolites;
    for (const auto& [m, def] : spec.environment) names.insert(m);
    for (const Rule& r : spec.rules) {
        names.insert(r.premises.begin(), r.premises.end());
        names.insert(r.conclusion);
    }
    net.universe = Universe(names);

    const int n = net.universe.size();
    net.initial = Bitset(n);
    for (const Metabolite& m : spec.initial.metabolites) net.initial.set(net.universe.require(m));

    for (const Rule& r : spec.rules) {
        IndexedRule ir;
        ir.premise_count = static_cast<int>(r.premises.size());
        ir.premise_set = Bitset(n);
        for (int k = 0; k < ir.premise_count; ++k) {
            ir.premises[k] = net.universe.require(r.premises[k]);
            ir.premise_set.set(ir.premises[k]);
        }
        ir.conclusion = net.universe.require(r.conclusion);
        ir.s_hat = ir.premise_set;
        for (int k = 0; k < ir.premise_count; ++k)
            if (!net.initial.test(ir.premises[k])) ir.s_hat.reset(ir.premises[k]);
        net.rules.push_back(std::move(ir));
    }
    return net;
}

std::vector<Move> enabled(const CompiledNetwork& net, const Bitset& state) {
    std::vector<Move> out;
    for (size_t i = 0; i < net.rules.size(); ++i) {
        const IndexedRule& r = net.rules[i];
        if (!r.premise_set.subset_of(state)) continue;
        Move m;
        m.rule = static_cast<int>(i);
        m.produced = r.conclusion;
        m.self_loop = state.test(r.conclusion);
        m.target = state;
        m.target.set(r.conclusion);
        out.push_back(std::move(m));
    }
    return out;
}

int LtsGraph::state_index(const Bitset& s) const {
    auto it = index.find(s);
    return it == index.end() ? -1 : it->second;
}

std::string LtsGraph::state_label(int i) const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    states[i].for_each([&](int m) {
        if (!first) os << ", ";
        first = false;
        os << net.universe.name(m);
    });
    os << "}";
    return os.str();
}

LtsGraph build_graph(const CgfSpec& spec) {
    LtsGraph g;
    g.net = compile(spec);

    std::vector<Bitset> discovered;
    std::unordered_map<Bitset, int, BitsetHash> seen;
    std::deque<int> frontier;

    discovered.push_back(g.net.initial);
    seen.emplace(g.net.initial, 0);
    frontier.push_back(0);

    struct RawTransition {
        int from, to, rule;
    };
    std::vector<RawTransition> raw;

    while (!frontier.empty()) {
        int s = frontier.front();
        frontier.pop_front();
        const Bitset state = discovered[s];
        for (const Move& m : enabled(g.net, state)) {
            auto [it, inserted] = seen.emplace(m.target, static_cast<int>(discovered.size()));
            if (inserted) {
                discovered.push_back(m.target);
                frontier.push_back(it->second);
            }
            raw.push_back({s, it->second, m.rule});
        }
    }

    // Renumber deterministically: by (size, lexicographic contents).
    std::vector<int> order(discovered.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return Bitset::state_less(discovered[a], discovered[b]);
    });
    std::vector<int> renumber(discovered.size());
    for (size_t i = 0; i < order.size(); ++i) renumber[order[i]] = static_cast<int>(i);

    g.states.resize(discovered.size());
    for (size_t i = 0; i < discovered.size(); ++i) g.states[renumber[i]] = std::move(discovered[i]);
    for (size_t i = 0; i < g.states.size(); ++i) g.index.emplace(g.states[i], static_cast<int>(i));
    g.initial_state = renumber[0];

    for (RawTransition& t : raw) {
        t.from = renumber[t.from];
        t.to = renumber[t.to];
    }
    std::sort(raw.begin(), raw.end(), [](const RawTransition& a, const RawTransition& b) {
        return std::tie(a.from, a.rule) < std::tie(b.from, b.rule);
    });

    g.out.resize(g.states.size());
    g.transitions.reserve(raw.size());
    for (const RawTransition& t : raw) {
        g.out[t.from].push_back(static_cast<int>(g.transitions.size()));
        g.transitions.push_back(Transition{t.from, t.to, t.rule});
    }
    return g;
}

}  // namespace mnet
