#include "doctest.h"
#include "mnet/lts.hpp"
#include "test_support.hpp"

using namespace mnet;

namespace {

Bitset state_of(const LtsGraph& g, const std::set<Metabolite>& names) {
    Bitset s(g.net.universe.size());
    for (const auto& n : names) s.set(g.net.universe.require(n));
    return s;
}

}  // namespace

TEST_CASE("enabled: from {A,B} in ex1 only r1 fires") {
    auto g = testsup::graph_fixture("ex1.mnet");
    auto moves = enabled(g.net, g.net.initial);
    REQUIRE(moves.size() == 1);
    CHECK(g.net.spec.rules[moves[0].rule].id == "r1");
    CHECK(g.net.universe.name(moves[0].produced) == "D");
    CHECK(moves[0].target == state_of(g, {"A", "B", "D"}));
    CHECK_FALSE(moves[0].self_loop);

    // Ŝ of r1 is its premise set intersected with the initial solution.
    CHECK(g.net.rules[moves[0].rule].s_hat == state_of(g, {"A", "B"}));
}

TEST_CASE("enabled: a lone premise enables nothing") {
    auto g = testsup::graph_fixture("ex1.mnet");
    Bitset just_a(g.net.universe.size());
    just_a.set(g.net.universe.require("A"));
    CHECK(enabled(g.net, just_a).empty());
}

TEST_CASE("enabled: ex1 state {A,B,C,D} offers both producers of E") {
    auto g = testsup::graph_fixture("ex1.mnet");
    auto moves = enabled(g.net, state_of(g, {"A", "B", "C", "D"}));
    std::set<std::string> non_loop;
    for (const Move& m : moves)
        if (!m.self_loop) non_loop.insert(g.net.spec.rules[m.rule].id);
    CHECK(non_loop == std::set<std::string>{"r2", "r5"});
    for (const Move& m : moves)
        if (!m.self_loop) CHECK(g.net.universe.name(m.produced) == "E");
}

TEST_CASE("build_graph ex1: four states matching the expected contents") {
    auto g = testsup::graph_fixture("ex1.mnet");
    REQUIRE(g.states.size() == 4);
    CHECK(g.states[0] == state_of(g, {"A", "B"}));
    CHECK(g.states[1] == state_of(g, {"A", "B", "D"}));
    CHECK(g.states[2] == state_of(g, {"A", "B", "C", "D"}));
    CHECK(g.states[3] == state_of(g, {"A", "B", "C", "D", "E"}));
    CHECK(g.initial_state == 0);
}

TEST_CASE("build_graph: singleton when nothing fires") {
    MNetwork empty = validate_network({}, "empty");
    InitialSolution sol;
    sol.metabolites = {"A"};
    auto g = build_graph(encode(empty, sol));
    CHECK(g.states.size() == 1);
    CHECK(g.transitions.empty());
}

TEST_CASE("build_graph ex2: twenty-one states, the maximum being the whole universe") {
    auto g = testsup::graph_fixture("ex2.mnet");
    REQUIRE(g.states.size() == 21);
    CHECK(g.states.back().count() == 10);
    CHECK(g.states.back() == g.net.closure(g.net.initial));
}

TEST_CASE("transitions are monotone and add at most one metabolite") {
    for (const char* fixture : {"ex1.mnet", "ex2.mnet", "ex3_modified.mnet"}) {
        auto g = testsup::graph_fixture(fixture);
        for (const Transition& t : g.transitions) {
            CHECK(g.states[t.from].subset_of(g.states[t.to]));
            CHECK(g.states[t.to].minus(g.states[t.from]).count() <= 1);
        }
    }
}

TEST_CASE("no state carries two outgoing transitions with the same rule") {
    auto g = testsup::graph_fixture("ex2.mnet");
    for (const auto& out : g.out) {
        std::set<int> rules;
        for (int t : out) CHECK(rules.insert(g.transitions[t].rule).second);
    }
}

TEST_CASE("every reachable state contains the initial solution") {
    auto g = testsup::graph_fixture("ex2.mnet");
    for (const Bitset& s : g.states) CHECK(g.net.initial.subset_of(s));
}

TEST_CASE("the maximal reachable state equals the forward-chaining closure") {
    for (const char* fixture : {"ex1.mnet", "ex2.mnet", "glycolysis.mnet"}) {
        auto loaded = testsup::load_fixture(fixture);
        auto g = testsup::graph_fixture(fixture);
        Bitset closure = g.net.closure(g.net.initial);

        // cross-check against the naive oracle
        auto oracle = testsup::naive_closure(loaded.network.rules, loaded.solution.metabolites);
        Bitset oracle_bits(g.net.universe.size());
        for (const auto& m : oracle) oracle_bits.set(g.net.universe.require(m));
        CHECK(closure == oracle_bits);

        Bitset max = g.states[0];
        for (const Bitset& s : g.states)
            if (s.count() > max.count()) max = s;
        CHECK(max == closure);
    }
}

TEST_CASE("closure honors removed-rule masks") {
    auto loaded = testsup::load_fixture("ex2.mnet");
    auto g = testsup::graph_fixture("ex2.mnet");

    std::vector<bool> removed(g.net.rules.size(), false);
    removed[g.net.spec.rule_index("r4")] = true;  // the only viable H producer

    auto oracle = testsup::naive_closure(loaded.network.rules, loaded.solution.metabolites, {"r4"});
    CHECK(oracle.count("H") == 0);
    CHECK_FALSE(g.net.derivable(g.net.universe.require("H"), &removed));
}

TEST_CASE("glycolysis compiles to 30 post-split rules over 25 metabolites, all derivable") {
    auto loaded = testsup::load_fixture("glycolysis.mnet");
    CHECK(loaded.network.rules.size() == 30);
    auto g = testsup::graph_fixture("glycolysis.mnet");
    CHECK(g.net.universe.size() == 25);
    CHECK(g.net.closure(g.net.initial).count() == 25);
}

TEST_CASE("state ordering is deterministic: by size, then contents") {
    auto g = testsup::graph_fixture("ex2.mnet");
    for (size_t i = 1; i < g.states.size(); ++i)
        CHECK(Bitset::state_less(g.states[i - 1], g.states[i]));
}
