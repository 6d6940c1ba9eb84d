#include "doctest.h"
#include "mnet/properties.hpp"
#include "test_support.hpp"

using namespace mnet;

namespace {

RuleGroup group(const LtsGraph& g, const std::string& id) {
    return resolve_rule_group(g.net, id);
}

int met(const LtsGraph& g, const std::string& name) { return g.net.universe.require(name); }

}  // namespace

TEST_CASE("essential: ex2 r4 is the only viable route to H") {
    auto g = testsup::graph_fixture("ex2.mnet");
    for (Method m : {Method::Reachability, Method::Enumeration, Method::Both})
        CHECK(essential(g, group(g, "r4"), met(g, "H"), m).holds);
}

TEST_CASE("essential: neither r5 nor r9 is essential for E in ex2") {
    auto g = testsup::graph_fixture("ex2.mnet");
    auto v5 = essential(g, group(g, "r5"), met(g, "E"), Method::Enumeration);
    CHECK_FALSE(v5.holds);
    REQUIRE(v5.witnesses.size() == 1);
    CHECK(v5.witnesses[0].kind == Witness::Kind::PathWitness);
    // the refuting path avoids r5
    for (int t : v5.witnesses[0].path.steps) CHECK(g.rule_id(t) != "r5");

    CHECK_FALSE(essential(g, group(g, "r9"), met(g, "E"), Method::Both).holds);
}

TEST_CASE("essential: target in the initial solution is an error") {
    auto g = testsup::graph_fixture("ex2.mnet");
    try {
        essential(g, group(g, "r1"), met(g, "A"));
        FAIL("expected TargetInSolution");
    } catch (const AnalysisError& e) {
        CHECK(e.kind() == AnalysisError::Kind::TargetInSolution);
    }
}

TEST_CASE("essential: underivable target refutes with a note") {
    std::vector<Rule> rules{{"r1", {"A", "B"}, "C"}};
    MNetwork net = validate_network(std::move(rules), "stuck");
    InitialSolution sol;
    sol.metabolites = {"A"};
    auto g = build_graph(encode(net, sol));
    auto v = essential(g, {0}, met(g, "C"), Method::Both);
    CHECK_FALSE(v.holds);
}

TEST_CASE("universal_essential: unique producers only") {
    auto g2 = testsup::graph_fixture("ex2.mnet");
    // r6 also concludes H, so r4 is not a universal producer.
    CHECK_FALSE(universal_essential(g2.net, group(g2, "r4"), met(g2, "H")));

    auto g1 = testsup::graph_fixture("ex1.mnet");
    // both r2 and r5 conclude E
    CHECK_FALSE(universal_essential(g1.net, group(g1, "r2"), met(g1, "E")));

    auto gg = testsup::graph_fixture("glycolysis.mnet");
    CHECK(universal_essential(gg.net, group(gg, "r7"), met(gg, "1,3 Bisphosphoglycerate")));
}

TEST_CASE("universal_essential ignores producers that consume their own conclusion") {
    std::vector<Rule> rules{{"r1", {"A"}, "C"}, {"r2", {"C", "B"}, "C"}};
    MNetwork net = validate_network(std::move(rules), "self");
    InitialSolution sol;
    sol.metabolites = {"A", "B"};
    auto g = build_graph(encode(net, sol));
    CHECK(universal_essential(g.net, {0}, met(g, "C")));
}

TEST_CASE("mutually_essential: r5/r9 for E in ex2") {
    auto g = testsup::graph_fixture("ex2.mnet");
    for (Method m : {Method::Reachability, Method::Enumeration, Method::Both})
        CHECK(mutually_essential(g, group(g, "r5"), group(g, "r9"), met(g, "E"), m).holds);
    // an essential rule never participates in a mutually-essential pair
    CHECK_FALSE(mutually_essential(g, group(g, "r4"), group(g, "r9"), met(g, "H")).holds);
}

TEST_CASE("mutually_essential: r2/r5 for E in ex1, derived by removal") {
    auto loaded = testsup::load_fixture("ex1.mnet");
    auto& rules = loaded.network.rules;
    auto& sol = loaded.solution.metabolites;
    CHECK(testsup::naive_closure(rules, sol, {"r2"}).count("E"));
    CHECK(testsup::naive_closure(rules, sol, {"r5"}).count("E"));
    CHECK_FALSE(testsup::naive_closure(rules, sol, {"r2", "r5"}).count("E"));

    auto g = testsup::graph_fixture("ex1.mnet");
    CHECK(mutually_essential(g, group(g, "r2"), group(g, "r5"), met(g, "E"), Method::Both).holds);
}

TEST_CASE("mutual essentiality implies the removal survivors are vicarious") {
    auto g = testsup::graph_fixture("ex2.mnet");
    int e = met(g, "E");
    auto paths = chi_paths_to(g, e);
    std::vector<Path> without_r5, without_r9;
    for (const Path& p : paths) {
        auto ids = rule_ids_of(g, p);
        if (!ids.count("r5")) without_r5.push_back(p);
        if (!ids.count("r9")) without_r9.push_back(p);
    }
    REQUIRE_FALSE(without_r5.empty());
    REQUIRE_FALSE(without_r9.empty());
    for (const Path& a : without_r5)
        for (const Path& b : without_r9) CHECK(vicarious(g, a, b));
}

TEST_CASE("vicarious: published pair on ex2, reflexive case is false") {
    auto g = testsup::graph_fixture("ex2.mnet");
    Path p = path_from_rules(g, {"r3", "r1", "r2", "r9"});
    Path p_prime = path_from_rules(g, {"r4", "r5"});
    CHECK(vicarious(g, p, p_prime));
    CHECK_FALSE(vicarious(g, p, p));
}

TEST_CASE("vicarious: the two glycolysis routes to Glyceraldehyde-3-P") {
    auto g = testsup::graph_fixture("glycolysis.mnet");
    Path pentose = path_from_rules(g, {"r12.1", "r13", "r14.1", "r15", "r16", "r17.1"});
    Path direct = path_from_rules(g, {"r1.1", "r2", "r3.1", "r4.1"});
    CHECK(leads_to(g, pentose, met(g, "Glyceraldehyde-3-P")));
    CHECK(leads_to(g, direct, met(g, "Glyceraldehyde-3-P")));
    CHECK(vicarious(g, pentose, direct));
}

TEST_CASE("checkpoint: H gates L in ex2; A gates E in ex1") {
    auto g2 = testsup::graph_fixture("ex2.mnet");
    for (Method m : {Method::Reachability, Method::Enumeration, Method::Both})
        CHECK(checkpoint(g2, met(g2, "H"), met(g2, "L"), m).holds);

    auto g1 = testsup::graph_fixture("ex1.mnet");
    CHECK(checkpoint(g1, met(g1, "A"), met(g1, "E"), Method::Both).holds);
    CHECK(checkpoint(g1, met(g1, "A"), met(g1, "C"), Method::Both).holds);
}

TEST_CASE("checkpoint: D-Glucono-1,5-Lactone-6P gates D-Xylulose-5-P") {
    auto g = testsup::graph_fixture("glycolysis.mnet");
    CHECK(checkpoint(g, met(g, "D-Glucono-1,5-Lactone-6P"), met(g, "D-Xylulose-5-P")).holds);
    // NADPH is also produced directly by r12.2, so the lactone does not gate it.
    CHECK_FALSE(checkpoint(g, met(g, "D-Glucono-1,5-Lactone-6P"), met(g, "NADPH")).holds);
}

TEST_CASE("causes: producers of the premises of r2 precede it in ex2") {
    auto g = testsup::graph_fixture("ex2.mnet");
    // r2 consumes C and F, whose only producers are r1 and r3.
    for (Method m : {Method::Reachability, Method::Enumeration, Method::Both}) {
        CHECK(causes(g, group(g, "r1"), group(g, "r2"), m).holds);
        CHECK(causes(g, group(g, "r3"), group(g, "r2"), m).holds);
    }
    // r1 and r3 fire in either order
    CHECK_FALSE(causes(g, group(g, "r1"), group(g, "r3"), Method::Both).holds);
    CHECK_FALSE(causes(g, group(g, "r3"), group(g, "r1"), Method::Both).holds);
    // L requires E and H, both reachable without r1
    CHECK_FALSE(causes(g, group(g, "r1"), group(g, "r7"), Method::Both).holds);
}

TEST_CASE("causes implies the producers' conclusions are checkpoints") {
    auto g = testsup::graph_fixture("ex2.mnet");
    auto groups = reaction_groups(g.net);
    for (const auto& [id1, g1] : groups) {
        for (const auto& [id2, g2] : groups) {
            if (id1 == id2) continue;
            if (!causes(g, g1, g2).holds) continue;
            int produced = g.net.rules[g1.front()].conclusion;
            int consumer_product = g.net.rules[g2.front()].conclusion;
            if (g.net.initial.test(consumer_product)) continue;
            CHECK(checkpoint(g, produced, consumer_product).holds);
        }
    }
}

TEST_CASE("causes is transitive on the fixture graphs") {
    for (const char* fixture : {"ex1.mnet", "ex2.mnet"}) {
        auto g = testsup::graph_fixture(fixture);
        auto groups = reaction_groups(g.net);
        std::vector<std::vector<bool>> rel(groups.size(), std::vector<bool>(groups.size()));
        for (size_t i = 0; i < groups.size(); ++i)
            for (size_t j = 0; j < groups.size(); ++j)
                rel[i][j] = causes(g, groups[i].second, groups[j].second).holds;
        for (size_t a = 0; a < groups.size(); ++a)
            for (size_t b = 0; b < groups.size(); ++b)
                for (size_t c = 0; c < groups.size(); ++c)
                    if (rel[a][b] && rel[b][c]) CHECK(rel[a][c]);
    }
}

TEST_CASE("glycolysis causal chains that hold: single-producer links") {
    auto g = testsup::graph_fixture("glycolysis.mnet");
    auto holds = [&](const char* a, const char* b) {
        return causes(g, group(g, a), group(g, b)).holds;
    };
    CHECK(holds("r1", "r2"));
    CHECK(holds("r3", "r4"));
    CHECK(holds("r7", "r8"));
    CHECK(holds("r8", "r9"));
    CHECK(holds("r9", "r10"));
    CHECK(holds("r10", "r11"));
    CHECK(holds("r12", "r13"));
    CHECK(holds("r13", "r14"));
    CHECK(holds("r14", "r15"));
    // links bypassed by the pentose re-entry or the isomerase pair
    CHECK_FALSE(holds("r2", "r3"));
    CHECK_FALSE(holds("r4", "r5"));
    CHECK_FALSE(holds("r5", "r6"));
    CHECK_FALSE(holds("r6", "r7"));
}

TEST_CASE("excludable: O and A are droppable for E in ex2") {
    auto g = testsup::graph_fixture("ex2.mnet");
    for (Method m : {Method::Reachability, Method::Enumeration, Method::Both}) {
        CHECK(excludable(g, met(g, "O"), met(g, "E"), m).holds);
        CHECK(excludable(g, met(g, "A"), met(g, "E"), m).holds);
        CHECK_FALSE(excludable(g, met(g, "B"), met(g, "E"), m).holds);
        CHECK_FALSE(excludable(g, met(g, "D"), met(g, "E"), m).holds);
    }
    // A's exclusion kills F but not E
    Bitset start = g.net.initial;
    start.reset(met(g, "A"));
    CHECK_FALSE(g.net.derivable_from(start, met(g, "F")));
}

TEST_CASE("excludable: NADP+ for the two glycolysis targets") {
    auto g = testsup::graph_fixture("glycolysis.mnet");
    CHECK(excludable(g, met(g, "NADP+"), met(g, "β-D-Fructose-1,6bP"), Method::Both).holds);
    CHECK_FALSE(excludable(g, met(g, "NADP+"), met(g, "D-Xylulose-5-P")).holds);
}

TEST_CASE("excludable: wrong arguments raise typed errors") {
    auto g = testsup::graph_fixture("ex2.mnet");
    try {
        excludable(g, met(g, "E"), met(g, "L"));
        FAIL("expected NotInSolution");
    } catch (const AnalysisError& e) {
        CHECK(e.kind() == AnalysisError::Kind::NotInSolution);
    }
}

TEST_CASE("redundant: ex2 solution is redundant for E, witnessed by O alone") {
    auto g = testsup::graph_fixture("ex2.mnet");
    auto v = redundant(g, met(g, "E"));
    CHECK(v.holds);
    REQUIRE(v.witnesses.size() == 1);
    CHECK(v.witnesses[0].kind == Witness::Kind::MetaboliteWitness);
    CHECK(v.witnesses[0].text == "O");
}

TEST_CASE("redundant: single necessary member is not redundant") {
    std::vector<Rule> rules{{"r1", {"A"}, "C"}};
    MNetwork net = validate_network(std::move(rules), "tiny");
    InitialSolution sol;
    sol.metabolites = {"A"};
    auto g = build_graph(encode(net, sol));
    CHECK_FALSE(redundant(g, met(g, "C")).holds);
}

TEST_CASE("redundant vs excludable on the modified network") {
    auto g = testsup::graph_fixture("ex3_modified.mnet");
    int e = met(g, "E");
    // O became necessary, the solution is no longer redundant, yet O can
    // still be excluded because the system reproduces it in time.
    CHECK(checkpoint(g, met(g, "O"), e, Method::Both).holds);
    CHECK_FALSE(redundant(g, e).holds);
    CHECK(excludable(g, met(g, "O"), e, Method::Both).holds);
}

TEST_CASE("checkpoint failure of a solution member implies excludability") {
    for (const char* fixture : {"ex2.mnet", "ex3_modified.mnet"}) {
        auto g = testsup::graph_fixture(fixture);
        g.net.initial.for_each([&](int b) {
            for (int c = 0; c < g.net.universe.size(); ++c) {
                if (g.net.initial.test(c) || !g.net.derivable(c)) continue;
                if (!checkpoint(g, b, c).holds) CHECK(excludable(g, b, c).holds);
            }
        });
    }
}

TEST_CASE("strong and weak robustness on the TPI-deficient glycolysis") {
    auto g_full = testsup::graph_fixture("glycolysis.mnet");
    auto g_tpi = testsup::graph_fixture("glycolysis_tpi.mnet");

    // the deficient network embeds into the full one
    CHECK(strong_robust(g_tpi, g_full, "Pyruvate").holds);
    CHECK(weak_robust(g_tpi, g_full, "Pyruvate").holds);
    // the converse fails path-wise but holds existence-wise
    CHECK_FALSE(strong_robust(g_full, g_tpi, "Pyruvate").holds);
    CHECK(weak_robust(g_full, g_tpi, "Pyruvate").holds);
}

TEST_CASE("strong robustness is reflexive and implies weak robustness") {
    auto g = testsup::graph_fixture("ex2.mnet");
    for (int c = 0; c < g.net.universe.size(); ++c) {
        if (g.net.initial.test(c)) continue;
        CHECK(strong_robust(g, g, g.net.universe.name(c), Method::Both).holds);
        CHECK(weak_robust(g, g, g.net.universe.name(c), Method::Both).holds);
    }
}

TEST_CASE("robustness requires matching initial solutions") {
    auto g1 = testsup::graph_fixture("glycolysis.mnet");
    auto g2 = testsup::graph_fixture("glycolysis_sbeta.mnet");
    try {
        weak_robust(g1, g2, "Pyruvate");
        FAIL("expected MismatchedSolutions");
    } catch (const AnalysisError& e) {
        CHECK(e.kind() == AnalysisError::Kind::MismatchedSolutions);
    }
}

TEST_CASE("robustness matches rules structurally, not by id") {
    // same reactions, permuted ids
    auto base = mnet::parse_network(
        "solution: A, B\n"
        "rule x: A + B -> C\n"
        "rule y: C -> D\n");
    auto renamed = mnet::parse_network(
        "solution: A, B\n"
        "rule q1: C -> D\n"
        "rule q2: A + B -> C\n");
    auto g1 = build_graph(encode(base.network, base.solution));
    auto g2 = build_graph(encode(renamed.network, renamed.solution));
    CHECK(strong_robust(g1, g2, "D", Method::Both).holds);
    CHECK(strong_robust(g2, g1, "D", Method::Both).holds);
}

TEST_CASE("mutual essentiality of the r4 pair and r5 for DHAP under the extended solution") {
    auto g = testsup::graph_fixture("glycolysis_sbeta.mnet");
    auto v = mutually_essential(g, group(g, "r4"), group(g, "r5"),
                                met(g, "Dihydroxyacetone phosphate"), Method::Both);
    CHECK(v.holds);
    // with the plain solution, r5 alone cannot fire early enough to matter
    // for Pyruvate, which stays derivable without both
    auto v2 = mutually_essential(g, group(g, "r4"), group(g, "r5"), met(g, "Pyruvate"));
    CHECK_FALSE(v2.holds);
}

TEST_CASE("resolve_rule_group: exact ids win, bases collect their splits") {
    auto g = testsup::graph_fixture("glycolysis.mnet");
    CHECK(resolve_rule_group(g.net, "r2").size() == 1);
    CHECK(resolve_rule_group(g.net, "r4").size() == 2);
    CHECK(resolve_rule_group(g.net, "r4.1").size() == 1);
    try {
        resolve_rule_group(g.net, "r99");
        FAIL("expected UnknownRule");
    } catch (const AnalysisError& e) {
        CHECK(e.kind() == AnalysisError::Kind::UnknownRule);
    }
}

TEST_CASE("reaction_groups partition the split rules by base id") {
    auto g = testsup::graph_fixture("glycolysis.mnet");
    auto groups = reaction_groups(g.net);
    CHECK(groups.size() == 19);
    size_t total = 0;
    for (const auto& [base, members] : groups) total += members.size();
    CHECK(total == 30);
}
