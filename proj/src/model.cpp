#include "mnet/model.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace mnet {

AnalysisError::AnalysisError(Kind kind, const std::string& message)
    : std::runtime_error(std::string(kind_name(kind)) + ": " + message), kind_(kind) {}

const char* AnalysisError::kind_name(Kind kind) {
    switch (kind) {
    case Kind::BimolecularViolation: return "BimolecularViolation";
    case Kind::EmptyPremise: return "EmptyPremise";
    case Kind::EmptyProduct: return "EmptyProduct";
    case Kind::DuplicateRuleId: return "DuplicateRuleId";
    case Kind::UnknownLabel: return "UnknownLabel";
    case Kind::UnknownRule: return "UnknownRule";
    case Kind::UnknownMetabolite: return "UnknownMetabolite";
    case Kind::TargetInSolution: return "TargetInSolution";
    case Kind::NotInSolution: return "NotInSolution";
    case Kind::MismatchedSolutions: return "MismatchedSolutions";
    case Kind::InvalidExplanation: return "InvalidExplanation";
    case Kind::LimitExceeded: return "LimitExceeded";
    case Kind::MethodDisagreement: return "MethodDisagreement";
    case Kind::NotDerivable: return "NotDerivable";
    }
    return "AnalysisError";
}

bool same_reaction(const Rule& a, const Rule& b) {
    if (a.conclusion != b.conclusion) return false;
    std::multiset<Metabolite> pa(a.premises.begin(), a.premises.end());
    std::multiset<Metabolite> pb(b.premises.begin(), b.premises.end());
    return pa == pb;
}

const Rule* MNetwork::find_rule(const std::string& id) const {
    for (const Rule& r : rules)
        if (r.id == id) return &r;
    return nullptr;
}

std::vector<Rule> split_reaction(const std::vector<Metabolite>& premises,
                                 const std::vector<Metabolite>& products,
                                 const std::string& base_id) {
    if (premises.empty())
        throw AnalysisError(AnalysisError::Kind::EmptyPremise,
                            "reaction '" + base_id + "' has no premises");
    if (premises.size() > 2)
        throw AnalysisError(AnalysisError::Kind::BimolecularViolation,
                            "reaction '" + base_id + "' has " + std::to_string(premises.size()) +
                                " premises, at most two are supported");
    if (products.empty())
        throw AnalysisError(AnalysisError::Kind::EmptyProduct,
                            "reaction '" + base_id + "' has no products");

    std::vector<Rule> out;
    if (products.size() == 1) {
        out.push_back(Rule{base_id, premises, products.front()});
        return out;
    }
    for (size_t k = 0; k < products.size(); ++k)
        out.push_back(Rule{base_id + "." + std::to_string(k + 1), premises, products[k]});
    return out;
}

MNetwork validate_network(std::vector<Rule> rules, std::string name) {
    std::set<std::string> seen;
    for (const Rule& r : rules) {
        if (r.premises.empty())
            throw AnalysisError(AnalysisError::Kind::EmptyPremise, "rule '" + r.id + "'");
        if (r.premises.size() > 2)
            throw AnalysisError(AnalysisError::Kind::BimolecularViolation, "rule '" + r.id + "'");
        if (!seen.insert(r.id).second)
            throw AnalysisError(AnalysisError::Kind::DuplicateRuleId, "rule '" + r.id + "'");
    }
    return MNetwork{std::move(name), std::move(rules)};
}

std::set<Metabolite> universe(const MNetwork& network, const InitialSolution& solution) {
    std::set<Metabolite> out = solution.metabolites;
    for (const Rule& r : network.rules) {
        out.insert(r.premises.begin(), r.premises.end());
        out.insert(r.conclusion);
    }
    return out;
}

Explanation leaf(Metabolite m) { return Explanation{std::move(m), std::nullopt, {}}; }

Explanation by_rule(Metabolite m, std::string rule_id, std::vector<Explanation> children) {
    return Explanation{std::move(m), std::move(rule_id), std::move(children)};
}

std::set<Metabolite> metabolites_of(const Explanation& e) {
    if (e.is_leaf()) return {e.root};
    std::set<Metabolite> out;
    for (const Explanation& child : e.children) {
        out.insert(child.root);
        auto sub = metabolites_of(child);
        out.insert(sub.begin(), sub.end());
    }
    return out;
}

std::set<std::string> rules_of(const Explanation& e) {
    std::set<std::string> out;
    if (e.is_leaf()) return out;
    out.insert(*e.rule);
    for (const Explanation& child : e.children) {
        auto sub = rules_of(child);
        out.insert(sub.begin(), sub.end());
    }
    return out;
}

namespace {

bool collect_uniform(const Explanation& e, std::map<Metabolite, const Explanation*>& seen) {
    auto [it, inserted] = seen.emplace(e.root, &e);
    if (!inserted && !(*it->second == e)) return false;
    for (const Explanation& child : e.children)
        if (!collect_uniform(child, seen)) return false;
    return true;
}

}  // namespace

bool is_uniform(const Explanation& e) {
    std::map<Metabolite, const Explanation*> seen;
    return collect_uniform(e, seen);
}

Explanation canonicalize(const Explanation& e, const MNetwork& network) {
    Explanation out = e;
    for (Explanation& child : out.children) child = canonicalize(child, network);
    if (!out.is_leaf() && out.children.size() == 2) {
        const Rule* r = network.find_rule(*out.rule);
        if (r && r->premises.size() == 2 && out.children[0].root == r->premises[1] &&
            out.children[1].root == r->premises[0] && r->premises[0] != r->premises[1]) {
            std::swap(out.children[0], out.children[1]);
        }
    }
    return out;
}

std::string to_string(const Explanation& e) {
    std::ostringstream os;
    os << e.root;
    if (!e.is_leaf()) os << "<" << *e.rule << ">";
    os << "[";
    for (size_t i = 0; i < e.children.size(); ++i) {
        if (i) os << ", ";
        os << to_string(e.children[i]);
    }
    os << "]";
    return os.str();
}

}  // namespace mnet
