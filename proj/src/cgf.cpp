#include "mnet/cgf.hpp"

#include <set>

namespace mnet {

std::string ReactionId::theta() const {
    if (is_delay) return label_in;
    return "(" + label_in + "," + label_out + ")";
}

const Rule* CgfSpec::rule_for(const std::string& rule_id) const {
    int i = rule_index(rule_id);
    return i < 0 ? nullptr : &rules[i];
}

int CgfSpec::rule_index(const std::string& rule_id) const {
    for (size_t i = 0; i < rules.size(); ++i)
        if (rules[i].id == rule_id) return static_cast<int>(i);
    return -1;
}

CgfSpec encode(const MNetwork& network, const InitialSolution& solution) {
    CgfSpec spec;
    spec.name = network.name;
    spec.initial = solution;
    spec.rules = network.rules;

    for (const Metabolite& m : universe(network, solution))
        spec.environment.emplace(m, MoleculeDef{m, {}});

    for (const Rule& r : network.rules) {
        ReactionId id;
        id.rule_id = r.id;
        if (r.premises.size() == 1) {
            id.is_delay = true;
            id.label_in = r.id + "/tau";
            spec.environment.at(r.premises[0])
                .summands.push_back(Summand{{ActionKind::Delay, id.label_in, ""}, {r.conclusion}});
        } else {
            id.is_delay = false;
            id.label_in = r.id + "/in";
            id.label_out = r.id + "/out";
            const std::string channel = r.id;
            spec.environment.at(r.premises[0])
                .summands.push_back(Summand{{ActionKind::Input, id.label_in, channel}, {r.conclusion}});
            spec.environment.at(r.premises[1])
                .summands.push_back(Summand{{ActionKind::Output, id.label_out, channel}, {}});
        }
        spec.reaction_ids.push_back(std::move(id));
    }
    return spec;
}

bool check_well_labeled(const CgfSpec& spec) {
    std::set<std::string> labels;
    for (const auto& [name, def] : spec.environment)
        for (const Summand& s : def.summands)
            if (!labels.insert(s.action.label).second) return false;
    return true;
}

const Summand& lookup(const CgfSpec& spec, const Metabolite& reagent, const std::string& label) {
    auto it = spec.environment.find(reagent);
    if (it == spec.environment.end())
        throw AnalysisError(AnalysisError::Kind::UnknownMetabolite, reagent);
    for (const Summand& s : it->second.summands)
        if (s.action.label == label) return s;
    throw AnalysisError(AnalysisError::Kind::UnknownLabel,
                        "no summand labeled '" + label + "' in the definition of " + reagent);
}

}  // namespace mnet
