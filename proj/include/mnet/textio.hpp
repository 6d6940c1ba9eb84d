#pragma once

#include "json.hpp"

#include "mnet/screen.hpp"

namespace mnet {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// A network file before normalization: reactions keep their multi-product
// form and source lines for diagnostics.
struct NetworkDocument {
    struct Reaction {
        std::string id;
        std::vector<Metabolite> premises;
        std::vector<Metabolite> products;
        int line = 0;
    };

    std::string name;
    std::vector<Metabolite> solution;
    int solution_line = 0;
    std::vector<Reaction> reactions;
};

struct LoadedNetwork {
    MNetwork network;
    InitialSolution solution;
};

NetworkDocument parse_document(const std::string& text, const std::string& default_name);

// Splits multi-product reactions and validates the result.
LoadedNetwork load_network(const NetworkDocument& doc);

LoadedNetwork parse_network(const std::string& text, const std::string& default_name = "network");
LoadedNetwork parse_network_file(const std::string& path);

// Bare token when the name fits `[A-Za-z0-9_.'-]+`, double-quoted otherwise.
std::string quote_term(const std::string& name);

std::string serialize_network(const MNetwork& network, const InitialSolution& solution);

// DOT digraph: one node per state labeled with the metabolites added
// relative to the initial solution, edges labeled `rule / produced`. With
// `collapse_self_loops`, all self-loops of a node merge into one edge
// listing their rules.
std::string export_dot(const LtsGraph& g, bool collapse_self_loops);

nlohmann::json graph_json(const LtsGraph& g);
nlohmann::json path_json(const LtsGraph& g, const Path& p);
nlohmann::json paths_json(const LtsGraph& g, const std::vector<Path>& ps);
nlohmann::json explanation_json(const Explanation& e);
nlohmann::json verdict_json(const LtsGraph& g, const PropertyVerdict& v,
                            const std::map<std::string, std::string>& inputs);
nlohmann::json screen_json(const std::vector<ScreenRow>& rows);

}  // namespace mnet
