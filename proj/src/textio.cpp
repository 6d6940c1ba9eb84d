#include "mnet/textio.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace mnet {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

namespace {

bool is_bare_char(char c) {
    unsigned char u = static_cast<unsigned char>(c);
    if (u >= 0x80) return false;
    return std::isalnum(u) || c == '_' || c == '.' || c == '\'' || c == '-';
}

bool is_bare_token(const std::string& s) {
    if (s.empty()) return false;
    for (size_t i = 0; i < s.size(); ++i) {
        if (!is_bare_char(s[i])) return false;
        if (s[i] == '-' && i + 1 < s.size() && s[i + 1] == '>') return false;
    }
    return true;
}

struct Token {
    enum Kind { Word, Quoted, Colon, Comma, Plus, Arrow, End } kind;
    std::string text;
    int column;
};

class LineLexer {
public:
    LineLexer(const std::string& line, int line_no) : line_(line), line_no_(line_no) {}

    Token next() {
        while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t')) ++pos_;
        int col = static_cast<int>(pos_) + 1;
        if (pos_ >= line_.size() || line_[pos_] == '#') return {Token::End, "", col};

        char c = line_[pos_];
        if (c == ':') { ++pos_; return {Token::Colon, ":", col}; }
        if (c == ',') { ++pos_; return {Token::Comma, ",", col}; }
        if (c == '+') { ++pos_; return {Token::Plus, "+", col}; }
        if (c == '-' && pos_ + 1 < line_.size() && line_[pos_ + 1] == '>') {
            pos_ += 2;
            return {Token::Arrow, "->", col};
        }
        if (c == '"') return lex_quoted(col);
        if (is_bare_char(c)) {
            size_t start = pos_;
            while (pos_ < line_.size() && is_bare_char(line_[pos_])) {
                if (line_[pos_] == '-' && pos_ + 1 < line_.size() && line_[pos_ + 1] == '>') break;
                ++pos_;
            }
            return {Token::Word, line_.substr(start, pos_ - start), col};
        }
        throw ParseError(line_no_, col,
                         "unexpected character; quote names containing special characters");
    }

private:
    Token lex_quoted(int col) {
        std::string out;
        ++pos_;  // opening quote
        while (pos_ < line_.size()) {
            char c = line_[pos_];
            if (c == '"') {
                ++pos_;
                return {Token::Quoted, out, col};
            }
            if (c == '\\') {
                if (pos_ + 1 >= line_.size())
                    throw ParseError(line_no_, static_cast<int>(pos_) + 1, "dangling escape");
                char e = line_[pos_ + 1];
                if (e != '"' && e != '\\')
                    throw ParseError(line_no_, static_cast<int>(pos_) + 1,
                                     "invalid escape; only \\\" and \\\\ are recognized");
                out.push_back(e);
                pos_ += 2;
                continue;
            }
            out.push_back(c);
            ++pos_;
        }
        throw ParseError(line_no_, col, "unterminated quoted name");
    }

    const std::string& line_;
    int line_no_;
    size_t pos_ = 0;
};

std::string expect_term(LineLexer& lex, int line_no, const char* what) {
    Token t = lex.next();
    if (t.kind != Token::Word && t.kind != Token::Quoted)
        throw ParseError(line_no, t.column, std::string("expected ") + what);
    if (t.text.empty()) throw ParseError(line_no, t.column, "empty name");
    return t.text;
}

void expect_kind(LineLexer& lex, int line_no, Token::Kind kind, const char* what) {
    Token t = lex.next();
    if (t.kind != kind) throw ParseError(line_no, t.column, std::string("expected ") + what);
}

}  // namespace

NetworkDocument parse_document(const std::string& text, const std::string& default_name) {
    NetworkDocument doc;
    doc.name = default_name;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool saw_network = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        LineLexer lex(line, line_no);
        Token head = lex.next();
        if (head.kind == Token::End) continue;
        if (head.kind != Token::Word && head.kind != Token::Quoted)
            throw ParseError(line_no, head.column, "expected 'network', 'solution' or 'rule'");

        if (head.text == "network") {
            if (saw_network) throw ParseError(line_no, head.column, "duplicate network line");
            saw_network = true;
            doc.name = expect_term(lex, line_no, "a network name");
            expect_kind(lex, line_no, Token::End, "end of line");
        } else if (head.text == "solution") {
            if (doc.solution_line != 0)
                throw ParseError(line_no, head.column, "duplicate solution line");
            doc.solution_line = line_no;
            expect_kind(lex, line_no, Token::Colon, "':' after 'solution'");
            doc.solution.push_back(expect_term(lex, line_no, "a metabolite name"));
            for (Token t = lex.next(); t.kind != Token::End; t = lex.next()) {
                if (t.kind != Token::Comma)
                    throw ParseError(line_no, t.column, "expected ',' between metabolites");
                doc.solution.push_back(expect_term(lex, line_no, "a metabolite name"));
            }
        } else if (head.text == "rule") {
            NetworkDocument::Reaction rx;
            rx.line = line_no;
            rx.id = expect_term(lex, line_no, "a rule id");
            expect_kind(lex, line_no, Token::Colon, "':' after the rule id");
            rx.premises.push_back(expect_term(lex, line_no, "a premise"));
            Token t = lex.next();
            while (t.kind == Token::Plus) {
                rx.premises.push_back(expect_term(lex, line_no, "a premise"));
                t = lex.next();
            }
            if (t.kind != Token::Arrow)
                throw ParseError(line_no, t.column, "expected '->'");
            if (rx.premises.size() > 2)
                throw AnalysisError(AnalysisError::Kind::BimolecularViolation,
                                    "line " + std::to_string(line_no) + ": rule '" + rx.id +
                                        "' has " + std::to_string(rx.premises.size()) +
                                        " premises, at most two are supported");
            rx.products.push_back(expect_term(lex, line_no, "a product"));
            for (t = lex.next(); t.kind != Token::End; t = lex.next()) {
                if (t.kind != Token::Plus)
                    throw ParseError(line_no, t.column, "expected '+' between products");
                rx.products.push_back(expect_term(lex, line_no, "a product"));
            }
            doc.reactions.push_back(std::move(rx));
        } else {
            throw ParseError(line_no, head.column, "expected 'network', 'solution' or 'rule'");
        }
    }

    if (doc.solution_line == 0) throw ParseError(line_no, 1, "missing solution line");
    return doc;
}

LoadedNetwork load_network(const NetworkDocument& doc) {
    std::vector<Rule> rules;
    for (const auto& rx : doc.reactions)
        for (Rule& r : split_reaction(rx.premises, rx.products, rx.id)) rules.push_back(std::move(r));

    LoadedNetwork out;
    out.network = validate_network(std::move(rules), doc.name);
    out.solution.metabolites.insert(doc.solution.begin(), doc.solution.end());
    return out;
}

LoadedNetwork parse_network(const std::string& text, const std::string& default_name) {
    return load_network(parse_document(text, default_name));
}

LoadedNetwork parse_network_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();

    std::string stem = path;
    if (size_t slash = stem.find_last_of("/\\"); slash != std::string::npos)
        stem = stem.substr(slash + 1);
    if (size_t dot = stem.rfind('.'); dot != std::string::npos && dot > 0)
        stem = stem.substr(0, dot);
    return parse_network(buffer.str(), stem);
}

std::string quote_term(const std::string& name) {
    if (is_bare_token(name)) return name;
    std::string out = "\"";
    for (char c : name) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string serialize_network(const MNetwork& network, const InitialSolution& solution) {
    std::ostringstream os;
    os << "network " << quote_term(network.name) << "\n";
    os << "solution: ";
    bool first = true;
    for (const Metabolite& m : solution.metabolites) {
        if (!first) os << ", ";
        first = false;
        os << quote_term(m);
    }
    os << "\n";
    for (const Rule& r : network.rules) {
        os << "rule " << quote_term(r.id) << ": " << quote_term(r.premises[0]);
        if (r.premises.size() == 2) os << " + " << quote_term(r.premises[1]);
        os << " -> " << quote_term(r.conclusion) << "\n";
    }
    return os.str();
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace

std::string export_dot(const LtsGraph& g, bool collapse_self_loops) {
    std::ostringstream os;
    os << "digraph lts {\n  rankdir=LR;\n";

    for (size_t i = 0; i < g.states.size(); ++i) {
        std::ostringstream label;
        label << g.state_name(static_cast<int>(i)) << ": ";
        if (static_cast<int>(i) == g.initial_state) {
            label << g.state_label(static_cast<int>(i));
        } else {
            label << "+{";
            bool first = true;
            g.states[i].minus(g.net.initial).for_each([&](int m) {
                if (!first) label << ", ";
                first = false;
                label << g.net.universe.name(m);
            });
            label << "}";
        }
        os << "  " << g.state_name(static_cast<int>(i)) << " [label=\"" << dot_escape(label.str())
           << "\"];\n";
    }

    std::vector<std::vector<int>> loop_rules(g.states.size());
    for (size_t t = 0; t < g.transitions.size(); ++t) {
        const Transition& tr = g.transitions[t];
        if (collapse_self_loops && tr.from == tr.to) {
            loop_rules[tr.from].push_back(tr.rule);
            continue;
        }
        os << "  " << g.state_name(tr.from) << " -> " << g.state_name(tr.to) << " [label=\""
           << dot_escape(g.net.spec.rules[tr.rule].id + " / " +
                         g.net.universe.name(g.net.rules[tr.rule].conclusion))
           << "\"];\n";
    }
    if (collapse_self_loops) {
        for (size_t s = 0; s < loop_rules.size(); ++s) {
            if (loop_rules[s].empty()) continue;
            std::string label;
            for (size_t k = 0; k < loop_rules[s].size(); ++k) {
                if (k) label += ", ";
                label += g.net.spec.rules[loop_rules[s][k]].id;
            }
            os << "  " << g.state_name(static_cast<int>(s)) << " -> "
               << g.state_name(static_cast<int>(s)) << " [label=\"" << dot_escape(label)
               << "\"];\n";
        }
    }
    os << "}\n";
    return os.str();
}

namespace {

nlohmann::json names_json(const LtsGraph& g, const Bitset& set) {
    nlohmann::json out = nlohmann::json::array();
    set.for_each([&](int m) { out.push_back(g.net.universe.name(m)); });
    return out;
}

}  // namespace

nlohmann::json graph_json(const LtsGraph& g) {
    nlohmann::json out;
    out["name"] = g.net.spec.name;
    out["initial"] = g.state_name(g.initial_state);
    out["states"] = nlohmann::json::array();
    for (size_t i = 0; i < g.states.size(); ++i) {
        out["states"].push_back({{"name", g.state_name(static_cast<int>(i))},
                                 {"contents", names_json(g, g.states[i])}});
    }
    out["transitions"] = nlohmann::json::array();
    for (size_t t = 0; t < g.transitions.size(); ++t) {
        const Transition& tr = g.transitions[t];
        out["transitions"].push_back(
            {{"from", g.state_name(tr.from)},
             {"to", g.state_name(tr.to)},
             {"rule", g.net.spec.rules[tr.rule].id},
             {"theta", g.net.spec.reaction_ids[tr.rule].theta()},
             {"s_hat", names_json(g, g.net.rules[tr.rule].s_hat)},
             {"produced", g.net.universe.name(g.net.rules[tr.rule].conclusion)},
             {"self_loop", tr.from == tr.to}});
    }
    return out;
}

nlohmann::json path_json(const LtsGraph& g, const Path& p) {
    nlohmann::json steps = nlohmann::json::array();
    for (int t : p.steps) {
        const Transition& tr = g.transitions[t];
        steps.push_back({{"theta", g.net.spec.reaction_ids[tr.rule].theta()},
                         {"rule", g.net.spec.rules[tr.rule].id},
                         {"s_hat", names_json(g, g.net.rules[tr.rule].s_hat)},
                         {"produced", g.net.universe.name(g.net.rules[tr.rule].conclusion)},
                         {"from", g.state_name(tr.from)},
                         {"to", g.state_name(tr.to)}});
    }
    nlohmann::json out;
    out["steps"] = std::move(steps);
    out["used_initial"] = names_json(g, used_initial(g, p));
    if (!p.steps.empty())
        out["leads_to"] = g.net.universe.name(g.produced(p.steps.back()));
    return out;
}

nlohmann::json paths_json(const LtsGraph& g, const std::vector<Path>& ps) {
    nlohmann::json out = nlohmann::json::array();
    for (const Path& p : ps) out.push_back(path_json(g, p));
    return out;
}

nlohmann::json explanation_json(const Explanation& e) {
    nlohmann::json out;
    out["metabolite"] = e.root;
    if (!e.is_leaf()) out["rule"] = *e.rule;
    out["children"] = nlohmann::json::array();
    for (const Explanation& c : e.children) out["children"].push_back(explanation_json(c));
    return out;
}

nlohmann::json verdict_json(const LtsGraph& g, const PropertyVerdict& v,
                            const std::map<std::string, std::string>& inputs) {
    nlohmann::json out;
    out["property"] = property_name(v.property);
    out["inputs"] = inputs;
    out["holds"] = v.holds;
    out["method"] = method_name(v.method_used);
    out["witnesses"] = nlohmann::json::array();
    for (const Witness& w : v.witnesses) {
        switch (w.kind) {
        case Witness::Kind::PathWitness:
            out["witnesses"].push_back({{"path", path_json(g, w.path)}});
            break;
        case Witness::Kind::ExplanationWitness:
            out["witnesses"].push_back({{"explanation", explanation_json(w.explanation)}});
            break;
        case Witness::Kind::MetaboliteWitness:
            out["witnesses"].push_back({{"metabolite", w.text}});
            break;
        case Witness::Kind::Note:
            out["witnesses"].push_back({{"note", w.text}});
            break;
        }
    }
    out["limits"] = {{"paths_cap", v.paths_cap}, {"exceeded", v.cap_exceeded}};
    return out;
}

nlohmann::json screen_json(const std::vector<ScreenRow>& rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const ScreenRow& r : rows)
        out.push_back(
            {{"check", screen_kind_name(r.kind)}, {"subject", r.subject}, {"holds", r.holds}});
    return out;
}

}  // namespace mnet
