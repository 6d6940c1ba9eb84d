#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "mnet/textio.hpp"

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitError = 2;

size_t default_cap() {
    if (const char* env = std::getenv("MNET_MAX_PATHS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<size_t>(v);
    }
    return mnet::kDefaultPathCap;
}

mnet::LtsGraph load_graph(const std::string& path) {
    mnet::LoadedNetwork loaded = mnet::parse_network_file(path);
    return mnet::build_graph(mnet::encode(loaded.network, loaded.solution));
}

int require_metabolite(const mnet::LtsGraph& g, const std::string& name) {
    int m = g.net.universe.index_of(name);
    if (m < 0)
        throw mnet::AnalysisError(mnet::AnalysisError::Kind::UnknownMetabolite,
                                  "'" + name + "' does not occur in the network");
    return m;
}

mnet::Method parse_method(const std::string& name) {
    if (name == "reach") return mnet::Method::Reachability;
    if (name == "enum") return mnet::Method::Enumeration;
    return mnet::Method::Both;
}

void write_or_print(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

void print_verdict(const mnet::LtsGraph& g, const mnet::PropertyVerdict& v,
                   const std::map<std::string, std::string>& inputs, bool as_json) {
    if (as_json) {
        std::cout << mnet::verdict_json(g, v, inputs).dump(2) << "\n";
        return;
    }
    std::cout << mnet::property_name(v.property) << ": " << (v.holds ? "holds" : "refuted")
              << " (method: " << mnet::method_name(v.method_used)
              << ", witnesses: " << v.witnesses.size() << ")\n";
    for (const mnet::Witness& w : v.witnesses) {
        switch (w.kind) {
        case mnet::Witness::Kind::PathWitness:
            std::cout << "  path: " << mnet::to_string(g, w.path) << "\n";
            break;
        case mnet::Witness::Kind::ExplanationWitness:
            std::cout << "  explanation: " << mnet::to_string(w.explanation) << "\n";
            break;
        case mnet::Witness::Kind::MetaboliteWitness:
            std::cout << "  metabolite: " << w.text << "\n";
            break;
        case mnet::Witness::Kind::Note:
            std::cout << "  note: " << w.text << "\n";
            break;
        }
    }
    if (v.cap_exceeded) std::cout << "  (path cap " << v.paths_cap << " exceeded)\n";
}

int verdict_exit(const mnet::PropertyVerdict& v) { return v.holds ? kExitHolds : kExitRefuted; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"causality analysis of abstract metabolic reaction networks"};
    app.require_subcommand(1);

    size_t cap = default_cap();
    std::string method_name = "reach";
    bool as_json = false;

    // parse
    auto* cmd_parse = app.add_subcommand("parse", "validate a network file and echo it normalized");
    std::string parse_file;
    cmd_parse->add_option("file", parse_file, "network file")->required();

    // lts
    auto* cmd_lts = app.add_subcommand("lts", "build the transition system");
    std::string lts_file, lts_dot, lts_json;
    bool lts_collapse = false;
    cmd_lts->add_option("file", lts_file, "network file")->required();
    cmd_lts->add_option("--dot", lts_dot, "write a DOT rendering to this file ('-' = stdout)");
    cmd_lts->add_flag("--collapse-self-loops", lts_collapse, "merge self-loops per state");
    cmd_lts->add_option("--json", lts_json, "write the graph as JSON to this file ('-' = stdout)");

    // paths
    auto* cmd_paths = app.add_subcommand("paths", "list paths leading to a metabolite");
    std::string paths_file, paths_target;
    bool paths_rho = false;
    cmd_paths->add_option("file", paths_file, "network file")->required();
    cmd_paths->add_option("--target", paths_target, "target metabolite")->required();
    cmd_paths->add_flag("--rho", paths_rho, "admit qualifying self-loops");
    cmd_paths->add_option("--max-paths", cap, "enumeration cap");
    cmd_paths->add_flag("--json", as_json, "JSON output");

    // explain
    auto* cmd_explain = app.add_subcommand("explain", "print all derivations of a metabolite");
    std::string explain_file, explain_target;
    cmd_explain->add_option("file", explain_file, "network file")->required();
    cmd_explain->add_option("--target", explain_target, "target metabolite")->required();
    cmd_explain->add_option("--max-paths", cap, "enumeration cap");
    cmd_explain->add_flag("--json", as_json, "JSON output");

    // check
    auto* cmd_check = app.add_subcommand("check", "decide a property");
    cmd_check->require_subcommand(1);

    struct CheckArgs {
        std::string file, file2, rule, first, second, gate, metabolite, target;
        bool strong = false, weak = false;
    } ca;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--method", method_name, "reach | enum | both")
            ->check(CLI::IsMember({"reach", "enum", "both"}));
        c->add_option("--max-paths", cap, "enumeration cap");
        c->add_flag("--json", as_json, "JSON output");
    };

    auto* chk_essential = cmd_check->add_subcommand("essential", "rule essentiality for a target");
    chk_essential->add_option("file", ca.file)->required();
    chk_essential->add_option("--rule", ca.rule, "rule or reaction id")->required();
    chk_essential->add_option("--target", ca.target)->required();
    add_common(chk_essential);

    auto* chk_mutual = cmd_check->add_subcommand("mutual", "mutual essentiality of two rules");
    chk_mutual->add_option("file", ca.file)->required();
    chk_mutual->add_option("--first", ca.first)->required();
    chk_mutual->add_option("--second", ca.second)->required();
    chk_mutual->add_option("--target", ca.target)->required();
    add_common(chk_mutual);

    auto* chk_checkpoint = cmd_check->add_subcommand("checkpoint", "necessity of a metabolite");
    chk_checkpoint->add_option("file", ca.file)->required();
    chk_checkpoint->add_option("--gate", ca.gate, "the necessary metabolite")->required();
    chk_checkpoint->add_option("--target", ca.target)->required();
    add_common(chk_checkpoint);

    auto* chk_causes = cmd_check->add_subcommand("causes", "rule ordering dependency");
    chk_causes->add_option("file", ca.file)->required();
    chk_causes->add_option("--first", ca.first)->required();
    chk_causes->add_option("--second", ca.second)->required();
    add_common(chk_causes);

    auto* chk_exclude = cmd_check->add_subcommand("exclude", "exclusion of a solution member");
    chk_exclude->add_option("file", ca.file)->required();
    chk_exclude->add_option("--metabolite", ca.metabolite)->required();
    chk_exclude->add_option("--target", ca.target)->required();
    add_common(chk_exclude);

    auto* chk_redundant = cmd_check->add_subcommand("redundant", "redundancy of the solution");
    chk_redundant->add_option("file", ca.file)->required();
    chk_redundant->add_option("--target", ca.target)->required();
    add_common(chk_redundant);

    auto* chk_robust = cmd_check->add_subcommand("robust", "robustness ordering of two networks");
    chk_robust->add_option("file1", ca.file)->required();
    chk_robust->add_option("file2", ca.file2)->required();
    chk_robust->add_option("--target", ca.target)->required();
    chk_robust->add_flag("--strong", ca.strong, "path-preserving robustness");
    chk_robust->add_flag("--weak", ca.weak, "derivability-preserving robustness");
    add_common(chk_robust);

    // screen
    auto* cmd_screen = app.add_subcommand("screen", "what-if sweep for one target");
    std::string screen_file, screen_target;
    bool screen_serial = false;
    cmd_screen->add_option("file", screen_file, "network file")->required();
    cmd_screen->add_option("--target", screen_target)->required();
    cmd_screen->add_flag("--serial", screen_serial, "disable the parallel sweep");
    cmd_screen->add_flag("--json", as_json, "JSON output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_parse) {
            mnet::LoadedNetwork loaded = mnet::parse_network_file(parse_file);
            std::cout << mnet::serialize_network(loaded.network, loaded.solution);
            return kExitHolds;
        }

        if (*cmd_lts) {
            mnet::LtsGraph g = load_graph(lts_file);
            std::cout << "states: " << g.states.size() << "\n"
                      << "transitions: " << g.transitions.size() << "\n";
            if (!lts_dot.empty()) write_or_print(lts_dot, mnet::export_dot(g, lts_collapse));
            if (!lts_json.empty()) write_or_print(lts_json, mnet::graph_json(g).dump(2) + "\n");
            return kExitHolds;
        }

        if (*cmd_paths) {
            mnet::LtsGraph g = load_graph(paths_file);
            int target = require_metabolite(g, paths_target);
            auto ps = paths_rho ? mnet::rho_paths_to(g, target, cap)
                                : mnet::chi_paths_to(g, target, cap);
            if (as_json) {
                std::cout << mnet::paths_json(g, ps).dump(2) << "\n";
            } else {
                for (size_t i = 0; i < ps.size(); ++i) {
                    std::cout << "p" << (i + 1) << ": " << mnet::to_string(g, ps[i]) << "\n   U = {";
                    bool first = true;
                    mnet::used_initial(g, ps[i]).for_each([&](int m) {
                        if (!first) std::cout << ", ";
                        first = false;
                        std::cout << g.net.universe.name(m);
                    });
                    std::cout << "}\n";
                }
                std::cout << ps.size() << (paths_rho ? " relevant" : " causally relevant")
                          << " path(s) lead to " << paths_target << "\n";
            }
            return kExitHolds;
        }

        if (*cmd_explain) {
            mnet::LtsGraph g = load_graph(explain_file);
            int target = require_metabolite(g, explain_target);
            std::vector<mnet::Explanation> distinct;
            for (const mnet::Path& p : mnet::chi_paths_to(g, target, cap)) {
                mnet::Explanation e = mnet::tr_p(g, p, target);
                if (std::find(distinct.begin(), distinct.end(), e) == distinct.end())
                    distinct.push_back(std::move(e));
            }
            if (as_json) {
                nlohmann::json out = nlohmann::json::array();
                for (const auto& e : distinct) out.push_back(mnet::explanation_json(e));
                std::cout << out.dump(2) << "\n";
            } else {
                for (size_t i = 0; i < distinct.size(); ++i)
                    std::cout << "e" << (i + 1) << ": " << mnet::to_string(distinct[i]) << "\n";
                std::cout << distinct.size() << " explanation(s) for " << explain_target << "\n";
                for (size_t i = 0; i < distinct.size(); ++i)
                    for (size_t j = i + 1; j < distinct.size(); ++j)
                        if (mnet::rules_of(distinct[i]) != mnet::rules_of(distinct[j]))
                            std::cout << "vicarious pair: e" << (i + 1) << ", e" << (j + 1) << "\n";
            }
            return kExitHolds;
        }

        if (*cmd_screen) {
            mnet::LtsGraph g = load_graph(screen_file);
            int target = require_metabolite(g, screen_target);
            auto rows = mnet::run_screen(g, target, !screen_serial);
            if (as_json) {
                std::cout << mnet::screen_json(rows).dump(2) << "\n";
            } else {
                for (const mnet::ScreenRow& r : rows)
                    std::cout << mnet::screen_kind_name(r.kind) << " " << r.subject << ": "
                              << (r.holds ? "yes" : "no") << "\n";
            }
            return kExitHolds;
        }

        // check subcommands
        mnet::Method method = parse_method(method_name);
        std::map<std::string, std::string> inputs;

        if (*chk_essential) {
            mnet::LtsGraph g = load_graph(ca.file);
            auto group = mnet::resolve_rule_group(g.net, ca.rule);
            int target = require_metabolite(g, ca.target);
            auto v = mnet::essential(g, group, target, method, cap);
            inputs = {{"rule", ca.rule}, {"target", ca.target}};
            print_verdict(g, v, inputs, as_json);
            return verdict_exit(v);
        }
        if (*chk_mutual) {
            mnet::LtsGraph g = load_graph(ca.file);
            auto v = mnet::mutually_essential(g, mnet::resolve_rule_group(g.net, ca.first),
                                              mnet::resolve_rule_group(g.net, ca.second),
                                              require_metabolite(g, ca.target), method, cap);
            inputs = {{"first", ca.first}, {"second", ca.second}, {"target", ca.target}};
            print_verdict(g, v, inputs, as_json);
            return verdict_exit(v);
        }
        if (*chk_checkpoint) {
            mnet::LtsGraph g = load_graph(ca.file);
            auto v = mnet::checkpoint(g, require_metabolite(g, ca.gate),
                                      require_metabolite(g, ca.target), method, cap);
            inputs = {{"gate", ca.gate}, {"target", ca.target}};
            print_verdict(g, v, inputs, as_json);
            return verdict_exit(v);
        }
        if (*chk_causes) {
            mnet::LtsGraph g = load_graph(ca.file);
            auto v = mnet::causes(g, mnet::resolve_rule_group(g.net, ca.first),
                                  mnet::resolve_rule_group(g.net, ca.second), method, cap);
            inputs = {{"first", ca.first}, {"second", ca.second}};
            print_verdict(g, v, inputs, as_json);
            return verdict_exit(v);
        }
        if (*chk_exclude) {
            mnet::LtsGraph g = load_graph(ca.file);
            auto v = mnet::excludable(g, require_metabolite(g, ca.metabolite),
                                      require_metabolite(g, ca.target), method, cap);
            inputs = {{"metabolite", ca.metabolite}, {"target", ca.target}};
            print_verdict(g, v, inputs, as_json);
            return verdict_exit(v);
        }
        if (*chk_redundant) {
            mnet::LtsGraph g = load_graph(ca.file);
            auto v = mnet::redundant(g, require_metabolite(g, ca.target), cap);
            inputs = {{"target", ca.target}};
            print_verdict(g, v, inputs, as_json);
            return verdict_exit(v);
        }
        if (*chk_robust) {
            if (ca.strong == ca.weak)
                throw std::runtime_error("pass exactly one of --strong / --weak");
            mnet::LtsGraph g1 = load_graph(ca.file);
            mnet::LtsGraph g2 = load_graph(ca.file2);
            auto v = ca.strong ? mnet::strong_robust(g1, g2, ca.target, method, cap)
                               : mnet::weak_robust(g1, g2, ca.target, method, cap);
            inputs = {{"first", ca.file}, {"second", ca.file2}, {"target", ca.target}};
            print_verdict(g1, v, inputs, as_json);
            return verdict_exit(v);
        }
    } catch (const mnet::AnalysisError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const mnet::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
