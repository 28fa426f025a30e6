// Command-line front end: rule-file validation, graph export, the
// surjectivity / injectivity / conservation / dynamics analyzers and the
// simulator.
//
// Exit codes: 0 = analysis ran and the property holds, 1 = ran and the
// property fails, 2 = usage or input error, 3 = resource cap exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nuca/automata.hpp"
#include "nuca/conservation.hpp"
#include "nuca/core.hpp"
#include "nuca/debruijn.hpp"
#include "nuca/injectivity.hpp"
#include "nuca/io.hpp"
#include "nuca/linear_dynamics.hpp"
#include "nuca/simulation.hpp"
#include "nuca/surjectivity.hpp"

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw nuca::ParseError("cannot open output file '" + out_path + "'");
    f << text;
}

std::pair<long long, long long> parse_window(const std::string& spec) {
    auto pos = spec.find("..");
    if (pos == std::string::npos)
        throw nuca::ParseError("window must look like <a>..<b>");
    long long a = std::stoll(spec.substr(0, pos));
    long long b = std::stoll(spec.substr(pos + 2));
    if (a > b) throw nuca::ParseError("window must satisfy a <= b");
    return {a, b};
}

nuca::RuleWord parse_pattern(const nuca::RuleSet& rs, const std::vector<std::string>& names) {
    nuca::RuleWord psi;
    for (const auto& n : names) psi.push_back(rs.index(n));
    return psi;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"structural analysis and simulation of non-uniform cellular automata"};
    app.require_subcommand(1);

    std::string rules_path, dist_literal, config_literal = "zero", format = "json";
    std::string out_path, window_spec = "-16..16", pattern_text;
    long long steps = 16, n_cap = 1000000;
    int n_max = -1, width = -1;
    long long empirical_steps = 0;
    unsigned seed = 0;

    auto add_common = [&](CLI::App* cmd, bool needs_dist) {
        cmd->add_option("--rules", rules_path, "rule-set file")->required();
        if (needs_dist)
            cmd->add_option("--dist", dist_literal, "distribution literal")->required();
        cmd->add_option("--format", format, "output format");
        cmd->add_option("--out", out_path, "output file (default: stdout)");
        return cmd;
    };

    auto* rules_cmd = app.add_subcommand("rules", "rule-set operations");
    auto* rules_validate = rules_cmd->add_subcommand("validate", "parse and report a rule file");
    rules_validate->add_option("--rules", rules_path)->required();

    auto* graph_cmd = app.add_subcommand("graph", "graph construction and export");
    auto* graph_db = add_common(graph_cmd->add_subcommand("debruijn", "DeBruijn graph"), false);
    auto* graph_pr = add_common(graph_cmd->add_subcommand("product", "product graph"), false);

    auto* surj_cmd = app.add_subcommand("surjectivity", "surjectivity analysis");
    auto* surj_pat = surj_cmd->add_subcommand("pattern", "check one finite rule word");
    surj_pat->add_option("--rules", rules_path)->required();
    surj_pat->add_option("--pattern", pattern_text, "space-separated rule names")->required();
    surj_pat->add_option("--cap", n_cap, "subset-construction state cap");
    auto* surj_dist = add_common(surj_cmd->add_subcommand("dist", "check a distribution"), true);
    surj_dist->add_option("--cap", n_cap);

    auto* inj_cmd = app.add_subcommand("injectivity", "injectivity analysis");
    auto* inj_dist = add_common(inj_cmd->add_subcommand("dist", "check a distribution"), true);

    auto* cons_cmd = app.add_subcommand("conservation", "number conservation");
    auto* cons_check = add_common(cons_cmd->add_subcommand("check", "check a distribution"), true);
    auto* cons_sft = add_common(cons_cmd->add_subcommand("sft", "export the NC subshift"), false);
    cons_sft->add_option("--dot", out_path, "DOT output file");
    auto* cons_forb =
        add_common(cons_cmd->add_subcommand("forbidden", "list forbidden windows"), false);

    auto* dyn_cmd = app.add_subcommand("dynamics", "linear dynamics classification");
    auto* dyn_classify = add_common(dyn_cmd->add_subcommand("classify", ""), true);
    dyn_classify->add_option("--nmax", n_max, "wall search length bound");
    dyn_classify->add_option("--empirical", empirical_steps,
                             "also run perturbation probes for this many steps");

    auto* sim = app.add_subcommand("simulate", "render a space-time diagram");
    add_common(sim, true);
    sim->add_option("--config", config_literal, "initial configuration literal");
    sim->add_option("--steps", steps, "number of time steps");
    sim->add_option("--window", window_spec, "cell window <a>..<b>");
    sim->add_option("--width", width, "unused alias for window radius");
    sim->add_option("--seed", seed, "seed for randomized options");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        auto rs = nuca::load_rule_set(rules_path);

        if (*rules_validate) {
            nlohmann::json j;
            j["schema"] = 1;
            j["alphabet"] = rs->alphabet.size;
            j["radius"] = rs->radius;
            for (int i = 0; i < rs->size(); ++i)
                j["rules"].push_back({{"name", rs->rule(i).name},
                                      {"source_radius", rs->source_radii[i]},
                                      {"linear", rs->rule(i).is_linear()}});
            emit(j.dump(2) + "\n", out_path);
            return kExitHolds;
        }
        if (*graph_db || *graph_pr) {
            if (*graph_db) {
                nuca::DeBruijnGraph g = nuca::build_debruijn(rs);
                emit(format == "csv" ? nuca::to_csv(g) : nuca::to_dot(g), out_path);
            } else {
                emit(nuca::to_dot(nuca::build_product(rs)), out_path);
            }
            return kExitHolds;
        }
        if (*surj_pat) {
            nuca::SurjectivityAnalyzer an(rs, static_cast<std::size_t>(n_cap));
            std::istringstream ps(pattern_text);
            std::vector<std::string> names;
            std::string tok;
            while (ps >> tok) names.push_back(tok);
            nuca::RuleWord psi = parse_pattern(*rs, names);
            bool ok = an.is_pattern_surjective(psi);
            nlohmann::json j;
            j["schema"] = 1;
            j["verdict"] = ok ? "surjective" : "not-surjective";
            j["unreachable_word"] =
                ok ? nlohmann::json(nullptr) : nlohmann::json(an.unreachable_output(psi));
            emit(j.dump(2) + "\n", out_path);
            return ok ? kExitHolds : kExitFails;
        }
        if (*surj_dist) {
            nuca::SurjectivityAnalyzer an(rs, static_cast<std::size_t>(n_cap));
            auto rep = an.analyze(nuca::parse_distribution(rs, dist_literal));
            emit(nuca::report_json(*rs, rep).dump(2) + "\n", out_path);
            return rep.surjective ? kExitHolds : kExitFails;
        }
        if (*inj_dist) {
            auto rep = nuca::is_distribution_injective(nuca::parse_distribution(rs, dist_literal));
            emit(nuca::report_json(rep).dump(2) + "\n", out_path);
            return rep.injective ? kExitHolds : kExitFails;
        }
        if (*cons_check) {
            auto rep = nuca::is_distribution_nc(nuca::parse_distribution(rs, dist_literal));
            emit(nuca::report_json(*rs, rep).dump(2) + "\n", out_path);
            return rep.conserving ? kExitHolds : kExitFails;
        }
        if (*cons_sft) {
            nuca::NcSft sft = nuca::nc_sft(rs);
            if (format == "dot" || !out_path.empty()) {
                emit(sft.to_dot(), out_path);
            } else {
                nlohmann::json j = {{"schema", 1},
                                    {"vertices", sft.num_vertices},
                                    {"edges", sft.edges.size()},
                                    {"empty", sft.empty}};
                emit(j.dump(2) + "\n", "");
            }
            return sft.empty ? kExitFails : kExitHolds;
        }
        if (*cons_forb) {
            nuca::NcForbiddenSet f = nuca::forbidden_nc_windows(rs);
            nlohmann::json j;
            j["schema"] = 1;
            j["forbidden"] = nlohmann::json::array();
            for (const auto& [psi, u] : f.windows)
                j["forbidden"].push_back(
                    {{"window", nuca::rule_word_json(*rs, psi)}, {"violating_input", u}});
            emit(j.dump(2) + "\n", out_path);
            return f.windows.empty() ? kExitHolds : kExitFails;
        }
        if (*dyn_classify) {
            auto theta = nuca::parse_distribution(rs, dist_literal);
            int bound = n_max > 0 ? n_max : nuca::default_wall_search_bound(theta);
            nuca::DynamicsReport rep = nuca::classify(theta, bound);
            if (empirical_steps > 0)
                rep.empirical = nuca::empirical_classify(theta, 5, empirical_steps, 16);
            emit(nuca::report_json(*rs, rep).dump(2) + "\n", out_path);
            return rep.verdict == nuca::DynamicsVerdict::Equicontinuous ? kExitHolds : kExitFails;
        }
        if (*sim) {
            auto theta = nuca::parse_distribution(rs, dist_literal);
            auto x = nuca::parse_configuration(rs->alphabet, config_literal);
            auto [a, b] = parse_window(window_spec);
            nuca::SpaceTimeDiagram d = nuca::space_time(theta, x, a, b, steps);
            if (format == "pgm")
                emit(nuca::space_time_pgm(d, rs->alphabet.size), out_path);
            else if (format == "csv")
                emit(nuca::space_time_csv(d), out_path);
            else
                emit(nuca::space_time_text(d), out_path);
            return kExitHolds;
        }
    } catch (const nuca::DeterminizeCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    std::cerr << "error: no subcommand executed\n";
    return kExitUsage;
}
