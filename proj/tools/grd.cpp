// Command-line front end for the Roman / global Roman domination toolkit.
//
// Exit codes: 0 success; 1 negative answer (decide "no", verify "invalid");
// 2 usage or input error; 3 time budget exhausted; 4 claim-suite failure.

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "grd/cograph.hpp"
#include "grd/generators.hpp"
#include "grd/graph.hpp"
#include "grd/io.hpp"
#include "grd/lemmas.hpp"
#include "grd/reductions.hpp"
#include "grd/solver.hpp"

namespace {

using namespace grd;

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDidNotFinish = 3;
constexpr int kExitClaimFailure = 4;

struct CommonOpts {
    std::string input = "-";
    std::string output;
    std::string format = "text"; // text | json | edgelist
    std::uint64_t seed = 1;
    std::optional<double> time_budget_ms;
    int jobs = 1;
};

SolveOptions solver_options(const CommonOpts& c) {
    SolveOptions o;
    o.jobs = c.jobs;
    o.time_budget_ms = c.time_budget_ms;
    return o;
}

// graph inputs may also be reduction-output files; the embedded graph is used
struct GraphInput {
    Graph graph;
    std::optional<ReductionOutput> reduction;
};

GraphInput load_graph_input(const std::string& path) {
    const std::string text = read_stream_or_file(path);
    const auto pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && text[pos] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            throw ParseError(std::string("json: ") + e.what());
        }
        if (j.contains("reduction")) {
            GraphInput in;
            in.reduction = reduction_from_json(j);
            in.graph = in.reduction->graph;
            return in;
        }
        return {graph_from_json(j), std::nullopt};
    }
    std::istringstream in(text);
    return {read_edgelist(in), std::nullopt};
}

void emit(const CommonOpts& opts, const json& machine, const std::string& human) {
    if (opts.format == "json") std::cout << machine.dump(2) << "\n";
    else std::cout << human;
}

int run_solve(const CommonOpts& opts, const std::string& objective) {
    auto in = load_graph_input(opts.input);
    SolveResult res;
    if (objective == "ds") {
        res = solve_ds(in.graph, solver_options(opts));
    } else {
        res = solve_exact(in.graph, objective == "rd" ? Mode::RD : Mode::GRD,
                          solver_options(opts));
    }
    json j = solve_result_to_json(res);
    std::ostringstream human;
    human << "objective: " << objective_name(res.objective) << "\n"
          << "optimum: " << res.optimum << "\n"
          << "status: " << (res.status == SolveStatus::Optimal ? "optimal" : "did-not-finish")
          << "\n";
    human << "witness:";
    if (res.objective == Objective::DS) {
        for (int v : res.witness_set) human << " " << v;
        human << "\n";
    } else {
        human << " weight " << res.witness.weight() << ", label-2 set {";
        for (std::size_t i = 0; i < res.witness_set.size(); ++i)
            human << (i ? " " : "") << res.witness_set[i];
        human << "}\n";
    }
    human << "candidates: " << res.stats.candidates << "\n"
          << std::fixed << std::setprecision(1) << "wall_ms: " << res.stats.wall_ms << "\n";
    emit(opts, j, human.str());
    if (!opts.output.empty()) write_text_file(opts.output, j.dump(2) + "\n");
    return res.status == SolveStatus::Optimal ? kExitOk : kExitDidNotFinish;
}

int run_decide(const CommonOpts& opts, const std::string& objective,
               std::optional<int> budget_flag, const std::string& witness_out) {
    auto in = load_graph_input(opts.input);
    std::optional<int> budget = budget_flag;
    if (!budget && in.reduction) budget = in.reduction->budget;
    if (!budget) throw ParameterError("--budget required (no reduction budget available)");
    const Mode mode = objective == "rd" ? Mode::RD : Mode::GRD;
    auto res = decide(in.graph, mode, *budget, solver_options(opts));

    json j;
    j["objective"] = objective;
    j["budget"] = *budget;
    switch (res.answer) {
        case DecideResult::Answer::Yes: j["answer"] = "yes"; break;
        case DecideResult::Answer::No: j["answer"] = "no"; break;
        case DecideResult::Answer::DidNotFinish: j["answer"] = "did-not-finish"; break;
    }
    j["stats"] = {{"candidates", res.stats.candidates}, {"wall_ms", res.stats.wall_ms}};
    std::ostringstream human;
    human << j["answer"].get<std::string>() << "\n";
    if (res.answer == DecideResult::Answer::Yes && res.witness) {
        j["witness"] = labeling_to_json(*res.witness);
        human << "witness weight: " << res.witness->weight() << "\n";
        if (!witness_out.empty()) {
            write_text_file(witness_out, labeling_to_json(*res.witness).dump(2) + "\n");
            human << "witness written to " << witness_out << "\n";
        }
    }
    emit(opts, j, human.str());
    if (res.answer == DecideResult::Answer::DidNotFinish) return kExitDidNotFinish;
    return res.answer == DecideResult::Answer::Yes ? kExitOk : kExitNo;
}

int run_cograph(const CommonOpts& opts, bool want_witness) {
    auto in = load_graph_input(opts.input);
    CoTree t = build_cotree(in.graph);
    annotate(t);
    const auto& root = t.root_node();
    json j;
    j["n"] = root.n;
    j["gamma_r"] = root.gamma_r;
    j["gamma_gr"] = root.gamma_gr;
    j["gamma_r_complement"] = root.gamma_r_co;
    std::ostringstream human;
    human << "n: " << root.n << "\n"
          << "gamma_R: " << root.gamma_r << "\n"
          << "gamma_gR: " << root.gamma_gr << "\n"
          << "gamma_R(complement): " << root.gamma_r_co << "\n";
    if (want_witness) {
        auto res = gamma_gr_cograph(in.graph, true, 40);
        if (res.witness) {
            j["witness"] = labeling_to_json(*res.witness);
            human << "certified witness weight: " << res.witness->weight() << "\n";
        }
    }
    emit(opts, j, human.str());
    if (!opts.output.empty()) write_text_file(opts.output, cotree_to_json(t).dump(2) + "\n");
    return kExitOk;
}

int run_reduce(const CommonOpts& opts, const std::string& name, std::optional<int> k) {
    json out_doc;
    if (name == "x3c-to-x4c") {
        auto inst = setcover_from_json(load_json(opts.input));
        out_doc = setcover_to_json(x3c_to_x4c(inst));
    } else if (name == "classG") {
        auto inst = setcover_from_json(load_json(opts.input));
        out_doc = reduction_to_json(x4c_to_classG(inst));
    } else if (name == "split") {
        auto inst = setcover_from_json(load_json(opts.input));
        out_doc = reduction_to_json(x3c_to_split(inst));
    } else if (name == "classF" || name == "treegadget") {
        if (!k) throw ParameterError("--k required for " + name);
        auto in = load_graph_input(opts.input);
        auto red = name == "classF" ? ds3reg_to_classF(in.graph, *k)
                                    : ds_to_treegadget(in.graph, *k);
        out_doc = reduction_to_json(red);
    } else {
        throw ParameterError("unknown reduction: " + name);
    }
    const std::string target = opts.output.empty() ? "-" : opts.output;
    write_text_file(target, out_doc.dump(2) + "\n");
    if (target != "-") std::cerr << "wrote " << target << "\n";
    return kExitOk;
}

int run_verify(const CommonOpts& opts, const std::string& labeling_path, const std::string& mode) {
    auto in = load_graph_input(opts.input);
    auto f = labeling_from_json(load_json(labeling_path));
    json j;
    j["mode"] = mode;
    j["weight"] = f.weight();
    std::ostringstream human;
    bool valid = false;
    if (mode == "rd") {
        auto verdict = check_rdf(in.graph, f);
        valid = !verdict.has_value();
        if (valid) {
            human << "valid RDF, weight " << f.weight() << "\n";
        } else {
            j["violation"] = {{"vertex", *verdict}, {"side", "graph"}};
            human << "invalid: vertex " << *verdict << " has no label-2 neighbour\n";
        }
    } else {
        auto verdict = check_grdf(in.graph, f);
        valid = !verdict.has_value();
        if (valid) {
            human << "valid GRDF, weight " << f.weight() << "\n";
        } else {
            const char* side = verdict->side == Side::Graph ? "graph" : "complement";
            j["violation"] = {{"vertex", verdict->vertex}, {"side", side}};
            human << "invalid: vertex " << verdict->vertex << " uncovered on the " << side
                  << " side\n";
        }
    }
    j["valid"] = valid;
    emit(opts, j, human.str());
    return valid ? kExitOk : kExitNo;
}

int run_gen(const CommonOpts& opts, const std::string& kind, int n, double p, int q, int t,
            bool planted) {
    const std::string target = opts.output.empty() ? "-" : opts.output;
    auto write_graph = [&](const Graph& g) {
        if (opts.format == "edgelist") {
            std::ostringstream ss;
            write_edgelist(g, ss);
            write_text_file(target, ss.str());
        } else {
            write_text_file(target, graph_to_json(g).dump(2) + "\n");
        }
    };
    if (kind == "cubic") {
        auto res = gen_cubic(n, opts.seed);
        if (res.used_fallback) std::cerr << "pairing model rejected; circulant fallback used\n";
        write_graph(res.graph);
    } else if (kind == "cograph") {
        write_graph(gen_cograph(n, opts.seed));
    } else if (kind == "erdos") {
        write_graph(gen_erdos(n, p, opts.seed));
    } else if (kind == "x3c" || kind == "x4c") {
        auto inst = gen_exact_cover(kind == "x3c" ? 3 : 4, q, t, opts.seed, planted);
        write_text_file(target, setcover_to_json(inst).dump(2) + "\n");
    } else {
        throw ParameterError("unknown generator kind: " + kind);
    }
    if (target != "-") std::cerr << "wrote " << target << "\n";
    return kExitOk;
}

int run_lemmas(const CommonOpts& opts, const std::string& scale) {
    const auto rows = run_claim_suite(scale == "smoke" ? SuiteScale::Smoke : SuiteScale::Desk,
                                      opts.jobs);
    bool all_pass = true;
    if (opts.format == "json") {
        json j = json::array();
        for (const auto& r : rows) {
            j.push_back({{"lemma", r.name},
                         {"instance", r.instance},
                         {"expected", r.expected},
                         {"computed", r.computed},
                         {"pass", r.pass},
                         {"wall_ms", r.wall_ms}});
            all_pass = all_pass && r.pass;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::printf("%-14s %-6s %9s  %-44s %s\n", "lemma", "status", "time", "instance",
                    "computed");
        for (const auto& r : rows) {
            all_pass = all_pass && r.pass;
            std::printf("%-14s %-6s %7.0fms  %-44s %s\n", r.name.c_str(),
                        r.pass ? "PASS" : "FAIL", r.wall_ms, r.instance.c_str(),
                        r.computed.c_str());
        }
        std::printf("%s\n", all_pass ? "all claims hold" : "CLAIM FAILURE");
    }
    return all_pass ? kExitOk : kExitClaimFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Roman and global Roman domination toolkit"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string objective = "grd", name, labeling_path, mode = "grd", kind = "erdos",
                scale = "desk", witness_out;
    std::optional<int> budget, k_param;
    int n = 8, q = 2, t = 4;
    double p = 0.5;
    bool planted = false, want_witness = false;

    auto add_common = [&](CLI::App* cmd, bool with_input) {
        if (with_input)
            cmd->add_option("--input,-i", opts.input, "graph or instance file ('-' = stdin)");
        cmd->add_option("--output,-o", opts.output, "output file ('-' = stdout)");
        cmd->add_option("--format", opts.format, "text | json | edgelist")
            ->check(CLI::IsMember({"text", "json", "edgelist"}));
        cmd->add_option("--jobs", opts.jobs, "worker count")->check(CLI::PositiveNumber);
        cmd->add_option("--time-budget-ms", opts.time_budget_ms,
                        "abort with did-not-finish after this long");
        cmd->add_option("--seed", opts.seed, "generator seed");
    };

    auto* solve = app.add_subcommand("solve", "compute gamma_R / gamma_gR / gamma exactly");
    solve->add_option("--objective", objective, "rd | grd | ds")
        ->check(CLI::IsMember({"rd", "grd", "ds"}));
    add_common(solve, true);

    auto* dec = app.add_subcommand("decide", "decide existence under a weight budget");
    dec->add_option("--objective", objective, "rd | grd")->check(CLI::IsMember({"rd", "grd"}));
    dec->add_option("--budget", budget, "weight budget (defaults to a reduction file's budget)");
    dec->add_option("--witness-out", witness_out, "write the yes-witness labeling here");
    add_common(dec, true);

    auto* cog = app.add_subcommand("cograph", "cotree pipeline: gamma_R and gamma_gR");
    cog->add_flag("--witness", want_witness, "certify the value by bounded search");
    add_common(cog, true);

    auto* red = app.add_subcommand("reduce", "build a hardness-construction instance");
    red->add_option("--name", name, "x3c-to-x4c | classF | classG | split | treegadget")
        ->required()
        ->check(CLI::IsMember({"x3c-to-x4c", "classF", "classG", "split", "treegadget"}));
    red->add_option("--k", k_param, "budget parameter for classF / treegadget");
    add_common(red, true);

    auto* ver = app.add_subcommand("verify", "check a labeling file against a graph");
    ver->add_option("--labeling", labeling_path, "labeling json")->required();
    ver->add_option("--mode", mode, "rd | grd")->check(CLI::IsMember({"rd", "grd"}));
    add_common(ver, true);

    auto* gen = app.add_subcommand("gen", "seeded instance generators");
    gen->add_option("--kind", kind, "cubic | cograph | erdos | x3c | x4c")
        ->check(CLI::IsMember({"cubic", "cograph", "erdos", "x3c", "x4c"}));
    gen->add_option("--n", n, "vertex count");
    gen->add_option("--p", p, "edge probability (erdos)");
    gen->add_option("--q", q, "cover size (x3c/x4c)");
    gen->add_option("--t", t, "collection size (x3c/x4c)");
    gen->add_flag("--planted", planted, "embed a guaranteed cover");
    add_common(gen, false);

    auto* lem = app.add_subcommand("lemmas", "run the built-in claim suite");
    lem->add_option("--scale", scale, "smoke | desk")->check(CLI::IsMember({"smoke", "desk"}));
    add_common(lem, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (solve->parsed()) return run_solve(opts, objective);
        if (dec->parsed()) return run_decide(opts, objective, budget, witness_out);
        if (cog->parsed()) return run_cograph(opts, want_witness);
        if (red->parsed()) return run_reduce(opts, name, k_param);
        if (ver->parsed()) return run_verify(opts, labeling_path, mode);
        if (gen->parsed()) return run_gen(opts, kind, n, p, q, t, planted);
        if (lem->parsed()) return run_lemmas(opts, scale);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
