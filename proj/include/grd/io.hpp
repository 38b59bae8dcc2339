#pragma once

// File formats.
//
// Edge-list text: first line "n m", then m lines "u v" (0-based); '#' starts
// a comment. Self-loops and duplicate edges are rejected.
//
// JSON: graph {"n":int,"edges":[[u,v],...],"names":[...]?}, labeling
// {"n":int,"labels":[...]}, set-cover {"ell":3|4,"q":int,"sets":[[...],...]},
// reduction output {"reduction","budget","graph","roles","source"}. Labeling
// weight is recomputed on load, never trusted from the file.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "grd/cograph.hpp"
#include "grd/graph.hpp"
#include "grd/labeling.hpp"
#include "grd/reductions.hpp"
#include "grd/solver.hpp"

namespace grd {

using nlohmann::json;

// ---------------------------------------------------------------------------
// edge-list text

inline Graph read_edgelist(std::istream& in) {
    std::string line;
    auto next_data_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream probe(line);
            std::string tok;
            if (probe >> tok) {
                out = line;
                return true;
            }
        }
        return false;
    };

    std::string header;
    if (!next_data_line(header)) throw ParseError("edge list: missing header line");
    std::istringstream hs(header);
    long long n = -1, m = -1;
    if (!(hs >> n >> m) || n < 0 || m < 0) throw ParseError("edge list: header must be 'n m'");
    std::string trailing;
    if (hs >> trailing) throw ParseError("edge list: header must be 'n m'");

    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        std::string row;
        if (!next_data_line(row)) throw ParseError("edge list: fewer edges than declared");
        std::istringstream rs(row);
        long long u, v;
        if (!(rs >> u >> v)) throw ParseError("edge list: bad edge line");
        if (rs >> trailing) throw ParseError("edge list: bad edge line");
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge list: vertex id out of range");
        if (u == v) throw ParseError("edge list: self-loop rejected");
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw ParseError("edge list: duplicate edge rejected");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    std::string extra;
    if (next_data_line(extra)) throw ParseError("edge list: more edges than declared");
    return g;
}

inline void write_edgelist(const Graph& g, std::ostream& out) {
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

// ---------------------------------------------------------------------------
// JSON

inline json graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.vertex_count();
    j["edges"] = json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    if (!g.names().empty()) j["names"] = g.names();
    return j;
}

inline Graph graph_from_json(const json& j) {
    try {
        Graph g(j.at("n").get<int>());
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw ParseError("graph json: bad edge entry");
            g.add_edge(e[0].get<int>(), e[1].get<int>());
        }
        if (j.contains("names")) g.set_names(j["names"].get<std::vector<std::string>>());
        return g;
    } catch (const json::exception& e) {
        throw ParseError(std::string("graph json: ") + e.what());
    } catch (const ParameterError& e) {
        throw ParseError(std::string("graph json: ") + e.what());
    }
}

inline json labeling_to_json(const RomanLabeling& f) {
    json j;
    j["n"] = f.size();
    j["labels"] = json::array();
    for (int v = 0; v < f.size(); ++v) j["labels"].push_back(f[v]);
    return j;
}

inline RomanLabeling labeling_from_json(const json& j) {
    try {
        const int n = j.at("n").get<int>();
        const auto values = j.at("labels").get<std::vector<int>>();
        if (static_cast<int>(values.size()) != n)
            throw ParseError("labeling json: labels length does not match n");
        RomanLabeling f(n);
        for (int v = 0; v < n; ++v) {
            if (values[v] < 0 || values[v] > 2)
                throw ParseError("labeling json: label outside {0,1,2}");
            f.set(v, values[v]);
        }
        return f;
    } catch (const json::exception& e) {
        throw ParseError(std::string("labeling json: ") + e.what());
    }
}

inline json setcover_to_json(const SetCoverInstance& inst) {
    json j;
    j["ell"] = inst.ell;
    j["q"] = inst.q;
    j["sets"] = inst.sets;
    return j;
}

inline SetCoverInstance setcover_from_json(const json& j) {
    try {
        SetCoverInstance inst;
        inst.ell = j.at("ell").get<int>();
        inst.q = j.at("q").get<int>();
        inst.sets = j.at("sets").get<std::vector<std::vector<int>>>();
        inst.normalize();
        return inst;
    } catch (const json::exception& e) {
        throw ParseError(std::string("set-cover json: ") + e.what());
    } catch (const ParameterError& e) {
        throw ParseError(std::string("set-cover json: ") + e.what());
    }
}

inline json reduction_to_json(const ReductionOutput& out) {
    json j;
    j["reduction"] = out.source.reduction;
    j["budget"] = out.budget;
    j["graph"] = graph_to_json(out.graph);
    j["roles"] = out.roles;
    j["source"] = {{"digest", out.source.digest}, {"params", out.source.params}};
    return j;
}

inline ReductionOutput reduction_from_json(const json& j) {
    try {
        ReductionOutput out;
        out.source.reduction = j.at("reduction").get<std::string>();
        out.budget = j.at("budget").get<int>();
        out.graph = graph_from_json(j.at("graph"));
        out.roles = j.at("roles").get<std::vector<std::string>>();
        out.source.digest = j.at("source").at("digest").get<std::string>();
        out.source.params = j.at("source").at("params").get<std::map<std::string, int>>();
        if (static_cast<int>(out.roles.size()) != out.graph.vertex_count())
            throw ParseError("reduction json: one role per vertex required");
        return out;
    } catch (const json::exception& e) {
        throw ParseError(std::string("reduction json: ") + e.what());
    }
}

inline const char* objective_name(Objective o) {
    switch (o) {
        case Objective::RD: return "rd";
        case Objective::GRD: return "grd";
        case Objective::DS: return "ds";
    }
    return "?";
}

inline json solve_result_to_json(const SolveResult& r) {
    json j;
    j["objective"] = objective_name(r.objective);
    j["optimum"] = r.optimum;
    j["status"] = r.status == SolveStatus::Optimal ? "optimal" : "did_not_finish";
    if (r.objective == Objective::DS) {
        j["witness"] = r.witness_set;
    } else {
        j["witness"] = labeling_to_json(r.witness);
        j["label_two_set"] = r.witness_set;
    }
    j["stats"] = {{"candidates", r.stats.candidates}, {"wall_ms", r.stats.wall_ms}};
    return j;
}

inline json cotree_node_to_json(const CoTree& t, int id, bool annotations) {
    const auto& node = t.nodes[id];
    json j;
    switch (node.kind) {
        case CoTreeNode::Kind::Leaf: j["kind"] = "leaf"; j["vertex"] = node.vertex; break;
        case CoTreeNode::Kind::Union: j["kind"] = "union"; break;
        case CoTreeNode::Kind::Join: j["kind"] = "join"; break;
    }
    if (node.kind != CoTreeNode::Kind::Leaf) {
        j["children"] = json::array();
        for (int c : node.children) j["children"].push_back(cotree_node_to_json(t, c, annotations));
    }
    if (annotations) {
        j["n"] = node.n;
        j["max_degree"] = node.max_degree;
        j["min_degree"] = node.min_degree;
        j["gamma_r"] = node.gamma_r;
        j["gamma_r_co"] = node.gamma_r_co;
        j["gamma_gr"] = node.gamma_gr;
        j["profile"] = {node.profile.k1, node.profile.k2, node.profile.k3};
        j["profile_co"] = {node.profile_co.k1, node.profile_co.k2, node.profile_co.k3};
    }
    return j;
}

inline json cotree_to_json(const CoTree& t, bool annotations = true) {
    return cotree_node_to_json(t, t.root, annotations);
}

// ---------------------------------------------------------------------------
// file helpers: explicit format or content sniffing ('{' means JSON)

enum class GraphFormat { Auto, EdgeList, Json };

inline std::string read_stream_or_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Graph load_graph(const std::string& path, GraphFormat fmt = GraphFormat::Auto) {
    const std::string text = read_stream_or_file(path);
    if (fmt == GraphFormat::Auto) {
        auto pos = text.find_first_not_of(" \t\r\n");
        fmt = (pos != std::string::npos && text[pos] == '{') ? GraphFormat::Json
                                                             : GraphFormat::EdgeList;
    }
    if (fmt == GraphFormat::Json) {
        try {
            return graph_from_json(json::parse(text));
        } catch (const json::exception& e) {
            throw ParseError(std::string("graph json: ") + e.what());
        }
    }
    std::istringstream in(text);
    return read_edgelist(in);
}

inline json load_json(const std::string& path) {
    try {
        return json::parse(read_stream_or_file(path));
    } catch (const json::exception& e) {
        throw ParseError(std::string("json: ") + e.what());
    }
}

inline void write_text_file(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open file for writing: " + path);
    out << text;
}

} // namespace grd
