#pragma once

// Executable instance constructions behind the hardness results, the
// canonical labelings of their forward directions, and the backward witness
// extractors. Every construction records per-vertex roles and its source
// digest so instances stay auditable after serialization.
//
// Backward extractors re-derive everything they verify from the reduced graph
// itself (the copies encode the source complement; a_j-b_i adjacency encodes
// set membership), so a deserialized ReductionOutput is self-contained.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "grd/graph.hpp"
#include "grd/labeling.hpp"
#include "grd/solver.hpp"

namespace grd {

struct ReductionSource {
    std::string reduction;
    std::string digest;
    std::map<std::string, int> params;
};

struct ReductionOutput {
    Graph graph;
    int budget = 0;
    std::vector<std::string> roles; // one tag per vertex
    ReductionSource source;

    int param(const std::string& key) const {
        auto it = source.params.find(key);
        if (it == source.params.end())
            throw ParameterError("reduction output missing parameter: " + key);
        return it->second;
    }
};

namespace detail {

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[v & 15];
        v >>= 4;
    }
    return out;
}

inline std::string digest_graph(const Graph& g) {
    std::string s = "g:n=" + std::to_string(g.vertex_count()) + ";";
    for (auto [u, v] : g.edges())
        s += std::to_string(u) + "-" + std::to_string(v) + ",";
    return hex64(fnv1a(s));
}

inline std::string digest_setcover(const SetCoverInstance& inst) {
    std::string s = "sc:ell=" + std::to_string(inst.ell) + ";q=" + std::to_string(inst.q) + ";";
    for (auto set : inst.sets) {
        std::sort(set.begin(), set.end());
        s += "[";
        for (int e : set) s += std::to_string(e) + " ";
        s += "]";
    }
    return hex64(fnv1a(s));
}

inline void check_role_count(const ReductionOutput& out, const std::string& prefix, int expected) {
    int got = 0;
    for (const auto& r : out.roles)
        if (r.rfind(prefix, 0) == 0) ++got;
    if (got != expected)
        throw Error("role count mismatch for " + prefix + ": expected " +
                    std::to_string(expected) + ", got " + std::to_string(got));
}

} // namespace detail

// ---------------------------------------------------------------------------
// Exact 3-Cover -> Exact 4-Cover

// Universe grows by q dummy elements 3q..4q-1; every (set, dummy) pair yields
// one 4-set, listed set-major. Covers transfer in both directions because a
// 4-cover must use each dummy exactly once.
inline SetCoverInstance x3c_to_x4c(const SetCoverInstance& inst) {
    inst.validate();
    if (inst.ell != 3) throw ParameterError("x3c_to_x4c expects ell = 3");
    SetCoverInstance out;
    out.ell = 4;
    out.q = inst.q;
    const int t = static_cast<int>(inst.sets.size());
    out.sets.reserve(static_cast<std::size_t>(t) * inst.q);
    for (int i = 0; i < t; ++i) {
        for (int j = 0; j < inst.q; ++j) {
            auto set = inst.sets[i];
            set.push_back(3 * inst.q + j);
            std::sort(set.begin(), set.end());
            out.sets.push_back(std::move(set));
        }
    }
    out.validate();
    return out;
}

// ---------------------------------------------------------------------------
// class F: dominating set on a 3-regular graph -> GRD

struct ClassFLayout {
    int n;
    explicit ClassFLayout(int src_n) : n(src_n) {}
    int copy(int c, int u) const { return c * n + u; } // c in 0..2
    int hub(int i) const { return 3 * n + i; }         // i in 0..2
    int total() const { return 3 * n + 3; }
};

// Three copies of the source complement; distinct vertices are adjacent
// across any pair of copies iff they are non-adjacent in the source, copies
// of the same vertex stay pairwise non-adjacent (false twins). Three
// pairwise non-adjacent hubs see every copy vertex. Budget 2k+2.
inline ReductionOutput ds3reg_to_classF(const Graph& g, int k) {
    const int n = g.vertex_count();
    if (n < 4) throw NotCubic("class F needs a 3-regular source with n >= 4");
    const auto stats = degree_stats(g);
    if (!stats.regular_k || *stats.regular_k != 3)
        throw NotCubic("class F source graph must be 3-regular");
    if (k < 0) throw ParameterError("k must be non-negative");

    ClassFLayout lay(n);
    ReductionOutput out;
    out.graph = Graph(lay.total());
    out.budget = 2 * k + 2;
    out.roles.resize(lay.total());
    out.source = {"classF", detail::digest_graph(g), {{"n", n}, {"k", k}}};

    for (int c = 0; c < 3; ++c)
        for (int u = 0; u < n; ++u)
            out.roles[lay.copy(c, u)] =
                "copy(" + std::to_string(c + 1) + "," + std::to_string(u) + ")";
    for (int i = 0; i < 3; ++i) out.roles[lay.hub(i)] = "v" + std::to_string(i + 1);

    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
            if (!g.has_edge(u, w))
                for (int c1 = 0; c1 < 3; ++c1)
                    for (int c2 = 0; c2 < 3; ++c2)
                        out.graph.add_edge(lay.copy(c1, u), lay.copy(c2, w));
    for (int i = 0; i < 3; ++i)
        for (int c = 0; c < 3; ++c)
            for (int u = 0; u < n; ++u) out.graph.add_edge(lay.hub(i), lay.copy(c, u));

    detail::check_role_count(out, "copy(", 3 * n);
    detail::check_role_count(out, "v", 3);
    return out;
}

namespace detail {

// copy-0 vertices carry the source ids, and their adjacency inside the
// reduced graph is the source complement
inline bool classf_source_edge(const ReductionOutput& out, int u, int w) {
    return u != w && !out.graph.has_edge(u, w);
}

inline bool classf_dominates(const ReductionOutput& out, const std::set<int>& s) {
    const int n = out.param("n");
    for (int u = 0; u < n; ++u) {
        if (s.count(u)) continue;
        bool hit = false;
        for (int x : s)
            if (classf_source_edge(out, u, x)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

} // namespace detail

// 2 on the first copy of every dominating-set vertex, 2 on hub v1, 0 elsewhere
inline RomanLabeling classF_labeling_from_ds(const ReductionOutput& out,
                                             const std::vector<int>& s) {
    if (out.source.reduction != "classF") throw ParameterError("not a class-F output");
    const int n = out.param("n");
    std::set<int> dom;
    for (int u : s) {
        if (u < 0 || u >= n) throw ParameterError("dominating-set vertex out of range");
        dom.insert(u);
    }
    if (!detail::classf_dominates(out, dom))
        throw ParameterError("given set does not dominate the source graph");
    ClassFLayout lay(n);
    RomanLabeling f(out.graph.vertex_count());
    for (int u : dom) f.set(lay.copy(0, u), 2);
    f.set(lay.hub(0), 2);
    return f;
}

// Project every label-2 copy vertex to its source vertex. The projection of
// any budget-feasible GRDF must dominate; a failure here falsifies the
// reduction and is reported as ExtractionFailed.
inline std::vector<int> ds_from_grdf_classF(const ReductionOutput& out, const RomanLabeling& f) {
    if (out.source.reduction != "classF") throw ParameterError("not a class-F output");
    if (check_grdf(out.graph, f)) throw ParameterError("labeling is not a valid GRDF");
    if (f.weight() > out.budget) throw ParameterError("labeling exceeds the budget");
    const int n = out.param("n");
    ClassFLayout lay(n);
    std::set<int> s;
    for (int c = 0; c < 3; ++c)
        for (int u = 0; u < n; ++u)
            if (f[lay.copy(c, u)] == 2) s.insert(u);
    if (!detail::classf_dominates(out, s))
        throw ExtractionFailed("projected label-2 copies do not dominate the source");
    if (2 * static_cast<int>(s.size()) > out.budget - 2)
        throw ExtractionFailed("projected dominating set exceeds (budget-2)/2");
    return {s.begin(), s.end()};
}

// ---------------------------------------------------------------------------
// class G: Exact 4-Cover -> RD

struct ClassGLayout {
    int m; // number of sets
    int l; // universe is 4l
    ClassGLayout(int sets, int scale) : m(sets), l(scale) {}
    int a(int j) const { return j; }
    int b(int i) const { return m + i; }
    int u() const { return m + 4 * l; }
    int v() const { return m + 4 * l + 1; }
    int w() const { return m + 4 * l + 2; }
    int x() const { return m + 4 * l + 3; }
    int block(int i) const { return m + 4 * l + 4 + 6 * i; }
    int p(int i) const { return block(i); }
    int q1(int i) const { return block(i) + 1; }
    int q2(int i) const { return block(i) + 2; }
    int s(int i, int idx) const { return block(i) + 3 + idx; } // idx in 0..2
    int r(int i) const { return m + 4 * l + 4 + 24 * l + i / 2; } // i even (0-based)
    bool has_r(int i) const { return i % 2 == 0; }
    int total() const { return m + 30 * l + 4; }
};

inline ReductionOutput x4c_to_classG(const SetCoverInstance& inst) {
    inst.validate();
    if (inst.ell != 4) throw ParameterError("class G expects an Exact 4-Cover instance");
    if (inst.q < 1) throw ParameterError("class G needs q >= 1");
    if (inst.sets.empty()) throw ParameterError("class G needs at least one set");

    const int m = static_cast<int>(inst.sets.size());
    const int l = inst.q;
    ClassGLayout lay(m, l);

    ReductionOutput out;
    out.graph = Graph(lay.total());
    out.budget = 10 * l + 1; // RD decision threshold; gamma_gR is 10l+2 regardless
    out.roles.resize(lay.total());
    out.source = {"classG", detail::digest_setcover(inst), {{"l", l}, {"m", m}}};

    for (int j = 0; j < m; ++j) out.roles[lay.a(j)] = "A(" + std::to_string(j + 1) + ")";
    for (int i = 0; i < 4 * l; ++i) out.roles[lay.b(i)] = "B(" + std::to_string(i + 1) + ")";
    out.roles[lay.u()] = "u";
    out.roles[lay.v()] = "v";
    out.roles[lay.w()] = "w";
    out.roles[lay.x()] = "x";
    for (int i = 0; i < 4 * l; ++i) {
        out.roles[lay.p(i)] = "P(" + std::to_string(i + 1) + ")";
        out.roles[lay.q1(i)] = "Q1(" + std::to_string(i + 1) + ")";
        out.roles[lay.q2(i)] = "Q2(" + std::to_string(i + 1) + ")";
        for (int idx = 0; idx < 3; ++idx)
            out.roles[lay.s(i, idx)] =
                "S(" + std::to_string(i + 1) + "," + std::to_string(idx + 1) + ")";
        if (lay.has_r(i)) out.roles[lay.r(i)] = "R(" + std::to_string(i + 1) + ")";
    }

    auto& g = out.graph;
    for (int j = 0; j < m; ++j)
        for (int j2 = j + 1; j2 < m; ++j2) g.add_edge(lay.a(j), lay.a(j2)); // A is a clique
    for (int j = 0; j < m; ++j)
        for (int e : inst.sets[j]) g.add_edge(lay.a(j), lay.b(e));
    for (int j = 0; j < m; ++j) {
        g.add_edge(lay.v(), lay.a(j));
        g.add_edge(lay.w(), lay.a(j));
        g.add_edge(lay.x(), lay.a(j));
    }
    g.add_edge(lay.u(), lay.v());
    g.add_edge(lay.u(), lay.w());
    g.add_edge(lay.u(), lay.x());
    for (int i = 0; i < 4 * l; ++i) {
        g.add_edge(lay.b(i), lay.p(i));
        g.add_edge(lay.p(i), lay.q1(i));
        g.add_edge(lay.p(i), lay.q2(i));
        for (int idx = 0; idx < 3; ++idx) {
            g.add_edge(lay.s(i, idx), lay.p(i));
            g.add_edge(lay.s(i, idx), lay.q1(i));
            g.add_edge(lay.s(i, idx), lay.q2(i));
        }
        if (lay.has_r(i)) {
            g.add_edge(lay.r(i), lay.q1(i));
            g.add_edge(lay.r(i), lay.q2(i));
        }
        g.add_edge(lay.q2(i), lay.q1((i + 1) % (4 * l))); // chain, wrapping
        for (int hv : {lay.v(), lay.x()}) {
            g.add_edge(hv, lay.p(i));
            g.add_edge(hv, lay.q1(i));
            g.add_edge(hv, lay.q2(i));
        }
    }

    detail::check_role_count(out, "A(", m);
    detail::check_role_count(out, "B(", 4 * l);
    detail::check_role_count(out, "P(", 4 * l);
    detail::check_role_count(out, "Q1(", 4 * l);
    detail::check_role_count(out, "Q2(", 4 * l);
    detail::check_role_count(out, "S(", 12 * l);
    detail::check_role_count(out, "R(", 2 * l);
    return out;
}

namespace detail {

// membership is encoded by a_j-b_i adjacency, so an exact cover is a set of
// a-indices seeing every b exactly once
inline void verify_cover_by_adjacency(const Graph& g, const std::vector<int>& cover,
                                      int a_count, int b_base, int b_count,
                                      const char* what,
                                      int a_base = 0) {
    std::set<int> chosen;
    for (int j : cover) {
        if (j < 0 || j >= a_count) throw ParameterError(std::string(what) + ": set index out of range");
        if (!chosen.insert(j).second)
            throw ParameterError(std::string(what) + ": duplicate set index");
    }
    for (int i = 0; i < b_count; ++i) {
        int hits = 0;
        for (int j : chosen)
            if (g.has_edge(a_base + j, b_base + i)) ++hits;
        if (hits != 1)
            throw ParameterError(std::string(what) + ": selection is not an exact cover");
    }
}

} // namespace detail

// 2 on the cover's a-vertices and on every q^1, 1 on u; weight 10l+1, valid RDF
inline RomanLabeling classG_canonical_rdf(const ReductionOutput& out,
                                          const std::vector<int>& cover) {
    if (out.source.reduction != "classG") throw ParameterError("not a class-G output");
    const int m = out.param("m"), l = out.param("l");
    ClassGLayout lay(m, l);
    detail::verify_cover_by_adjacency(out.graph, cover, m, lay.b(0), 4 * l, "class G cover");
    RomanLabeling f(out.graph.vertex_count());
    for (int j : cover) f.set(lay.a(j), 2);
    for (int i = 0; i < 4 * l; ++i) f.set(lay.q1(i), 2);
    f.set(lay.u(), 1);
    return f;
}

// Yes-case: 2 on w, the cover's a-vertices and every q^1. No-case: 2 on w and
// every p, 1 on every r (the r's see only 0-labeled q's). Both weigh 10l+2.
inline RomanLabeling classG_canonical_grdf(const ReductionOutput& out,
                                           const std::optional<std::vector<int>>& cover) {
    if (out.source.reduction != "classG") throw ParameterError("not a class-G output");
    const int m = out.param("m"), l = out.param("l");
    ClassGLayout lay(m, l);
    RomanLabeling f(out.graph.vertex_count());
    f.set(lay.w(), 2);
    if (cover) {
        detail::verify_cover_by_adjacency(out.graph, *cover, m, lay.b(0), 4 * l, "class G cover");
        for (int j : *cover) f.set(lay.a(j), 2);
        for (int i = 0; i < 4 * l; ++i) f.set(lay.q1(i), 2);
    } else {
        for (int i = 0; i < 4 * l; ++i) {
            f.set(lay.p(i), 2);
            if (lay.has_r(i)) f.set(lay.r(i), 1);
        }
    }
    return f;
}

// ---------------------------------------------------------------------------
// split graph: Exact 3-Cover -> GRD

struct SplitLayout {
    int q, t;
    SplitLayout(int q_, int t_) : q(q_), t(t_) {}
    int a(int j) const { return j; }               // j in 0..t; a(t) is the dummy
    int b(int i) const { return t + 1 + i; }       // i in 0..3q-1
    int p(int j) const { return t + 1 + 3 * q + j; } // pendant of a(j)
    int total() const { return 2 * (t + 1) + 3 * q; }
};

inline ReductionOutput x3c_to_split(const SetCoverInstance& inst) {
    inst.validate();
    if (inst.ell != 3) throw ParameterError("split reduction expects an Exact 3-Cover instance");
    const int q = inst.q;
    const int t = static_cast<int>(inst.sets.size());
    SplitLayout lay(q, t);

    ReductionOutput out;
    out.graph = Graph(lay.total());
    out.budget = q + t + 3;
    out.roles.resize(lay.total());
    out.source = {"split", detail::digest_setcover(inst), {{"q", q}, {"t", t}}};

    for (int j = 0; j <= t; ++j) out.roles[lay.a(j)] = "A(" + std::to_string(j + 1) + ")";
    for (int i = 0; i < 3 * q; ++i) out.roles[lay.b(i)] = "B(" + std::to_string(i + 1) + ")";
    for (int j = 0; j <= t; ++j) out.roles[lay.p(j)] = "P(" + std::to_string(j + 1) + ")";

    auto& g = out.graph;
    for (int j = 0; j <= t; ++j)
        for (int j2 = j + 1; j2 <= t; ++j2) g.add_edge(lay.a(j), lay.a(j2));
    for (int j = 0; j <= t; ++j) g.add_edge(lay.a(j), lay.p(j));
    for (int j = 0; j < t; ++j)
        for (int e : inst.sets[j]) g.add_edge(lay.a(j), lay.b(e));

    detail::check_role_count(out, "A(", t + 1);
    detail::check_role_count(out, "B(", 3 * q);
    detail::check_role_count(out, "P(", t + 1);
    return out;
}

// 2 on the dummy's pendant and the cover's a-vertices; 1 on the dummy and the
// pendants of unchosen real sets; weight q+t+3
inline RomanLabeling split_labeling_from_cover(const ReductionOutput& out,
                                               const std::vector<int>& cover) {
    if (out.source.reduction != "split") throw ParameterError("not a split output");
    const int q = out.param("q"), t = out.param("t");
    SplitLayout lay(q, t);
    detail::verify_cover_by_adjacency(out.graph, cover, t, lay.b(0), 3 * q, "split cover");
    std::set<int> chosen(cover.begin(), cover.end());
    RomanLabeling f(out.graph.vertex_count());
    f.set(lay.p(t), 2);
    f.set(lay.a(t), 1);
    for (int j = 0; j < t; ++j) {
        if (chosen.count(j)) f.set(lay.a(j), 2);
        else f.set(lay.p(j), 1);
    }
    return f;
}

inline std::vector<int> cover_from_grdf_split(const ReductionOutput& out, const RomanLabeling& f) {
    if (out.source.reduction != "split") throw ParameterError("not a split output");
    if (check_grdf(out.graph, f)) throw ParameterError("labeling is not a valid GRDF");
    if (f.weight() > out.budget) throw ParameterError("labeling exceeds the budget");
    const int q = out.param("q"), t = out.param("t");
    SplitLayout lay(q, t);
    std::vector<int> cover;
    for (int j = 0; j < t; ++j)
        if (f[lay.a(j)] == 2) cover.push_back(j);
    try {
        detail::verify_cover_by_adjacency(out.graph, cover, t, lay.b(0), 3 * q, "split extraction");
    } catch (const ParameterError& e) {
        throw ExtractionFailed(e.what());
    }
    return cover;
}

// ---------------------------------------------------------------------------
// tree gadget: dominating set -> GRD on the same graph class

struct TreeGadgetLayout {
    int n;
    explicit TreeGadgetLayout(int src_n) : n(src_n) {}
    int original(int i) const { return i; }
    int a(int i) const { return n + i; }
    int b(int i) const { return 2 * n + i; }
    int c(int i) const { return 3 * n + i; }
    int d(int i) const { return 4 * n + i; }
    int e(int i) const { return 5 * n + i; }
    int total() const { return 6 * n; }
};

// Per source vertex: a five-vertex tree v-a-b with pendants c,d on b and a
// pendant e on v. Adds no cycles, keeps bipartiteness, raises degrees by 2.
inline ReductionOutput ds_to_treegadget(const Graph& g, int k) {
    if (k < 0) throw ParameterError("k must be non-negative");
    const int n = g.vertex_count();
    TreeGadgetLayout lay(n);

    ReductionOutput out;
    out.graph = Graph(lay.total());
    out.budget = 3 * n + k;
    out.roles.resize(lay.total());
    out.source = {"treegadget", detail::digest_graph(g), {{"n", n}, {"k", k}}};

    for (auto [u, v] : g.edges()) out.graph.add_edge(u, v);
    for (int i = 0; i < n; ++i) {
        out.roles[lay.original(i)] = "original(" + std::to_string(i + 1) + ")";
        out.roles[lay.a(i)] = "a(" + std::to_string(i + 1) + ")";
        out.roles[lay.b(i)] = "b(" + std::to_string(i + 1) + ")";
        out.roles[lay.c(i)] = "c(" + std::to_string(i + 1) + ")";
        out.roles[lay.d(i)] = "d(" + std::to_string(i + 1) + ")";
        out.roles[lay.e(i)] = "e(" + std::to_string(i + 1) + ")";
        out.graph.add_edge(lay.original(i), lay.a(i));
        out.graph.add_edge(lay.original(i), lay.e(i));
        out.graph.add_edge(lay.a(i), lay.b(i));
        out.graph.add_edge(lay.b(i), lay.c(i));
        out.graph.add_edge(lay.b(i), lay.d(i));
    }

    detail::check_role_count(out, "original(", n);
    detail::check_role_count(out, "b(", n);
    return out;
}

namespace detail {

// the original vertices keep their ids and their induced adjacency
inline bool treegadget_dominates(const ReductionOutput& out, const std::set<int>& s) {
    const int n = out.param("n");
    for (int u = 0; u < n; ++u) {
        if (s.count(u)) continue;
        bool hit = false;
        for (int x : s)
            if (x < n && out.graph.has_edge(u, x)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

} // namespace detail

// 2 on every b and on the dominating set's originals, 1 on e_i for i outside
// the set; weight 3n + |s|
inline RomanLabeling treegadget_labeling_from_ds(const ReductionOutput& out,
                                                 const std::vector<int>& s) {
    if (out.source.reduction != "treegadget") throw ParameterError("not a tree-gadget output");
    const int n = out.param("n");
    std::set<int> dom;
    for (int u : s) {
        if (u < 0 || u >= n) throw ParameterError("dominating-set vertex out of range");
        dom.insert(u);
    }
    if (!detail::treegadget_dominates(out, dom))
        throw ParameterError("given set does not dominate the source graph");
    TreeGadgetLayout lay(n);
    RomanLabeling f(out.graph.vertex_count());
    for (int i = 0; i < n; ++i) {
        f.set(lay.b(i), 2);
        if (dom.count(i)) f.set(lay.original(i), 2);
        else f.set(lay.e(i), 1);
    }
    return f;
}

inline std::vector<int> ds_from_grdf_treegadget(const ReductionOutput& out,
                                                const RomanLabeling& f) {
    if (out.source.reduction != "treegadget") throw ParameterError("not a tree-gadget output");
    if (check_grdf(out.graph, f)) throw ParameterError("labeling is not a valid GRDF");
    if (f.weight() > out.budget) throw ParameterError("labeling exceeds the budget");
    const int n = out.param("n");
    std::set<int> s;
    for (int i = 0; i < n; ++i)
        if (f[i] == 2) s.insert(i);
    if (!detail::treegadget_dominates(out, s))
        throw ExtractionFailed("label-2 originals do not dominate the source");
    if (static_cast<int>(s.size()) > out.budget - 3 * n)
        throw ExtractionFailed("extracted dominating set exceeds budget - 3n");
    return {s.begin(), s.end()};
}

} // namespace grd
