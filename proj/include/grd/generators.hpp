#pragma once

// Seeded instance generators. One splittable splitmix64 stream per generator
// call, so identical parameters reproduce identical instances across runs and
// worker counts.

#include <cstdint>
#include <numeric>
#include <vector>

#include "grd/cograph.hpp"
#include "grd/graph.hpp"
#include "grd/solver.hpp"

namespace grd {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // modulo draw: fully deterministic, bias negligible at desk scale
    int below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

    double unit() { return static_cast<double>(next() >> 11) / 9007199254740992.0; } // 2^53

    Rng child(std::uint64_t key) const {
        return Rng(state_ ^ (0x9e3779b97f4a7c15ull * (key + 0x632be59bd9b4e019ull)));
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
            std::swap(v[i], v[below(i + 1)]);
    }

private:
    std::uint64_t state_;
};

struct CubicResult {
    Graph graph;
    bool used_fallback = false; // deterministic circulant stood in for the pairing model
};

// Pairing model with rejection of loops and parallel edges; after 1000
// rejected pairings falls back to the cycle-plus-diameters circulant.
inline CubicResult gen_cubic(int n, std::uint64_t seed) {
    if (n < 4 || n % 2 != 0)
        throw ParameterError("3-regular graphs need even n >= 4");
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Rng rng = Rng(seed).child(attempt);
        std::vector<int> stubs;
        stubs.reserve(3 * n);
        for (int v = 0; v < n; ++v)
            for (int c = 0; c < 3; ++c) stubs.push_back(v);
        rng.shuffle(stubs);
        Graph g(n);
        bool ok = true;
        for (std::size_t i = 0; ok && i < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v || g.has_edge(u, v)) ok = false;
            else g.add_edge(u, v);
        }
        if (ok) {
            auto stats = degree_stats(g);
            if (stats.regular_k && *stats.regular_k == 3) return {std::move(g), false};
        }
    }
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    for (int v = 0; v < n / 2; ++v) g.add_edge(v, v + n / 2);
    return {std::move(g), true};
}

namespace detail {

inline int gen_cotree_rec(Rng& rng, const std::vector<int>& leaves, CoTreeNode::Kind kind,
                          CoTree& t) {
    if (leaves.size() == 1) {
        CoTreeNode leaf;
        leaf.kind = CoTreeNode::Kind::Leaf;
        leaf.vertex = leaves[0];
        t.nodes.push_back(leaf);
        return static_cast<int>(t.nodes.size()) - 1;
    }
    const int sz = static_cast<int>(leaves.size());
    const int parts = 2 + rng.below(std::min(sz, 4) - 1); // 2..min(size,4) children
    // random composition of sz into `parts` positive parts
    std::vector<int> cuts;
    {
        std::vector<int> positions(sz - 1);
        std::iota(positions.begin(), positions.end(), 1);
        rng.shuffle(positions);
        cuts.assign(positions.begin(), positions.begin() + (parts - 1));
        std::sort(cuts.begin(), cuts.end());
    }
    const auto flipped = kind == CoTreeNode::Kind::Union ? CoTreeNode::Kind::Join
                                                         : CoTreeNode::Kind::Union;
    const int id = static_cast<int>(t.nodes.size());
    t.nodes.push_back(CoTreeNode{});
    t.nodes[id].kind = kind;
    std::vector<int> children;
    int prev = 0;
    for (int part = 0; part < parts; ++part) {
        const int end = part + 1 < parts ? cuts[part] : sz;
        std::vector<int> sub(leaves.begin() + prev, leaves.begin() + end);
        prev = end;
        children.push_back(gen_cotree_rec(rng, sub, flipped, t));
    }
    t.nodes[id].children = std::move(children);
    return id;
}

} // namespace detail

// expansion of a random canonical cotree on n leaves; build_cotree always
// succeeds on the result
inline Graph gen_cograph(int n, std::uint64_t seed) {
    if (n < 1) throw ParameterError("cograph generator needs n >= 1");
    Rng rng(seed);
    std::vector<int> leaves(n);
    std::iota(leaves.begin(), leaves.end(), 0);
    rng.shuffle(leaves);
    CoTree t;
    const auto kind = rng.below(2) == 0 ? CoTreeNode::Kind::Union : CoTreeNode::Kind::Join;
    t.root = detail::gen_cotree_rec(rng, leaves, kind, t);
    return expand(t);
}

// planted = embed a random partition of the universe plus t-q distractors
// (guaranteed yes); otherwise t independent random ell-subsets
inline SetCoverInstance gen_exact_cover(int ell, int q, int t, std::uint64_t seed, bool planted) {
    if (ell != 3 && ell != 4) throw ParameterError("ell must be 3 or 4");
    if (q < 0 || t < 0) throw ParameterError("q and t must be non-negative");
    if (planted && t < q) throw ParameterError("planted instances need t >= q");
    Rng rng(seed);
    SetCoverInstance inst;
    inst.ell = ell;
    inst.q = q;
    const int m = ell * q;
    std::vector<int> universe(m);
    std::iota(universe.begin(), universe.end(), 0);

    auto random_set = [&]() {
        auto pool = universe;
        rng.shuffle(pool);
        std::vector<int> s(pool.begin(), pool.begin() + ell);
        std::sort(s.begin(), s.end());
        return s;
    };

    if (planted) {
        auto perm = universe;
        rng.shuffle(perm);
        for (int i = 0; i < q; ++i) {
            std::vector<int> s(perm.begin() + i * ell, perm.begin() + (i + 1) * ell);
            std::sort(s.begin(), s.end());
            inst.sets.push_back(std::move(s));
        }
        for (int i = q; i < t; ++i) inst.sets.push_back(random_set());
        rng.shuffle(inst.sets);
    } else {
        for (int i = 0; i < t; ++i) inst.sets.push_back(random_set());
    }
    inst.validate();
    return inst;
}

// edge-independent random graph
inline Graph gen_erdos(int n, double p, std::uint64_t seed) {
    if (n < 0) throw ParameterError("vertex count must be non-negative");
    if (p < 0.0 || p > 1.0) throw ParameterError("edge probability must lie in [0,1]");
    Rng rng(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < p) g.add_edge(u, v);
    return g;
}

// random bipartite graph with maximum degree <= cap (used by the tree-gadget
// preservation checks)
inline Graph gen_bipartite_bounded(int left, int right, int degree_cap, std::uint64_t seed) {
    if (left < 0 || right < 0 || degree_cap < 0) throw ParameterError("bad bipartite parameters");
    Rng rng(seed);
    Graph g(left + right);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < left; ++u)
        for (int v = 0; v < right; ++v) pairs.emplace_back(u, left + v);
    rng.shuffle(pairs);
    for (auto [u, v] : pairs)
        if (g.degree(u) < degree_cap && g.degree(v) < degree_cap && rng.below(2) == 0)
            g.add_edge(u, v);
    return g;
}

} // namespace grd
