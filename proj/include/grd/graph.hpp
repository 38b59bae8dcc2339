#pragma once

// Simple undirected graphs on dense vertex ids 0..n-1, adjacency kept as
// word-packed bit rows. Everything here runs at desk scale.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grd/errors.hpp"

namespace grd {

namespace bits {

inline int word_count(int n) { return (n + 63) / 64; }

inline bool test(const std::vector<std::uint64_t>& row, int i) {
    return (row[i >> 6] >> (i & 63)) & 1u;
}

inline void set(std::vector<std::uint64_t>& row, int i) {
    row[i >> 6] |= std::uint64_t{1} << (i & 63);
}

inline void clear(std::vector<std::uint64_t>& row, int i) {
    row[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

inline int popcount(const std::vector<std::uint64_t>& row) {
    int c = 0;
    for (auto w : row) c += std::popcount(w);
    return c;
}

inline bool intersects(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & b[i]) return true;
    return false;
}

inline int intersection_count(const std::vector<std::uint64_t>& a,
                              const std::vector<std::uint64_t>& b) {
    int c = 0;
    for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
    return c;
}

// mask with bits 0..n-1 set
inline std::vector<std::uint64_t> full_mask(int n) {
    std::vector<std::uint64_t> m(word_count(n), ~std::uint64_t{0});
    if (n & 63) m.back() = (std::uint64_t{1} << (n & 63)) - 1;
    if (n == 0) m.clear();
    return m;
}

} // namespace bits

class Graph {
public:
    Graph() = default;

    explicit Graph(int n)
        : n_(n), rows_(n, std::vector<std::uint64_t>(bits::word_count(n), 0)), degrees_(n, 0) {
        if (n < 0) throw ParameterError("vertex count must be non-negative");
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    // idempotent; rejects self-loops and out-of-range ids
    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw ParameterError("self-loop rejected");
        if (has_edge(u, v)) return;
        bits::set(rows_[u], v);
        bits::set(rows_[v], u);
        ++degrees_[u];
        ++degrees_[v];
        ++m_;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        return bits::test(rows_[u], v);
    }

    int degree(int u) const {
        check_vertex(u);
        return degrees_[u];
    }

    std::vector<int> neighbors(int u) const {
        check_vertex(u);
        std::vector<int> out;
        out.reserve(degrees_[u]);
        for (int v = 0; v < n_; ++v)
            if (bits::test(rows_[u], v)) out.push_back(v);
        return out;
    }

    // adjacency row of u as a word-packed vertex set
    const std::vector<std::uint64_t>& row(int u) const {
        check_vertex(u);
        return rows_[u];
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(m_);
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (bits::test(rows_[u], v)) out.emplace_back(u, v);
        return out;
    }

    // display-only metadata; empty when unset
    const std::vector<std::string>& names() const { return names_; }

    void set_names(std::vector<std::string> names) {
        if (!names.empty() && static_cast<int>(names.size()) != n_)
            throw ParameterError("names length must match vertex count");
        names_ = std::move(names);
    }

    // same vertex count and edge set; names ignored
    bool operator==(const Graph& other) const {
        return n_ == other.n_ && rows_ == other.rows_;
    }

private:
    void check_vertex(int u) const {
        if (u < 0 || u >= n_) throw ParameterError("vertex id out of range");
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<int> degrees_;
    std::vector<std::string> names_;
};

struct ComponentProfile {
    int k1 = 0; // components of size exactly 1
    int k2 = 0; // components of size exactly 2
    int k3 = 0; // components of size >= 3

    bool operator==(const ComponentProfile&) const = default;

    ComponentProfile& operator+=(const ComponentProfile& o) {
        k1 += o.k1;
        k2 += o.k2;
        k3 += o.k3;
        return *this;
    }
};

struct Components {
    std::vector<std::vector<int>> parts; // ordered by least member, each sorted
    ComponentProfile profile;
};

struct DegreeStats {
    int min_degree = 0;
    int max_degree = 0;
    std::optional<int> regular_k; // set iff min == max
};

struct Bipartition {
    std::vector<int> left;  // contains the least vertex of each component
    std::vector<int> right;
};

struct SplitPartition {
    std::vector<int> clique;
    std::vector<int> independent;
};

struct SpecialVertices {
    std::vector<int> universal;
    // partition of V by open-neighborhood equality; classes of size >= 2 are
    // genuine false-twin classes (equal open neighborhoods force non-adjacency)
    std::vector<std::vector<int>> false_twin_classes;
};

inline Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    Graph out(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    out.set_names(g.names());
    return out;
}

inline Components components(const Graph& g) {
    const int n = g.vertex_count();
    Components out;
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int v = 0; v < n; ++v) {
                if (!seen[v] && bits::test(g.row(u), v)) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        const int sz = static_cast<int>(comp.size());
        if (sz == 1) ++out.profile.k1;
        else if (sz == 2) ++out.profile.k2;
        else ++out.profile.k3;
        out.parts.push_back(std::move(comp));
    }
    return out;
}

inline DegreeStats degree_stats(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw EmptyGraph("degree_stats: graph has no vertices");
    DegreeStats st;
    st.min_degree = st.max_degree = g.degree(0);
    for (int u = 1; u < n; ++u) {
        st.min_degree = std::min(st.min_degree, g.degree(u));
        st.max_degree = std::max(st.max_degree, g.degree(u));
    }
    if (st.min_degree == st.max_degree) st.regular_k = st.min_degree;
    return st;
}

inline std::optional<Bipartition> is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> queue{s};
        std::size_t head = 0;
        while (head < queue.size()) {
            int u = queue[head++];
            for (int v = 0; v < n; ++v) {
                if (!bits::test(g.row(u), v)) continue;
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition bp;
    for (int u = 0; u < n; ++u) (color[u] == 0 ? bp.left : bp.right).push_back(u);
    return bp;
}

// Degree-sequence split test with an explicit verification pass.
inline std::optional<SplitPartition> is_split(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return SplitPartition{};
    std::vector<int> order(n);
    for (int u = 0; u < n; ++u) order[u] = u;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    // m = max{ i : d_i >= i-1 } over the non-increasing degree sequence
    int m = 0;
    for (int i = 1; i <= n; ++i)
        if (g.degree(order[i - 1]) >= i - 1) m = i;
    long long head = 0, tail = 0;
    for (int i = 0; i < n; ++i)
        (i < m ? head : tail) += g.degree(order[i]);
    if (head != static_cast<long long>(m) * (m - 1) + tail) return std::nullopt;

    SplitPartition sp;
    sp.clique.assign(order.begin(), order.begin() + m);
    sp.independent.assign(order.begin() + m, order.end());
    std::sort(sp.clique.begin(), sp.clique.end());
    std::sort(sp.independent.begin(), sp.independent.end());
    for (std::size_t i = 0; i < sp.clique.size(); ++i)
        for (std::size_t j = i + 1; j < sp.clique.size(); ++j)
            if (!g.has_edge(sp.clique[i], sp.clique[j])) return std::nullopt;
    for (std::size_t i = 0; i < sp.independent.size(); ++i)
        for (std::size_t j = i + 1; j < sp.independent.size(); ++j)
            if (g.has_edge(sp.independent[i], sp.independent[j])) return std::nullopt;
    return sp;
}

inline SpecialVertices special_vertices(const Graph& g) {
    const int n = g.vertex_count();
    SpecialVertices out;
    for (int u = 0; u < n; ++u)
        if (g.degree(u) == n - 1 && n > 1) out.universal.push_back(u);
    std::vector<char> assigned(n, 0);
    for (int u = 0; u < n; ++u) {
        if (assigned[u]) continue;
        std::vector<int> cls{u};
        assigned[u] = 1;
        for (int v = u + 1; v < n; ++v) {
            if (!assigned[v] && g.row(u) == g.row(v)) {
                cls.push_back(v);
                assigned[v] = 1;
            }
        }
        out.false_twin_classes.push_back(std::move(cls));
    }
    return out;
}

// small named graphs used throughout tests and the claim suite

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

inline Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

inline Graph petersen_graph() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);        // outer cycle
        g.add_edge(i, 5 + i);              // spokes
        g.add_edge(5 + i, 5 + (i + 2) % 5); // pentagram
    }
    return g;
}

inline Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.vertex_count() + b.vertex_count());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(a.vertex_count() + u, a.vertex_count() + v);
    return g;
}

} // namespace grd
