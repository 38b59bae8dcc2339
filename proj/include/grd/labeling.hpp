#pragma once

// Roman labelings f: V -> {0,1,2} and the RDF / GRDF validity checks.
//
// A labeling is a valid RDF when every 0-labeled vertex has a label-2
// neighbour. It is a valid GRDF when every 0-labeled vertex additionally has
// a label-2 vertex outside its closed neighbourhood (an RDF of the complement,
// checked without materializing the complement).

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "grd/graph.hpp"

namespace grd {

struct RomanLabeling {
    std::vector<std::uint8_t> labels;

    RomanLabeling() = default;
    explicit RomanLabeling(int n) : labels(n, 0) {}

    int size() const { return static_cast<int>(labels.size()); }

    int weight() const {
        return std::accumulate(labels.begin(), labels.end(), 0);
    }

    void set(int v, int value) {
        if (value < 0 || value > 2) throw ParameterError("label must be 0, 1 or 2");
        labels.at(v) = static_cast<std::uint8_t>(value);
    }

    int operator[](int v) const { return labels.at(v); }

    static RomanLabeling all_ones(int n) {
        RomanLabeling f(n);
        std::fill(f.labels.begin(), f.labels.end(), 1);
        return f;
    }

    bool operator==(const RomanLabeling&) const = default;
};

enum class Side { Graph, Complement };

struct GrdfViolation {
    int vertex;
    Side side;
    bool operator==(const GrdfViolation&) const = default;
};

namespace detail {

inline std::vector<std::uint64_t> two_mask(const Graph& g, const RomanLabeling& f) {
    if (f.size() != g.vertex_count())
        throw ParameterError("labeling length does not match graph");
    std::vector<std::uint64_t> twos(bits::word_count(g.vertex_count()), 0);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (f[v] == 2) bits::set(twos, v);
    return twos;
}

} // namespace detail

// nullopt when valid; otherwise the least-id 0-labeled vertex with no
// label-2 neighbour
inline std::optional<int> check_rdf(const Graph& g, const RomanLabeling& f) {
    const auto twos = detail::two_mask(g, f);
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (f[u] != 0) continue;
        if (!bits::intersects(g.row(u), twos)) return u;
    }
    return std::nullopt;
}

// nullopt when valid; otherwise the least-id violation, graph side reported
// before complement side for the same vertex
inline std::optional<GrdfViolation> check_grdf(const Graph& g, const RomanLabeling& f) {
    const auto twos = detail::two_mask(g, f);
    const int total_twos = bits::popcount(twos);
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (f[u] != 0) continue;
        if (!bits::intersects(g.row(u), twos))
            return GrdfViolation{u, Side::Graph};
        // label-2 count outside N[u]; u itself is 0-labeled, so the open row
        // suffices for the subtraction
        if (total_twos - bits::intersection_count(g.row(u), twos) == 0)
            return GrdfViolation{u, Side::Complement};
    }
    return std::nullopt;
}

} // namespace grd
