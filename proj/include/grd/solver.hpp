#pragma once

// Exact solvers for Roman domination, global Roman domination, minimum
// dominating set, and Exact l-Cover.
//
// The RD/GRD kernel enumerates only the label-2 set d2: the label-1 vertices
// of an optimal completion are exactly the vertices d2 leaves uncovered, so
// 3^n labelings collapse to 2^n set choices and a weight budget w bounds the
// search to |d2| <= floor(w/2). Enumeration is cardinality-ascending, then
// lexicographic; among equal-weight optima the lexicographically least d2
// (as a sorted id sequence) wins, which makes witnesses deterministic and
// independent of the worker count.

#include <algorithm>
#include <chrono>
#include <climits>
#include <cstdint>
#include <future>
#include <optional>
#include <vector>

#include "grd/graph.hpp"
#include "grd/labeling.hpp"

namespace grd {

enum class Mode { RD, GRD };
enum class Objective { RD, GRD, DS };

inline Objective to_objective(Mode m) {
    return m == Mode::RD ? Objective::RD : Objective::GRD;
}

struct SolveStats {
    std::uint64_t candidates = 0;
    double wall_ms = 0.0;
};

enum class SolveStatus { Optimal, DidNotFinish };

struct SolveResult {
    Objective objective = Objective::RD;
    int optimum = 0;
    SolveStatus status = SolveStatus::Optimal;
    RomanLabeling witness;        // RD / GRD
    std::vector<int> witness_set; // d2 for RD/GRD, the dominating set for DS
    SolveStats stats;
};

struct SolveOptions {
    int jobs = 1;
    std::optional<double> time_budget_ms;
};

struct CostResult {
    int weight = 0;
    std::vector<int> forced_one;
};

// Weight of the cheapest valid labeling whose label-2 set is exactly d2:
// 2|d2| plus one per vertex d2 leaves uncovered under the mode's rule.
inline CostResult cost_given_two_set(const Graph& g, const std::vector<int>& d2, Mode mode) {
    const int n = g.vertex_count();
    std::vector<std::uint64_t> twos(bits::word_count(n), 0);
    for (int v : d2) {
        if (v < 0 || v >= n) throw ParameterError("d2 vertex out of range");
        bits::set(twos, v);
    }
    const int count = bits::popcount(twos);
    CostResult out;
    out.weight = 2 * count;
    for (int u = 0; u < n; ++u) {
        if (bits::test(twos, u)) continue;
        bool covered = bits::intersects(g.row(u), twos);
        if (covered && mode == Mode::GRD)
            covered = count - bits::intersection_count(g.row(u), twos) > 0;
        if (!covered) {
            out.forced_one.push_back(u);
            ++out.weight;
        }
    }
    return out;
}

inline RomanLabeling labeling_from_two_set(const Graph& g, const std::vector<int>& d2, Mode mode) {
    RomanLabeling f(g.vertex_count());
    for (int v : d2) f.set(v, 2);
    for (int v : cost_given_two_set(g, d2, mode).forced_one) f.set(v, 1);
    return f;
}

namespace detail {

using Clock = std::chrono::steady_clock;

struct SearchKernel {
    const Graph& g;
    Mode mode;
    int n;
    int words;

    SearchKernel(const Graph& graph, Mode m)
        : g(graph), mode(m), n(graph.vertex_count()), words(bits::word_count(graph.vertex_count())) {}

    int cost(const std::vector<std::uint64_t>& twos, int count) const {
        int w = 2 * count;
        for (int u = 0; u < n; ++u) {
            if (bits::test(twos, u)) continue;
            const auto& row = g.row(u);
            bool covered = bits::intersects(row, twos);
            if (covered && mode == Mode::GRD)
                covered = count - bits::intersection_count(row, twos) > 0;
            if (!covered) ++w;
        }
        return w;
    }
};

struct StratumScan {
    int best_cost = INT_MAX;
    std::vector<int> best_d2;
    std::uint64_t candidates = 0;
    bool dnf = false;
};

// Scan every c-subset whose least element lies in the worker's strata
// (first ≡ worker mod jobs). With stop_at set, a stratum is abandoned at its
// first subset of cost <= stop_at and later strata are skipped: successes
// there are lexicographically greater.
inline StratumScan scan_strata(const SearchKernel& k, int c, int worker, int jobs,
                               std::optional<int> stop_at,
                               std::optional<Clock::time_point> deadline) {
    StratumScan out;
    std::vector<int> idx(c);
    std::vector<std::uint64_t> twos(k.words, 0);
    for (int first = worker; first <= k.n - c; first += jobs) {
        for (int i = 0; i < c; ++i) idx[i] = first + i;
        bool stratum_done = false;
        while (!stratum_done) {
            std::fill(twos.begin(), twos.end(), 0);
            for (int v : idx) bits::set(twos, v);
            const int w = k.cost(twos, c);
            ++out.candidates;
            if (stop_at) {
                if (w <= *stop_at) {
                    out.best_cost = w;
                    out.best_d2 = idx;
                    return out;
                }
            } else if (w < out.best_cost ||
                       (w == out.best_cost && idx < out.best_d2)) {
                out.best_cost = w;
                out.best_d2 = idx;
            }
            if (deadline && (out.candidates & 1023) == 0 && Clock::now() > *deadline) {
                out.dnf = true;
                return out;
            }
            // next combination keeping idx[0] == first
            int pos = c - 1;
            while (pos >= 1 && idx[pos] == k.n - c + pos) --pos;
            if (pos < 1) {
                stratum_done = true;
            } else {
                ++idx[pos];
                for (int i = pos + 1; i < c; ++i) idx[i] = idx[i - 1] + 1;
            }
        }
    }
    return out;
}

inline StratumScan scan_class(const SearchKernel& k, int c, int jobs,
                              std::optional<int> stop_at,
                              std::optional<Clock::time_point> deadline) {
    jobs = std::max(1, std::min(jobs, k.n - c + 1));
    std::vector<StratumScan> parts;
    if (jobs == 1) {
        parts.push_back(scan_strata(k, c, 0, 1, stop_at, deadline));
    } else {
        std::vector<std::future<StratumScan>> futs;
        futs.reserve(jobs - 1);
        for (int wkr = 1; wkr < jobs; ++wkr)
            futs.push_back(std::async(std::launch::async, scan_strata, std::cref(k), c, wkr,
                                      jobs, stop_at, deadline));
        parts.push_back(scan_strata(k, c, 0, jobs, stop_at, deadline));
        for (auto& f : futs) parts.push_back(f.get());
    }
    StratumScan merged;
    for (auto& p : parts) {
        merged.candidates += p.candidates;
        merged.dnf = merged.dnf || p.dnf;
        if (p.best_cost == INT_MAX) continue;
        const bool better = stop_at
            ? (merged.best_cost == INT_MAX || p.best_d2 < merged.best_d2)
            : (p.best_cost < merged.best_cost ||
               (p.best_cost == merged.best_cost && p.best_d2 < merged.best_d2));
        if (better) {
            merged.best_cost = p.best_cost;
            merged.best_d2 = std::move(p.best_d2);
        }
    }
    return merged;
}

inline std::optional<Clock::time_point> make_deadline(const SolveOptions& opts) {
    if (!opts.time_budget_ms) return std::nullopt;
    return Clock::now() + std::chrono::duration_cast<Clock::duration>(
                              std::chrono::duration<double, std::milli>(*opts.time_budget_ms));
}

inline double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

inline bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace detail

inline SolveResult solve_exact(const Graph& g, Mode mode, const SolveOptions& opts = {}) {
    const auto start = detail::Clock::now();
    const auto deadline = detail::make_deadline(opts);
    detail::SearchKernel kernel(g, mode);
    const int n = g.vertex_count();

    SolveResult res;
    res.objective = to_objective(mode);
    int best = cost_given_two_set(g, {}, mode).weight; // all-ones fallback
    std::vector<int> best_d2;
    res.stats.candidates = 1;
    bool dnf = false;

    // equal-cardinality classes (2c == best) still get scanned: the
    // lexicographically least optimum can live there
    for (int c = 1; c <= n && 2 * c <= best && !dnf; ++c) {
        auto scan = detail::scan_class(kernel, c, opts.jobs, std::nullopt, deadline);
        res.stats.candidates += scan.candidates;
        dnf = scan.dnf;
        if (scan.best_cost < best ||
            (scan.best_cost == best && !scan.best_d2.empty() &&
             (best_d2.empty() ? false : detail::lex_less(scan.best_d2, best_d2)))) {
            best = scan.best_cost;
            best_d2 = std::move(scan.best_d2);
        }
    }

    res.optimum = best;
    res.status = dnf ? SolveStatus::DidNotFinish : SolveStatus::Optimal;
    res.witness_set = best_d2;
    res.witness = labeling_from_two_set(g, best_d2, mode);
    res.stats.wall_ms = detail::elapsed_ms(start);
    return res;
}

struct DecideResult {
    enum class Answer { Yes, No, DidNotFinish };
    Answer answer = Answer::No;
    std::optional<RomanLabeling> witness;
    std::vector<int> witness_set;
    SolveStats stats;
};

// yes iff some labeling of weight <= budget is valid: any such labeling has
// |d2| <= floor(budget/2) and its forced-one completion weighs no more, so the
// bounded enumeration is complete. First success in (cardinality, lex) order.
inline DecideResult decide(const Graph& g, Mode mode, int budget, const SolveOptions& opts = {}) {
    if (budget < 0) throw ParameterError("decision budget must be non-negative");
    const auto start = detail::Clock::now();
    const auto deadline = detail::make_deadline(opts);
    detail::SearchKernel kernel(g, mode);
    const int n = g.vertex_count();

    DecideResult res;
    res.stats.candidates = 1;
    if (cost_given_two_set(g, {}, mode).weight <= budget) {
        res.answer = DecideResult::Answer::Yes;
        res.witness = labeling_from_two_set(g, {}, mode);
        res.stats.wall_ms = detail::elapsed_ms(start);
        return res;
    }
    for (int c = 1; c <= std::min(n, budget / 2); ++c) {
        auto scan = detail::scan_class(kernel, c, opts.jobs, budget, deadline);
        res.stats.candidates += scan.candidates;
        if (scan.best_cost <= budget && !scan.best_d2.empty()) {
            res.answer = DecideResult::Answer::Yes;
            res.witness_set = scan.best_d2;
            res.witness = labeling_from_two_set(g, scan.best_d2, mode);
            res.stats.wall_ms = detail::elapsed_ms(start);
            return res;
        }
        if (scan.dnf) {
            res.answer = DecideResult::Answer::DidNotFinish;
            res.stats.wall_ms = detail::elapsed_ms(start);
            return res;
        }
    }
    res.answer = DecideResult::Answer::No;
    res.stats.wall_ms = detail::elapsed_ms(start);
    return res;
}

// Minimum dominating set by cardinality-ascending subset enumeration, capped
// by a greedy upper bound. The witness is the lexicographically least optimum.
inline SolveResult solve_ds(const Graph& g, const SolveOptions& opts = {}) {
    const auto start = detail::Clock::now();
    const int n = g.vertex_count();
    const int words = bits::word_count(n);

    SolveResult res;
    res.objective = Objective::DS;
    if (n == 0) {
        res.stats.wall_ms = detail::elapsed_ms(start);
        return res;
    }

    std::vector<std::vector<std::uint64_t>> closed(n);
    for (int u = 0; u < n; ++u) {
        closed[u] = g.row(u);
        bits::set(closed[u], u);
    }
    const auto full = bits::full_mask(n);

    // greedy cover for the cardinality cap
    auto uncovered = full;
    int greedy_size = 0;
    while (bits::popcount(uncovered) > 0) {
        int pick = -1, gain = -1;
        for (int u = 0; u < n; ++u) {
            const int c = bits::intersection_count(closed[u], uncovered);
            if (c > gain) {
                gain = c;
                pick = u;
            }
        }
        for (int w = 0; w < words; ++w) uncovered[w] &= ~closed[pick][w];
        ++greedy_size;
    }

    std::vector<std::uint64_t> cover(words);
    std::vector<int> idx;
    for (int c = 1; c <= greedy_size; ++c) {
        idx.resize(c);
        for (int i = 0; i < c; ++i) idx[i] = i;
        while (true) {
            std::fill(cover.begin(), cover.end(), 0);
            for (int v : idx)
                for (int w = 0; w < words; ++w) cover[w] |= closed[v][w];
            ++res.stats.candidates;
            if (cover == full) {
                res.optimum = c;
                res.witness_set = idx;
                res.stats.wall_ms = detail::elapsed_ms(start);
                return res;
            }
            int pos = c - 1;
            while (pos >= 0 && idx[pos] == n - c + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int i = pos + 1; i < c; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    // unreachable: the greedy set itself dominates
    throw Error("solve_ds: enumeration exhausted below greedy bound");
}

// ---------------------------------------------------------------------------
// Exact l-Cover

struct SetCoverInstance {
    int ell = 3; // 3 or 4
    int q = 0;
    std::vector<std::vector<int>> sets;

    int universe_size() const { return ell * q; }

    void validate() const {
        if (ell != 3 && ell != 4) throw ParameterError("ell must be 3 or 4");
        if (q < 0) throw ParameterError("q must be non-negative");
        for (const auto& s : sets) {
            if (static_cast<int>(s.size()) != ell)
                throw ParameterError("every set must have exactly ell elements");
            auto sorted = s;
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t i = 0; i < sorted.size(); ++i) {
                if (sorted[i] < 0 || sorted[i] >= universe_size())
                    throw ParameterError("set element outside the universe");
                if (i > 0 && sorted[i] == sorted[i - 1])
                    throw ParameterError("set elements must be distinct");
            }
        }
    }

    void normalize() {
        for (auto& s : sets) std::sort(s.begin(), s.end());
        validate();
    }
};

struct ExactCoverResult {
    bool yes = false;
    std::vector<int> cover; // indices into the original collection, ascending
    std::uint64_t nodes = 0;
};

// Backtracking on the uncovered element with the fewest usable sets.
// Duplicate sets are deduplicated up front (least original index kept).
inline ExactCoverResult solve_exact_cover(const SetCoverInstance& inst) {
    inst.validate();
    ExactCoverResult res;
    const int m = inst.universe_size();
    if (m == 0) {
        res.yes = true;
        return res;
    }

    std::vector<std::vector<int>> unique_sets;
    std::vector<int> original_index;
    for (int i = 0; i < static_cast<int>(inst.sets.size()); ++i) {
        auto s = inst.sets[i];
        std::sort(s.begin(), s.end());
        if (std::find(unique_sets.begin(), unique_sets.end(), s) == unique_sets.end()) {
            unique_sets.push_back(std::move(s));
            original_index.push_back(i);
        }
    }

    const int words = bits::word_count(m);
    std::vector<std::vector<std::uint64_t>> masks(unique_sets.size(),
                                                  std::vector<std::uint64_t>(words, 0));
    std::vector<std::vector<int>> containing(m);
    for (std::size_t s = 0; s < unique_sets.size(); ++s)
        for (int e : unique_sets[s]) {
            bits::set(masks[s], e);
            containing[e].push_back(static_cast<int>(s));
        }

    std::vector<std::uint64_t> covered(words, 0);
    std::vector<int> chosen;
    const auto full = bits::full_mask(m);

    auto backtrack = [&](auto&& self) -> bool {
        ++res.nodes;
        if (covered == full) return true;
        int pivot = -1, fewest = INT_MAX;
        for (int e = 0; e < m; ++e) {
            if (bits::test(covered, e)) continue;
            int usable = 0;
            for (int s : containing[e])
                if (!bits::intersects(masks[s], covered)) ++usable;
            if (usable < fewest) {
                fewest = usable;
                pivot = e;
            }
            if (fewest == 0) break;
        }
        if (fewest == 0) return false;
        for (int s : containing[pivot]) {
            if (bits::intersects(masks[s], covered)) continue;
            for (int w = 0; w < words; ++w) covered[w] |= masks[s][w];
            chosen.push_back(s);
            if (self(self)) return true;
            chosen.pop_back();
            for (int w = 0; w < words; ++w) covered[w] &= ~masks[s][w];
        }
        return false;
    };

    if (backtrack(backtrack)) {
        res.yes = true;
        for (int s : chosen) res.cover.push_back(original_index[s]);
        std::sort(res.cover.begin(), res.cover.end());
    }
    return res;
}

// checks that cover indices select pairwise disjoint sets whose union is the universe
inline bool verify_exact_cover(const SetCoverInstance& inst, const std::vector<int>& cover) {
    const int m = inst.universe_size();
    std::vector<std::uint64_t> covered(bits::word_count(m), 0);
    for (int idx : cover) {
        if (idx < 0 || idx >= static_cast<int>(inst.sets.size())) return false;
        for (int e : inst.sets[idx]) {
            if (bits::test(covered, e)) return false;
            bits::set(covered, e);
        }
    }
    return bits::popcount(covered) == m;
}

} // namespace grd
