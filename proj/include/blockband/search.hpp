// Exact bandwidth by branch and bound: positions 0..n-1 are filled left to
// right, choosing the vertex for each next position. A branch dies when the
// vertex b positions back still has two or more unplaced neighbors (only one
// slot remains within reach), and a candidate is rejected when some placed
// neighbor is already more than b positions away.

#ifndef BLOCKBAND_SEARCH_HPP
#define BLOCKBAND_SEARCH_HPP

#include <functional>
#include <optional>

#include "blockband/density.hpp"

namespace blockband {

struct SearchBudget {
    int max_vertices = 24;
    long long max_nodes = 50'000'000;
    long long max_solutions = 10'000'000;
};

enum class SearchStatus { found, infeasible, budget_exhausted };

struct SearchResult {
    SearchStatus status;
    std::optional<Layout> layout;
    long long nodes = 0;
};

namespace detail {

struct BandwidthSearch {
    const Graph& g;
    int n;
    int b;
    long long node_cap;
    long long nodes = 0;
    std::vector<int> pos_of;    // vertex -> position, -1 unplaced
    std::vector<int> vert_at;   // position -> vertex
    std::vector<int> unplaced_nbrs;

    BandwidthSearch(const Graph& graph, int bound, long long cap)
        : g(graph), n(graph.vertex_count()), b(bound), node_cap(cap),
          pos_of(static_cast<size_t>(n), -1), vert_at(static_cast<size_t>(n), -1),
          unplaced_nbrs(static_cast<size_t>(n), 0) {
        for (int v = 0; v < n; ++v)
            unplaced_nbrs[static_cast<size_t>(v)] = g.degree(v);
    }

    bool feasible_at(int v, int i) const {
        for (int w : g.neighbors(v)) {
            int p = pos_of[static_cast<size_t>(w)];
            if (p != -1 && i - p > b)
                return false;
        }
        return true;
    }

    void place(int v, int i) {
        pos_of[static_cast<size_t>(v)] = i;
        vert_at[static_cast<size_t>(i)] = v;
        for (int w : g.neighbors(v))
            --unplaced_nbrs[static_cast<size_t>(w)];
    }

    void unplace(int v, int i) {
        pos_of[static_cast<size_t>(v)] = -1;
        vert_at[static_cast<size_t>(i)] = -1;
        for (int w : g.neighbors(v))
            ++unplaced_nbrs[static_cast<size_t>(w)];
    }

    // visitor returns false to stop the search; extend() returns false when
    // the node budget died or the visitor stopped us.
    bool extend(int i, const std::function<bool()>& on_complete, bool* stopped) {
        if (i == n)
            return on_complete();
        if (++nodes > node_cap) {
            *stopped = true;
            return false;
        }
        // Window rule: a vertex at position p has only p+b-i+1 slots left
        // for its unplaced neighbors. At equality with one neighbor open and
        // p = i-b, that neighbor is forced into position i.
        int forced = -1;
        for (int p = std::max(0, i - b); p < i; ++p) {
            int u = vert_at[static_cast<size_t>(p)];
            int open = unplaced_nbrs[static_cast<size_t>(u)];
            if (open > p + b - i + 1)
                return true;  // dead branch, keep searching siblings
            if (open == 1 && p == i - b) {
                for (int w : g.neighbors(u))
                    if (pos_of[static_cast<size_t>(w)] == -1)
                        forced = w;
            }
        }
        if (forced != -1) {
            if (!feasible_at(forced, i))
                return true;
            place(forced, i);
            bool ok = extend(i + 1, on_complete, stopped);
            unplace(forced, i);
            return ok;
        }
        for (int v = 0; v < n; ++v) {
            if (pos_of[static_cast<size_t>(v)] != -1 || !feasible_at(v, i))
                continue;
            place(v, i);
            bool ok = extend(i + 1, on_complete, stopped);
            unplace(v, i);
            if (!ok)
                return false;
        }
        return true;
    }
};

}  // namespace detail

// Finds a layout with B(f) <= b onto positions 0..n-1, or reports that none
// exists. Budget exhaustion is a distinct outcome, never conflated with
// infeasibility.
inline SearchResult decide_bandwidth(const Graph& g, int b, const SearchBudget& budget = {}) {
    int n = g.vertex_count();
    if (n > budget.max_vertices)
        throw validation_error("graph exceeds the search budget's vertex limit");
    if (!is_connected(g))
        throw validation_error("bandwidth search requires a connected graph");
    SearchResult res{SearchStatus::infeasible, std::nullopt, 0};
    if (n == 0) {
        res.status = SearchStatus::found;
        res.layout = Layout{};
        return res;
    }
    if (b < 0)
        return res;
    detail::BandwidthSearch search(g, b, budget.max_nodes);
    bool stopped = false;
    Layout found;
    bool complete = search.extend(0, [&]() {
        found.position = search.pos_of;
        return false;  // stop at the first complete layout
    }, &stopped);
    res.nodes = search.nodes;
    if (!complete && !stopped) {
        found.realized_bandwidth = verify_layout(g, found);
        res.status = SearchStatus::found;
        res.layout = std::move(found);
    } else if (stopped) {
        res.status = SearchStatus::budget_exhausted;
    }
    return res;
}

// Minimum b, starting the upward scan from the cheap lower bounds
// ceil((n-1)/diam) and max ceil(d(v)/2).
inline SearchResult exact_bandwidth(const Graph& g, const SearchBudget& budget = {}) {
    int n = g.vertex_count();
    if (n <= 1) {
        SearchResult res{SearchStatus::found, Layout{}, 0};
        res.layout->position.assign(static_cast<size_t>(n), 0);
        return res;
    }
    int lb = ceil_div(n - 1, diameter(g));
    for (int v = 0; v < n; ++v)
        lb = std::max(lb, ceil_div(g.degree(v), 2));
    long long nodes = 0;
    for (int b = lb; b < n; ++b) {
        SearchResult res = decide_bandwidth(g, b, budget);
        nodes += res.nodes;
        res.nodes = nodes;
        if (res.status != SearchStatus::infeasible)
            return res;
    }
    throw std::logic_error("bandwidth scan passed n-1");  // n-1 always feasible
}

struct EnumerationResult {
    long long count = 0;
    bool budget_exhausted = false;
    bool solution_capped = false;
    long long nodes = 0;
};

// Visits every layout with B(f) = b onto positions 0..n-1, one per mirror
// pair: a layout is reported only when the vertex at position 0 has a
// smaller id than the vertex at position n-1.
inline EnumerationResult enumerate_optimal(const Graph& g, int b, const SearchBudget& budget,
                                           const std::function<void(const Layout&)>& visit) {
    int n = g.vertex_count();
    if (n > budget.max_vertices)
        throw validation_error("graph exceeds the search budget's vertex limit");
    if (!is_connected(g))
        throw validation_error("bandwidth search requires a connected graph");
    EnumerationResult res;
    if (n == 0)
        return res;
    detail::BandwidthSearch search(g, b, budget.max_nodes);
    bool stopped = false;
    search.extend(0, [&]() {
        if (n == 1 || search.vert_at[0] < search.vert_at[static_cast<size_t>(n - 1)]) {
            ++res.count;
            Layout f;
            f.position = search.pos_of;
            f.realized_bandwidth = b;
            visit(f);
            if (res.count >= budget.max_solutions) {
                res.solution_capped = true;
                return false;
            }
        }
        return true;  // keep enumerating
    }, &stopped);
    res.nodes = search.nodes;
    res.budget_exhausted = stopped;
    return res;
}

}  // namespace blockband

#endif  // BLOCKBAND_SEARCH_HPP
