// Core graph and layout types: immutable simple undirected graphs over dense
// integer vertex ids, BFS metrics, injective integer labelings and their
// realized bandwidth, and the plain-text interchange formats used by the CLI.

#ifndef BLOCKBAND_GRAPH_HPP
#define BLOCKBAND_GRAPH_HPP

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace blockband {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr int kUnreachable = -1;

// Simple undirected graph. Adjacency lists are sorted, deduplicated, and
// symmetric; self-loops are rejected at construction.
class Graph {
  public:
    Graph() = default;

    explicit Graph(int vertex_count) : adj_(static_cast<size_t>(vertex_count)) {
        if (vertex_count < 0)
            throw validation_error("negative vertex count");
    }

    static Graph from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
        Graph g(vertex_count);
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
                throw validation_error("edge endpoint out of range");
            if (u == v)
                throw validation_error("self-loop");
            g.adj_[static_cast<size_t>(u)].push_back(v);
            g.adj_[static_cast<size_t>(v)].push_back(u);
        }
        g.normalize();
        return g;
    }

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }

    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }

    bool has_edge(int u, int v) const {
        const auto& a = adj_[static_cast<size_t>(u)];
        return std::binary_search(a.begin(), a.end(), v);
    }

    // Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<size_t>(edge_count_));
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : neighbors(u))
                if (u < v)
                    out.emplace_back(u, v);
        return out;
    }

  private:
    void normalize() {
        edge_count_ = 0;
        for (auto& a : adj_) {
            std::sort(a.begin(), a.end());
            a.erase(std::unique(a.begin(), a.end()), a.end());
            edge_count_ += static_cast<int>(a.size());
        }
        edge_count_ /= 2;
    }

    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

// Injective vertex -> integer position map. Positions need not be
// consecutive; condense() squashes them order-preservingly.
struct Layout {
    std::vector<int> position;
    int realized_bandwidth = 0;

    int size() const { return static_cast<int>(position.size()); }
};

// Hop distances from v; kUnreachable for vertices in other components.
inline std::vector<int> distances_from(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw validation_error("source vertex out of range");
    std::vector<int> dist(static_cast<size_t>(g.vertex_count()), kUnreachable);
    std::queue<int> q;
    dist[static_cast<size_t>(v)] = 0;
    q.push(v);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u)) {
            if (dist[static_cast<size_t>(w)] == kUnreachable) {
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

inline bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0)
        return true;
    auto d = distances_from(g, 0);
    return std::find(d.begin(), d.end(), kUnreachable) == d.end();
}

inline int eccentricity(const Graph& g, int v) {
    auto d = distances_from(g, v);
    int ecc = 0;
    for (int x : d) {
        if (x == kUnreachable)
            throw validation_error("eccentricity on disconnected graph");
        ecc = std::max(ecc, x);
    }
    return ecc;
}

inline int diameter(const Graph& g) {
    if (g.vertex_count() == 0)
        throw validation_error("diameter of empty graph");
    int diam = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        diam = std::max(diam, eccentricity(g, v));
    return diam;
}

// Max |f(u) - f(v)| over edges; validates injectivity and size. 0 for
// edgeless graphs.
inline int verify_layout(const Graph& g, const Layout& f) {
    if (f.size() != g.vertex_count())
        throw validation_error("layout size does not match vertex count");
    std::vector<int> sorted = f.position;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw validation_error("duplicate positions in layout");
    int b = 0;
    for (auto [u, v] : g.edges())
        b = std::max(b, std::abs(f.position[static_cast<size_t>(u)] -
                                 f.position[static_cast<size_t>(v)]));
    return b;
}

// Order-preserving remap onto 0..n-1. Never increases any pairwise
// difference, hence never the realized bandwidth.
inline Layout condense(const Layout& f) {
    std::vector<int> order(f.position.size());
    for (size_t i = 0; i < order.size(); ++i)
        order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return f.position[static_cast<size_t>(a)] < f.position[static_cast<size_t>(b)];
    });
    Layout out;
    out.position.assign(f.position.size(), 0);
    for (size_t rank = 0; rank < order.size(); ++rank) {
        if (rank > 0 && f.position[static_cast<size_t>(order[rank])] ==
                            f.position[static_cast<size_t>(order[rank - 1])])
            throw validation_error("duplicate positions in layout");
        out.position[static_cast<size_t>(order[rank])] = static_cast<int>(rank);
    }
    out.realized_bandwidth = 0;
    return out;
}

// ---------------------------------------------------------------------------
// Text formats.
//
// Graph file: '#' starts a comment, first data line is the vertex count n,
// each further data line is one edge "u v" with 0 <= u, v < n and u != v.
// Layout file: one "vertex position" pair per line, any order.
// ---------------------------------------------------------------------------

namespace detail {

inline std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

inline bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace detail

inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long long n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::string data = detail::strip_comment(line);
        if (detail::blank(data))
            continue;
        std::istringstream fields(data);
        if (n < 0) {
            std::string extra;
            if (!(fields >> n) || n < 0 || (fields >> extra))
                throw parse_error("line " + std::to_string(lineno) + ": expected vertex count");
            continue;
        }
        long long u, v;
        std::string extra;
        if (!(fields >> u >> v) || (fields >> extra))
            throw parse_error("line " + std::to_string(lineno) + ": expected edge \"u v\"");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw parse_error("line " + std::to_string(lineno) + ": vertex id out of range");
        if (u == v)
            throw parse_error("line " + std::to_string(lineno) + ": self-loop");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0)
        throw parse_error("missing vertex count line");
    return Graph::from_edges(static_cast<int>(n), edges);
}

inline std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges())
        out << u << " " << v << "\n";
    return out.str();
}

inline Layout parse_layout(const std::string& text, int vertex_count) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    Layout f;
    f.position.assign(static_cast<size_t>(vertex_count), std::numeric_limits<int>::min());
    std::vector<bool> seen(static_cast<size_t>(vertex_count), false);
    while (std::getline(in, line)) {
        ++lineno;
        std::string data = detail::strip_comment(line);
        if (detail::blank(data))
            continue;
        std::istringstream fields(data);
        long long v, p;
        std::string extra;
        if (!(fields >> v >> p) || (fields >> extra))
            throw parse_error("line " + std::to_string(lineno) + ": expected \"vertex position\"");
        if (v < 0 || v >= vertex_count)
            throw parse_error("line " + std::to_string(lineno) + ": vertex id out of range");
        if (seen[static_cast<size_t>(v)])
            throw parse_error("line " + std::to_string(lineno) + ": vertex listed twice");
        seen[static_cast<size_t>(v)] = true;
        f.position[static_cast<size_t>(v)] = static_cast<int>(p);
    }
    for (int v = 0; v < vertex_count; ++v)
        if (!seen[static_cast<size_t>(v)])
            throw parse_error("vertex " + std::to_string(v) + " has no position");
    return f;
}

inline std::string serialize_layout(const Layout& f) {
    std::ostringstream out;
    for (int v = 0; v < f.size(); ++v)
        out << v << " " << f.position[static_cast<size_t>(v)] << "\n";
    return out.str();
}

}  // namespace blockband

#endif  // BLOCKBAND_GRAPH_HPP
