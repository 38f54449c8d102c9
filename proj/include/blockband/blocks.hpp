// Block structure: biconnected components (bridges as 2-sets), block-graph
// test, block-caterpillar recognition, and the anchored spine structure the
// layout algorithm consumes.
//
// A block caterpillar is a block graph in which deleting the 1-valent
// vertices leaves a block path Q_1..Q_k (consecutive blocks sharing
// cutvertices v_2..v_k). Anchoring picks v_1 in Q_1 and v_{k+1} in Q_k, each
// a cutvertex with a pendant leaf, adding leaves where no candidate exists,
// and promotes one leaf at each end to the anchors v_0 and v_{k+2}.

#ifndef BLOCKBAND_BLOCKS_HPP
#define BLOCKBAND_BLOCKS_HPP

#include <optional>
#include <variant>

#include "blockband/graph.hpp"

namespace blockband {

struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;      // sorted vertex sets; bridges are 2-sets
    std::vector<int> cutvertices;              // sorted
    std::vector<std::vector<int>> blocks_of;   // per vertex, indices of containing blocks

    bool is_cutvertex(int v) const { return blocks_of[static_cast<size_t>(v)].size() >= 2; }
};

// Iterative Tarjan over an explicit stack; edges pop off a side stack when a
// block closes.
inline BlockDecomposition block_decomposition(const Graph& g) {
    int n = g.vertex_count();
    if (!is_connected(g))
        throw validation_error("block decomposition requires a connected graph");
    BlockDecomposition out;
    out.blocks_of.assign(static_cast<size_t>(n), {});
    if (n == 0)
        return out;

    std::vector<int> disc(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), -1);
    std::vector<std::pair<int, int>> edge_stack;
    int timer = 0;

    struct Frame {
        int v;
        int parent;
        size_t next;
    };
    std::vector<Frame> stack;

    auto pop_block = [&](int u, int v) {
        std::vector<int> verts;
        while (!edge_stack.empty()) {
            auto [a, b] = edge_stack.back();
            edge_stack.pop_back();
            verts.push_back(a);
            verts.push_back(b);
            if (a == u && b == v)
                break;
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        int idx = static_cast<int>(out.blocks.size());
        for (int w : verts)
            out.blocks_of[static_cast<size_t>(w)].push_back(idx);
        out.blocks.push_back(std::move(verts));
    };

    disc[0] = low[0] = timer++;
    stack.push_back({0, -1, 0});
    while (!stack.empty()) {
        int cur = stack.back().v;
        int parent = stack.back().parent;
        const auto& nbrs = g.neighbors(cur);
        if (stack.back().next < nbrs.size()) {
            int w = nbrs[stack.back().next++];
            if (disc[static_cast<size_t>(w)] == -1) {
                edge_stack.emplace_back(cur, w);
                disc[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = timer++;
                stack.push_back({w, cur, 0});
            } else if (w != parent && disc[static_cast<size_t>(w)] < disc[static_cast<size_t>(cur)]) {
                edge_stack.emplace_back(cur, w);
                low[static_cast<size_t>(cur)] =
                    std::min(low[static_cast<size_t>(cur)], disc[static_cast<size_t>(w)]);
            }
        } else {
            stack.pop_back();
            if (parent != -1) {
                low[static_cast<size_t>(parent)] =
                    std::min(low[static_cast<size_t>(parent)], low[static_cast<size_t>(cur)]);
                if (low[static_cast<size_t>(cur)] >= disc[static_cast<size_t>(parent)])
                    pop_block(parent, cur);
            }
        }
    }
    // Cutvertices are exactly the vertices in two or more blocks; K_1 has none.
    for (int v = 0; v < n; ++v)
        if (out.blocks_of[static_cast<size_t>(v)].size() >= 2)
            out.cutvertices.push_back(v);
    return out;
}

inline bool is_block_graph(const Graph& g) {
    auto bd = block_decomposition(g);
    for (const auto& block : bd.blocks)
        for (size_t i = 0; i < block.size(); ++i)
            for (size_t j = i + 1; j < block.size(); ++j)
                if (!g.has_edge(block[i], block[j]))
                    return false;
    return true;
}

// Decomposition of a block caterpillar into its spine cliques, cutvertex
// sequence, per-vertex leaf sets, and (after anchoring) the anchor path
// v_0, v_1, ..., v_{k+1}, v_{k+2} with synthetic end blocks {v_0,v_1} and
// {v_{k+1},v_{k+2}}. leaf_sets exclude the two promoted anchors.
struct CaterpillarStructure {
    std::vector<std::vector<int>> spine_cliques;  // Q_1..Q_k; empty for a star
    std::vector<int> cut_sequence;                // v_2..v_k
    std::vector<std::vector<int>> leaf_sets;      // indexed by vertex id
    int v0 = -1, v1 = -1, vk1 = -1, vk2 = -1;     // anchors; v1 set for stars at recognition
    std::vector<int> helpers;                     // vertices added by augmentation
    bool anchored = false;

    int k() const { return static_cast<int>(spine_cliques.size()); }
    int leaf_count(int v) const { return static_cast<int>(leaf_sets[static_cast<size_t>(v)].size()); }

    // Anchor sequence v_0..v_{k+2} (length k+3); for k = 0 this is v_0, v_1, v_2.
    std::vector<int> anchor_path() const {
        std::vector<int> a;
        a.push_back(v0);
        a.push_back(v1);
        for (int c : cut_sequence)
            a.push_back(c);
        if (k() >= 1)
            a.push_back(vk1);
        a.push_back(vk2);
        return a;
    }

    // Block sequence B_0..B_{k+1} including the synthetic end 2-sets.
    std::vector<std::vector<int>> blocks_with_synthetic() const {
        std::vector<std::vector<int>> b;
        b.push_back({v0, v1});
        for (const auto& q : spine_cliques)
            b.push_back(q);
        b.push_back({k() >= 1 ? vk1 : v1, vk2});
        return b;
    }
};

struct Rejection {
    enum class Reason { Disconnected, NotBlockGraph, SpineNotPath };
    Reason reason;
    std::string detail;
};

inline const char* to_string(Rejection::Reason r) {
    switch (r) {
        case Rejection::Reason::Disconnected: return "Disconnected";
        case Rejection::Reason::NotBlockGraph: return "NotBlockGraph";
        case Rejection::Reason::SpineNotPath: return "SpineNotPath";
    }
    return "?";
}

using RecognitionResult = std::variant<CaterpillarStructure, Rejection>;

namespace detail {

// Induced subgraph on `keep` plus the id maps both ways.
inline Graph induced(const Graph& g, const std::vector<int>& keep, std::vector<int>& to_sub,
                     std::vector<int>& to_full) {
    to_sub.assign(static_cast<size_t>(g.vertex_count()), -1);
    to_full = keep;
    for (size_t i = 0; i < keep.size(); ++i)
        to_sub[static_cast<size_t>(keep[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int u : keep)
        for (int v : g.neighbors(u))
            if (u < v && to_sub[static_cast<size_t>(v)] != -1)
                edges.emplace_back(to_sub[static_cast<size_t>(u)], to_sub[static_cast<size_t>(v)]);
    return Graph::from_edges(static_cast<int>(keep.size()), edges);
}

}  // namespace detail

inline RecognitionResult recognize_block_caterpillar(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0)
        return Rejection{Rejection::Reason::Disconnected, "empty graph"};
    if (!is_connected(g))
        return Rejection{Rejection::Reason::Disconnected, "graph is not connected"};
    if (!is_block_graph(g))
        return Rejection{Rejection::Reason::NotBlockGraph, "some block is not a clique"};

    CaterpillarStructure s;
    s.leaf_sets.assign(static_cast<size_t>(n), {});

    std::vector<int> interior;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= 2)
            interior.push_back(v);

    // Stars, K_2, K_1: leaf deletion leaves at most one vertex.
    if (interior.size() <= 1) {
        int center = interior.empty() ? 0 : interior[0];
        s.v1 = center;
        for (int v : g.neighbors(center))
            s.leaf_sets[static_cast<size_t>(center)].push_back(v);
        return s;
    }

    std::vector<int> to_sub, to_full;
    Graph core = detail::induced(g, interior, to_sub, to_full);
    auto bd = block_decomposition(core);

    // Leaves hang off interior vertices.
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 1)
            s.leaf_sets[static_cast<size_t>(g.neighbors(v)[0])].push_back(v);

    if (bd.blocks.size() == 1) {
        std::vector<int> q;
        for (int v : bd.blocks[0])
            q.push_back(to_full[static_cast<size_t>(v)]);
        std::sort(q.begin(), q.end());
        s.spine_cliques.push_back(std::move(q));
        return s;
    }

    // The block-cut structure must be a path: every cutvertex in exactly two
    // blocks, every block holding at most two cutvertices, exactly two end
    // blocks with one cutvertex each.
    std::vector<std::vector<int>> cuts_in_block(bd.blocks.size());
    for (int c : bd.cutvertices) {
        if (bd.blocks_of[static_cast<size_t>(c)].size() != 2)
            return Rejection{Rejection::Reason::SpineNotPath,
                             "cutvertex " + std::to_string(to_full[static_cast<size_t>(c)]) +
                                 " lies in more than two blocks"};
        for (int b : bd.blocks_of[static_cast<size_t>(c)])
            cuts_in_block[static_cast<size_t>(b)].push_back(c);
    }
    std::vector<int> end_blocks;
    for (size_t b = 0; b < bd.blocks.size(); ++b) {
        if (cuts_in_block[b].size() > 2)
            return Rejection{Rejection::Reason::SpineNotPath, "a block meets three cutvertices"};
        if (cuts_in_block[b].size() == 1)
            end_blocks.push_back(static_cast<int>(b));
        if (cuts_in_block[b].empty())
            return Rejection{Rejection::Reason::SpineNotPath, "detached block"};  // unreachable when connected
    }
    if (end_blocks.size() != 2)
        return Rejection{Rejection::Reason::SpineNotPath, "block arrangement branches"};

    auto walk = [&](int start) {
        std::vector<int> order;
        std::vector<bool> used(bd.blocks.size(), false);
        int cur = start;
        int via = -1;  // cutvertex we entered through
        for (;;) {
            order.push_back(cur);
            used[static_cast<size_t>(cur)] = true;
            int next_cut = -1;
            for (int c : cuts_in_block[static_cast<size_t>(cur)])
                if (c != via)
                    next_cut = c;
            if (next_cut == -1)
                break;
            int nxt = -1;
            for (int b : bd.blocks_of[static_cast<size_t>(next_cut)])
                if (b != cur)
                    nxt = b;
            via = next_cut;
            cur = nxt;
        }
        return order;
    };
    std::vector<int> order = walk(end_blocks[0]);
    if (order.size() != bd.blocks.size())
        return Rejection{Rejection::Reason::SpineNotPath, "block arrangement branches"};

    auto block_verts = [&](int b) {
        std::vector<int> q;
        for (int v : bd.blocks[static_cast<size_t>(b)])
            q.push_back(to_full[static_cast<size_t>(v)]);
        std::sort(q.begin(), q.end());
        return q;
    };
    // Orient so the lexicographically smaller end clique comes first.
    if (block_verts(order.back()) < block_verts(order.front()))
        std::reverse(order.begin(), order.end());

    for (size_t i = 0; i < order.size(); ++i) {
        s.spine_cliques.push_back(block_verts(order[i]));
        if (i > 0) {
            int shared = -1;
            for (int c : cuts_in_block[static_cast<size_t>(order[i])])
                for (int b : bd.blocks_of[static_cast<size_t>(c)])
                    if (b == order[i - 1])
                        shared = to_full[static_cast<size_t>(c)];
            s.cut_sequence.push_back(shared);
        }
    }
    return s;
}

// Completes the anchor data, adding leaves where an end of the spine has no
// cutvertex with a pendant leaf. Returns the (possibly augmented) graph and
// structure; helper vertices are recorded for later stripping. Local density
// is unchanged by the augmentation.
inline std::pair<Graph, CaterpillarStructure> anchor_and_augment(const CaterpillarStructure& input,
                                                                 const Graph& g) {
    CaterpillarStructure s = input;
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges = g.edges();

    auto add_leaf = [&](int parent) {
        int id = n++;
        edges.emplace_back(parent, id);
        s.leaf_sets.resize(static_cast<size_t>(n));
        s.leaf_sets[static_cast<size_t>(parent)].push_back(id);
        s.helpers.push_back(id);
        return id;
    };
    auto take_leaf = [&](int parent) {
        // Smallest-id leaf becomes the anchor and leaves the leaf set.
        auto& ls = s.leaf_sets[static_cast<size_t>(parent)];
        int a = *std::min_element(ls.begin(), ls.end());
        ls.erase(std::find(ls.begin(), ls.end(), a));
        return a;
    };

    if (s.k() == 0) {
        // Star: v_1 is the center, v_0 and v_2 arbitrary (smallest-id) leaves.
        int center = s.v1;
        if (s.leaf_count(center) == 0)
            add_leaf(center);
        s.v0 = take_leaf(center);
        if (s.leaf_count(center) == 0)
            add_leaf(center);
        s.vk1 = center;
        s.vk2 = take_leaf(center);
        s.anchored = true;
        return {Graph::from_edges(n, edges), s};
    }

    // Pick a leaf-bearing vertex of the end clique other than `exclude`; if
    // none exists, grow a helper leaf plus a fresh anchor leaf on the
    // smallest-id non-cutvertex.
    auto pick_end = [&](const std::vector<int>& clique, int exclude) {
        int best = -1;
        for (int v : clique)
            if (v != exclude && s.leaf_count(v) > 0 && (best == -1 || v < best))
                best = v;
        if (best != -1)
            return std::pair<int, int>{best, take_leaf(best)};
        int host = -1;
        for (int v : clique)
            if (v != exclude && (host == -1 || v < host))
                host = v;
        add_leaf(host);            // makes host a cutvertex
        int anchor = add_leaf(host);  // becomes the end anchor
        auto& ls = s.leaf_sets[static_cast<size_t>(host)];
        ls.erase(std::find(ls.begin(), ls.end(), anchor));
        return std::pair<int, int>{host, anchor};
    };

    int left_exclude = s.k() >= 2 ? s.cut_sequence.front() : -1;
    auto [v1, v0] = pick_end(s.spine_cliques.front(), left_exclude);
    s.v1 = v1;
    s.v0 = v0;
    int right_exclude = s.k() >= 2 ? s.cut_sequence.back() : s.v1;
    auto [vk1, vk2] = pick_end(s.spine_cliques.back(), right_exclude);
    s.vk1 = vk1;
    s.vk2 = vk2;
    s.anchored = true;
    return {Graph::from_edges(n, edges), s};
}

}  // namespace blockband

#endif  // BLOCKBAND_BLOCKS_HPP
