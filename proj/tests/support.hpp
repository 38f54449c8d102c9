// Shared test helpers: small graph builders and a seeded random block
// caterpillar generator.

#ifndef BLOCKBAND_TESTS_SUPPORT_HPP
#define BLOCKBAND_TESTS_SUPPORT_HPP

#include <random>

#include "blockband/graph.hpp"

namespace testsupport {

inline blockband::Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return blockband::Graph::from_edges(n, e);
}

inline blockband::Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return blockband::Graph::from_edges(n, e);
}

inline blockband::Graph clique(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return blockband::Graph::from_edges(n, e);
}

inline blockband::Graph star(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i)
        e.emplace_back(0, i);
    return blockband::Graph::from_edges(leaves + 1, e);
}

struct CaterpillarParams {
    int max_spine_blocks = 6;
    int max_clique = 5;
    int max_leaves = 4;
    int max_vertices = 64;
};

// Random block caterpillar: a chain of cliques sharing cutvertices, pendant
// leaves sprinkled on spine vertices. Vertex ids are then shuffled so tests
// do not depend on construction order.
inline blockband::Graph random_block_caterpillar(std::mt19937& rng, const CaterpillarParams& prm) {
    std::uniform_int_distribution<int> num_blocks(1, prm.max_spine_blocks);
    std::uniform_int_distribution<int> clique_size(2, prm.max_clique);
    std::uniform_int_distribution<int> leaf_count(0, prm.max_leaves);

    int k = num_blocks(rng);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> spine;  // all clique vertices
    int next = 0;
    int prev_cut = -1;
    for (int blk = 0; blk < k; ++blk) {
        int size = clique_size(rng);
        int fresh = size - (prev_cut == -1 ? 0 : 1);
        if (next + fresh > prm.max_vertices) {
            if (next == 0)
                fresh = std::min(fresh, prm.max_vertices);
            else
                break;
        }
        std::vector<int> verts;
        if (prev_cut != -1)
            verts.push_back(prev_cut);
        for (int i = 0; i < fresh; ++i) {
            verts.push_back(next++);
            spine.push_back(verts.back());
        }
        for (size_t i = 0; i < verts.size(); ++i)
            for (size_t j = i + 1; j < verts.size(); ++j)
                edges.emplace_back(verts[i], verts[j]);
        prev_cut = verts[static_cast<size_t>(
            std::uniform_int_distribution<int>(prev_cut == -1 ? 0 : 1,
                                               static_cast<int>(verts.size()) - 1)(rng))];
    }
    for (int v : spine) {
        if (next >= prm.max_vertices)
            break;
        int leaves = leaf_count(rng);
        for (int l = 0; l < leaves && next < prm.max_vertices; ++l)
            edges.emplace_back(v, next++);
    }
    // Shuffle ids.
    std::vector<int> perm(static_cast<size_t>(next));
    for (int i = 0; i < next; ++i)
        perm[static_cast<size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (auto& [u, v] : edges) {
        u = perm[static_cast<size_t>(u)];
        v = perm[static_cast<size_t>(v)];
    }
    return blockband::Graph::from_edges(next, edges);
}

// Arbitrary connected graph (not usually a block caterpillar).
inline blockband::Graph random_connected(std::mt19937& rng, int n, double extra_edge_prob) {
    std::vector<std::pair<int, int>> edges;
    std::uniform_int_distribution<int> pick(0, std::max(0, n - 1));
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int v = 1; v < n; ++v)
        edges.emplace_back(v, std::uniform_int_distribution<int>(0, v - 1)(rng));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < extra_edge_prob)
                edges.emplace_back(u, v);
    return blockband::Graph::from_edges(n, edges);
}

inline blockband::Layout random_layout(std::mt19937& rng, int n) {
    blockband::Layout f;
    f.position.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        f.position[static_cast<size_t>(i)] = i;
    std::shuffle(f.position.begin(), f.position.end(), rng);
    return f;
}

}  // namespace testsupport

#endif
