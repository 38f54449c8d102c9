// Local density beta(G) = max over connected subgraphs H of
// ceil((n(H)-1)/diam(H)), a universal lower bound on bandwidth. Computed two
// ways: exhaustively over induced subgraphs for small graphs (the maximum is
// attained at an induced subgraph, since adding edges on a fixed vertex set
// never increases the diameter), and by the structured three-term formula
// max{beta1, beta2, beta'} on anchored block caterpillars.

#ifndef BLOCKBAND_DENSITY_HPP
#define BLOCKBAND_DENSITY_HPP

#include <bit>
#include <cstdint>

#include "blockband/blocks.hpp"

namespace blockband {

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

// Exhaustive local density over vertex-subset bitmasks. Worst case 2^cap
// subsets; the default cap keeps that at 65536.
inline int local_density_bruteforce(const Graph& g, int cap = 16) {
    int n = g.vertex_count();
    if (n > cap || n > 22)
        throw validation_error("brute-force density refused: " + std::to_string(n) +
                               " vertices exceeds cap " + std::to_string(std::min(cap, 22)));
    if (!is_connected(g))
        throw validation_error("brute-force density requires a connected graph");
    if (n == 0)
        return 0;

    std::vector<uint32_t> adj(static_cast<size_t>(n), 0);
    for (auto [u, v] : g.edges()) {
        adj[static_cast<size_t>(u)] |= 1u << v;
        adj[static_cast<size_t>(v)] |= 1u << u;
    }

    auto bfs_reach = [&](int src, uint32_t mask, std::vector<int>& dist) {
        // Frontier expansion restricted to mask; dist entries only for mask bits.
        uint32_t reached = 1u << src;
        uint32_t frontier = reached;
        int d = 0;
        dist[static_cast<size_t>(src)] = 0;
        while (frontier) {
            uint32_t next = 0;
            for (uint32_t f = frontier; f;) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= adj[static_cast<size_t>(v)];
            }
            next &= mask & ~reached;
            ++d;
            for (uint32_t f = next; f;) {
                int v = std::countr_zero(f);
                f &= f - 1;
                dist[static_cast<size_t>(v)] = d;
            }
            reached |= next;
            frontier = next;
        }
        return reached;
    };

    int best = 0;
    std::vector<int> dist(static_cast<size_t>(n), 0);
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        int cnt = std::popcount(mask);
        if (cnt < 2)
            continue;
        int first = std::countr_zero(mask);
        if (bfs_reach(first, mask, dist) != mask)
            continue;  // disconnected subset
        int diam = 0;
        for (uint32_t f = mask; f;) {
            int v = std::countr_zero(f);
            f &= f - 1;
            bfs_reach(v, mask, dist);
            for (uint32_t h = mask; h;) {
                int w = std::countr_zero(h);
                h &= h - 1;
                diam = std::max(diam, dist[static_cast<size_t>(w)]);
            }
        }
        best = std::max(best, ceil_div(cnt - 1, diam));
    }
    return best;
}

// beta1: largest block size minus one. beta2: max over vertices of
// ceil(d(v)/2). beta': max over block windows [h, i] of
// ceil((n(G(h,i))-1)/(i-h+3)), where G(h,i) collects the edges incident to
// the vertices of blocks h..i (synthetic end blocks included).
struct DensityReport {
    int beta1 = 0;
    int beta2 = 0;
    int beta_prime = 0;
    int beta = 0;
    int witness_h = 0;
    int witness_i = 0;
};

inline DensityReport local_density_structured(const CaterpillarStructure& s, const Graph& g) {
    if (!s.anchored)
        throw validation_error("structured density requires an anchored structure");
    auto blocks = s.blocks_with_synthetic();  // B_0..B_{k+1}
    auto anchors = s.anchor_path();           // v_0..v_{k+2}
    int nb = static_cast<int>(blocks.size());  // k + 2

    for (const auto& b : blocks)
        for (int v : b)
            if (v < 0 || v >= g.vertex_count())
                throw validation_error("structure does not match graph");

    DensityReport r;
    for (const auto& b : blocks)
        r.beta1 = std::max(r.beta1, static_cast<int>(b.size()) - 1);
    for (int v = 0; v < g.vertex_count(); ++v)
        r.beta2 = std::max(r.beta2, ceil_div(g.degree(v), 2));

    // Left cut of B_j for j >= 1 is anchors[j]; prefix sums of clique sizes
    // and of leaf counts newly introduced per block.
    std::vector<long long> size_pref(static_cast<size_t>(nb) + 1, 0);
    std::vector<long long> leaf_pref(static_cast<size_t>(nb) + 1, 0);
    for (int j = 0; j < nb; ++j) {
        long long sz = static_cast<int>(blocks[static_cast<size_t>(j)].size()) - 1;
        long long leaves = 0;
        for (int v : blocks[static_cast<size_t>(j)])
            if (j == 0 || v != anchors[static_cast<size_t>(j)])
                leaves += s.leaf_count(v);
        size_pref[static_cast<size_t>(j) + 1] = size_pref[static_cast<size_t>(j)] + sz;
        leaf_pref[static_cast<size_t>(j) + 1] = leaf_pref[static_cast<size_t>(j)] + leaves;
    }
    auto block_size = [&](int j) {
        return static_cast<long long>(blocks[static_cast<size_t>(j)].size()) - 1;
    };

    r.beta_prime = 0;
    for (int h = 0; h < nb; ++h) {
        for (int i = h; i < nb; ++i) {
            long long nverts = 1 + (size_pref[static_cast<size_t>(i) + 1] - size_pref[static_cast<size_t>(h)]) +
                               (leaf_pref[static_cast<size_t>(i) + 1] - leaf_pref[static_cast<size_t>(h)]);
            if (h >= 1)
                nverts += s.leaf_count(anchors[static_cast<size_t>(h)]) + block_size(h - 1);
            if (i < nb - 1)
                nverts += block_size(i + 1);
            int term = ceil_div(static_cast<int>(nverts) - 1, i - h + 3);
            if (term > r.beta_prime) {
                r.beta_prime = term;
                r.witness_h = h;
                r.witness_i = i;
            }
        }
    }
    r.beta = std::max({r.beta1, r.beta2, r.beta_prime});
    return r;
}

}  // namespace blockband

#endif  // BLOCKBAND_DENSITY_HPP
