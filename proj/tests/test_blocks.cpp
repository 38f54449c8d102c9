#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blockband/blocks.hpp"
#include "blockband/density.hpp"
#include "blockband/gadgets.hpp"
#include "support.hpp"

using namespace blockband;

namespace {

const CaterpillarStructure& accept(const RecognitionResult& r) {
    REQUIRE(std::holds_alternative<CaterpillarStructure>(r));
    return std::get<CaterpillarStructure>(r);
}

const Rejection& reject(const RecognitionResult& r) {
    REQUIRE(std::holds_alternative<Rejection>(r));
    return std::get<Rejection>(r);
}

}  // namespace

TEST_CASE("block decomposition: triangle is one block, no cutvertices") {
    auto bd = block_decomposition(testsupport::clique(3));
    CHECK(bd.blocks.size() == 1);
    CHECK(bd.cutvertices.empty());
}

TEST_CASE("block decomposition: P_3 has two edge blocks and a middle cutvertex") {
    auto bd = block_decomposition(testsupport::path(3));
    CHECK(bd.blocks.size() == 2);
    CHECK(bd.cutvertices == std::vector<int>{1});
}

TEST_CASE("block decomposition: H_3 splits into three triangles and a K_4") {
    auto [g, roles] = build_hk(3);
    auto bd = block_decomposition(g);
    REQUIRE(bd.blocks.size() == 4);
    int triangles = 0, quads = 0;
    for (const auto& b : bd.blocks) {
        if (b.size() == 3)
            ++triangles;
        if (b.size() == 4)
            ++quads;
    }
    CHECK(triangles == 3);
    CHECK(quads == 1);
    CHECK(bd.cutvertices == std::vector<int>{roles.at("x"), roles.at("y"), roles.at("z")});
}

TEST_CASE("block decomposition partitions the edge set") {
    std::mt19937 rng(23);
    for (int iter = 0; iter < 40; ++iter) {
        Graph g = testsupport::random_connected(rng, 12, 0.15);
        auto bd = block_decomposition(g);
        long long covered = 0;
        for (const auto& b : bd.blocks) {
            for (size_t i = 0; i < b.size(); ++i)
                for (size_t j = i + 1; j < b.size(); ++j)
                    covered += g.has_edge(b[i], b[j]) ? 1 : 0;
        }
        // Blocks can be non-clique (cycles), so count only edges; every edge
        // lies in exactly one block, so summing per-block edges of g works
        // only for block graphs. Check the weaker partition property instead:
        std::vector<int> edge_block(static_cast<size_t>(g.edge_count()), -1);
        auto edges = g.edges();
        for (size_t bi = 0; bi < bd.blocks.size(); ++bi) {
            for (size_t e = 0; e < edges.size(); ++e) {
                auto [u, v] = edges[e];
                bool u_in = std::binary_search(bd.blocks[bi].begin(), bd.blocks[bi].end(), u);
                bool v_in = std::binary_search(bd.blocks[bi].begin(), bd.blocks[bi].end(), v);
                if (u_in && v_in) {
                    CHECK(edge_block[e] == -1);
                    edge_block[e] = static_cast<int>(bi);
                }
            }
        }
        for (size_t e = 0; e < edges.size(); ++e)
            CHECK(edge_block[e] != -1);
        // Cutvertices are exactly the vertices in >= 2 blocks.
        for (int v : bd.cutvertices)
            CHECK(bd.blocks_of[static_cast<size_t>(v)].size() >= 2);
    }
}

TEST_CASE("is_block_graph: cycles fail, trees pass, H_k passes") {
    CHECK(!is_block_graph(testsupport::cycle(4)));
    CHECK(is_block_graph(testsupport::path(7)));
    CHECK(is_block_graph(testsupport::star(5)));
    CHECK(is_block_graph(build_hk(2).first));
    CHECK(is_block_graph(build_hk(4).first));
}

TEST_CASE("recognition: H_2 is a block caterpillar with a single spine clique") {
    auto [g, roles] = build_hk(2);
    auto rec = recognize_block_caterpillar(g);
    const auto& s = accept(rec);
    REQUIRE(s.k() == 1);
    CHECK(s.spine_cliques[0].size() == 4);  // the K_4 on x, y, z, w
}

TEST_CASE("recognition: H_3 is rejected because the blocks branch") {
    auto [g, roles] = build_hk(3);
    auto rec = recognize_block_caterpillar(g);
    const auto& r = reject(rec);
    CHECK(r.reason == Rejection::Reason::SpineNotPath);
}

TEST_CASE("recognition: star gives k = 0 with the center as v_1") {
    Graph g = testsupport::star(6);
    auto rec = recognize_block_caterpillar(g);
    const auto& s = accept(rec);
    CHECK(s.k() == 0);
    CHECK(s.v1 == 0);
    CHECK(s.leaf_count(0) == 6);
}

TEST_CASE("recognition: rejection reasons are reported") {
    auto r1 = recognize_block_caterpillar(Graph::from_edges(4, {{0, 1}, {2, 3}}));
    CHECK(reject(r1).reason == Rejection::Reason::Disconnected);
    auto r2 = recognize_block_caterpillar(testsupport::cycle(5));
    CHECK(reject(r2).reason == Rejection::Reason::NotBlockGraph);
}

TEST_CASE("recognition accepts implies block graph") {
    std::mt19937 rng(29);
    testsupport::CaterpillarParams prm;
    for (int iter = 0; iter < 100; ++iter) {
        Graph g = testsupport::random_block_caterpillar(rng, prm);
        auto r = recognize_block_caterpillar(g);
        if (std::holds_alternative<CaterpillarStructure>(r))
            CHECK(is_block_graph(g));
    }
}

TEST_CASE("random block caterpillars are accepted with a consistent partition") {
    std::mt19937 rng(31);
    testsupport::CaterpillarParams prm;
    for (int iter = 0; iter < 200; ++iter) {
        Graph g = testsupport::random_block_caterpillar(rng, prm);
        auto rec = recognize_block_caterpillar(g);
        const auto& s = accept(rec);
        // Spine cliques, leaf sets, and (pre-anchoring) nothing else cover V.
        std::vector<int> seen(static_cast<size_t>(g.vertex_count()), 0);
        for (const auto& q : s.spine_cliques)
            for (int v : q)
                ++seen[static_cast<size_t>(v)];
        if (s.k() == 0)
            ++seen[static_cast<size_t>(s.v1)];
        for (int v = 0; v < g.vertex_count(); ++v)
            for (int leaf : s.leaf_sets[static_cast<size_t>(v)])
                ++seen[static_cast<size_t>(leaf)];
        // Interior cutvertices shared by consecutive cliques are double counted.
        int doubles = 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            CHECK(seen[static_cast<size_t>(v)] >= 1);
            CHECK(seen[static_cast<size_t>(v)] <= 2);
            if (seen[static_cast<size_t>(v)] == 2)
                ++doubles;
        }
        CHECK(doubles == std::max(0, s.k() - 1));
        // Consecutive cliques share exactly one vertex, non-consecutive none.
        for (int i = 0; i + 1 < s.k(); ++i) {
            std::vector<int> shared;
            std::set_intersection(s.spine_cliques[static_cast<size_t>(i)].begin(),
                                  s.spine_cliques[static_cast<size_t>(i)].end(),
                                  s.spine_cliques[static_cast<size_t>(i) + 1].begin(),
                                  s.spine_cliques[static_cast<size_t>(i) + 1].end(),
                                  std::back_inserter(shared));
            CHECK(shared == std::vector<int>{s.cut_sequence[static_cast<size_t>(i)]});
        }
    }
}

TEST_CASE("anchoring: H_2 needs no helpers") {
    auto [g, roles] = build_hk(2);
    auto rec = recognize_block_caterpillar(g);
    auto [aug, s] = anchor_and_augment(accept(rec), g);
    CHECK(s.helpers.empty());
    CHECK(aug.vertex_count() == g.vertex_count());
    CHECK(s.anchored);
    CHECK(aug.degree(s.v0) == 1);
    CHECK(aug.degree(s.vk2) == 1);
}

TEST_CASE("anchoring: bare K_4 gains two helper leaves and two anchor leaves") {
    Graph g = testsupport::clique(4);
    auto rec = recognize_block_caterpillar(g);
    auto [aug, s] = anchor_and_augment(accept(rec), g);
    CHECK(s.helpers.size() == 4);
    CHECK(aug.vertex_count() == 8);
    CHECK(s.v1 != s.vk1);
    // Augmentation never changes the local density.
    CHECK(local_density_bruteforce(aug) == local_density_bruteforce(g));
}

TEST_CASE("anchoring: star picks the center and two leaves") {
    Graph g = testsupport::star(3);
    auto rec = recognize_block_caterpillar(g);
    auto [aug, s] = anchor_and_augment(accept(rec), g);
    CHECK(s.v1 == 0);
    CHECK(s.v0 == 1);
    CHECK(s.vk2 == 2);
    CHECK(s.helpers.empty());
    CHECK(s.leaf_count(0) == 1);  // leaf 3 remains
}

TEST_CASE("anchoring: K_1 and K_2 degenerate stars") {
    Graph k1(1);
    auto rk1 = recognize_block_caterpillar(k1);
    auto [aug1, s1] = anchor_and_augment(accept(rk1), k1);
    CHECK(aug1.vertex_count() == 3);
    CHECK(s1.helpers.size() == 2);

    Graph k2 = testsupport::path(2);
    auto rk2 = recognize_block_caterpillar(k2);
    auto [aug2, s2] = anchor_and_augment(accept(rk2), k2);
    CHECK(aug2.vertex_count() == 3);
    CHECK(s2.helpers.size() == 1);
}

TEST_CASE("anchoring invariants on random caterpillars") {
    std::mt19937 rng(37);
    testsupport::CaterpillarParams prm;
    prm.max_vertices = 12;  // helpers can add 4 more; stay under the brute-force cap
    prm.max_spine_blocks = 3;
    for (int iter = 0; iter < 150; ++iter) {
        Graph g = testsupport::random_block_caterpillar(rng, prm);
        auto rec = recognize_block_caterpillar(g);
        const auto& s0 = accept(rec);
        auto [aug, s] = anchor_and_augment(s0, g);
        CHECK(s.helpers.size() <= 4);
        // Augmentation never changes the brute-force local density.
        CHECK(local_density_bruteforce(aug) == local_density_bruteforce(g));
        // The anchor path is chordless of length k+2 = diameter of aug.
        auto a = s.anchor_path();
        CHECK(static_cast<int>(a.size()) == s.k() + 3);
        auto d = distances_from(aug, a.front());
        CHECK(d[static_cast<size_t>(a.back())] == s.k() + 2);
        CHECK(diameter(aug) == s.k() + 2);
        for (size_t i = 0; i + 1 < a.size(); ++i)
            CHECK(aug.has_edge(a[i], a[i + 1]));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = i + 2; j < a.size(); ++j)
                CHECK(!aug.has_edge(a[i], a[j]));
        // Spine cliques, leaf sets, and the two promoted anchors cover V(aug)
        // exactly once each.
        std::vector<int> seen(static_cast<size_t>(aug.vertex_count()), 0);
        for (const auto& q : s.spine_cliques)
            for (int v : q)
                ++seen[static_cast<size_t>(v)];
        if (s.k() == 0)
            ++seen[static_cast<size_t>(s.v1)];
        for (int v = 0; v < aug.vertex_count(); ++v)
            for (int leaf : s.leaf_sets[static_cast<size_t>(v)])
                ++seen[static_cast<size_t>(leaf)];
        ++seen[static_cast<size_t>(s.v0)];
        ++seen[static_cast<size_t>(s.vk2)];
        int doubles = 0;
        for (int v = 0; v < aug.vertex_count(); ++v) {
            CHECK(seen[static_cast<size_t>(v)] >= 1);
            if (seen[static_cast<size_t>(v)] == 2)
                ++doubles;
        }
        CHECK(doubles == std::max(0, s.k() - 1));
    }
}
