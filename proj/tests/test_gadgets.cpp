#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blockband/density.hpp"
#include "blockband/gadgets.hpp"
#include "blockband/layout.hpp"
#include "blockband/search.hpp"
#include "support.hpp"

using namespace blockband;

TEST_CASE("H_k: size, diameter, blocks, density") {
    for (int k : {2, 3, 4, 5}) {
        auto [g, roles] = build_hk(k);
        CHECK(g.vertex_count() == 3 * k + 1);
        CHECK(diameter(g) == 3);
        CHECK(is_block_graph(g));
        CHECK(g.degree(roles.at("w")) == 3);
        // Every vertex within distance 2 of w.
        for (int d : distances_from(g, roles.at("w")))
            CHECK(d <= 2);
    }
    CHECK(local_density_bruteforce(build_hk(3).first) == 3);
    CHECK(local_density_bruteforce(build_hk(4).first, 13) == 4);
}

TEST_CASE("H_k minus w drops back to bandwidth k") {
    for (int k : {2, 3}) {
        auto [g, roles] = build_hk(k);
        auto [h, kept] = delete_vertices(g, {roles.at("w")});
        auto ex = exact_bandwidth(h);
        CHECK(ex.layout->realized_bandwidth == k);
    }
}

TEST_CASE("T_k: size, diameter, tree shape") {
    for (int k : {2, 3, 4}) {
        auto [g, roles] = build_tk(k);
        CHECK(g.vertex_count() == 4 * k + 1);
        CHECK(g.edge_count() == g.vertex_count() - 1);
        CHECK(diameter(g) == 4);
        CHECK(g.degree(roles.at("w")) == k + 3);
        CHECK(static_cast<int>(roles.group("W").size()) == k);
        CHECK(static_cast<int>(roles.group("X").size()) == k - 1);
    }
}

TEST_CASE("reflector R_p: size, center degree, clique") {
    for (int p : {4, 5, 8}) {
        auto [g, roles] = build_reflector(p);
        CHECK(g.vertex_count() == 5 * p + 1);
        CHECK(g.degree(roles.at("w")) == 2 * p);
        // c_0 and the added clique vertices pairwise adjacent, all seeing w.
        std::vector<int> cs = {roles.at("c0")};
        for (int i = 1; i <= p - 2; ++i)
            cs.push_back(roles.at("c" + std::to_string(i)));
        for (size_t a = 0; a < cs.size(); ++a)
            for (size_t b = a + 1; b < cs.size(); ++b)
                CHECK(g.has_edge(cs[a], cs[b]));
    }
    CHECK_THROWS_AS(build_reflector(3), validation_error);
}

TEST_CASE("reflector numbering realizes bandwidth p exactly") {
    for (int p : {4, 6, 8}) {
        auto [g, roles] = build_reflector(p);
        Layout f = reflector_numbering(p, roles);
        CHECK(verify_layout(g, f) == p);
        CHECK(f.position[static_cast<size_t>(roles.at("z"))] == 0);
        CHECK(f.position[static_cast<size_t>(roles.at("a"))] == 1);
        Layout anchored = reflector_numbering_anchored(p, roles);
        CHECK(verify_layout(g, anchored) == p);
        CHECK(anchored.position[static_cast<size_t>(roles.at("a"))] == 0);
        CHECK(anchored.position[static_cast<size_t>(roles.at("z"))] == 1);
    }
}

TEST_CASE("deleting the peripheral vertices of R_p leaves the diameter-4 core") {
    for (int p : {4, 5, 6}) {
        auto [g, roles] = build_reflector(p);
        auto peripherals = peripheral_vertices(g);
        CHECK(static_cast<int>(peripherals.size()) == p);  // a, z, a_1..a_{p-2}
        auto [core, kept] = delete_vertices(g, peripherals);
        CHECK(core.vertex_count() == 4 * p + 1);
        CHECK(diameter(core) == 4);
        // That certifies density >= p, and the numbering gives <= p.
        CHECK(ceil_div(core.vertex_count() - 1, diameter(core)) == p);
    }
}

TEST_CASE("near-reflector R_b': sizes and the defining set split") {
    auto [g, roles] = build_near_reflector(4);
    CHECK(g.vertex_count() == 17);
    CHECK(roles.group("X").size() == 2);
    CHECK(roles.group("Z").size() == 2);
    CHECK(roles.group("Y").size() == 4);
    CHECK(roles.group("W").size() == 5);
    CHECK(local_density_bruteforce(g, 17) == 4);
    CHECK_THROWS_AS(build_near_reflector(5), validation_error);
    CHECK_THROWS_AS(build_near_reflector(2), validation_error);

    auto [g6, roles6] = build_near_reflector(6);
    CHECK(g6.vertex_count() == 25);
    CHECK(roles6.group("W").size() == 9);
}

TEST_CASE("near-reflector numbering achieves b with the standard anchor slots") {
    for (int b : {4, 6, 10}) {
        auto [g, roles] = build_near_reflector(b);
        Layout f = near_reflector_numbering(b, roles);
        CHECK(verify_layout(g, f) == b);
        CHECK(f.position[static_cast<size_t>(roles.at("x"))] == b);
        CHECK(f.position[static_cast<size_t>(roles.at("z"))] == b + 1);
        CHECK(f.position[static_cast<size_t>(roles.at("w"))] == 2 * b);
        CHECK(f.position[static_cast<size_t>(roles.at("y"))] == 3 * b);
    }
}

TEST_CASE("check_end_anchoring") {
    auto [g, roles] = build_reflector(4);
    Layout f = reflector_numbering(4, roles);
    std::vector<int> az = {roles.at("a"), roles.at("z")};
    CHECK(check_end_anchoring(f, az, 4, 16));
    Layout mirror = f;
    for (auto& p : mirror.position)
        p = 20 - p;
    CHECK(check_end_anchoring(mirror, az, 4, 16));
    Layout split = f;
    std::swap(split.position[static_cast<size_t>(roles.at("a"))],
              split.position[static_cast<size_t>(roles.at("w"))]);
    CHECK(!check_end_anchoring(split, az, 4, 16));
}

TEST_CASE("every optimal numbering of R_4 sampled under budget pins a and z") {
    auto [g, roles] = build_reflector(4);
    std::vector<int> az = {roles.at("a"), roles.at("z")};
    SearchBudget budget;
    budget.max_nodes = 3'000'000;
    budget.max_solutions = 20'000;
    long long bad = 0;
    auto res = enumerate_optimal(g, 4, budget, [&](const Layout& f) {
        if (!check_end_anchoring(f, az, 4, 16))
            ++bad;
    });
    CHECK(res.count > 0);
    CHECK(bad == 0);
}

TEST_CASE("R_6' optimal numberings sampled under budget anchor X and Z") {
    auto [g, roles] = build_near_reflector(6);
    std::vector<int> xz = roles.group("X");
    for (int v : roles.group("Z"))
        xz.push_back(v);
    // The id-ordered search reaches the first optimal layout of R_6' after
    // roughly 2e8 nodes; the budget leaves headroom.
    SearchBudget budget;
    budget.max_vertices = 25;
    budget.max_nodes = 400'000'000;
    budget.max_solutions = 5'000;
    long long bad = 0;
    auto res = enumerate_optimal(g, 6, budget, [&](const Layout& f) {
        if (!check_end_anchoring(f, xz, 6, 18))
            ++bad;
    });
    CHECK(res.count > 0);
    CHECK(bad == 0);
}

TEST_CASE("build_bug: the two worked instances") {
    // Sizes all follow from b = p+1+2n with p the smallest integer > 2n(D+4).
    SchedulingInstance one{1, 1, {1}};
    BugArtifacts bug1 = build_bug(one);
    CHECK(bug1.p == 11);
    CHECK(bug1.b == 14);
    CHECK(bug1.lambda == 3);
    CHECK(bug1.d_prime == 2);
    CHECK(bug1.graph.vertex_count() == 113);
    CHECK(bug1.graph.degree(bug1.c_spine[1]) == 2 * bug1.b);

    SchedulingInstance two{2, 2, {2, 1, 1}};
    BugArtifacts bug2 = build_bug(two);
    CHECK(bug2.p == 37);
    CHECK(bug2.b == 44);
    CHECK(bug2.graph.vertex_count() == 573);
    CHECK(bug2.z_bounds == std::vector<long long>{44, 220, 396});
}

TEST_CASE("schedule_to_numbering fills every position at bandwidth exactly b") {
    SchedulingInstance one{1, 1, {1}};
    BugArtifacts bug = build_bug(one);
    Schedule sched{{{0}}};
    Layout f = schedule_to_numbering(bug, sched);
    CHECK(verify_layout(bug.graph, f) == 14);
    std::vector<bool> used(static_cast<size_t>(bug.total_positions()) + 1, false);
    for (int p : f.position) {
        CHECK(!used[static_cast<size_t>(p)]);
        used[static_cast<size_t>(p)] = true;
    }
    CHECK(std::find(used.begin(), used.end(), false) == used.end());

    SchedulingInstance two{2, 2, {2, 1, 1}};
    BugArtifacts bug2 = build_bug(two);
    Schedule sched2{{{0}, {1, 2}}};
    Layout f2 = schedule_to_numbering(bug2, sched2);
    CHECK(verify_layout(bug2.graph, f2) == 44);
}

TEST_CASE("schedule_to_numbering refuses unpadded schedules") {
    SchedulingInstance slack{2, 3, {2, 1, 1}};  // loads 2 and 2, below D = 3
    BugArtifacts bug = build_bug(slack);
    Schedule sched{{{0}, {1, 2}}};
    CHECK_THROWS_AS(schedule_to_numbering(bug, sched), validation_error);
}

TEST_CASE("numbering_to_schedule round-trips the worked instance") {
    SchedulingInstance two{2, 2, {2, 1, 1}};
    BugArtifacts bug = build_bug(two);
    Schedule sched{{{0}, {1, 2}}};
    Layout f = schedule_to_numbering(bug, sched);
    auto back = numbering_to_schedule(bug, f);
    REQUIRE(std::holds_alternative<Schedule>(back));
    const Schedule& s = std::get<Schedule>(back);
    CHECK(s.valid_for(bug.instance));
    CHECK(s.loads(bug.instance) == std::vector<long long>{2, 2});

    // The mirrored numbering extracts the same schedule.
    Layout mirror = f;
    for (auto& p : mirror.position)
        p = static_cast<int>(bug.total_positions()) - p;
    auto back2 = numbering_to_schedule(bug, mirror);
    REQUIRE(std::holds_alternative<Schedule>(back2));
    CHECK(std::get<Schedule>(back2).machine_tasks == s.machine_tasks);
}

TEST_CASE("numbering_to_schedule rejects layouts that do not realize b") {
    SchedulingInstance one{1, 1, {1}};
    BugArtifacts bug = build_bug(one);
    Schedule sched{{{0}}};
    Layout f = schedule_to_numbering(bug, sched);
    std::swap(f.position[0], f.position[static_cast<size_t>(bug.reflector_roles.at("w"))]);
    auto r = numbering_to_schedule(bug, f);
    REQUIRE(std::holds_alternative<std::string>(r));
    CHECK(std::get<std::string>(r).find("bandwidth") != std::string::npos);
}

TEST_CASE("padding plus restriction certifies the original bug") {
    SchedulingInstance slack{2, 3, {2, 1, 1}};  // loads 2, 2 under D = 3
    BugArtifacts orig = build_bug(slack);
    Schedule sched{{{0}, {1, 2}}};
    SchedulingInstance padded_inst = pad_instance(slack, sched);
    CHECK(padded_inst.times == std::vector<int>{3, 1, 2});
    BugArtifacts padded = build_bug(padded_inst);
    CHECK(padded.b == orig.b);
    CHECK(padded.graph.vertex_count() ==
          static_cast<long long>(padded.lambda + 5) * padded.b + 1);

    Layout fp = schedule_to_numbering(padded, sched);
    CHECK(verify_layout(padded.graph, fp) == padded.b);

    Layout restricted = restrict_bug_layout(padded, fp, orig);
    CHECK(verify_layout(orig.graph, restricted) == orig.b);
    // Condensing never increases the bound; the reflector keeps it at b.
    CHECK(verify_layout(orig.graph, condense(restricted)) == orig.b);

    auto back = numbering_to_schedule(orig, restricted);
    REQUIRE(std::holds_alternative<Schedule>(back));
    CHECK(std::get<Schedule>(back).loads(orig.instance) == std::vector<long long>{2, 2});
}

TEST_CASE("bug lower bound: the reflector subgraph forces b") {
    // Density of the reflector inside the bug: deleting its peripheral
    // vertices leaves 4b+1 vertices of diameter 4, so beta(G) >= b; the
    // constructed numbering matches it exactly.
    SchedulingInstance one{1, 1, {1}};
    BugArtifacts bug = build_bug(one);
    auto [refl, roles] = build_reflector(bug.b);
    auto peripherals = peripheral_vertices(refl);
    auto [core, kept] = delete_vertices(refl, peripherals);
    CHECK(ceil_div(core.vertex_count() - 1, diameter(core)) == bug.b);
}

TEST_CASE("role maps serialize one binding per line") {
    auto [g, roles] = build_tk(2);
    std::string text = roles.serialize();
    CHECK(text.find("w 3") != std::string::npos);
    CHECK(roles.group("X") == std::vector<int>{4});
    CHECK_THROWS_AS(roles.at("nope"), validation_error);
}

TEST_CASE("exact bandwidth of R_4' is its density 4") {
    auto [g, roles] = build_near_reflector(4);
    auto ex = exact_bandwidth(g);
    CHECK(ex.layout->realized_bandwidth == 4);
}
