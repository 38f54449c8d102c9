// Named graph families and the scheduling reduction.
//
// H_k: three disjoint k-cliques X, Y, Z plus a K_4 on {x, y, z, w}; a block
// graph of diameter 3 whose bandwidth exceeds its local density for k >= 3.
// T_k: the diameter-4 tree with leaf sets X, Y, Z (k-1 each) and W (k).
// R_p: the reflector of thickness p, a bug with 5p+1 vertices whose every
// optimal numbering pins the peripheral vertices a and z to one end.
// R_b': the near-caterpillar reflector, T_b with leaves redistributed to
// sizes b/2, b, b/2, 2b-3.
// build_bug: the Multiprocessor-Scheduling reduction; a schedule with every
// machine load exactly D converts to a numbering of bandwidth exactly b, and
// a numbering of bandwidth b converts back to a valid schedule.

#ifndef BLOCKBAND_GADGETS_HPP
#define BLOCKBAND_GADGETS_HPP

#include <cctype>
#include <map>
#include <variant>

#include "blockband/graph.hpp"

namespace blockband {

// Injective role-name -> vertex bindings. Set members carry indexed names
// ("X1", "X2", ...); distinguished vertices carry bare lowercase names.
struct RoleMap {
    std::map<std::string, int> roles;

    int at(const std::string& name) const {
        auto it = roles.find(name);
        if (it == roles.end())
            throw validation_error("role " + name + " is not bound");
        return it->second;
    }

    void bind(const std::string& name, int v) {
        if (!roles.emplace(name, v).second)
            throw validation_error("role " + name + " bound twice");
    }

    // All vertices whose role is `prefix` followed by digits ("X" -> X1, X2...).
    std::vector<int> group(const std::string& prefix) const {
        std::vector<int> out;
        for (const auto& [name, v] : roles) {
            if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0)
                continue;
            bool digits = true;
            for (size_t i = prefix.size(); i < name.size(); ++i)
                digits = digits && std::isdigit(static_cast<unsigned char>(name[i]));
            if (digits)
                out.push_back(v);
        }
        return out;
    }

    std::string serialize() const {
        std::ostringstream out;
        for (const auto& [name, v] : roles)
            out << name << " " << v << "\n";
        return out.str();
    }
};

// ---------------------------------------------------------------------------
// Counterexample families.
// ---------------------------------------------------------------------------

// Ids: X = 0..k-1 with x = 0, Y = k..2k-1 with y = k, Z = 2k..3k-1 with
// z = 2k, w = 3k.
inline std::pair<Graph, RoleMap> build_hk(int k) {
    if (k < 2)
        throw validation_error("H_k requires k >= 2");
    std::vector<std::pair<int, int>> edges;
    auto clique = [&](int base) {
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                edges.emplace_back(base + i, base + j);
    };
    clique(0);
    clique(k);
    clique(2 * k);
    int x = 0, y = k, z = 2 * k, w = 3 * k;
    for (int a : {x, y, z})
        edges.emplace_back(a, w);
    edges.emplace_back(x, y);
    edges.emplace_back(x, z);
    edges.emplace_back(y, z);
    Graph g = Graph::from_edges(3 * k + 1, edges);
    if (g.vertex_count() != 3 * k + 1)
        throw std::logic_error("H_k size mismatch");
    RoleMap roles;
    roles.bind("x", x);
    roles.bind("y", y);
    roles.bind("z", z);
    roles.bind("w", w);
    for (int i = 2; i <= k; ++i) {
        roles.bind("X" + std::to_string(i), i - 1);
        roles.bind("Y" + std::to_string(i), k + i - 1);
        roles.bind("Z" + std::to_string(i), 2 * k + i - 1);
    }
    return {std::move(g), std::move(roles)};
}

// Ids: x = 0, y = 1, z = 2, w = 3, then X (k-1), Y (k-1), Z (k-1), W (k).
inline std::pair<Graph, RoleMap> build_tk(int k) {
    if (k < 2)
        throw validation_error("T_k requires k >= 2");
    std::vector<std::pair<int, int>> edges;
    int x = 0, y = 1, z = 2, w = 3;
    for (int a : {x, y, z})
        edges.emplace_back(a, w);
    RoleMap roles;
    roles.bind("x", x);
    roles.bind("y", y);
    roles.bind("z", z);
    roles.bind("w", w);
    int next = 4;
    auto leaves = [&](const char* set, int parent, int count) {
        for (int i = 1; i <= count; ++i) {
            roles.bind(set + std::to_string(i), next);
            edges.emplace_back(parent, next++);
        }
    };
    leaves("X", x, k - 1);
    leaves("Y", y, k - 1);
    leaves("Z", z, k - 1);
    leaves("W", w, k);
    Graph g = Graph::from_edges(next, edges);
    if (g.vertex_count() != 4 * k + 1)
        throw std::logic_error("T_k size mismatch");
    return {std::move(g), std::move(roles)};
}

// ---------------------------------------------------------------------------
// Reflectors.
// ---------------------------------------------------------------------------

// R_p ids: a=0, b=1, c0=2, w=3, x=4, y=5, z=6, then a_1..a_{p-2},
// y_1..y_{p-2}, c_1..c_{p-2}, w_1..w_p, w'_1..w'_p.
inline std::pair<Graph, RoleMap> build_reflector(int p) {
    if (p < 4)
        throw validation_error("R_p requires p >= 4");
    RoleMap roles;
    int a = 0, b = 1, c0 = 2, w = 3, x = 4, y = 5, z = 6;
    roles.bind("a", a);
    roles.bind("b", b);
    roles.bind("c0", c0);
    roles.bind("w", w);
    roles.bind("x", x);
    roles.bind("y", y);
    roles.bind("z", z);
    std::vector<std::pair<int, int>> edges = {{a, b}, {b, c0}, {c0, w}, {w, x}, {x, y}, {y, z}};
    int next = 7;
    std::vector<int> cs = {c0};
    for (int i = 1; i <= p - 2; ++i) {
        roles.bind("a" + std::to_string(i), next);
        edges.emplace_back(b, next++);
    }
    for (int i = 1; i <= p - 2; ++i) {
        roles.bind("y" + std::to_string(i), next);
        edges.emplace_back(x, next++);
    }
    for (int i = 1; i <= p - 2; ++i) {
        roles.bind("c" + std::to_string(i), next);
        edges.emplace_back(w, next);  // clique vertices see both ends of c0-w
        cs.push_back(next++);
    }
    for (size_t i = 0; i < cs.size(); ++i)
        for (size_t j = i + 1; j < cs.size(); ++j)
            edges.emplace_back(cs[i], cs[j]);
    for (int i = 1; i <= p; ++i) {
        roles.bind("w" + std::to_string(i), next);
        edges.emplace_back(w, next++);
        roles.bind("w'" + std::to_string(i), next);
        edges.emplace_back(next - 1, next);
        ++next;
    }
    Graph g = Graph::from_edges(next, edges);
    if (g.vertex_count() != 5 * p + 1 || g.degree(w) != 2 * p)
        throw std::logic_error("R_p size or degree mismatch");
    return {std::move(g), std::move(roles)};
}

// Optimal numbering: z, a, a_1..a_{p-2}, y, b, y_1..y_{p-2},
// x, c_0, c_1..c_{p-2}, w, w_1..w_p, w'_1..w'_p at 0..5p. Bandwidth exactly p.
inline Layout reflector_numbering(int p, const RoleMap& roles) {
    Layout f;
    f.position.assign(static_cast<size_t>(5 * p + 1), -1);
    auto set = [&](const std::string& name, int pos) {
        f.position[static_cast<size_t>(roles.at(name))] = pos;
    };
    set("z", 0);
    set("a", 1);
    for (int i = 1; i <= p - 2; ++i)
        set("a" + std::to_string(i), 1 + i);
    set("y", p);
    set("b", p + 1);
    for (int i = 1; i <= p - 2; ++i)
        set("y" + std::to_string(i), p + 1 + i);
    set("x", 2 * p);
    set("c0", 2 * p + 1);
    for (int i = 1; i <= p - 2; ++i)
        set("c" + std::to_string(i), 2 * p + 1 + i);
    set("w", 3 * p);
    for (int i = 1; i <= p; ++i) {
        set("w" + std::to_string(i), 3 * p + i);
        set("w'" + std::to_string(i), 4 * p + i);
    }
    f.realized_bandwidth = p;
    return f;
}

// Variant with a at relative 0 and z at relative 1, used when the reflector
// caps a larger construction and a must touch the structure below it.
// Order: a, z, a_1.., b, y, y_1.., c_0, x, c_1.., w, w_1.., w'_1...
inline Layout reflector_numbering_anchored(int p, const RoleMap& roles) {
    Layout f;
    f.position.assign(static_cast<size_t>(5 * p + 1), -1);
    auto set = [&](const std::string& name, int pos) {
        f.position[static_cast<size_t>(roles.at(name))] = pos;
    };
    set("a", 0);
    set("z", 1);
    for (int i = 1; i <= p - 2; ++i)
        set("a" + std::to_string(i), 1 + i);
    set("b", p);
    set("y", p + 1);
    for (int i = 1; i <= p - 2; ++i)
        set("y" + std::to_string(i), p + 1 + i);
    set("c0", 2 * p);
    set("x", 2 * p + 1);
    for (int i = 1; i <= p - 2; ++i)
        set("c" + std::to_string(i), 2 * p + 1 + i);
    set("w", 3 * p);
    for (int i = 1; i <= p; ++i) {
        set("w" + std::to_string(i), 3 * p + i);
        set("w'" + std::to_string(i), 4 * p + i);
    }
    f.realized_bandwidth = p;
    return f;
}

// Vertices of maximum eccentricity.
inline std::vector<int> peripheral_vertices(const Graph& g) {
    std::vector<int> ecc(static_cast<size_t>(g.vertex_count()), 0);
    int diam = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        ecc[static_cast<size_t>(v)] = eccentricity(g, v);
        diam = std::max(diam, ecc[static_cast<size_t>(v)]);
    }
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (ecc[static_cast<size_t>(v)] == diam)
            out.push_back(v);
    return out;
}

// Induced subgraph after deleting `removed`; kept vertices are renumbered in
// id order. Returns the subgraph and the kept-vertex list.
inline std::pair<Graph, std::vector<int>> delete_vertices(const Graph& g,
                                                          const std::vector<int>& removed) {
    std::vector<bool> gone(static_cast<size_t>(g.vertex_count()), false);
    for (int v : removed)
        gone[static_cast<size_t>(v)] = true;
    std::vector<int> kept, to_sub(static_cast<size_t>(g.vertex_count()), -1);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!gone[static_cast<size_t>(v)]) {
            to_sub[static_cast<size_t>(v)] = static_cast<int>(kept.size());
            kept.push_back(v);
        }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (!gone[static_cast<size_t>(u)] && !gone[static_cast<size_t>(v)])
            edges.emplace_back(to_sub[static_cast<size_t>(u)], to_sub[static_cast<size_t>(v)]);
    return {Graph::from_edges(static_cast<int>(kept.size()), edges), kept};
}

// R_b' ids: x=0, z=1, w=2, y=3, then X (b/2), Z (b/2), W (2b-3), Y (b).
inline std::pair<Graph, RoleMap> build_near_reflector(int b) {
    if (b < 4 || b % 2 != 0)
        throw validation_error("R_b' requires even b >= 4");
    RoleMap roles;
    int x = 0, z = 1, w = 2, y = 3;
    roles.bind("x", x);
    roles.bind("z", z);
    roles.bind("w", w);
    roles.bind("y", y);
    std::vector<std::pair<int, int>> edges = {{w, x}, {w, y}, {w, z}};
    int next = 4;
    auto leaves = [&](const char* set, int parent, int count) {
        for (int i = 1; i <= count; ++i) {
            roles.bind(set + std::to_string(i), next);
            edges.emplace_back(parent, next++);
        }
    };
    leaves("X", x, b / 2);
    leaves("Z", z, b / 2);
    leaves("W", w, 2 * b - 3);
    leaves("Y", y, b);
    Graph g = Graph::from_edges(next, edges);
    if (g.vertex_count() != 4 * b + 1)
        throw std::logic_error("R_b' size mismatch");
    return {std::move(g), std::move(roles)};
}

// Bandwidth-b numbering of R_b': X and Z fill 0..b-1, then x, z at b, b+1,
// W straddles w at 2b, Y follows y at 3b.
inline Layout near_reflector_numbering(int b, const RoleMap& roles) {
    Layout f;
    f.position.assign(static_cast<size_t>(4 * b + 1), -1);
    auto set = [&](const std::string& name, int pos) {
        f.position[static_cast<size_t>(roles.at(name))] = pos;
    };
    for (int i = 1; i <= b / 2; ++i) {
        set("X" + std::to_string(i), i - 1);
        set("Z" + std::to_string(i), b / 2 + i - 1);
    }
    set("x", b);
    set("z", b + 1);
    for (int i = 1; i <= 2 * b - 3; ++i)
        set("W" + std::to_string(i), i <= b - 2 ? b + 1 + i : 2 * b + (i - (b - 2)));
    set("w", 2 * b);
    set("y", 3 * b);
    for (int i = 1; i <= b; ++i)
        set("Y" + std::to_string(i), 3 * b + i);
    f.realized_bandwidth = b;
    return f;
}

// True iff all role positions are below `low` or all are above `high`.
inline bool check_end_anchoring(const Layout& f, const std::vector<int>& role_vertices, int low,
                                int high) {
    bool all_low = true, all_high = true;
    for (int v : role_vertices) {
        all_low = all_low && f.position[static_cast<size_t>(v)] < low;
        all_high = all_high && f.position[static_cast<size_t>(v)] > high;
    }
    return all_low || all_high;
}

// ---------------------------------------------------------------------------
// Multiprocessor Scheduling reduction.
// ---------------------------------------------------------------------------

struct SchedulingInstance {
    int machines = 1;
    int deadline = 1;
    std::vector<int> times;  // t_1..t_n, positive

    void validate() const {
        if (machines < 1 || deadline < 1 || times.empty())
            throw validation_error("scheduling instance needs machines, deadline, tasks >= 1");
        for (int t : times)
            if (t < 1)
                throw validation_error("task times must be positive");
    }
};

struct Schedule {
    std::vector<std::vector<int>> machine_tasks;  // 0-based task indices per machine

    bool valid_for(const SchedulingInstance& inst) const {
        if (static_cast<int>(machine_tasks.size()) != inst.machines)
            return false;
        std::vector<bool> seen(inst.times.size(), false);
        for (const auto& group : machine_tasks) {
            long long load = 0;
            for (int t : group) {
                if (t < 0 || t >= static_cast<int>(inst.times.size()) ||
                    seen[static_cast<size_t>(t)])
                    return false;
                seen[static_cast<size_t>(t)] = true;
                load += inst.times[static_cast<size_t>(t)];
            }
            if (load > inst.deadline)
                return false;
        }
        return std::find(seen.begin(), seen.end(), false) == seen.end();
    }

    std::vector<long long> loads(const SchedulingInstance& inst) const {
        std::vector<long long> out;
        for (const auto& group : machine_tasks) {
            long long load = 0;
            for (int t : group)
                load += inst.times[static_cast<size_t>(t)];
            out.push_back(load);
        }
        return out;
    }
};

// Raises the last task of each under-loaded machine so every load equals D.
// Leaves b, p and the caterpillar C unchanged.
inline SchedulingInstance pad_instance(const SchedulingInstance& inst, const Schedule& sched) {
    inst.validate();
    if (!sched.valid_for(inst))
        throw validation_error("schedule is not valid for the instance");
    SchedulingInstance padded = inst;
    auto loads = sched.loads(inst);
    for (int j = 0; j < inst.machines; ++j) {
        if (sched.machine_tasks[static_cast<size_t>(j)].empty()) {
            if (loads[static_cast<size_t>(j)] != inst.deadline)
                throw validation_error("cannot pad a machine with no tasks");
            continue;
        }
        int last = sched.machine_tasks[static_cast<size_t>(j)].back();
        padded.times[static_cast<size_t>(last)] +=
            static_cast<int>(inst.deadline - loads[static_cast<size_t>(j)]);
    }
    return padded;
}

// The reduction target. Vertex ids: spine of C in order (index 1 is the
// heavy vertex x), then the leaves of C grouped by spine vertex, then C'
// segment by segment (each task vertex followed by its p-1 leaves, then the
// D' plain vertices), then the reflector R_b.
struct BugArtifacts {
    Graph graph;
    SchedulingInstance instance;
    int p = 0;
    int b = 0;
    int d_prime = 0;
    int lambda = 0;
    std::vector<int> c_spine;
    std::vector<std::vector<int>> c_leaves;               // per spine index
    std::vector<std::vector<int>> segment_tasks;          // task-spine ids per segment
    std::vector<std::vector<std::vector<int>>> task_leaves;  // per segment, per task vertex
    std::vector<std::vector<int>> segment_plains;         // plain-spine ids per segment
    RoleMap reflector_roles;                              // bug-local ids
    std::vector<long long> z_bounds;                      // z_j = (1+j(D+2))b, j = 0..m

    int n_tasks() const { return static_cast<int>(instance.times.size()); }
    long long total_positions() const {
        return static_cast<long long>(lambda + 5) * b;  // top position; count is +1
    }
};

inline BugArtifacts build_bug(const SchedulingInstance& inst) {
    inst.validate();
    const int m = inst.machines, dl = inst.deadline;
    const int n = static_cast<int>(inst.times.size());
    BugArtifacts bug;
    bug.instance = inst;
    bug.p = 2 * n * (dl + 4) + 1;  // smallest integer > 2n(D+4)
    bug.b = bug.p + 1 + 2 * n;
    bug.d_prime = 2 * m * (dl + 2) - 4;
    bug.lambda = m * (dl + 2);

    std::vector<std::pair<int, int>> edges;
    int next = 0;

    for (int i = 0; i < bug.lambda; ++i) {
        bug.c_spine.push_back(next++);
        if (i > 0)
            edges.emplace_back(bug.c_spine[static_cast<size_t>(i) - 1],
                               bug.c_spine[static_cast<size_t>(i)]);
    }
    bug.c_leaves.assign(static_cast<size_t>(bug.lambda), {});
    auto grow_leaves = [&](int spine_idx, int count) {
        for (int i = 0; i < count; ++i) {
            edges.emplace_back(bug.c_spine[static_cast<size_t>(spine_idx)], next);
            bug.c_leaves[static_cast<size_t>(spine_idx)].push_back(next++);
        }
    };
    grow_leaves(1, 2 * bug.p + 4 * n);
    for (int j = 1; j < m; ++j)
        grow_leaves(1 + j * (dl + 2), 2 * bug.p);

    int c_size = next;
    if (c_size != m * (dl + 2 + 2 * bug.p) + 4 * n)
        throw std::logic_error("caterpillar C size mismatch");

    // C': per segment, t_i task vertices (p-1 leaves each) then D' plains.
    int prev_spine = -1;
    long long total_time = 0;
    for (int i = 0; i < n; ++i) {
        total_time += inst.times[static_cast<size_t>(i)];
        bug.segment_tasks.emplace_back();
        bug.task_leaves.emplace_back();
        bug.segment_plains.emplace_back();
        for (int j = 0; j < inst.times[static_cast<size_t>(i)]; ++j) {
            int tv = next++;
            if (prev_spine != -1)
                edges.emplace_back(prev_spine, tv);
            prev_spine = tv;
            bug.segment_tasks.back().push_back(tv);
            bug.task_leaves.back().emplace_back();
            for (int l = 0; l < bug.p - 1; ++l) {
                edges.emplace_back(tv, next);
                bug.task_leaves.back().back().push_back(next++);
            }
        }
        for (int j = 0; j < bug.d_prime; ++j) {
            int pv = next++;
            edges.emplace_back(prev_spine, pv);
            prev_spine = pv;
            bug.segment_plains.back().push_back(pv);
        }
    }
    if (next - c_size != bug.p * total_time + static_cast<long long>(n) * bug.d_prime)
        throw std::logic_error("caterpillar C' size mismatch");

    auto [refl, refl_roles] = build_reflector(bug.b);
    int r0 = next;
    for (auto [u, v] : refl.edges())
        edges.emplace_back(r0 + u, r0 + v);
    next += refl.vertex_count();
    for (const auto& [name, v] : refl_roles.roles)
        bug.reflector_roles.bind(name, r0 + v);

    edges.emplace_back(bug.reflector_roles.at("a"), bug.c_spine.back());
    edges.emplace_back(bug.reflector_roles.at("z"), prev_spine);

    bug.graph = Graph::from_edges(next, edges);
    if (bug.graph.degree(bug.c_spine[1]) != 2 * bug.b)
        throw std::logic_error("heavy spine vertex degree is not 2b");
    if (total_time == static_cast<long long>(m) * dl &&
        bug.graph.vertex_count() != static_cast<long long>(bug.lambda + 5) * bug.b + 1)
        throw std::logic_error("bug size formula violated");
    for (int j = 0; j <= m; ++j)
        bug.z_bounds.push_back(static_cast<long long>(1 + j * (dl + 2)) * bug.b);
    return bug;
}

namespace detail {

// Track positions for the k-th connector path (1-based): L hooks one slot
// below U in every interval i in [2, lambda-1].
inline int track_l(const BugArtifacts& bug, int i, int k) { return i * bug.b + bug.p + 2 * k - 1; }
inline int track_u(const BugArtifacts& bug, int i, int k) { return i * bug.b + bug.p + 2 * k; }

// Tour of all 2(lambda-2) track slots for path k, starting at the endpoint
// whose spine neighbor lives in the higher interval jp and ending next to
// the lower one at j. Every hop is at most b.
inline std::vector<int> connector_tour(const BugArtifacts& bug, int j, int jp, int k) {
    std::vector<int> tour;
    int last = bug.lambda - 1;
    if (j == jp) {
        // Only for the topmost path: sweep U down, then L up.
        for (int i = last; i >= 2; --i)
            tour.push_back(track_u(bug, i, k));
        for (int i = 2; i <= last; ++i)
            tour.push_back(track_l(bug, i, k));
        std::reverse(tour.begin(), tour.end());  // start at L_last (the z side)
        return tour;
    }
    for (int i = jp; i <= last; ++i)
        tour.push_back(track_l(bug, i, k));
    for (int i = last; i >= jp; --i)
        tour.push_back(track_u(bug, i, k));
    bool u_first = true;
    for (int i = jp - 1; i >= j + 1; --i) {
        if (u_first) {
            tour.push_back(track_u(bug, i, k));
            tour.push_back(track_l(bug, i, k));
        } else {
            tour.push_back(track_l(bug, i, k));
            tour.push_back(track_u(bug, i, k));
        }
        u_first = !u_first;
    }
    for (int i = j; i >= 2; --i)
        tour.push_back(track_u(bug, i, k));
    for (int i = 2; i <= j; ++i)
        tour.push_back(track_l(bug, i, k));
    return tour;
}

// Lays out the bug for a schedule whose machine loads are at most D; task
// intervals beyond a machine's load stay empty. With every load exactly D
// the numbering fills every position 0..(lambda+5)b.
inline Layout bug_numbering(const BugArtifacts& bug, const Schedule& sched) {
    const int b = bug.b, dl = bug.instance.deadline;
    Layout f;
    f.position.assign(static_cast<size_t>(bug.graph.vertex_count()), -1);
    auto put = [&](int v, long long pos) { f.position[static_cast<size_t>(v)] = static_cast<int>(pos); };

    for (int i = 0; i < bug.lambda; ++i)
        put(bug.c_spine[static_cast<size_t>(i)], static_cast<long long>(i) * b);
    // Heavy-vertex leaves: half in the interval below, half in the interval
    // above, lowest positions first.
    for (int i = 0; i < bug.lambda; ++i) {
        const auto& leaves = bug.c_leaves[static_cast<size_t>(i)];
        if (leaves.empty())
            continue;
        int half = static_cast<int>(leaves.size()) / 2;
        for (int l = 0; l < static_cast<int>(leaves.size()); ++l) {
            long long base = l < half ? static_cast<long long>(i - 1) * b : static_cast<long long>(i) * b;
            int offset = l < half ? l + 1 : l - half + 1;
            put(leaves[static_cast<size_t>(l)], base + offset);
        }
    }
    // Task vertices: machine j's segments occupy its first task intervals.
    std::vector<int> segment_interval(static_cast<size_t>(bug.n_tasks()), -1);
    for (int j = 0; j < bug.instance.machines; ++j) {
        int interval = j * (dl + 2) + 2;
        for (int task : sched.machine_tasks[static_cast<size_t>(j)]) {
            for (size_t v = 0; v < bug.segment_tasks[static_cast<size_t>(task)].size(); ++v) {
                if (interval > (j + 1) * (dl + 2) - 1)
                    throw validation_error("machine load exceeds the deadline");
                if (segment_interval[static_cast<size_t>(task)] == -1)
                    segment_interval[static_cast<size_t>(task)] = interval;
                int tv = bug.segment_tasks[static_cast<size_t>(task)][v];
                put(tv, static_cast<long long>(interval) * b + 1);
                const auto& tl = bug.task_leaves[static_cast<size_t>(task)][v];
                for (size_t l = 0; l < tl.size(); ++l)
                    put(tl[l], static_cast<long long>(interval) * b + 2 + static_cast<long long>(l));
                ++interval;
            }
        }
    }
    // Connector paths through the L/U tracks.
    for (int task = 0; task < bug.n_tasks(); ++task) {
        int e = segment_interval[static_cast<size_t>(task)] +
                static_cast<int>(bug.segment_tasks[static_cast<size_t>(task)].size()) - 1;
        bool z_side_last;
        int j, jp;
        if (task + 1 < bug.n_tasks()) {
            int alpha = segment_interval[static_cast<size_t>(task) + 1];
            j = std::min(e, alpha);
            jp = std::max(e, alpha);
            z_side_last = alpha > e;  // tour starts at the higher-interval endpoint
        } else {
            j = e;
            jp = bug.lambda - 1;
            z_side_last = true;
        }
        auto tour = connector_tour(bug, j, jp, task + 1);
        std::vector<int> path = bug.segment_plains[static_cast<size_t>(task)];
        if (z_side_last)
            std::reverse(path.begin(), path.end());  // tour begins at the high side
        if (tour.size() != path.size())
            throw std::logic_error("connector tour does not match the path length");
        for (size_t idx = 0; idx < path.size(); ++idx)
            put(path[idx], tour[idx]);
    }
    // Reflector capped on top, a touching the C spine, z touching C'.
    auto [refl, refl_roles] = build_reflector(b);
    Layout anchored = reflector_numbering_anchored(b, refl_roles);
    for (const auto& [name, v] : refl_roles.roles)
        put(bug.reflector_roles.at(name),
            static_cast<long long>(bug.lambda) * b + anchored.position[static_cast<size_t>(v)]);

    f.realized_bandwidth = verify_layout(bug.graph, f);
    return f;
}

}  // namespace detail

// Schedule-to-numbering direction of the reduction. Requires every machine
// load to equal D exactly (pad first); the result uses every position
// 0..(lambda+5)b once and realizes bandwidth exactly b.
inline Layout schedule_to_numbering(const BugArtifacts& bug, const Schedule& sched) {
    if (!sched.valid_for(bug.instance))
        throw validation_error("schedule is not valid for the instance");
    for (long long load : sched.loads(bug.instance))
        if (load != bug.instance.deadline)
            throw validation_error("schedule_to_numbering requires every machine load to equal D;"
                                   " pad the instance first");
    Layout f = detail::bug_numbering(bug, sched);
    if (f.realized_bandwidth != bug.b)
        throw std::logic_error("bug numbering does not realize b");
    std::vector<bool> used(static_cast<size_t>(bug.total_positions()) + 1, false);
    for (int v = 0; v < bug.graph.vertex_count(); ++v) {
        int p = f.position[static_cast<size_t>(v)];
        if (p < 0 || p > bug.total_positions() || used[static_cast<size_t>(p)])
            throw std::logic_error("bug numbering is not onto 0..(lambda+5)b");
        used[static_cast<size_t>(p)] = true;
    }
    return f;
}

// Certificate transfer to an unpadded instance: keep the padded layout's
// positions on every vertex the two bugs share (C, its leaves, the first t_i
// task groups per segment, the reflector) and re-thread each connector path
// through its own tracks so it enters next to the original segment's last
// task vertex. The result is a bandwidth-b layout of the original bug.
inline Layout restrict_bug_layout(const BugArtifacts& padded, const Layout& f_padded,
                                  const BugArtifacts& orig) {
    if (padded.b != orig.b || padded.lambda != orig.lambda || padded.n_tasks() != orig.n_tasks())
        throw validation_error("padded and original bugs do not match");
    Layout f;
    f.position.assign(static_cast<size_t>(orig.graph.vertex_count()), -1);
    auto copy = [&](int ov, int pv) {
        f.position[static_cast<size_t>(ov)] = f_padded.position[static_cast<size_t>(pv)];
    };
    for (int i = 0; i < orig.lambda; ++i) {
        copy(orig.c_spine[static_cast<size_t>(i)], padded.c_spine[static_cast<size_t>(i)]);
        for (size_t l = 0; l < orig.c_leaves[static_cast<size_t>(i)].size(); ++l)
            copy(orig.c_leaves[static_cast<size_t>(i)][l], padded.c_leaves[static_cast<size_t>(i)][l]);
    }
    for (int s = 0; s < orig.n_tasks(); ++s)
        for (size_t v = 0; v < orig.segment_tasks[static_cast<size_t>(s)].size(); ++v) {
            copy(orig.segment_tasks[static_cast<size_t>(s)][v],
                 padded.segment_tasks[static_cast<size_t>(s)][v]);
            for (size_t l = 0; l < orig.task_leaves[static_cast<size_t>(s)][v].size(); ++l)
                copy(orig.task_leaves[static_cast<size_t>(s)][v][l],
                     padded.task_leaves[static_cast<size_t>(s)][v][l]);
        }
    for (const auto& [name, v] : orig.reflector_roles.roles)
        copy(v, padded.reflector_roles.at(name));
    for (int s = 0; s < orig.n_tasks(); ++s) {
        auto interval_of = [&](int vertex) {
            return f.position[static_cast<size_t>(vertex)] / orig.b;
        };
        int e = interval_of(orig.segment_tasks[static_cast<size_t>(s)].back());
        int j, jp;
        bool z_side_last;
        if (s + 1 < orig.n_tasks()) {
            int alpha = interval_of(orig.segment_tasks[static_cast<size_t>(s) + 1].front());
            j = std::min(e, alpha);
            jp = std::max(e, alpha);
            z_side_last = alpha > e;
        } else {
            j = e;
            jp = orig.lambda - 1;
            z_side_last = true;
        }
        auto tour = detail::connector_tour(orig, j, jp, s + 1);
        std::vector<int> path = orig.segment_plains[static_cast<size_t>(s)];
        if (z_side_last)
            std::reverse(path.begin(), path.end());
        for (size_t idx = 0; idx < path.size(); ++idx)
            f.position[static_cast<size_t>(path[idx])] = tour[idx];
    }
    f.realized_bandwidth = verify_layout(orig.graph, f);
    return f;
}

// Numbering-to-schedule direction: task i belongs to machine j when one of
// its non-leaf task vertices lies strictly between z_{j-1} and z_j. Rejects
// layouts whose realized bandwidth is not exactly b, whose tasks straddle a
// boundary, or whose extracted loads exceed D.
inline std::variant<Schedule, std::string> numbering_to_schedule(const BugArtifacts& bug,
                                                                 const Layout& f_in) {
    int bw;
    try {
        bw = verify_layout(bug.graph, f_in);
    } catch (const validation_error& e) {
        return std::string(e.what());
    }
    if (bw != bug.b)
        return "realized bandwidth " + std::to_string(bw) + " differs from b = " +
               std::to_string(bug.b);
    Layout f = f_in;
    long long top = bug.total_positions();
    for (int p : f.position)
        if (p < 0 || p > top)
            return std::string("positions leave the range 0..(lambda+5)b");
    // Normalize: the heavy end of C sits low.
    if (f.position[static_cast<size_t>(bug.c_spine[1])] > top / 2)
        for (auto& p : f.position)
            p = static_cast<int>(top) - p;

    Schedule sched;
    sched.machine_tasks.assign(static_cast<size_t>(bug.instance.machines), {});
    for (int task = 0; task < bug.n_tasks(); ++task) {
        int machine = -1;
        for (int tv : bug.segment_tasks[static_cast<size_t>(task)]) {
            long long pos = f.position[static_cast<size_t>(tv)];
            int j = -1;
            for (int cand = 1; cand <= bug.instance.machines; ++cand)
                if (bug.z_bounds[static_cast<size_t>(cand) - 1] < pos &&
                    pos < bug.z_bounds[static_cast<size_t>(cand)])
                    j = cand;
            if (j == -1)
                return "task " + std::to_string(task + 1) +
                       " has a task vertex outside every machine window";
            if (machine != -1 && machine != j)
                return "task " + std::to_string(task + 1) + " straddles a boundary z_j";
            machine = j;
        }
        sched.machine_tasks[static_cast<size_t>(machine) - 1].push_back(task);
    }
    auto loads = sched.loads(bug.instance);
    for (int j = 0; j < bug.instance.machines; ++j)
        if (loads[static_cast<size_t>(j)] > bug.instance.deadline)
            return "machine " + std::to_string(j + 1) + " exceeds the deadline";
    return sched;
}

// Metadata file for the bug bundle: key=value lines.
inline std::string serialize_bug_meta(const BugArtifacts& bug) {
    std::ostringstream out;
    out << "machines=" << bug.instance.machines << "\n";
    out << "deadline=" << bug.instance.deadline << "\n";
    out << "tasks=";
    for (size_t i = 0; i < bug.instance.times.size(); ++i)
        out << (i ? "," : "") << bug.instance.times[i];
    out << "\n";
    out << "p=" << bug.p << "\n";
    out << "b=" << bug.b << "\n";
    out << "D_prime=" << bug.d_prime << "\n";
    out << "lambda=" << bug.lambda << "\n";
    out << "n=" << bug.graph.vertex_count() << "\n";
    for (size_t j = 0; j < bug.z_bounds.size(); ++j)
        out << "z_" << j << "=" << bug.z_bounds[j] << "\n";
    return out.str();
}

}  // namespace blockband

#endif  // BLOCKBAND_GADGETS_HPP
