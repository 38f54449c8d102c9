// Batch CLI: recognize | density | layout | verify | oracle | gadget |
// reduce | roundtrip. Reports are key=value lines on stdout; rejections go
// to stderr. Exit codes: 0 success, 1 domain rejection, 2 usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "blockband/gadgets.hpp"
#include "blockband/layout.hpp"
#include "blockband/search.hpp"

using namespace blockband;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw validation_error("cannot open " + path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out)
        throw validation_error("cannot write " + path);
    out << text;
}

std::vector<int> parse_int_list(const std::string& text, char sep) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) {
        if (item.empty())
            continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

// "1;2,3" -> machine groups of 1-based task indices.
Schedule parse_schedule(const std::string& text, int machines) {
    Schedule s;
    std::string group;
    std::istringstream in(text);
    while (std::getline(in, group, ';'))
        s.machine_tasks.push_back(parse_int_list(group, ','));
    while (static_cast<int>(s.machine_tasks.size()) < machines)
        s.machine_tasks.emplace_back();
    for (auto& g : s.machine_tasks)
        for (int& t : g)
            --t;  // to 0-based
    return s;
}

void print_structure(const CaterpillarStructure& s) {
    std::cout << "k=" << s.k() << "\n";
    for (int i = 0; i < s.k(); ++i) {
        std::cout << "Q_" << i + 1 << "=";
        const auto& q = s.spine_cliques[static_cast<size_t>(i)];
        for (size_t j = 0; j < q.size(); ++j)
            std::cout << (j ? "," : "") << q[j];
        std::cout << "\n";
    }
    if (s.k() == 0)
        std::cout << "center=" << s.v1 << "\n";
    for (size_t v = 0; v < s.leaf_sets.size(); ++v)
        if (!s.leaf_sets[v].empty())
            std::cout << "leaves_of_" << v << "=" << s.leaf_sets[v].size() << "\n";
    if (s.anchored) {
        auto a = s.anchor_path();
        std::cout << "anchors=";
        for (size_t i = 0; i < a.size(); ++i)
            std::cout << (i ? "," : "") << a[i];
        std::cout << "\n";
        std::cout << "helpers=" << s.helpers.size() << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"bandwidth layouts, density bounds, and reduction gadgets for block graphs"};
    app.require_subcommand(1);

    std::string graph_path, layout_path, out_path, out_prefix;
    std::string tasks_text, schedule_text;
    int cap = 16;
    bool exact = false;
    int m_override = -1;
    long long max_nodes = 50'000'000;
    long long max_solutions = 10'000'000;
    int max_b = -1;
    bool enumerate = false;
    int param = 0;
    int machines = 1, deadline = 1;

    auto* rec = app.add_subcommand("recognize", "decompose a block caterpillar");
    rec->add_option("graph", graph_path, "graph file")->required();

    auto* dens = app.add_subcommand("density", "local density report");
    dens->add_option("graph", graph_path, "graph file")->required();
    dens->add_flag("--exact", exact, "cross-check against the exhaustive bound");
    dens->add_option("--cap", cap, "exhaustive-bound vertex cap");

    auto* lay = app.add_subcommand("layout", "optimal bandwidth layout");
    lay->add_option("graph", graph_path, "graph file")->required();
    lay->add_option("-m", m_override, "lay out at this width instead of beta");
    lay->add_option("-o,--out", out_path, "layout file to write");

    auto* ver = app.add_subcommand("verify", "realized bandwidth of a layout");
    ver->add_option("graph", graph_path, "graph file")->required();
    ver->add_option("layout", layout_path, "layout file")->required();

    auto* ora = app.add_subcommand("oracle", "exact bandwidth by branch and bound");
    ora->add_option("graph", graph_path, "graph file")->required();
    ora->add_option("--max-b", max_b, "stop the upward scan at this bound");
    ora->add_option("--max-nodes", max_nodes, "search node budget");
    ora->add_flag("--enumerate", enumerate, "count optimal layouts up to reversal");
    ora->add_option("--max-solutions", max_solutions, "enumeration cap");

    auto* gad = app.add_subcommand("gadget", "build a named construction");
    std::string kind;
    gad->add_option("kind", kind, "hk | tk | reflector | near-reflector")->required();
    gad->add_option("--param", param, "family parameter")->required();
    gad->add_option("--out", out_prefix, "output file prefix")->required();

    auto* red = app.add_subcommand("reduce", "scheduling-to-bandwidth reduction");
    red->add_option("--machines", machines, "processor count")->required();
    red->add_option("--deadline", deadline, "per-machine deadline")->required();
    red->add_option("--tasks", tasks_text, "comma-separated task times")->required();
    red->add_option("--out", out_prefix, "output file prefix")->required();

    auto* rt = app.add_subcommand("roundtrip", "schedule -> numbering -> schedule");
    rt->add_option("--machines", machines, "processor count")->required();
    rt->add_option("--deadline", deadline, "per-machine deadline")->required();
    rt->add_option("--tasks", tasks_text, "comma-separated task times")->required();
    rt->add_option("--schedule", schedule_text, "semicolon-separated machine groups")->required();
    rt->add_option("--out", out_prefix, "optional output file prefix");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (rec->parsed()) {
        Graph g = parse_graph(slurp(graph_path));
        auto r = recognize_block_caterpillar(g);
        if (std::holds_alternative<Rejection>(r)) {
            const auto& rej = std::get<Rejection>(r);
            std::cerr << "rejected: " << to_string(rej.reason) << ": " << rej.detail << "\n";
            return 1;
        }
        auto [aug, s] = anchor_and_augment(std::get<CaterpillarStructure>(r), g);
        print_structure(s);
        return 0;
    }

    if (dens->parsed()) {
        Graph g = parse_graph(slurp(graph_path));
        auto r = recognize_block_caterpillar(g);
        if (std::holds_alternative<Rejection>(r)) {
            const auto& rej = std::get<Rejection>(r);
            std::cerr << "rejected: " << to_string(rej.reason) << ": " << rej.detail << "\n";
            return 1;
        }
        auto [aug, s] = anchor_and_augment(std::get<CaterpillarStructure>(r), g);
        DensityReport d = local_density_structured(s, aug);
        std::cout << "beta=" << d.beta << " beta1=" << d.beta1 << " beta2=" << d.beta2
                  << " beta_prime=" << d.beta_prime << " witness=(" << d.witness_h << ","
                  << d.witness_i << ")\n";
        if (exact) {
            int brute = local_density_bruteforce(g, cap);
            std::cout << "beta_bruteforce=" << brute << "\n";
            std::cout << "crosscheck=" << (brute == d.beta ? "PASS" : "FAIL") << "\n";
            return brute == d.beta ? 0 : 1;
        }
        return 0;
    }

    if (lay->parsed()) {
        Graph g = parse_graph(slurp(graph_path));
        auto r = recognize_block_caterpillar(g);
        if (std::holds_alternative<Rejection>(r)) {
            const auto& rej = std::get<Rejection>(r);
            std::cerr << "rejected: " << to_string(rej.reason) << ": " << rej.detail << "\n";
            return 1;
        }
        auto [aug, s] = anchor_and_augment(std::get<CaterpillarStructure>(r), g);
        DensityReport d = local_density_structured(s, aug);
        int m = m_override >= 0 ? m_override : d.beta;
        if (m < d.beta) {
            std::cerr << "rejected: m=" << m << " is below the local density " << d.beta << "\n";
            return 1;
        }
        JustifiedLayout j = layout_block_caterpillar(s, aug, m);
        Layout restricted;
        restricted.position.assign(static_cast<size_t>(g.vertex_count()), 0);
        for (int v = 0; v < g.vertex_count(); ++v)
            restricted.position[static_cast<size_t>(v)] = j.layout.position[static_cast<size_t>(v)];
        restricted = condense(restricted);
        int b = verify_layout(g, restricted);
        std::cout << "beta=" << d.beta << "\n";
        std::cout << "m=" << m << "\n";
        std::cout << "B=" << b << "\n";
        if (!out_path.empty())
            spit(out_path, serialize_layout(restricted));
        return 0;
    }

    if (ver->parsed()) {
        Graph g = parse_graph(slurp(graph_path));
        Layout f = parse_layout(slurp(layout_path), g.vertex_count());
        std::cout << "B=" << verify_layout(g, f) << "\n";
        return 0;
    }

    if (ora->parsed()) {
        Graph g = parse_graph(slurp(graph_path));
        SearchBudget budget;
        budget.max_vertices = std::max(24, g.vertex_count());
        budget.max_nodes = max_nodes;
        budget.max_solutions = max_solutions;
        SearchResult res;
        if (max_b >= 0) {
            res = decide_bandwidth(g, max_b, budget);
            if (res.status == SearchStatus::infeasible) {
                std::cout << "decision=infeasible b=" << max_b << "\n";
                return 0;
            }
        } else {
            res = exact_bandwidth(g, budget);
        }
        if (res.status == SearchStatus::budget_exhausted) {
            std::cerr << "rejected: search node budget exhausted\n";
            return 1;
        }
        int b = res.layout->realized_bandwidth;
        std::cout << "bandwidth=" << b << "\n";
        std::cout << "nodes=" << res.nodes << "\n";
        if (enumerate) {
            auto en = enumerate_optimal(g, b, budget, [](const Layout&) {});
            std::cout << "optimal_count=" << en.count
                      << (en.budget_exhausted || en.solution_capped ? " (partial)" : "") << "\n";
        }
        return 0;
    }

    if (gad->parsed()) {
        Graph g;
        RoleMap roles;
        std::ostringstream meta;
        std::string layout_text;
        if (kind == "hk") {
            std::tie(g, roles) = build_hk(param);
            meta << "family=hk\nk=" << param << "\n";
        } else if (kind == "tk") {
            std::tie(g, roles) = build_tk(param);
            meta << "family=tk\nk=" << param << "\n";
        } else if (kind == "reflector") {
            std::tie(g, roles) = build_reflector(param);
            Layout f = reflector_numbering(param, roles);
            layout_text = serialize_layout(f);
            meta << "family=reflector\np=" << param << "\nB=" << verify_layout(g, f) << "\n";
        } else if (kind == "near-reflector") {
            std::tie(g, roles) = build_near_reflector(param);
            Layout f = near_reflector_numbering(param, roles);
            layout_text = serialize_layout(f);
            meta << "family=near-reflector\nb=" << param << "\nB=" << verify_layout(g, f) << "\n";
        } else {
            std::cerr << "unknown gadget kind: " << kind << "\n";
            return 2;
        }
        meta << "n=" << g.vertex_count() << "\n";
        spit(out_prefix + ".graph", serialize_graph(g));
        spit(out_prefix + ".roles", roles.serialize());
        spit(out_prefix + ".meta", meta.str());
        if (!layout_text.empty())
            spit(out_prefix + ".layout", layout_text);
        std::cout << "n=" << g.vertex_count() << "\n";
        return 0;
    }

    if (red->parsed()) {
        SchedulingInstance inst{machines, deadline, parse_int_list(tasks_text, ',')};
        BugArtifacts bug = build_bug(inst);
        spit(out_prefix + ".graph", serialize_graph(bug.graph));
        spit(out_prefix + ".roles", bug.reflector_roles.serialize());
        spit(out_prefix + ".meta", serialize_bug_meta(bug));
        std::cout << "p=" << bug.p << "\n";
        std::cout << "b=" << bug.b << "\n";
        std::cout << "lambda=" << bug.lambda << "\n";
        std::cout << "D_prime=" << bug.d_prime << "\n";
        std::cout << "n=" << bug.graph.vertex_count() << "\n";
        return 0;
    }

    if (rt->parsed()) {
        SchedulingInstance inst{machines, deadline, parse_int_list(tasks_text, ',')};
        Schedule sched = parse_schedule(schedule_text, machines);
        if (!sched.valid_for(inst)) {
            std::cerr << "rejected: schedule is not a valid solution of the instance\n";
            return 1;
        }
        BugArtifacts orig = build_bug(inst);
        SchedulingInstance padded_inst = pad_instance(inst, sched);
        bool padded = padded_inst.times != inst.times;
        BugArtifacts bug = padded ? build_bug(padded_inst) : std::move(orig);
        Layout f = schedule_to_numbering(bug, sched);
        int b = verify_layout(bug.graph, f);
        std::cout << "p=" << bug.p << "\n";
        std::cout << "b=" << bug.b << "\n";
        std::cout << "B=" << b << "\n";
        if (padded) {
            BugArtifacts fresh = build_bug(inst);
            Layout restricted = restrict_bug_layout(bug, f, fresh);
            std::cout << "restricted_B=" << verify_layout(fresh.graph, restricted) << "\n";
        }
        auto back = numbering_to_schedule(bug, f);
        if (std::holds_alternative<std::string>(back)) {
            std::cout << "roundtrip=FAIL\n";
            std::cerr << "rejected: " << std::get<std::string>(back) << "\n";
            return 1;
        }
        const Schedule& s = std::get<Schedule>(back);
        bool ok = b == bug.b && s.valid_for(bug.instance);
        std::cout << "loads=";
        auto loads = s.loads(bug.instance);
        for (size_t j = 0; j < loads.size(); ++j)
            std::cout << (j ? "," : "") << loads[j];
        std::cout << "\n";
        std::cout << "roundtrip=" << (ok ? "PASS" : "FAIL") << "\n";
        if (!out_prefix.empty()) {
            spit(out_prefix + ".graph", serialize_graph(bug.graph));
            spit(out_prefix + ".layout", serialize_layout(f));
            spit(out_prefix + ".meta", serialize_bug_meta(bug));
        }
        return ok ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const validation_error& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
