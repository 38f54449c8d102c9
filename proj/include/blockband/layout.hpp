// Optimal bandwidth layouts for block caterpillars.
//
// A layout f is faithful when leaves are ordered consistently with their
// parents: f(x) < f(y) forces f(u) < f(v) for leaves u of x and v of y. A
// left-justified m-representation additionally anchors v_i at position i*m,
// fills each interval J_i = (i*m, (i+1)*m) as a prefix, lets leaves spill
// into the next interval only past a full one, and keeps each clique below
// the leaves of its exit cutvertex.
//
// The layout is built clique by clique. Phase i lays out the clique-star
// G'_i: the edges incident to Q_i, plus auxiliary edges from v_i to the
// leaves of Q_{i-1} already sitting above i*m. Vertices inherited from phase
// i-1 that stay (Q_{i-1} minus v_i, and that spill set L') keep their exact
// positions; the leaves of v_i and the clique Q_i itself are re-placed.
// Within a phase, entry-side leaves fill the low intervals first and the
// rest is an exact merge search over the remaining free slots (parents in
// order, bare clique vertices anywhere, exit leaves last) that enforces all
// distance bounds; the classical three-way split on the entry leaf mass l'
// is recorded in the phase plan, and the merge reduces to those packings on
// uncluttered inputs.

#ifndef BLOCKBAND_LAYOUT_HPP
#define BLOCKBAND_LAYOUT_HPP

#include <deque>

#include "blockband/density.hpp"

namespace blockband {

// Sorts all pendant leaves into their current slot multiset so that leaf
// order matches parent order. Never increases the realized bandwidth;
// non-leaf positions and the slot multiset are unchanged.
inline Layout repair_faithful(const Graph& g, const Layout& f) {
    int n = g.vertex_count();
    std::vector<int> leaves;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 1 && g.degree(g.neighbors(v)[0]) >= 2)
            leaves.push_back(v);
    std::vector<int> slots;
    slots.reserve(leaves.size());
    for (int v : leaves)
        slots.push_back(f.position[static_cast<size_t>(v)]);
    std::sort(slots.begin(), slots.end());
    std::sort(leaves.begin(), leaves.end(), [&](int a, int b) {
        int pa = f.position[static_cast<size_t>(g.neighbors(a)[0])];
        int pb = f.position[static_cast<size_t>(g.neighbors(b)[0])];
        if (pa != pb)
            return pa < pb;
        return f.position[static_cast<size_t>(a)] < f.position[static_cast<size_t>(b)];
    });
    Layout out = f;
    for (size_t i = 0; i < leaves.size(); ++i)
        out.position[static_cast<size_t>(leaves[i])] = slots[i];
    out.realized_bandwidth = verify_layout(g, out);
    return out;
}

struct CliqueStarPlan {
    enum class Case { SmallLeafMass, MediumMass, Straddle };
    std::vector<int> parents;  // x_0..x_t; x_0 = entry cutvertex, x_t = exit
    int l_prime = 0;           // total leaf mass of x_0..x_{t-1}
    int big_n = 0;             // n(G') - 1
    int q = 0;                 // |Q'| = clique size - 1
    int r = -1;
    int p = 0;
    int p_prime = 0;
    int s = 0;                 // min(N, 2m)
    Case case_tag = Case::SmallLeafMass;
};

struct JustifiedLayout {
    Layout layout;                    // over all (augmented) vertices
    int m = 0;
    std::vector<int> interval_fill;   // filled-prefix length of each J_i, i = 0..k+1
    std::vector<int> anchor_positions;  // position of v_i, i = 0..k+2
    std::vector<CliqueStarPlan> phase_plans;
};

namespace detail {

// Incremental position table for the phase construction.
class SlotBoard {
  public:
    SlotBoard(int vertex_count, int top) : pos_(static_cast<size_t>(vertex_count), -1),
                                           owner_(static_cast<size_t>(top) + 1, -1) {}

    int pos(int v) const { return pos_[static_cast<size_t>(v)]; }
    int owner(int p) const { return owner_[static_cast<size_t>(p)]; }
    int top() const { return static_cast<int>(owner_.size()) - 1; }

    void place(int v, int p) {
        if (p < 0 || p > top() || owner_[static_cast<size_t>(p)] != -1 ||
            pos_[static_cast<size_t>(v)] != -1)
            throw std::logic_error("layout construction placed into an occupied slot");
        owner_[static_cast<size_t>(p)] = v;
        pos_[static_cast<size_t>(v)] = p;
    }

    void unplace(int v) {
        int p = pos_[static_cast<size_t>(v)];
        if (p == -1)
            throw std::logic_error("layout construction freed an unplaced vertex");
        owner_[static_cast<size_t>(p)] = -1;
        pos_[static_cast<size_t>(v)] = -1;
    }

    // First free slot strictly after `after`, or -1.
    int next_free(int after, int limit) const {
        for (int p = after + 1; p < limit; ++p)
            if (owner_[static_cast<size_t>(p)] == -1)
                return p;
        return -1;
    }

    const std::vector<int>& positions() const { return pos_; }

  private:
    std::vector<int> pos_;
    std::vector<int> owner_;
};

class JustifiedBuilder {
  public:
    JustifiedBuilder(const Graph& g, const CaterpillarStructure& s, int m)
        : g_(g), s_(s), m_(m), anchors_(s.anchor_path()),
          blocks_(s.blocks_with_synthetic()),
          board_(g.vertex_count(), (s.k() + 2) * m) {
        if (!s.anchored)
            throw validation_error("layout requires an anchored structure");
    }

    JustifiedLayout run() {
        if (s_.k() == 0)
            run_star();
        else
            for (int i = 1; i <= s_.k(); ++i)
                run_phase(i);
        return finish();
    }

  private:
    // Degenerate star: center at m, anchors at 0 and 2m, leaves filled from
    // the left across J_0 and J_1.
    void run_star() {
        board_.place(anchors_[0], 0);
        board_.place(anchors_[1], m_);
        board_.place(anchors_[2], 2 * m_);
        std::vector<int> leaves = s_.leaf_sets[static_cast<size_t>(s_.v1)];
        std::sort(leaves.begin(), leaves.end());
        int cursor = 0;
        for (int v : leaves) {
            cursor = board_.next_free(cursor, board_.top() + 1);
            board_.place(v, cursor);
        }
        require(cursor <= 2 * m_, "star leaves exceed the two intervals");
    }

    void run_phase(int i) {
        phase_ = i;
        const std::vector<int>& clique = blocks_[static_cast<size_t>(i)];
        int first = anchors_[static_cast<size_t>(i)];
        int last = anchors_[static_cast<size_t>(i) + 1];
        int next_anchor = anchors_[static_cast<size_t>(i) + 2];
        const int im = i * m_;

        // Spill set L': leaves of Q_{i-1} - {v_i} already above i*m.
        std::vector<int> spill;
        if (i >= 2) {
            for (int u : blocks_[static_cast<size_t>(i) - 1]) {
                if (u == first)
                    continue;
                for (int leaf : s_.leaf_sets[static_cast<size_t>(u)])
                    if (board_.pos(leaf) > im)
                        spill.push_back(leaf);
            }
            std::sort(spill.begin(), spill.end(), [&](int a, int b) {
                return board_.pos(a) < board_.pos(b);
            });
        }

        // Leaf sets of G'_i per clique vertex.
        std::vector<std::vector<int>> lam(clique.size());
        auto lam_of = [&](int u) -> std::vector<int>& {
            for (size_t j = 0; j < clique.size(); ++j)
                if (clique[j] == u)
                    return lam[j];
            throw std::logic_error("vertex not in phase clique");
        };
        for (size_t j = 0; j < clique.size(); ++j) {
            int u = clique[j];
            lam[j] = s_.leaf_sets[static_cast<size_t>(u)];
            if (u == first) {
                if (i == 1) {
                    lam[j].push_back(anchors_[0]);
                } else {
                    for (int w : blocks_[static_cast<size_t>(i) - 1])
                        if (w != first)
                            lam[j].push_back(w);
                    lam[j].insert(lam[j].end(), spill.begin(), spill.end());
                }
            } else if (u == last) {
                for (int w : blocks_[static_cast<size_t>(i) + 1])
                    if (w != last)
                        lam[j].push_back(w);
            }
        }

        // Free the movable set T = L(v_i) plus Q_i - {v_i}.
        if (i >= 2) {
            for (int v : s_.leaf_sets[static_cast<size_t>(first)])
                board_.unplace(v);
            for (int v : clique)
                if (v != first)
                    board_.unplace(v);
        }
        if (i == 1) {
            board_.place(anchors_[0], 0);
            board_.place(first, m_);
        }
        board_.place(last, (i + 1) * m_);
        board_.place(next_anchor, (i + 2) * m_);

        // Parent order: entry cutvertex, leaf-bearing middles by id, exit.
        CliqueStarPlan plan;
        plan.parents.push_back(first);
        {
            std::vector<int> mids;
            for (int u : clique)
                if (u != first && u != last && !lam_of(u).empty())
                    mids.push_back(u);
            std::sort(mids.begin(), mids.end());
            plan.parents.insert(plan.parents.end(), mids.begin(), mids.end());
        }
        plan.parents.push_back(last);
        std::vector<int> bare;  // Q - X
        for (int u : clique)
            if (u != first && u != last && lam_of(u).empty())
                bare.push_back(u);
        std::sort(bare.begin(), bare.end());

        const int t = static_cast<int>(plan.parents.size()) - 1;
        std::vector<int> lcount(plan.parents.size());
        long long total_leaves = 0;
        for (size_t j = 0; j < plan.parents.size(); ++j) {
            lcount[j] = static_cast<int>(lam_of(plan.parents[j]).size());
            total_leaves += lcount[j];
        }
        plan.q = static_cast<int>(clique.size()) - 1;
        plan.big_n = static_cast<int>(clique.size() + total_leaves) - 1;
        for (int j = 0; j < t; ++j)
            plan.l_prime += lcount[static_cast<size_t>(j)];
        plan.s = std::min(plan.big_n, 2 * m_);

        // beta(G') <= m, as the proof's counting promises.
        require(plan.q <= m_, "phase clique exceeds m");
        for (size_t j = 0; j < clique.size(); ++j)
            require(plan.q + static_cast<int>(lam[j].size()) <= 2 * m_,
                    "phase vertex degree exceeds 2m");
        require(plan.big_n <= 3 * m_, "phase graph exceeds 3m+1 vertices");
        require(spill.empty() || board_.next_free(im - m_, im) == -1,
                "spill with a non-full previous interval");

        // News: leaf members not currently placed, id-sorted, one queue per
        // parent; the stream walks them in parent order.
        std::vector<std::deque<int>> news(plan.parents.size());
        for (size_t j = 0; j < plan.parents.size(); ++j) {
            std::vector<int> nv;
            for (int v : lam_of(plan.parents[j]))
                if (board_.pos(v) == -1)
                    nv.push_back(v);
            std::sort(nv.begin(), nv.end());
            news[j].assign(nv.begin(), nv.end());
        }

        int cursor = (i - 1) * m_;
        auto stream_pop = [&](int upto) {
            // Next unplaced leaf in faithful order, restricted to parents x_0..x_upto.
            for (int j = 0; j <= upto; ++j)
                if (!news[static_cast<size_t>(j)].empty()) {
                    int v = news[static_cast<size_t>(j)].front();
                    news[static_cast<size_t>(j)].pop_front();
                    return v;
                }
            return -1;
        };
        auto place_next = [&](int v, int limit) {
            cursor = board_.next_free(cursor, limit);
            require(cursor != -1, "phase ran out of slots");
            board_.place(v, cursor);
        };

        if (plan.l_prime <= m_) {
            plan.case_tag = CliqueStarPlan::Case::SmallLeafMass;
        } else {
            int prefix = 0;
            for (int j = 0; j < t; ++j) {
                prefix += lcount[static_cast<size_t>(j)];
                if (prefix >= m_) {
                    plan.r = j;
                    break;
                }
            }
            plan.p = prefix - lcount[static_cast<size_t>(plan.r)];
            for (int j = plan.r + 1; j <= t; ++j)
                plan.p_prime += lcount[static_cast<size_t>(j)];
            plan.case_tag = plan.p + lcount[static_cast<size_t>(plan.r)] + plan.q <= 2 * m_
                                ? CliqueStarPlan::Case::MediumMass
                                : CliqueStarPlan::Case::Straddle;
        }

        // Entry intervals fill with leaves; a light leaf mass may leave a
        // gap, a heavy one must fill them completely.
        while (board_.next_free(cursor, im) != -1) {
            int v = stream_pop(t - 1);
            if (v == -1) {
                require(plan.l_prime <= m_, "leaf mass vanished before the interval filled");
                break;
            }
            place_next(v, im);
        }
        cursor = im;

        {
            // The rest of the phase is a merge of three streams onto the
            // free slots in ascending order: the entry-side leaves (fixed
            // faithful order), the middle parents x_1..x_{t-1} (order
            // fixed), and the interchangeable bare clique vertices; the
            // exit-side leaves always take the final slots. The cases of
            // the underlying construction are particular merges; inherited
            // occupancy can rule them out, so a small backtracking search
            // picks the first merge meeting every bound: clique vertices
            // below (i+1)m, every leaf within m of its parent, parents
            // within m of their already-placed members.
            std::deque<int> stream;
            std::vector<int> stream_parent;
            for (int j = 0; j < t; ++j)
                for (int v : news[static_cast<size_t>(j)]) {
                    stream.push_back(v);
                    stream_parent.push_back(j);
                }
            const int w_total = static_cast<int>(stream.size());
            const int exits = static_cast<int>(news[static_cast<size_t>(t)].size());
            const int bare_cnt = static_cast<int>(bare.size());
            const int par_cnt = t - 1;
            const int total = w_total + par_cnt + bare_cnt + exits;

            std::vector<int> slot;
            slot.reserve(static_cast<size_t>(total));
            for (int p = board_.next_free(cursor, board_.top() + 1);
                 p != -1 && static_cast<int>(slot.size()) < total;
                 p = board_.next_free(p, board_.top() + 1))
                slot.push_back(p);
            require(static_cast<int>(slot.size()) == total, "phase ran out of slots");

            std::vector<int> placed_lo(static_cast<size_t>(t) + 1, std::numeric_limits<int>::max());
            std::vector<int> placed_hi(static_cast<size_t>(t) + 1, std::numeric_limits<int>::min());
            for (int j = 0; j <= t; ++j)
                for (int v : lam[leaf_index(clique, plan.parents[static_cast<size_t>(j)])])
                    if (board_.pos(v) != -1) {
                        placed_lo[static_cast<size_t>(j)] =
                            std::min(placed_lo[static_cast<size_t>(j)], board_.pos(v));
                        placed_hi[static_cast<size_t>(j)] =
                            std::max(placed_hi[static_cast<size_t>(j)], board_.pos(v));
                    }
            auto span_ok = [&](int j, int pos) {
                return placed_lo[static_cast<size_t>(j)] > placed_hi[static_cast<size_t>(j)] ||
                       (pos - placed_lo[static_cast<size_t>(j)] <= m_ &&
                        placed_hi[static_cast<size_t>(j)] - pos <= m_);
            };
            require(span_ok(0, im), "entry members drifted from the entry cutvertex");
            require(span_ok(t, (i + 1) * m_), "exit members drifted from the exit cutvertex");

            const int wall = (i + 1) * m_;
            const int merge_len = w_total + par_cnt + bare_cnt;
            // below_wall[k] = how many of slot[k..] lie under the wall.
            std::vector<int> below_wall(static_cast<size_t>(total) + 1, 0);
            for (int k = total - 1; k >= 0; --k)
                below_wall[static_cast<size_t>(k)] =
                    below_wall[static_cast<size_t>(k) + 1] + (slot[static_cast<size_t>(k)] < wall);
            // Exit leaves take the last slots; each must stay within m of
            // the exit cutvertex.
            require(exits == 0 || slot[static_cast<size_t>(total - 1)] - wall <= m_,
                    "exit leaves out of reach");

            std::vector<int> parent_at(static_cast<size_t>(t), -1);  // chosen position
            std::vector<int> own_left(static_cast<size_t>(t), 0);
            for (int j : stream_parent)
                ++own_left[static_cast<size_t>(j)];
            std::vector<signed char> moves(static_cast<size_t>(merge_len), -1);
            long long search_nodes = 0;

            // choice encoding: 0 = next leaf, 1 = next parent, 2 = bare.
            auto dfs = [&](auto&& self, int w, int j, int b) -> bool {
                int k = w + j + b;
                if (k == merge_len)
                    return true;
                if (++search_nodes > 2'000'000)
                    require(false, "placement search budget exhausted");
                int pos = slot[static_cast<size_t>(k)];
                if (par_cnt - j + bare_cnt - b > below_wall[static_cast<size_t>(k)])
                    return false;
                // Deadlines: a placed parent with pending leaves, or a
                // pending parent with placed leaves, must stay within reach.
                for (int x = 1; x <= par_cnt; ++x) {
                    if (x <= j && own_left[static_cast<size_t>(x)] > 0 &&
                        pos > parent_at[static_cast<size_t>(x)] + m_)
                        return false;
                    if (x > j && own_first_pos_[static_cast<size_t>(x)] != -1 &&
                        pos > own_first_pos_[static_cast<size_t>(x)] + m_)
                        return false;
                }
                if (w < w_total) {
                    int pj = stream_parent[static_cast<size_t>(w)];
                    bool ok = pj == 0 ? pos - im <= m_
                                      : (pj > j || pos - parent_at[static_cast<size_t>(pj)] <= m_);
                    if (ok) {
                        int saved = own_first_pos_[static_cast<size_t>(pj)];
                        if (pj > j && saved == -1)
                            own_first_pos_[static_cast<size_t>(pj)] = pos;
                        --own_left[static_cast<size_t>(pj)];
                        moves[static_cast<size_t>(k)] = 0;
                        if (self(self, w + 1, j, b))
                            return true;
                        ++own_left[static_cast<size_t>(pj)];
                        if (pj > j)
                            own_first_pos_[static_cast<size_t>(pj)] = saved;
                    }
                }
                if (j < par_cnt && pos < wall && span_ok(j + 1, pos) &&
                    (own_first_pos_[static_cast<size_t>(j + 1)] == -1 ||
                     pos - own_first_pos_[static_cast<size_t>(j + 1)] <= m_)) {
                    parent_at[static_cast<size_t>(j + 1)] = pos;
                    moves[static_cast<size_t>(k)] = 1;
                    if (self(self, w, j + 1, b))
                        return true;
                    parent_at[static_cast<size_t>(j + 1)] = -1;
                }
                if (b < bare_cnt && pos < wall) {
                    moves[static_cast<size_t>(k)] = 2;
                    if (self(self, w, j, b + 1))
                        return true;
                }
                return false;
            };
            own_first_pos_.assign(static_cast<size_t>(t) + 1, -1);
            require(dfs(dfs, 0, 0, 0), "no feasible placement for the phase");

            int at = 0, next_parent = 1;
            size_t next_bare = 0;
            for (int k = 0; k < merge_len; ++k) {
                if (moves[static_cast<size_t>(k)] == 0) {
                    board_.place(stream.front(), slot[static_cast<size_t>(at++)]);
                    stream.pop_front();
                } else if (moves[static_cast<size_t>(k)] == 1) {
                    board_.place(plan.parents[static_cast<size_t>(next_parent++)],
                                 slot[static_cast<size_t>(at++)]);
                } else {
                    board_.place(bare[next_bare++], slot[static_cast<size_t>(at++)]);
                }
            }
            for (int j = 0; j < t; ++j)
                news[static_cast<size_t>(j)].clear();
            while (!news[static_cast<size_t>(t)].empty()) {
                board_.place(news[static_cast<size_t>(t)].front(), slot[static_cast<size_t>(at++)]);
                news[static_cast<size_t>(t)].pop_front();
            }
            require(at == total, "phase placement mismatch");
        }

        assert_phase(i, plan, lam);
        plans_.push_back(std::move(plan));
    }

    // Post-phase checks: every G'-edge satisfied, leaf order faithful within
    // the phase, and the touched intervals still prefix-filled. The edge
    // check is exactly the leaf-placement bound the construction relies on.
    void assert_phase(int i, const CliqueStarPlan& plan,
                      const std::vector<std::vector<int>>& lam) {
        const std::vector<int>& clique = blocks_[static_cast<size_t>(i)];
        for (size_t a = 0; a < clique.size(); ++a) {
            require(board_.pos(clique[a]) != -1, "clique vertex left unplaced");
            for (size_t b = a + 1; b < clique.size(); ++b)
                require(std::abs(board_.pos(clique[a]) - board_.pos(clique[b])) <= m_,
                        "clique edge overstretched");
        }
        int prev_max = std::numeric_limits<int>::min();
        for (size_t j = 0; j < plan.parents.size(); ++j) {
            int parent = plan.parents[j];
            int lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min();
            for (int v : lam[leaf_index(clique, parent)]) {
                require(board_.pos(v) != -1, "leaf left unplaced");
                require(std::abs(board_.pos(v) - board_.pos(parent)) <= m_,
                        "leaf edge overstretched");
                lo = std::min(lo, board_.pos(v));
                hi = std::max(hi, board_.pos(v));
            }
            if (lo <= hi) {
                require(lo > prev_max, "leaf order violates faithfulness");
                prev_max = hi;
            }
        }
        for (int j = std::max(0, i - 1); j <= std::min(s_.k() + 1, i + 1); ++j) {
            bool hole = false;
            for (int p = j * m_ + 1; p < (j + 1) * m_; ++p) {
                if (board_.owner(p) == -1)
                    hole = true;
                else
                    require(!hole, "interval fill is not a prefix");
            }
        }
    }

    static size_t leaf_index(const std::vector<int>& clique, int u) {
        for (size_t j = 0; j < clique.size(); ++j)
            if (clique[j] == u)
                return j;
        throw std::logic_error("vertex not in phase clique");
    }

    void require(bool cond, const char* what) const {
        if (!cond)
            throw std::logic_error("layout construction invariant failed in phase " +
                                   std::to_string(phase_) + ": " + what);
    }

    JustifiedLayout finish() {
        JustifiedLayout out;
        out.m = m_;
        out.layout.position = board_.positions();
        for (int v = 0; v < g_.vertex_count(); ++v)
            require(out.layout.position[static_cast<size_t>(v)] != -1, "vertex left unplaced");
        out.layout.realized_bandwidth = verify_layout(g_, out.layout);
        require(out.layout.realized_bandwidth <= m_, "result is not an m-representation");
        for (int a : anchors_)
            out.anchor_positions.push_back(board_.pos(a));
        for (int j = 0; j < s_.k() + 2; ++j) {  // J_0..J_{k+1}
            int fill = 0;
            for (int p = j * m_ + 1; p < (j + 1) * m_; ++p)
                if (board_.owner(p) != -1)
                    ++fill;
            out.interval_fill.push_back(fill);
        }
        out.phase_plans = std::move(plans_);
        return out;
    }

    const Graph& g_;
    const CaterpillarStructure& s_;
    int m_;
    std::vector<int> anchors_;
    std::vector<std::vector<int>> blocks_;
    SlotBoard board_;
    std::vector<CliqueStarPlan> plans_;
    std::vector<int> own_first_pos_;  // scratch for the phase placement search
    int phase_ = 0;
};

}  // namespace detail

// Left-justified m-representation of an anchored clique-star (k <= 1; a
// star is promoted to the two-anchor form). Refuses when beta > m.
inline JustifiedLayout layout_clique_star(const CaterpillarStructure& s, const Graph& g, int m) {
    if (s.k() > 1)
        throw validation_error("clique-star layout requires k <= 1");
    DensityReport d = local_density_structured(s, g);
    if (d.beta > m)
        throw validation_error("local density " + std::to_string(d.beta) + " exceeds m = " +
                               std::to_string(m));
    return detail::JustifiedBuilder(g, s, m).run();
}

// Left-justified m-representation of an anchored block caterpillar, built by
// the iterative per-clique construction. Refuses when beta > m.
inline JustifiedLayout layout_block_caterpillar(const CaterpillarStructure& s, const Graph& g,
                                                int m) {
    DensityReport d = local_density_structured(s, g);
    if (d.beta > m)
        throw validation_error("local density " + std::to_string(d.beta) + " exceeds m = " +
                               std::to_string(m));
    return detail::JustifiedBuilder(g, s, m).run();
}

struct JustifiedViolation {
    int property;   // 0..3 per the definition, 4 = faithfulness, 5 = m-representation
    int interval;   // offending J_i, or -1
    std::string detail;
};

// Validates the four left-justified properties plus faithfulness and the
// m-bound. Violations are values, not faults.
inline std::vector<JustifiedViolation> check_left_justified(const JustifiedLayout& j,
                                                            const CaterpillarStructure& s,
                                                            const Graph& g) {
    std::vector<JustifiedViolation> out;
    const int m = j.m;
    const auto& pos = j.layout.position;
    auto anchors = s.anchor_path();
    auto blocks = s.blocks_with_synthetic();
    int k = s.k();

    for (size_t i = 0; i < anchors.size(); ++i)
        if (pos[static_cast<size_t>(anchors[i])] != static_cast<int>(i) * m)
            out.push_back({0, static_cast<int>(i), "anchor v_" + std::to_string(i) +
                                                       " is not at position " +
                                                       std::to_string(static_cast<int>(i) * m)});

    int top = (k + 2) * m;
    std::vector<bool> used(static_cast<size_t>(top) + 1, false);
    bool in_range = true;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int p = pos[static_cast<size_t>(v)];
        if (p < 0 || p > top) {
            in_range = false;
            continue;
        }
        used[static_cast<size_t>(p)] = true;
    }
    if (!in_range)
        out.push_back({5, -1, "positions outside 0..(k+2)m"});

    const int interval_count = k + 2;  // J_0..J_{k+1}
    std::vector<bool> full(static_cast<size_t>(interval_count) + 1, false);
    for (int i = 0; i <= interval_count - 1; ++i) {
        bool hole = false;
        bool ok = true;
        int fill = 0;
        for (int p = i * m + 1; p < (i + 1) * m; ++p) {
            if (!used[static_cast<size_t>(p)])
                hole = true;
            else {
                ++fill;
                if (hole)
                    ok = false;
            }
        }
        full[static_cast<size_t>(i)] = fill == m - 1;
        if (!ok)
            out.push_back({1, i, "filled positions in J_" + std::to_string(i) +
                                     " do not form a prefix"});
    }

    // Property 2: past a non-full J_i, the next interval holds no pendant
    // leaf of a B_i vertex. (Clique-to-clique adjacency is exempt: the next
    // clique legitimately lives in J_{i+1}.)
    for (int i = 0; i + 1 <= interval_count - 1; ++i) {
        if (full[static_cast<size_t>(i)])
            continue;
        for (int u : blocks[static_cast<size_t>(i)])
            for (int leaf : s.leaf_sets[static_cast<size_t>(u)]) {
                int p = pos[static_cast<size_t>(leaf)];
                if (p > (i + 1) * m && p < (i + 2) * m)
                    out.push_back({2, i, "leaf " + std::to_string(leaf) + " of block " +
                                             std::to_string(i) + " spilled past a non-full J_" +
                                             std::to_string(i)});
            }
    }

    // Property 3: each block sits below the leaves of its exit cutvertex.
    for (size_t i = 0; i + 1 < anchors.size(); ++i) {
        int exit = anchors[i + 1];
        int block_hi = std::numeric_limits<int>::min();
        for (int u : blocks[i])
            if (u != exit)
                block_hi = std::max(block_hi, pos[static_cast<size_t>(u)]);
        for (int leaf : s.leaf_sets[static_cast<size_t>(exit)])
            if (pos[static_cast<size_t>(leaf)] < block_hi)
                out.push_back({3, static_cast<int>(i),
                               "leaf " + std::to_string(leaf) + " of v_" +
                                   std::to_string(i + 1) + " sits below block " +
                                   std::to_string(i)});
    }

    // Faithfulness over all pendant leaves.
    {
        std::vector<std::pair<int, int>> leaf_parent;  // (leaf pos, parent pos)
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) == 1 && g.degree(g.neighbors(v)[0]) >= 2)
                leaf_parent.emplace_back(pos[static_cast<size_t>(v)],
                                         pos[static_cast<size_t>(g.neighbors(v)[0])]);
        std::sort(leaf_parent.begin(), leaf_parent.end());
        for (size_t a = 1; a < leaf_parent.size(); ++a)
            if (leaf_parent[a].second < leaf_parent[a - 1].second) {
                out.push_back({4, -1, "leaf order is not faithful"});
                break;
            }
    }

    for (auto [u, v] : g.edges())
        if (std::abs(pos[static_cast<size_t>(u)] - pos[static_cast<size_t>(v)]) > m) {
            out.push_back({5, -1, "edge " + std::to_string(u) + "-" + std::to_string(v) +
                                      " stretches beyond m"});
            break;
        }
    return out;
}

struct OptimalLayout {
    Layout layout;     // over the original vertices, condensed to 0..n-1
    int bandwidth = 0; // equals the local density of the input
};

// End-to-end: recognize, anchor, take m = beta, lay out, strip helper
// vertices, condense. The returned bound is both the local density and the
// realized bandwidth of the returned layout.
inline std::variant<OptimalLayout, Rejection> optimal_layout(const Graph& g) {
    if (g.vertex_count() <= 1) {
        // Edgeless degenerate; bandwidth 0 (augmentation would raise beta).
        OptimalLayout out;
        out.layout.position.assign(static_cast<size_t>(g.vertex_count()), 0);
        return out;
    }
    auto rec = recognize_block_caterpillar(g);
    if (std::holds_alternative<Rejection>(rec))
        return std::get<Rejection>(rec);
    auto [aug, s] = anchor_and_augment(std::get<CaterpillarStructure>(rec), g);
    DensityReport d = local_density_structured(s, aug);
    JustifiedLayout j = layout_block_caterpillar(s, aug, d.beta);

    OptimalLayout out;
    out.layout.position.assign(static_cast<size_t>(g.vertex_count()), 0);
    for (int v = 0; v < g.vertex_count(); ++v)
        out.layout.position[static_cast<size_t>(v)] = j.layout.position[static_cast<size_t>(v)];
    out.layout = condense(out.layout);
    out.bandwidth = verify_layout(g, out.layout);
    out.layout.realized_bandwidth = out.bandwidth;
    if (out.bandwidth != d.beta)
        throw std::logic_error("optimal layout does not realize the local density");
    return out;
}

}  // namespace blockband

#endif  // BLOCKBAND_LAYOUT_HPP
