#include "evg/solver_tree.hpp"

#include <algorithm>

#include "evg/diffusion.hpp"

namespace evg {

namespace {

int residual(int t) { return std::max(t - 1, 0); }

int max2(int a, int b) { return std::max(a, b); }
int max3(int a, int b, int c) { return std::max(a, std::max(b, c)); }

// Dense (i, j, k) tables flattened over j-major-then-k; i in 1..d maps to slot i-1.
struct Grid3 {
    int jdim = 0, kdim = 0;
    std::vector<int> cells;
    void init(int d, int jd, int kd) {
        jdim = jd;
        kdim = kd;
        cells.assign(static_cast<std::size_t>(d) * jd * kd, kNegInf);
    }
    int& at(int i, int j, int k) {
        return cells[(static_cast<std::size_t>(i - 1) * jdim + j) * kdim + k];
    }
    int at(int i, int j, int k) const {
        return cells[(static_cast<std::size_t>(i - 1) * jdim + j) * kdim + k];
    }
};

struct Grid2 {
    int jdim = 0;
    std::vector<int> cells;
    void init(int d, int jd) {
        jdim = jd;
        cells.assign(static_cast<std::size_t>(d) * jd, kNegInf);
    }
    int& at(int i, int j) { return cells[static_cast<std::size_t>(i - 1) * jdim + j]; }
    int at(int i, int j) const { return cells[static_cast<std::size_t>(i - 1) * jdim + j]; }
};

int best_not_evangelist(const NodeTables& t, int j) { return max2(t.no[j], t.inf[j]); }
int best_hatted(const NodeTables& t, int j) { return max3(t.no_hat[j], t.inf_hat[j], t.evg_hat[j]); }

// A[i,j,k]: best influenced total over the first i child subtrees with <= j seeds
// and exactly k child roots ending as evangelists, while v itself never evangelizes
// (children keep their original thresholds).
// C[i,j]: same but v is a seed, so children use residual thresholds; no k needed.
// D[i,j,k]: v ends an evangelist without being seeded; the k counted children
// evangelize on their own (original Evg), the rest lean on v (residual tables).
struct Abcd {
    int d = 0;
    int kcap_a = -1; // A computed for k in 0..kcap_a; -1 = A not needed
    Grid3 a;
    Grid2 c;
    Grid3 dt;
};

Abcd compute_abcd(int t_inf, int t_evg,
                  const std::vector<const NodeTables*>& children, int beta,
                  std::uint64_t* ops) {
    Abcd r;
    r.d = static_cast<int>(children.size());
    const int d = r.d;
    std::uint64_t local_ops = 0;

    r.kcap_a = std::min(d, t_evg - 1); // every A read uses k <= t_E(v)-1
    if (r.kcap_a >= 0) {
        r.a.init(d, beta + 1, r.kcap_a + 1);
        const NodeTables& c0 = *children[0];
        for (int j = 0; j <= beta; ++j) {
            r.a.at(1, j, 0) = best_not_evangelist(c0, j);
            if (r.kcap_a >= 1) r.a.at(1, j, 1) = c0.evg[j];
            ++local_ops;
        }
        for (int i = 2; i <= d; ++i) {
            const NodeTables& ci = *children[i - 1];
            for (int j = 0; j <= beta; ++j)
                for (int k = 0; k <= r.kcap_a; ++k) {
                    int best = kNegInf;
                    for (int a = 0; a <= j; ++a) {
                        best = max2(best, ext_add(r.a.at(i - 1, a, k),
                                                  best_not_evangelist(ci, j - a)));
                        if (k >= 1)
                            best = max2(best, ext_add(r.a.at(i - 1, a, k - 1), ci.evg[j - a]));
                    }
                    r.a.at(i, j, k) = best;
                    local_ops += j + 1;
                }
        }
    }

    r.c.init(d, beta + 1);
    for (int j = 0; j <= beta; ++j) {
        r.c.at(1, j) = best_hatted(*children[0], j);
        ++local_ops;
    }
    for (int i = 2; i <= d; ++i) {
        const NodeTables& ci = *children[i - 1];
        for (int j = 0; j <= beta; ++j) {
            int best = kNegInf;
            for (int a = 0; a <= j; ++a)
                best = max2(best, ext_add(r.c.at(i - 1, a), best_hatted(ci, j - a)));
            r.c.at(i, j) = best;
            local_ops += j + 1;
        }
    }

    r.dt.init(d, beta + 1, d + 1);
    const NodeTables& c0 = *children[0];
    for (int j = 0; j <= beta; ++j) {
        r.dt.at(1, j, 0) = best_hatted(c0, j);
        if (d >= 1) r.dt.at(1, j, 1) = c0.evg[j];
        ++local_ops;
    }
    for (int i = 2; i <= d; ++i) {
        const NodeTables& ci = *children[i - 1];
        for (int j = 0; j <= beta; ++j)
            for (int k = 0; k <= d; ++k) {
                int best = kNegInf;
                for (int a = 0; a <= j; ++a) {
                    best = max2(best, ext_add(r.dt.at(i - 1, a, k), best_hatted(ci, j - a)));
                    if (k >= 1)
                        best = max2(best, ext_add(r.dt.at(i - 1, a, k - 1), ci.evg[j - a]));
                }
                r.dt.at(i, j, k) = best;
                local_ops += j + 1;
            }
    }

    (void)t_inf;
    if (ops) *ops += local_ops;
    return r;
}

// max over A[d, b, k] for k in [klo, khi] (clamped to computed range)
int a_range_max(const Abcd& t, int b, int klo, int khi) {
    khi = std::min(khi, t.kcap_a);
    int best = kNegInf;
    for (int k = std::max(klo, 0); k <= khi; ++k) best = max2(best, t.a.at(t.d, b, k));
    return best;
}

int m1_value(const Abcd& t, int b, int t_evg_eff) {
    if (b < 1 || t_evg_eff == 0) return kNegInf; // seeding a free evangelist is never needed
    return ext_add(t.c.at(t.d, b - 1), 1);
}

int m2_value(const Abcd& t, int b, int t_evg_eff) {
    if (t_evg_eff > t.d) return kNegInf;
    int best = kNegInf;
    for (int k = t_evg_eff; k <= t.d; ++k) best = max2(best, t.dt.at(t.d, b, k));
    return ext_add(best, 1);
}

void check_rows(const NodeTables& t, int beta) {
    auto monotone = [&](const std::vector<int>& row) {
        for (int b = 1; b <= beta; ++b)
            EVG_CHECK(row[b] >= row[b - 1], "tree DP row not monotone in budget");
    };
    monotone(t.no);
    monotone(t.inf);
    monotone(t.evg);
    monotone(t.no_hat);
    monotone(t.inf_hat);
    monotone(t.evg_hat);
    for (int b = 0; b <= beta; ++b) {
        EVG_CHECK(t.evg[b] <= t.evg_hat[b], "residual thresholds must not hurt Evg");
        EVG_CHECK(max3(t.no[b], t.inf[b], t.evg[b]) <=
                      max3(t.no_hat[b], t.inf_hat[b], t.evg_hat[b]),
                  "residual thresholds must not hurt the best state");
    }
}

} // namespace

NodeTables leaf_tables(int t_inf, int t_evg, int beta) {
    NodeTables t;
    auto fill = [&](std::vector<int>& no, std::vector<int>& inf, std::vector<int>& evg,
                    int ti, int te) {
        no.assign(beta + 1, ti > 0 ? 0 : kNegInf);
        inf.assign(beta + 1, (ti == 0 && te > 0) ? 1 : kNegInf);
        evg.assign(beta + 1, te == 0 ? 1 : kNegInf);
        if (te > 0)
            for (int b = 1; b <= beta; ++b) evg[b] = 1;
    };
    fill(t.no, t.inf, t.evg, t_inf, t_evg);
    fill(t.no_hat, t.inf_hat, t.evg_hat, residual(t_inf), residual(t_evg));
    return t;
}

NodeTables leaf_tables(const Graph& g, int leaf, int beta) {
    return leaf_tables(g.threshold_influence(leaf), g.threshold_evangelize(leaf), beta);
}

namespace {

AgnosticRows agnostic_rows_from(const Abcd& t, int t_inf, int t_evg, int beta) {
    AgnosticRows rows;
    rows.no.assign(beta + 1, kNegInf);
    rows.inf.assign(beta + 1, kNegInf);
    rows.no_hat.assign(beta + 1, kNegInf);
    rows.inf_hat.assign(beta + 1, kNegInf);
    if (t.kcap_a < 0) return rows;
    const int rti = residual(t_inf), rte = residual(t_evg);
    for (int b = 0; b <= beta; ++b) {
        rows.no[b] = a_range_max(t, b, 0, t_inf - 1);
        rows.inf[b] = ext_add(a_range_max(t, b, t_inf, t_evg - 1), 1);
        rows.no_hat[b] = a_range_max(t, b, 0, rti - 1);
        rows.inf_hat[b] = ext_add(a_range_max(t, b, rti, rte - 1), 1);
    }
    return rows;
}

EvangelistRows evangelist_rows_from(const Abcd& t, int t_evg, int beta) {
    EvangelistRows rows;
    rows.evg.assign(beta + 1, kNegInf);
    rows.evg_hat.assign(beta + 1, kNegInf);
    const int rte = residual(t_evg);
    for (int b = 0; b <= beta; ++b) {
        rows.evg[b] = max2(m1_value(t, b, t_evg), m2_value(t, b, t_evg));
        rows.evg_hat[b] = max2(m1_value(t, b, rte), m2_value(t, b, rte));
    }
    return rows;
}

} // namespace

AgnosticRows combine_agnostic(int t_inf, int t_evg,
                              const std::vector<const NodeTables*>& children, int beta,
                              std::uint64_t* ops) {
    return agnostic_rows_from(compute_abcd(t_inf, t_evg, children, beta, ops),
                              t_inf, t_evg, beta);
}

EvangelistRows combine_evangelist(int t_inf, int t_evg,
                                  const std::vector<const NodeTables*>& children, int beta,
                                  std::uint64_t* ops) {
    return evangelist_rows_from(compute_abcd(t_inf, t_evg, children, beta, ops), t_evg, beta);
}

NodeTables combine_node_tables(int t_inf, int t_evg,
                               const std::vector<const NodeTables*>& children, int beta,
                               std::uint64_t* ops) {
    Abcd abcd = compute_abcd(t_inf, t_evg, children, beta, ops);
    AgnosticRows a = agnostic_rows_from(abcd, t_inf, t_evg, beta);
    EvangelistRows e = evangelist_rows_from(abcd, t_evg, beta);
    NodeTables t;
    t.no = std::move(a.no);
    t.inf = std::move(a.inf);
    t.no_hat = std::move(a.no_hat);
    t.inf_hat = std::move(a.inf_hat);
    t.evg = std::move(e.evg);
    t.evg_hat = std::move(e.evg_hat);
    return t;
}

namespace {

enum class State { no, inf, evg, no_hat, inf_hat, evg_hat };

struct TreeDp {
    const Graph& g;
    const int beta;
    std::vector<int> parent;
    std::vector<std::vector<int>> kids;
    std::vector<NodeTables> tables;
    std::uint64_t ops = 0;

    TreeDp(const Graph& graph, int b) : g(graph), beta(b) {
        const int n = g.node_count();
        parent.assign(n, -1);
        kids.assign(n, {});
        tables.resize(n);
    }

    int row(int v, State s, int b) const {
        const NodeTables& t = tables[v];
        switch (s) {
            case State::no: return t.no[b];
            case State::inf: return t.inf[b];
            case State::evg: return t.evg[b];
            case State::no_hat: return t.no_hat[b];
            case State::inf_hat: return t.inf_hat[b];
            case State::evg_hat: return t.evg_hat[b];
        }
        return kNegInf;
    }

    std::vector<const NodeTables*> child_tables(int v) const {
        std::vector<const NodeTables*> out;
        out.reserve(kids[v].size());
        for (int c : kids[v]) out.push_back(&tables[c]);
        return out;
    }

    // roots the component at `root` and returns its nodes in postorder
    std::vector<int> build_rooted(int root) {
        std::vector<int> order, stack{root};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            order.push_back(v);
            for (int w : g.neighbors(v)) {
                if (w == parent[v]) continue;
                EVG_CHECK(parent[w] == -1 && w != root, "cycle in tree solver input");
                parent[w] = v;
                kids[v].push_back(w); // neighbors are sorted, so kids end up ascending
                stack.push_back(w);
            }
        }
        std::reverse(order.begin(), order.end());
        return order;
    }

    void compute_component(int root) {
        for (int v : build_rooted(root)) {
            if (kids[v].empty()) {
                tables[v] = leaf_tables(g, v, beta);
                ops += 6u * (beta + 1);
            } else {
                tables[v] = combine_node_tables(g.threshold_influence(v),
                                                g.threshold_evangelize(v),
                                                child_tables(v), beta, &ops);
            }
            check_rows(tables[v], beta);
        }
    }

    // --- seed reconstruction ------------------------------------------------

    struct Pending {
        int v;
        State s;
        int b;
    };

    static State pick_not_evangelist(const NodeTables& t, int j, int value, bool hatted) {
        if (!hatted) return t.no[j] == value ? State::no : State::inf;
        return t.no_hat[j] == value ? State::no_hat : State::inf_hat;
    }

    static State pick_hatted(const NodeTables& t, int j, int value) {
        if (t.no_hat[j] == value) return State::no_hat;
        if (t.inf_hat[j] == value) return State::inf_hat;
        return State::evg_hat;
    }

    void walk_chain(const Abcd& t, int v, bool use_a, int b, int k,
                    std::vector<Pending>& out) const {
        // peel children d..2, then resolve the base child
        const Grid3& grid = use_a ? t.a : t.dt;
        int j = b;
        for (int i = t.d; i >= 2; --i) {
            const NodeTables& ci = tables[kids[v][i - 1]];
            const int target = grid.at(i, j, k);
            bool placed = false;
            for (int a = 0; a <= j && !placed; ++a) {
                int stay = use_a ? best_not_evangelist(ci, j - a) : best_hatted(ci, j - a);
                if (ext_add(grid.at(i - 1, a, k), stay) == target) {
                    out.push_back({kids[v][i - 1],
                                   use_a ? pick_not_evangelist(ci, j - a, stay, false)
                                         : pick_hatted(ci, j - a, stay),
                                   j - a});
                    j = a;
                    placed = true;
                    break;
                }
                if (k >= 1 && ext_add(grid.at(i - 1, a, k - 1), ci.evg[j - a]) == target) {
                    out.push_back({kids[v][i - 1], State::evg, j - a});
                    j = a;
                    --k;
                    placed = true;
                    break;
                }
            }
            EVG_CHECK(placed, "tree DP backtrack failed to split a table cell");
        }
        const NodeTables& c0 = tables[kids[v][0]];
        EVG_CHECK(k <= 1, "tree DP backtrack left an impossible evangelist count");
        if (k == 1) {
            out.push_back({kids[v][0], State::evg, j});
        } else {
            int stay = use_a ? best_not_evangelist(c0, j) : best_hatted(c0, j);
            out.push_back({kids[v][0],
                           use_a ? pick_not_evangelist(c0, j, stay, false) : pick_hatted(c0, j, stay),
                           j});
        }
    }

    void walk_c(const Abcd& t, int v, int b, std::vector<Pending>& out) const {
        int j = b;
        for (int i = t.d; i >= 2; --i) {
            const NodeTables& ci = tables[kids[v][i - 1]];
            const int target = t.c.at(i, j);
            bool placed = false;
            for (int a = 0; a <= j; ++a) {
                int gain = best_hatted(ci, j - a);
                if (ext_add(t.c.at(i - 1, a), gain) == target) {
                    out.push_back({kids[v][i - 1], pick_hatted(ci, j - a, gain), j - a});
                    j = a;
                    placed = true;
                    break;
                }
            }
            EVG_CHECK(placed, "tree DP backtrack failed on the seeded-parent table");
        }
        const NodeTables& c0 = tables[kids[v][0]];
        out.push_back({kids[v][0], pick_hatted(c0, j, best_hatted(c0, j)), j});
    }

    void reconstruct(int root, State s, int b, std::vector<int>& seed) const {
        std::vector<Pending> stack{{root, s, b}};
        while (!stack.empty()) {
            auto [v, state, budget] = stack.back();
            stack.pop_back();
            const int value = row(v, state, budget);
            EVG_CHECK(is_finite(value), "tree DP backtrack entered an infeasible cell");
            const int ti = g.threshold_influence(v), te = g.threshold_evangelize(v);
            const bool hatted = state == State::no_hat || state == State::inf_hat ||
                                state == State::evg_hat;
            const int ti_eff = hatted ? residual(ti) : ti;
            const int te_eff = hatted ? residual(te) : te;

            if (kids[v].empty()) {
                if ((state == State::evg || state == State::evg_hat) && te_eff > 0)
                    seed.push_back(v); // the only way a childless node evangelizes
                continue;
            }

            Abcd t = compute_abcd(ti, te, child_tables(v), beta, nullptr);
            if (state == State::evg || state == State::evg_hat) {
                if (m1_value(t, budget, te_eff) == value) {
                    seed.push_back(v);
                    walk_c(t, v, budget - 1, stack);
                    continue;
                }
                bool placed = false;
                for (int k = te_eff; k <= t.d && !placed; ++k)
                    if (ext_add(t.dt.at(t.d, budget, k), 1) == value) {
                        walk_chain(t, v, /*use_a=*/false, budget, k, stack);
                        placed = true;
                    }
                EVG_CHECK(placed, "tree DP backtrack found no evangelizing split");
            } else {
                const int off = (state == State::inf || state == State::inf_hat) ? 1 : 0;
                int klo = off ? ti_eff : 0;
                int khi = std::min(off ? te_eff - 1 : ti_eff - 1, t.kcap_a);
                bool placed = false;
                for (int k = std::max(klo, 0); k <= khi && !placed; ++k)
                    if (ext_add(t.a.at(t.d, budget, k), off) == value) {
                        walk_chain(t, v, /*use_a=*/true, budget, k, stack);
                        placed = true;
                    }
                EVG_CHECK(placed, "tree DP backtrack found no agnostic split");
            }
        }
    }
};

} // namespace

SolveResult solve_mes_tree(const Graph& g, int beta) {
    if (!g.is_forest()) throw PreconditionError("tree solver requires an acyclic input");
    if (beta < 0) throw PreconditionError("negative budget");
    const int n = g.node_count();
    beta = std::min(beta, n);

    TreeDp dp(g, beta);
    auto comps = g.connected_components();
    const int nc = static_cast<int>(comps.size());
    for (const auto& comp : comps) dp.compute_component(comp[0]);

    // knapsack over component roots: value of giving budget b to component c
    std::vector<std::vector<int>> comp_val(nc, std::vector<int>(beta + 1, 0));
    for (int c = 0; c < nc; ++c) {
        int root = comps[c][0];
        for (int b = 0; b <= beta; ++b)
            comp_val[c][b] = max3(dp.tables[root].no[b], dp.tables[root].inf[b],
                                  dp.tables[root].evg[b]);
    }
    std::vector<std::vector<int>> total(nc, std::vector<int>(beta + 1, 0));
    std::vector<std::vector<int>> split(nc, std::vector<int>(beta + 1, 0)); // budget kept by prefix
    total[0] = comp_val[0];
    for (int c = 1; c < nc; ++c)
        for (int b = 0; b <= beta; ++b) {
            int best = kNegInf, arg = 0;
            for (int a = 0; a <= b; ++a) {
                int cand = ext_add(total[c - 1][a], comp_val[c][b - a]);
                if (cand > best) {
                    best = cand;
                    arg = a;
                }
            }
            total[c][b] = best;
            split[c][b] = arg;
        }

    SolveResult res;
    res.solver = "tree";
    res.objective = total[nc - 1][beta];
    res.explored = dp.ops;
    EVG_CHECK(res.objective >= 0, "tree DP produced an infeasible optimum");

    std::vector<int> alloc(nc, 0);
    int rem = beta;
    for (int c = nc - 1; c >= 1; --c) {
        alloc[c] = rem - split[c][rem];
        rem = split[c][rem];
    }
    alloc[0] = rem;

    std::vector<int> seed;
    for (int c = 0; c < nc; ++c) {
        int root = comps[c][0];
        const NodeTables& t = dp.tables[root];
        int b = alloc[c], want = comp_val[c][b];
        State s = t.no[b] == want ? State::no : (t.inf[b] == want ? State::inf : State::evg);
        dp.reconstruct(root, s, b, seed);
    }
    std::sort(seed.begin(), seed.end());
    res.seed.members = std::move(seed);
    res.seed.budget = beta;

    EVG_CHECK(res.seed.size() <= beta, "tree DP reconstructed an oversized seed");
    EVG_CHECK(influenced_count(g, res.seed) == res.objective,
              "tree DP seed does not reproduce the claimed objective");
    return res;
}

} // namespace evg
