#include "evg/solver_nd.hpp"

#include <algorithm>
#include <limits>

namespace evg {

namespace {

// neighborhood bitset rows; comparing two nodes' types is a masked row compare
struct BitRows {
    int n = 0, words = 0;
    std::vector<std::uint64_t> bits;

    explicit BitRows(const Graph& g) : n(g.node_count()), words((g.node_count() + 63) / 64) {
        bits.assign(static_cast<std::size_t>(n) * words, 0);
        for (int v = 0; v < n; ++v)
            for (int w : g.neighbors(v)) set(v, w);
    }
    void set(int v, int w) { bits[static_cast<std::size_t>(v) * words + w / 64] |= 1ull << (w % 64); }
    const std::uint64_t* row(int v) const { return &bits[static_cast<std::size_t>(v) * words]; }

    // N(u)\{v} == N(v)\{u}
    bool same_type(int u, int v) const {
        const std::uint64_t* a = row(u);
        const std::uint64_t* b = row(v);
        for (int w = 0; w < words; ++w) {
            std::uint64_t mask = ~0ull;
            if (u / 64 == w) mask &= ~(1ull << (u % 64));
            if (v / 64 == w) mask &= ~(1ull << (v % 64));
            if ((a[w] & mask) != (b[w] & mask)) return false;
        }
        return true;
    }
};

} // namespace

int TypePartition::class_of(int v) const {
    for (int i = 0; i < t(); ++i)
        if (std::binary_search(classes[i].begin(), classes[i].end(), v)) return i;
    return -1;
}

TypePartition compute_type_partition(const Graph& g) {
    const int n = g.node_count();
    BitRows rows(g);

    TypePartition p;
    std::vector<int> rep; // first member of each class
    for (int v = 0; v < n; ++v) {
        bool placed = false;
        for (std::size_t i = 0; i < rep.size() && !placed; ++i)
            if (rows.same_type(rep[i], v)) {
                p.classes[i].push_back(v);
                placed = true;
            }
        if (!placed) {
            p.classes.push_back({v});
            rep.push_back(v);
        }
    }

    const int t = p.t();
    p.is_clique.assign(t, true); // singletons are trivially cliques
    for (int i = 0; i < t; ++i)
        if (p.classes[i].size() >= 2)
            p.is_clique[i] = g.has_edge(p.classes[i][0], p.classes[i][1]);
    p.joined.assign(t, std::vector<bool>(t, false));
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            bool adj = g.has_edge(p.classes[i][0], p.classes[j][0]);
            p.joined[i][j] = p.joined[j][i] = adj;
        }
    return p;
}

int n_i_of(const Graph& g, const TypePartition& p, int class_i,
           const std::vector<int>& final_evangelists) {
    std::vector<bool> evg(g.node_count(), false);
    for (int v : final_evangelists) evg[v] = true;
    const int u0 = p.classes[class_i][0];
    int count = 0;
    for (int w : g.neighbors(u0))
        if (evg[w]) ++count;
    if (p.is_clique[class_i] && evg[u0]) ++count; // clique classes count themselves
    return count;
}

SeedSet me_nd_seed(const Graph& g, const TypePartition& p, const Composition& s) {
    const int t = p.t();
    if (static_cast<int>(s.size()) != t)
        throw PreconditionError("composition length must match partition");

    std::vector<std::vector<int>> chosen(t);
    for (int i = 0; i < t; ++i) {
        if (s[i] < 0 || s[i] > static_cast<int>(p.classes[i].size()))
            throw PreconditionError("composition entry exceeds class size");
        std::vector<int> order = p.classes[i];
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return g.threshold_evangelize(a) != g.threshold_evangelize(b)
                       ? g.threshold_evangelize(a) > g.threshold_evangelize(b)
                       : a < b;
        });
        chosen[i].assign(order.begin(), order.begin() + s[i]);
        std::sort(chosen[i].begin(), chosen[i].end());
    }

    SeedSet seed;
    for (const auto& c : chosen) seed.members.insert(seed.members.end(), c.begin(), c.end());
    std::sort(seed.members.begin(), seed.members.end());

    DiffusionResult first_run = run_diffusion(g, seed);
    std::vector<int> frozen_n(t);
    for (int i = 0; i < t; ++i) frozen_n[i] = n_i_of(g, p, i, first_run.evangelists);

#ifdef EVG_EXPENSIVE_CHECKS
    int last_inf = first_run.influenced_count();
#endif

    for (int i = 0; i < t; ++i) {
        std::vector<bool> in_seed(p.classes[i].size(), false);
        for (std::size_t idx = 0; idx < p.classes[i].size(); ++idx)
            in_seed[idx] = std::binary_search(chosen[i].begin(), chosen[i].end(),
                                              p.classes[i][idx]);
        // frozen N_i: swap-outs and swap-ins are fixed sets, pair them off in id order
        std::vector<std::size_t> outs, ins;
        for (std::size_t idx = 0; idx < p.classes[i].size(); ++idx) {
            int v = p.classes[i][idx];
            if (in_seed[idx] && g.threshold_influence(v) <= frozen_n[i]) outs.push_back(idx);
            if (!in_seed[idx] && g.threshold_influence(v) > frozen_n[i]) ins.push_back(idx);
        }
        const std::size_t swaps = std::min(outs.size(), ins.size());
        for (std::size_t k = 0; k < swaps; ++k) {
            in_seed[outs[k]] = false;
            in_seed[ins[k]] = true;
#ifdef EVG_EXPENSIVE_CHECKS
            SeedSet probe;
            for (int j = 0; j < t; ++j) {
                if (j == i) {
                    for (std::size_t idx = 0; idx < p.classes[i].size(); ++idx)
                        if (in_seed[idx]) probe.members.push_back(p.classes[i][idx]);
                } else {
                    probe.members.insert(probe.members.end(), chosen[j].begin(), chosen[j].end());
                }
            }
            std::sort(probe.members.begin(), probe.members.end());
            int now = influenced_count(g, probe);
            EVG_CHECK(now >= last_inf, "ME-ND swap shrank the influenced set");
            last_inf = now;
#endif
        }
        chosen[i].clear();
        for (std::size_t idx = 0; idx < p.classes[i].size(); ++idx)
            if (in_seed[idx]) chosen[i].push_back(p.classes[i][idx]);
    }

    seed.members.clear();
    for (const auto& c : chosen) seed.members.insert(seed.members.end(), c.begin(), c.end());
    std::sort(seed.members.begin(), seed.members.end());
    return seed;
}

std::uint64_t composition_count(const TypePartition& p, int beta) {
    // capped stars and bars via polynomial product, saturating
    const std::uint64_t cap = std::numeric_limits<std::uint64_t>::max() / 2;
    std::vector<std::uint64_t> ways(beta + 1, 0);
    ways[0] = 1;
    for (int i = 0; i < p.t(); ++i) {
        const int size = static_cast<int>(p.classes[i].size());
        std::vector<std::uint64_t> next(beta + 1, 0);
        for (int b = 0; b <= beta; ++b) {
            if (ways[b] == 0) continue;
            for (int take = 0; take <= size && b + take <= beta; ++take)
                next[b + take] = std::min(cap, next[b + take] + ways[b]);
        }
        ways = std::move(next);
    }
    return ways[beta];
}

namespace {

template <typename F>
void for_each_composition(const TypePartition& p, int beta, F&& visit) {
    const int t = p.t();
    Composition s(t, 0);
    // lexicographic: position 0 varies slowest
    std::vector<int> suffix_cap(t + 1, 0);
    for (int i = t - 1; i >= 0; --i)
        suffix_cap[i] = suffix_cap[i + 1] + static_cast<int>(p.classes[i].size());

    auto rec = [&](auto&& self, int i, int remaining) -> void {
        if (i == t) {
            if (remaining == 0) visit(s);
            return;
        }
        const int size = static_cast<int>(p.classes[i].size());
        for (int take = std::max(0, remaining - suffix_cap[i + 1]);
             take <= std::min(size, remaining); ++take) {
            s[i] = take;
            self(self, i + 1, remaining - take);
        }
        s[i] = 0;
    };
    rec(rec, 0, beta);
}

} // namespace

SolveResult solve_mes_nd(const Graph& g, int beta, std::uint64_t max_compositions) {
    if (beta < 0) throw PreconditionError("negative budget");
    const int n = g.node_count();
    beta = std::min(beta, n);

    TypePartition p = compute_type_partition(g);
    const std::uint64_t count = composition_count(p, beta);
    if (count > max_compositions)
        throw WorkGuardError("type-partition enumeration needs " + std::to_string(count) +
                             " compositions, guard is " + std::to_string(max_compositions));

    SolveResult best;
    best.solver = "nd";
    best.objective = -1;
    for_each_composition(p, beta, [&](const Composition& s) {
        SeedSet seed = me_nd_seed(g, p, s);
        int obj = influenced_count(g, seed);
        ++best.explored;
        if (obj > best.objective) { // first composition in lex order wins ties
            best.objective = obj;
            best.seed = seed;
        }
    });
    if (best.objective < 0) { // n == 0
        best.objective = 0;
        best.seed.members.clear();
    }
    best.seed.budget = beta;
    return best;
}

DecisionResult solve_mes_vc(const Graph& g, const std::vector<int>& cover, int alpha, int beta) {
    const int n = g.node_count();
    std::vector<bool> in_cover(n, false);
    for (int v : cover) {
        if (v < 0 || v >= n) throw PreconditionError("cover node out of range");
        in_cover[v] = true;
    }
    for (auto [u, v] : g.edges())
        if (!in_cover[u] && !in_cover[v])
            throw PreconditionError("not a vertex cover: edge " + std::to_string(u) + "-" +
                                    std::to_string(v) + " uncovered");

    const int ell = static_cast<int>(cover.size());
    DecisionResult r;
    if (beta >= ell) {
        // try the cover itself, but verify by simulation: a node with
        // t_E = d+1 outside the cover does not evangelize after one round
        SeedSet s;
        s.members = cover;
        std::sort(s.members.begin(), s.members.end());
        s.budget = beta;
        int obj = influenced_count(g, s);
        if (obj >= alpha) {
            r.feasible = true;
            r.seed = s;
            r.objective = obj;
            r.solver = "vc-cover";
            return r;
        }
    }
    SolveResult nd = solve_mes_nd(g, beta);
    r.feasible = nd.objective >= alpha;
    r.seed = nd.seed;
    r.objective = nd.objective;
    r.solver = "vc-nd";
    return r;
}

namespace {

bool cover_branch(const Graph& g, std::vector<std::pair<int, int>>& edges,
                  std::vector<bool>& removed, int budget, std::vector<int>& chosen,
                  std::vector<int>& best) {
    std::pair<int, int> pick{-1, -1};
    for (auto [u, v] : edges)
        if (!removed[u] && !removed[v]) {
            pick = {u, v};
            break;
        }
    if (pick.first < 0) {
        if (best.empty() || chosen.size() < best.size()) best = chosen;
        return true;
    }
    if (budget == 0) return false;
    for (int w : {pick.first, pick.second}) {
        removed[w] = true;
        chosen.push_back(w);
        cover_branch(g, edges, removed, budget - 1, chosen, best);
        chosen.pop_back();
        removed[w] = false;
    }
    return !best.empty();
}

} // namespace

std::vector<int> minimum_vertex_cover(const Graph& g, int max_n) {
    if (g.node_count() > max_n)
        throw WorkGuardError("vertex cover helper guard: n > " + std::to_string(max_n));
    auto edges = g.edges();
    std::vector<bool> removed(g.node_count(), false);
    std::vector<int> chosen, best;
    for (int budget = 0; budget <= g.node_count(); ++budget) {
        if (cover_branch(g, edges, removed, budget, chosen, best)) break;
    }
    std::sort(best.begin(), best.end());
    return best;
}

} // namespace evg
