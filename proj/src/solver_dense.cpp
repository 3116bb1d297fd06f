#include "evg/solver_dense.hpp"

#include <algorithm>

#include "evg/diffusion.hpp"

namespace evg {

DensePrecheck check_dense_preconditions(const Graph& g, int te_bar, int ti_bar) {
    const int n = g.node_count();
    DensePrecheck r;
    r.required_degree = std::max(0, (n + te_bar + ti_bar + 1) / 2 - 2);
    r.min_degree = n > 0 ? g.degree(0) : 0;
    for (int v = 1; v < n; ++v) r.min_degree = std::min(r.min_degree, g.degree(v));

    if (te_bar < 0 || ti_bar < 0) {
        r.violation = "threshold bounds must be non-negative";
        return r;
    }
    for (int v = 0; v < n; ++v) {
        if (g.threshold_evangelize(v) > te_bar) {
            r.violation = "node " + std::to_string(v) + " has t_E above the bound";
            return r;
        }
        if (g.threshold_influence(v) > ti_bar) {
            r.violation = "node " + std::to_string(v) + " has t_I above the bound";
            return r;
        }
    }
    if (te_bar + ti_bar > n + 2) {
        r.violation = "te_bar + ti_bar exceeds n + 2";
        return r;
    }
    if (r.min_degree < r.required_degree) {
        r.violation = "minimum degree " + std::to_string(r.min_degree) + " below " +
                      std::to_string(r.required_degree);
        return r;
    }
    r.ok = true;
    return r;
}

SolveResult build_pes_dense(const Graph& g, int te_bar, int ti_bar) {
    DensePrecheck pre = check_dense_preconditions(g, te_bar, ti_bar);
    if (!pre.ok) throw PreconditionError("dense PES preconditions fail: " + pre.violation);

    const int n = g.node_count();
    std::vector<bool> in_s(n, false);
    int size = 0;
    auto add = [&](int v) {
        in_s[v] = true;
        ++size;
    };

    // initial ti_bar nodes, preferring the lowest-id non-adjacent pair
    if (ti_bar >= 2) {
        for (int u = 0; u < n && size == 0; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!g.has_edge(u, v)) {
                    add(u);
                    add(v);
                    break;
                }
    }
    for (int v = 0; v < n && size < ti_bar; ++v)
        if (!in_s[v]) add(v);
    EVG_CHECK(size == std::min(ti_bar, n), "dense PES could not form the initial set");

    SolveResult res;
    res.solver = "dense-pes";
    res.explored = size;

    while (size < 2 * (te_bar - 1)) {
        int pick = -1;
        for (int v = 0; v < n && pick < 0; ++v) {
            if (in_s[v]) continue;
            int hits = 0;
            for (int w : g.neighbors(v))
                if (in_s[w]) ++hits;
            if (hits <= ti_bar - 1) pick = v;
        }
        if (pick < 0) break;
        add(pick);
        ++res.explored;
    }
    // loop exit via Fact 5: either |S| hit 2(te_bar-1) or everyone outside sees >= ti_bar seeds
#ifdef EVG_EXPENSIVE_CHECKS
    if (size < 2 * (te_bar - 1))
        for (int v = 0; v < n; ++v) {
            if (in_s[v]) continue;
            int hits = 0;
            for (int w : g.neighbors(v))
                if (in_s[w]) ++hits;
            EVG_CHECK(hits >= ti_bar, "dense PES exit condition violated");
        }
#endif

    for (int v = 0; v < n; ++v)
        if (in_s[v]) res.seed.members.push_back(v);
    res.objective = res.seed.size();
    res.seed.budget = res.objective;

    EVG_CHECK(res.seed.size() <= std::max(ti_bar, 2 * te_bar - 2),
              "dense PES exceeded its size bound");
    EVG_CHECK(influenced_count(g, res.seed) == n,
              "dense PES seed is not perfect despite valid preconditions");
    return res;
}

} // namespace evg
