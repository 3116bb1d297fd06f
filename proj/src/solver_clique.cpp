#include "evg/solver_clique.hpp"

#include <algorithm>
#include <numeric>

#include "evg/diffusion.hpp"

namespace evg {

SolveResult solve_mes_clique(const Graph& g, int beta) {
    if (!g.is_complete()) throw PreconditionError("clique solver requires a complete graph");
    if (beta < 0) throw PreconditionError("negative budget");
    const int n = g.node_count();
    beta = std::min(beta, n);

    // top-beta by (t_E desc, id asc); nth_element keeps the selection linear
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    auto prefer = [&](int a, int b) {
        int ta = g.threshold_evangelize(a), tb = g.threshold_evangelize(b);
        return ta != tb ? ta > tb : a < b;
    };
    if (beta > 0 && beta < n)
        std::nth_element(order.begin(), order.begin() + beta - 1, order.end(), prefer);

    std::vector<bool> in_seed(n, false);
    for (int i = 0; i < beta; ++i) in_seed[order[i]] = true;

    SeedSet seed;
    for (int v = 0; v < n; ++v)
        if (in_seed[v]) seed.members.push_back(v);

    const int eta = run_diffusion(g, seed).evangelist_count(); // eta* is frozen here
    SolveResult res;
    res.solver = "clique";
    res.explored = 1;

    // pair off, in ascending id order, seeds the cascade influences anyway with
    // outsiders it cannot reach; each node moves at most once
    std::vector<int> out_list, in_list;
    for (int v = 0; v < n; ++v) {
        if (in_seed[v] && g.threshold_influence(v) <= eta) out_list.push_back(v);
        if (!in_seed[v] && g.threshold_influence(v) > eta) in_list.push_back(v);
    }
    const std::size_t swaps = std::min(out_list.size(), in_list.size());
#ifdef EVG_EXPENSIVE_CHECKS
    int last_inf = influenced_count(g, seed);
#endif
    for (std::size_t i = 0; i < swaps; ++i) {
        in_seed[out_list[i]] = false;
        in_seed[in_list[i]] = true;
        ++res.explored;
#ifdef EVG_EXPENSIVE_CHECKS
        SeedSet probe;
        for (int v = 0; v < n; ++v)
            if (in_seed[v]) probe.members.push_back(v);
        int now = influenced_count(g, probe);
        EVG_CHECK(now >= last_inf, "clique swap shrank the influenced set");
        last_inf = now;
#endif
    }

    seed.members.clear();
    for (int v = 0; v < n; ++v)
        if (in_seed[v]) seed.members.push_back(v);
    seed.budget = beta;

    res.seed = seed;
    res.objective = influenced_count(g, seed);
    return res;
}

} // namespace evg
