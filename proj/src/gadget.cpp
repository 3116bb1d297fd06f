#include "evg/gadget.hpp"

#include <algorithm>
#include <numeric>

#include "evg/diffusion.hpp"

namespace evg {

IMInstance make_im_instance(Graph g, int budget) {
    for (int v = 0; v < g.node_count(); ++v)
        if (g.threshold_influence(v) != g.threshold_evangelize(v))
            throw ParseError("IM instance requires t_I == t_E, node " + std::to_string(v) +
                             " differs");
    if (budget < 0 || budget > g.node_count())
        throw PreconditionError("IM budget out of range");
    return IMInstance{std::move(g), budget};
}

Graph im_to_mes_gadget(const IMInstance& im) {
    const Graph& g = im.graph;
    const int n = g.node_count();
    const int total = n * (n + 1);

    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edge_count() + static_cast<std::size_t>(n) * n);
    for (auto [u, v] : g.edges())
        edges.emplace_back(gadget_center(u, n), gadget_center(v, n));
    for (int i = 0; i < n; ++i)
        for (int j = 1; j <= n; ++j)
            edges.emplace_back(gadget_center(i, n), gadget_center(i, n) + j);

    std::vector<std::pair<int, int>> th(total);
    for (int i = 0; i < n; ++i) {
        const int te = g.threshold_evangelize(i); // == t(v_i)
        th[gadget_center(i, n)] = {std::min(1, te), te};
        for (int j = 1; j <= n; ++j) th[gadget_center(i, n) + j] = {1, 1};
    }
    return Graph::build(total, std::move(edges), std::move(th));
}

namespace {

// best objective over all seeds of size <= beta, via `eval`
template <typename Eval>
int max_over_seeds(int n, int beta, Eval&& eval) {
    int best = eval(std::vector<int>{});
    std::vector<int> members;
    auto rec = [&](auto&& self, int next, int remaining) -> void {
        if (remaining == 0 || next == n) return;
        for (int v = next; v < n; ++v) {
            members.push_back(v);
            best = std::max(best, eval(members));
            self(self, v + 1, remaining - 1);
            members.pop_back();
        }
    };
    rec(rec, 0, beta);
    return best;
}

} // namespace

GadgetReport verify_gadget_correspondence(const IMInstance& im, int k) {
    const int n = im.graph.node_count();
    if (n > 5) throw WorkGuardError("gadget verification guard: n > 5");

    GadgetReport r;
    r.im_optimum = max_over_seeds(n, im.budget, [&](const std::vector<int>& members) {
        SeedSet s;
        s.members = members;
        return run_diffusion(im.graph, s).evangelist_count();
    });

    Graph gadget = im_to_mes_gadget(im);
    r.mes_optimum = max_over_seeds(gadget.node_count(), im.budget,
                                   [&](const std::vector<int>& members) {
                                       SeedSet s;
                                       s.members = members;
                                       return run_diffusion(gadget, s).influenced_count();
                                   });

    r.im_reaches = r.im_optimum >= k;
    r.mes_reaches = r.mes_optimum >= static_cast<long long>(k) * (n + 1);
    return r;
}

} // namespace evg
