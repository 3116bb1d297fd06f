#include "evg/diffusion.hpp"

#include <algorithm>

namespace evg {

namespace {

std::vector<int> collect(const std::vector<bool>& mark) {
    std::vector<int> out;
    for (std::size_t v = 0; v < mark.size(); ++v)
        if (mark[v]) out.push_back(static_cast<int>(v));
    return out;
}

} // namespace

DiffusionResult run_diffusion(const Graph& g, const SeedSet& seeds, bool want_trace) {
    const int n = g.node_count();
    for (int s : seeds.members)
        if (s < 0 || s >= n)
            throw PreconditionError("seed node " + std::to_string(s) + " out of range");

    DiffusionResult res;
    if (want_trace) res.trace.emplace();
    std::vector<bool> evg(n, false), inf(n, false);
    std::vector<int> evg_nbrs(n, 0); // evangelist neighbors, as of the last completed round
    int evg_total = 0;

    for (int s : seeds.members) {
        if (evg[s]) continue; // tolerate duplicates
        evg[s] = inf[s] = true;
        ++evg_total;
        for (int w : g.neighbors(s)) ++evg_nbrs[w];
    }

    if (n == 0) return res;

    // Round 1 scans everything (t=0 nodes fire with zero evangelist neighbors);
    // later rounds only need nodes adjacent to fresh evangelists.
    std::vector<int> candidates(n);
    for (int v = 0; v < n; ++v) candidates[v] = v;

    while (true) {
        std::vector<int> new_evg, new_inf;
        for (int v : candidates) {
            if (evg[v]) continue;
            if (evg_nbrs[v] >= g.threshold_evangelize(v)) new_evg.push_back(v);
            if (!inf[v] && evg_nbrs[v] >= g.threshold_influence(v)) new_inf.push_back(v);
        }
        ++res.rounds;
        for (int v : new_inf) inf[v] = true;
        for (int v : new_evg) {
            evg[v] = true;
            ++evg_total;
            for (int w : g.neighbors(v)) ++evg_nbrs[w];
        }
        if (want_trace && (!new_evg.empty() || !new_inf.empty()))
            res.trace->push_back({new_evg, new_inf});
        if (new_evg.empty() || evg_total == n) break;

        candidates.clear();
        for (int v : new_evg)
            for (int w : g.neighbors(v))
                if (!evg[w]) candidates.push_back(w);
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        if (candidates.empty()) break;
    }

#ifdef EVG_EXPENSIVE_CHECKS
    // one extra synchronous round must change nothing
    for (int v = 0; v < n; ++v) {
        EVG_CHECK(evg[v] || evg_nbrs[v] < g.threshold_evangelize(v), "fixpoint missed an evangelist");
        EVG_CHECK(inf[v] || evg_nbrs[v] < g.threshold_influence(v), "fixpoint missed an influenced node");
    }
#endif

    res.evangelists = collect(evg);
    res.influenced = collect(inf);
    return res;
}

int influenced_count(const Graph& g, const SeedSet& seeds) {
    return run_diffusion(g, seeds).influenced_count();
}

FixpointCheck verify_fixpoint(const Graph& g, const SeedSet& seeds, const DiffusionResult& r) {
    const int n = g.node_count();
    std::vector<bool> evg(n, false), inf(n, false), seed(n, false);
    for (int v : r.evangelists) evg[v] = true;
    for (int v : r.influenced) inf[v] = true;
    for (int v : seeds.members) seed[v] = true;

    std::vector<int> evg_nbrs(n, 0);
    for (int v = 0; v < n; ++v)
        if (evg[v])
            for (int w : g.neighbors(v)) ++evg_nbrs[w];

    FixpointCheck c;
    c.no_missed_evangelist = true;
    c.influenced_justified = true;
    c.evg_subset_inf = true;
    for (int v = 0; v < n; ++v) {
        if (!evg[v] && evg_nbrs[v] >= g.threshold_evangelize(v)) c.no_missed_evangelist = false;
        if (inf[v] && !seed[v] && evg_nbrs[v] < g.threshold_influence(v)) c.influenced_justified = false;
        if (seed[v] && !evg[v]) c.evg_subset_inf = false;
        if (evg[v] && !inf[v]) c.evg_subset_inf = false;
    }
    return c;
}

} // namespace evg
