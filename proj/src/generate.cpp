#include "evg/generate.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace evg {

InstanceKind instance_kind_from_string(const std::string& name) {
    if (name == "tree") return InstanceKind::tree;
    if (name == "clique") return InstanceKind::clique;
    if (name == "bounded_nd") return InstanceKind::bounded_nd;
    if (name == "dense_dirac") return InstanceKind::dense_dirac;
    if (name == "random_gnp") return InstanceKind::random_gnp;
    throw PreconditionError("unknown instance kind '" + name + "'");
}

std::string to_string(InstanceKind kind) {
    switch (kind) {
        case InstanceKind::tree: return "tree";
        case InstanceKind::clique: return "clique";
        case InstanceKind::bounded_nd: return "bounded_nd";
        case InstanceKind::dense_dirac: return "dense_dirac";
        case InstanceKind::random_gnp: return "random_gnp";
    }
    return "?";
}

namespace {

std::vector<int> degrees_of(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> deg(n, 0);
    for (auto [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

// t_E uniform over its legal range, then t_I uniform below it.
std::vector<std::pair<int, int>> random_thresholds(const std::vector<int>& deg, Rng& rng) {
    std::vector<std::pair<int, int>> th(deg.size());
    for (std::size_t v = 0; v < deg.size(); ++v) {
        int te = rng.uniform_int(0, deg[v] + 1);
        int ti = rng.uniform_int(0, te);
        th[v] = {ti, te};
    }
    return th;
}

std::vector<std::pair<int, int>> pruefer_tree(int n, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    if (n <= 1) return edges;
    if (n == 2) return {{0, 1}};
    std::vector<int> seq(n - 2);
    for (int& s : seq) s = rng.uniform_int(0, n - 1);

    std::vector<int> deg(n, 1);
    for (int s : seq) ++deg[s];
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.push(v);
    for (int s : seq) {
        int leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(std::min(leaf, s), std::max(leaf, s));
        if (--deg[s] == 1) leaves.push(s);
    }
    int a = leaves.top();
    leaves.pop();
    int b = leaves.top();
    edges.emplace_back(std::min(a, b), std::max(a, b));
    return edges;
}

std::vector<std::pair<int, int>> capped_tree(int n, int cap, Rng& rng) {
    if (cap < 1 || (cap == 1 && n > 2))
        throw PreconditionError("tree with max_degree " + std::to_string(cap) +
                                " on " + std::to_string(n) + " nodes is unrealizable");
    std::vector<std::pair<int, int>> edges;
    std::vector<int> deg(n, 0);
    std::vector<int> open{0}; // nodes with spare degree
    for (int v = 1; v < n; ++v) {
        int idx = rng.uniform_int(0, static_cast<int>(open.size()) - 1);
        int parent = open[idx];
        edges.emplace_back(std::min(parent, v), std::max(parent, v));
        if (++deg[parent] == cap) {
            open[idx] = open.back();
            open.pop_back();
        }
        if (++deg[v] < cap) open.push_back(v);
        if (open.empty() && v + 1 < n)
            throw PreconditionError("degree cap exhausted while generating tree");
    }
    return edges;
}

Graph gen_tree(const GenParams& p, Rng& rng) {
    auto edges = p.max_degree > 0 ? capped_tree(p.nodes, p.max_degree, rng)
                                  : pruefer_tree(p.nodes, rng);
    auto deg = degrees_of(p.nodes, edges);
    return Graph::build(p.nodes, std::move(edges), random_thresholds(deg, rng));
}

Graph gen_clique(const GenParams& p, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < p.nodes; ++u)
        for (int v = u + 1; v < p.nodes; ++v) edges.emplace_back(u, v);
    auto deg = degrees_of(p.nodes, edges);
    return Graph::build(p.nodes, std::move(edges), random_thresholds(deg, rng));
}

Graph gen_bounded_nd(const GenParams& p, Rng& rng) {
    const int n = p.nodes, t = p.classes;
    if (t < 1 || t > n)
        throw PreconditionError("bounded_nd needs 1 <= classes <= nodes");

    std::vector<int> size(t, 1);
    for (int extra = n - t; extra > 0; --extra) ++size[rng.uniform_int(0, t - 1)];

    std::vector<bool> is_clique(t);
    for (int i = 0; i < t; ++i) is_clique[i] = rng.chance(0.5);
    std::vector<std::vector<bool>> joined(t, std::vector<bool>(t, false));
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) joined[i][j] = joined[j][i] = rng.chance(0.5);

    std::vector<int> first(t + 1, 0);
    for (int i = 0; i < t; ++i) first[i + 1] = first[i] + size[i];

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < t; ++i) {
        if (is_clique[i])
            for (int u = first[i]; u < first[i + 1]; ++u)
                for (int v = u + 1; v < first[i + 1]; ++v) edges.emplace_back(u, v);
        for (int j = i + 1; j < t; ++j)
            if (joined[i][j])
                for (int u = first[i]; u < first[i + 1]; ++u)
                    for (int v = first[j]; v < first[j + 1]; ++v) edges.emplace_back(u, v);
    }
    auto deg = degrees_of(n, edges);
    return Graph::build(n, std::move(edges), random_thresholds(deg, rng));
}

Graph gen_dense_dirac(const GenParams& p, Rng& rng) {
    const int n = p.nodes, te = p.tmax_e, ti = p.tmax_i;
    if (te < 0 || ti < 0) throw PreconditionError("dense_dirac bounds must be non-negative");
    if (te + ti > n + 2)
        throw PreconditionError("dense_dirac requires tmax_e + tmax_i <= n+2");
    const int need = std::max(0, (n + te + ti + 1) / 2 - 2); // ceil((n+te+ti)/2) - 2
    if (need > n - 1) throw PreconditionError("dense_dirac minimum degree unrealizable");

    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    std::vector<int> deg(n, 0);
    const double prob = n > 1 ? std::min(1.0, static_cast<double>(need) / (n - 1) + 0.15) : 0.0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(prob)) {
                adj[u][v] = adj[v][u] = true;
                ++deg[u];
                ++deg[v];
            }
    // repair nodes below the degree floor
    for (int v = 0; v < n; ++v) {
        while (deg[v] < need) {
            std::vector<int> candidates;
            for (int u = 0; u < n; ++u)
                if (u != v && !adj[u][v]) candidates.push_back(u);
            int u = candidates[rng.uniform_int(0, static_cast<int>(candidates.size()) - 1)];
            adj[u][v] = adj[v][u] = true;
            ++deg[u];
            ++deg[v];
        }
    }

    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (adj[u][v]) edges.emplace_back(u, v);

    std::vector<std::pair<int, int>> th(n);
    for (int v = 0; v < n; ++v) {
        int e = rng.uniform_int(0, std::min(te, deg[v] + 1));
        int i = rng.uniform_int(0, std::min(e, ti));
        th[v] = {i, e};
    }
    return Graph::build(n, std::move(edges), std::move(th));
}

Graph gen_gnp(const GenParams& p, Rng& rng) {
    if (p.edge_prob < 0.0 || p.edge_prob > 1.0)
        throw PreconditionError("edge probability must be in [0,1]");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < p.nodes; ++u)
        for (int v = u + 1; v < p.nodes; ++v)
            if (rng.chance(p.edge_prob)) edges.emplace_back(u, v);
    auto deg = degrees_of(p.nodes, edges);
    return Graph::build(p.nodes, std::move(edges), random_thresholds(deg, rng));
}

} // namespace

Graph generate_instance(InstanceKind kind, const GenParams& params, std::uint64_t rng_seed) {
    if (params.nodes < 1) throw PreconditionError("instance needs at least one node");
    Rng rng(rng_seed);
    switch (kind) {
        case InstanceKind::tree: return gen_tree(params, rng);
        case InstanceKind::clique: return gen_clique(params, rng);
        case InstanceKind::bounded_nd: return gen_bounded_nd(params, rng);
        case InstanceKind::dense_dirac: return gen_dense_dirac(params, rng);
        case InstanceKind::random_gnp: return gen_gnp(params, rng);
    }
    throw PreconditionError("unknown instance kind");
}

SeedSet random_seed_set(int n, int size, Rng& rng) {
    EVG_CHECK(size >= 0 && size <= n, "seed size out of range");
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < size; ++i)
        std::swap(pool[i], pool[rng.uniform_int(i, n - 1)]);
    pool.resize(size);
    std::sort(pool.begin(), pool.end());
    SeedSet s;
    s.members = std::move(pool);
    return s;
}

} // namespace evg
