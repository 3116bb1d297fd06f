#ifndef EVG_GRAPH_HPP
#define EVG_GRAPH_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "evg/types.hpp"

namespace evg {

// Undirected simple graph with per-node threshold pair (t_I, t_E).
// Nodes are 0..n-1, neighbor lists sorted ascending. Immutable once built;
// safe to share read-only across threads.
class Graph {
public:
    Graph() = default;

    // Validates simplicity and 0 <= t_I(v) <= t_E(v) <= d(v)+1; throws ParseError.
    static Graph build(int n,
                       std::vector<std::pair<int, int>> edges,
                       std::vector<std::pair<int, int>> thresholds);

    int node_count() const { return n_; }
    std::size_t edge_count() const { return m_; }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    int threshold_influence(int v) const { return t_inf_[v]; }
    int threshold_evangelize(int v) const { return t_evg_[v]; }

    // Edge list in canonical (u < v, ascending) order.
    std::vector<std::pair<int, int>> edges() const;

    bool is_complete() const;
    bool is_forest() const;
    std::vector<std::vector<int>> connected_components() const; // each sorted, ordered by min id

private:
    int n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<int> t_inf_;
    std::vector<int> t_evg_;
};

// `evg-graph v1` text format.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

Graph load_graph_file(const std::string& path);
void save_graph_file(const Graph& g, const std::string& path);

} // namespace evg

#endif
