#ifndef EVG_SOLVER_TREE_HPP
#define EVG_SOLVER_TREE_HPP

#include <cstdint>
#include <vector>

#include "evg/graph.hpp"
#include "evg/types.hpp"

namespace evg {

// Per-node DP rows, indexed by budget 0..beta. Extended integers (kNegInf = infeasible).
// no/inf/evg classify v's final status in its subtree under v's own thresholds;
// the *_hat rows use the residual thresholds max(t-1, 0), standing for an
// evangelist parent.
struct NodeTables {
    std::vector<int> no, inf, evg;
    std::vector<int> no_hat, inf_hat, evg_hat;
};

NodeTables leaf_tables(int t_inf, int t_evg, int beta);
NodeTables leaf_tables(const Graph& g, int leaf, int beta);

struct AgnosticRows {
    std::vector<int> no, inf, no_hat, inf_hat;
};
struct EvangelistRows {
    std::vector<int> evg, evg_hat;
};

// Children are ordered (ascending node id in the solver); their tables must be
// complete for budgets 0..beta and use the children's own original/residual thresholds.
AgnosticRows combine_agnostic(int t_inf, int t_evg,
                              const std::vector<const NodeTables*>& children, int beta,
                              std::uint64_t* ops = nullptr);
EvangelistRows combine_evangelist(int t_inf, int t_evg,
                                  const std::vector<const NodeTables*>& children, int beta,
                                  std::uint64_t* ops = nullptr);
NodeTables combine_node_tables(int t_inf, int t_evg,
                               const std::vector<const NodeTables*>& children, int beta,
                               std::uint64_t* ops = nullptr);

// Exact MES on forests: per-component subtree DP plus a budget knapsack across
// component roots. Throws PreconditionError on cyclic input.
SolveResult solve_mes_tree(const Graph& g, int beta);

} // namespace evg

#endif
