#ifndef EVG_SOLVER_CLIQUE_HPP
#define EVG_SOLVER_CLIQUE_HPP

#include "evg/graph.hpp"
#include "evg/types.hpp"

namespace evg {

// Exact MES on complete graphs: seed the beta largest evangelization thresholds,
// measure eta* = |Evg[X]|, then swap already-influenced seeds for nodes that the
// cascade cannot reach. Throws PreconditionError if g is not complete.
SolveResult solve_mes_clique(const Graph& g, int beta);

} // namespace evg

#endif
