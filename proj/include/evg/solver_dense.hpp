#ifndef EVG_SOLVER_DENSE_HPP
#define EVG_SOLVER_DENSE_HPP

#include <string>

#include "evg/graph.hpp"
#include "evg/types.hpp"

namespace evg {

// Hypotheses of the dense-graph PES construction, reported rather than thrown.
struct DensePrecheck {
    bool ok = false;
    std::string violation;   // empty when ok
    int min_degree = 0;
    int required_degree = 0; // ceil((n + te_bar + ti_bar)/2) - 2
};

DensePrecheck check_dense_preconditions(const Graph& g, int te_bar, int ti_bar);

// Greedy perfect evangelizing set: start from ti_bar nodes (two non-adjacent if
// possible), then absorb nodes that see fewer than ti_bar seeds, stopping at
// 2*(te_bar-1). Guaranteed perfect when the preconditions hold; the result is
// verified by simulation before returning. |S| <= max(ti_bar, 2*te_bar - 2).
SolveResult build_pes_dense(const Graph& g, int te_bar, int ti_bar);

} // namespace evg

#endif
