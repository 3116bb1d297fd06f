#ifndef EVG_ORACLE_HPP
#define EVG_ORACLE_HPP

#include <functional>

#include "evg/diffusion.hpp"
#include "evg/graph.hpp"
#include "evg/types.hpp"

namespace evg {

inline constexpr int kDefaultOracleMaxN = 25;

// Exhaustive MES: best |Inf[S]| over all S with |S| <= beta.
// Ties resolved toward the lexicographically smallest sorted member list.
SolveResult brute_force_mes(const Graph& g, int beta, int max_n = kDefaultOracleMaxN);

// Exhaustive PES: smallest S with Inf[S] = V, lexicographic tie-break within size.
SolveResult brute_force_pes(const Graph& g, int max_n = kDefaultOracleMaxN);

using MesSolver = std::function<SolveResult(const Graph&, int beta)>;

// Smallest beta whose optimal MES objective reaches n, with the witnessing seed.
// Valid because the objective is non-decreasing in beta.
SolveResult pes_via_binary_search(const Graph& g, const MesSolver& solve_mes);

} // namespace evg

#endif
