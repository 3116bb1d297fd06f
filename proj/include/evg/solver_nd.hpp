#ifndef EVG_SOLVER_ND_HPP
#define EVG_SOLVER_ND_HPP

#include <cstdint>
#include <vector>

#include "evg/diffusion.hpp"
#include "evg/graph.hpp"
#include "evg/types.hpp"

namespace evg {

// Type partition of a graph: nodes u, v share a class iff N(u)\{v} = N(v)\{u}.
// Every class induces a clique or an independent set; class pairs are either
// fully joined or fully separated.
struct TypePartition {
    std::vector<std::vector<int>> classes; // each sorted; ordered by smallest member
    std::vector<bool> is_clique;           // singletons count as (trivial) cliques
    std::vector<std::vector<bool>> joined; // t x t, symmetric, false on the diagonal

    int t() const { return static_cast<int>(classes.size()); }
    int class_of(int v) const; // linear scan helper for tests/tools
};

TypePartition compute_type_partition(const Graph& g);

// Budget split across classes: sum(s) = beta with s[i] <= |V_i|.
using Composition = std::vector<int>;

// N_i(S): evangelist neighbors every node of class i sees (class members included
// for clique classes).
int n_i_of(const Graph& g, const TypePartition& p, int class_i,
           const std::vector<int>& final_evangelists);

// The two-phase ME-ND seed for one composition: greedy top-t_E picks per class,
// then swaps against the frozen N_i values.
SeedSet me_nd_seed(const Graph& g, const TypePartition& p, const Composition& s);

// Number of compositions, i.e. budget splits respecting the class-size caps.
std::uint64_t composition_count(const TypePartition& p, int beta);

inline constexpr std::uint64_t kDefaultMaxCompositions = 5'000'000;

// Exact MES via composition enumeration; `explored` counts compositions.
SolveResult solve_mes_nd(const Graph& g, int beta,
                         std::uint64_t max_compositions = kDefaultMaxCompositions);

// Decision variant backed by a vertex cover: with beta >= |cover| the cover
// itself is tried first (verified by simulation), otherwise falls back to the
// type-partition solver.
struct DecisionResult {
    bool feasible = false;
    SeedSet seed;
    int objective = 0;
    std::string solver;
};

DecisionResult solve_mes_vc(const Graph& g, const std::vector<int>& cover, int alpha, int beta);

// Exact minimum vertex cover by branching; test-scale helper.
std::vector<int> minimum_vertex_cover(const Graph& g, int max_n = 40);

} // namespace evg

#endif
