#ifndef EVG_DIFFUSION_HPP
#define EVG_DIFFUSION_HPP

#include <optional>
#include <vector>

#include "evg/graph.hpp"
#include "evg/types.hpp"

namespace evg {

struct RoundDelta {
    std::vector<int> evangelized; // nodes that became evangelists this round
    std::vector<int> influenced;  // nodes that became influenced this round
};

struct DiffusionResult {
    std::vector<int> evangelists; // sorted final Evg[S]
    std::vector<int> influenced;  // sorted final Inf[S]
    int rounds = 0;
    std::optional<std::vector<RoundDelta>> trace;

    int influenced_count() const { return static_cast<int>(influenced.size()); }
    int evangelist_count() const { return static_cast<int>(evangelists.size()); }
};

// Runs the two-threshold process to its fixpoint. Rounds are synchronous:
// round tau evaluates every node against the evangelist set of round tau-1.
// `rounds` counts executed update rounds; the loop stops after a round that
// changes nothing or leaves every node an evangelist, so rounds <= n.
DiffusionResult run_diffusion(const Graph& g, const SeedSet& seeds, bool want_trace = false);

// |Inf[seeds]| shortcut.
int influenced_count(const Graph& g, const SeedSet& seeds);

// Fixpoint soundness conditions, checked from scratch against g.
struct FixpointCheck {
    bool no_missed_evangelist = false; // nobody outside Evg meets t_E
    bool influenced_justified = false; // every non-seed influenced node meets t_I
    bool evg_subset_inf = false;       // S subseteq Evg subseteq Inf
    bool ok() const { return no_missed_evangelist && influenced_justified && evg_subset_inf; }
};

FixpointCheck verify_fixpoint(const Graph& g, const SeedSet& seeds, const DiffusionResult& r);

} // namespace evg

#endif
