#include "evg/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace evg {

namespace {

// Visits all size-k subsets of 0..n-1 in lexicographic order.
template <typename F>
void for_each_combination(int n, int k, F&& visit) {
    if (k > n) return;
    std::vector<int> c(k);
    std::iota(c.begin(), c.end(), 0);
    while (true) {
        visit(c);
        int i = k - 1;
        while (i >= 0 && c[i] == n - k + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

void guard_size(const Graph& g, int max_n, const char* what) {
    if (g.node_count() > max_n)
        throw WorkGuardError(std::string(what) + ": instance has " +
                             std::to_string(g.node_count()) + " nodes, guard is " +
                             std::to_string(max_n));
}

} // namespace

SolveResult brute_force_mes(const Graph& g, int beta, int max_n) {
    guard_size(g, max_n, "brute_force_mes");
    const int n = g.node_count();
    if (beta < 0) throw PreconditionError("negative budget");
    beta = std::min(beta, n);

    SolveResult best;
    best.solver = "oracle-mes";
    best.objective = -1;
    for (int k = 0; k <= beta; ++k) {
        for_each_combination(n, k, [&](const std::vector<int>& members) {
            SeedSet s;
            s.members = members;
            int obj = influenced_count(g, s);
            ++best.explored;
            if (obj > best.objective ||
                (obj == best.objective && lex_less(members, best.seed.members))) {
                best.objective = obj;
                best.seed.members = members;
            }
        });
    }
    best.seed.budget = beta;
    return best;
}

SolveResult brute_force_pes(const Graph& g, int max_n) {
    guard_size(g, max_n, "brute_force_pes");
    const int n = g.node_count();
    SolveResult res;
    res.solver = "oracle-pes";
    for (int k = 0; k <= n; ++k) {
        bool found = false;
        for_each_combination(n, k, [&](const std::vector<int>& members) {
            if (found) return;
            SeedSet s;
            s.members = members;
            ++res.explored;
            if (influenced_count(g, s) == n) { // lexicographic order: first hit wins
                res.seed.members = members;
                found = true;
            }
        });
        if (found) break;
    }
    res.objective = res.seed.size();
    res.seed.budget = res.objective;
    return res;
}

SolveResult pes_via_binary_search(const Graph& g, const MesSolver& solve_mes) {
    const int n = g.node_count();
    SolveResult res;
    res.solver = "binary-search";
    int lo = 0, hi = n;
    SolveResult witness;
    bool have_witness = false;
    while (lo < hi) {
        int mid = lo + (hi - lo) / 2;
        SolveResult r = solve_mes(g, mid);
        res.explored += r.explored + 1;
        if (r.objective == n) {
            hi = mid;
            witness = std::move(r);
            have_witness = true;
        } else {
            lo = mid + 1;
        }
    }
    if (!have_witness || witness.seed.budget.value_or(-1) != lo) {
        witness = solve_mes(g, lo);
        res.explored += witness.explored + 1;
        EVG_CHECK(witness.objective == n, "binary search landed on an imperfect budget");
    }
    res.seed = witness.seed;
    res.seed.budget = lo;
    res.objective = lo;
    res.solver = "binary-search(" + witness.solver + ")";
    return res;
}

} // namespace evg
