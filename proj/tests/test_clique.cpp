#include <doctest.h>

#include "evg/diffusion.hpp"
#include "evg/generate.hpp"
#include "evg/oracle.hpp"
#include "evg/solver_clique.hpp"
#include "fixtures.hpp"

using namespace evg;

TEST_CASE("the swap rescues an unreachable node") {
    // t_E = [4,1,1,4], t_I = [1,1,1,4]: X = {0}, eta* = 3, swap brings in node 3
    Graph g = Graph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
                           {{1, 4}, {1, 1}, {1, 1}, {4, 4}});
    SolveResult r = solve_mes_clique(g, 1);
    CHECK(r.objective == 4);
    CHECK(r.seed.members == std::vector<int>{3});
    CHECK(r.objective == brute_force_mes(g, 1).objective);
}

TEST_CASE("K3 with unit thresholds") {
    Graph g = Graph::build(3, {{0, 1}, {0, 2}, {1, 2}}, {{1, 1}, {1, 1}, {1, 1}});
    CHECK(solve_mes_clique(g, 1).objective == 3);
}

TEST_CASE("trivial budgets") {
    Graph g = fixtures::k4_22();
    CHECK(solve_mes_clique(g, 4).objective == 4);
    CHECK(solve_mes_clique(g, 0).objective == 0);
}

TEST_CASE("non-complete input is rejected") {
    CHECK_THROWS_AS(solve_mes_clique(fixtures::path3(), 1), PreconditionError);
}

TEST_CASE("post-loop invariant") {
    for (std::uint64_t s = 0; s < 50; ++s) {
        Rng rng(s);
        GenParams p;
        p.nodes = rng.uniform_int(1, 10);
        Graph g = generate_instance(InstanceKind::clique, p, s);
        int beta = rng.uniform_int(0, p.nodes);
        SolveResult r = solve_mes_clique(g, beta);

        // recompute eta* from the greedy top-beta pick and check no swap remains
        SeedSet top;
        std::vector<std::pair<int, int>> order;
        for (int v = 0; v < p.nodes; ++v) order.push_back({-g.threshold_evangelize(v), v});
        std::sort(order.begin(), order.end());
        for (int i = 0; i < beta; ++i) top.members.push_back(order[i].second);
        std::sort(top.members.begin(), top.members.end());
        int eta = run_diffusion(g, top).evangelist_count();

        bool in_low = false, out_high = false;
        std::vector<bool> in_seed(p.nodes, false);
        for (int v : r.seed.members) in_seed[v] = true;
        for (int v = 0; v < p.nodes; ++v) {
            if (in_seed[v] && g.threshold_influence(v) <= eta) in_low = true;
            if (!in_seed[v] && g.threshold_influence(v) > eta) out_high = true;
        }
        CHECK(!(in_low && out_high));
    }
}

TEST_CASE("oracle equivalence over budgets and sizes") {
    for (std::uint64_t s = 0; s < 120; ++s) {
        Rng rng(s + 77);
        GenParams p;
        p.nodes = rng.uniform_int(1, 9);
        Graph g = generate_instance(InstanceKind::clique, p, s);
        for (int beta = 0; beta <= p.nodes; ++beta) {
            CAPTURE(s);
            CAPTURE(beta);
            REQUIRE(solve_mes_clique(g, beta).objective == brute_force_mes(g, beta).objective);
        }
    }
}
