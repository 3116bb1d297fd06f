#include <doctest.h>

#include "evg/diffusion.hpp"
#include "evg/generate.hpp"
#include "evg/oracle.hpp"
#include "evg/solver_dense.hpp"
#include "fixtures.hpp"

using namespace evg;

TEST_CASE("precondition report") {
    SUBCASE("K4 with bounds (2,2) passes") {
        DensePrecheck r = check_dense_preconditions(fixtures::k4_22(), 2, 2);
        CHECK(r.ok);
        CHECK(r.required_degree == 2);
        CHECK(r.min_degree == 3);
    }
    SUBCASE("a path is too sparse") {
        Graph g = Graph::build(3, {{0, 1}, {1, 2}}, {{1, 2}, {1, 2}, {1, 2}});
        DensePrecheck r = check_dense_preconditions(g, 2, 2);
        CHECK(!r.ok);
        CHECK(r.min_degree == 1);
        CHECK(r.required_degree == 2); // ceil(7/2) - 2
    }
    SUBCASE("bound sum above n+2 fails") {
        DensePrecheck r = check_dense_preconditions(fixtures::k4_22(), 4, 3);
        CHECK(!r.ok);
    }
    SUBCASE("per-node thresholds above the bounds fail") {
        DensePrecheck r = check_dense_preconditions(fixtures::k4_22(), 1, 1);
        CHECK(!r.ok);
    }
}

TEST_CASE("K4 all (2,2): the Dirac corollary seed of size 2") {
    SolveResult r = build_pes_dense(fixtures::k4_22(), 2, 2);
    CHECK(r.objective == 2);
    CHECK(influenced_count(fixtures::k4_22(), r.seed) == 4);
    CHECK(r.objective == brute_force_pes(fixtures::k4_22()).objective);
}

TEST_CASE("K5 with unit thresholds: one seed suffices") {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) edges.emplace_back(u, v);
    Graph g = Graph::build(5, std::move(edges),
                           {{1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}});
    SolveResult r = build_pes_dense(g, 1, 1);
    CHECK(r.objective == 1); // growth loop bound 2(te-1) = 0
    CHECK(influenced_count(g, r.seed) == 5);
}

TEST_CASE("violating the hypotheses throws") {
    CHECK_THROWS_AS(build_pes_dense(fixtures::k4_22(), 4, 4), PreconditionError);
    Graph g = Graph::build(3, {{0, 1}, {1, 2}}, {{1, 2}, {1, 2}, {1, 2}});
    CHECK_THROWS_AS(build_pes_dense(g, 2, 2), PreconditionError);
}

TEST_CASE("initial pick prefers a non-adjacent pair") {
    // K4 minus the edge 1-3: lowest non-adjacent pair is (1,3)
    Graph g = Graph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}},
                           {{1, 1}, {1, 1}, {1, 1}, {1, 1}});
    SolveResult r = build_pes_dense(g, 2, 2);
    CHECK(r.seed.members == std::vector<int>{1, 3});
}

TEST_CASE("generated dense instances: perfect and within the size bound") {
    for (std::uint64_t s = 0; s < 60; ++s) {
        Rng rng(s * 13 + 5);
        GenParams p;
        p.tmax_i = rng.uniform_int(1, 4);
        p.tmax_e = rng.uniform_int(p.tmax_i, 5);
        p.nodes = rng.uniform_int(std::max(4, p.tmax_e + p.tmax_i - 2), 40);
        Graph g = generate_instance(InstanceKind::dense_dirac, p, s);
        REQUIRE(check_dense_preconditions(g, p.tmax_e, p.tmax_i).ok);
        SolveResult r = build_pes_dense(g, p.tmax_e, p.tmax_i);
        CHECK(r.seed.size() <= std::max(p.tmax_i, 2 * p.tmax_e - 2));
        CHECK(influenced_count(g, r.seed) == g.node_count());
    }
}

TEST_CASE("greedy set is perfect but may beat no oracle") {
    for (std::uint64_t s = 0; s < 15; ++s) {
        Rng rng(s + 99);
        GenParams p;
        p.tmax_i = rng.uniform_int(1, 3);
        p.tmax_e = rng.uniform_int(p.tmax_i, 3);
        p.nodes = rng.uniform_int(6, 12);
        Graph g = generate_instance(InstanceKind::dense_dirac, p, s + 400);
        SolveResult greedy = build_pes_dense(g, p.tmax_e, p.tmax_i);
        SolveResult oracle = brute_force_pes(g);
        CHECK(greedy.objective >= oracle.objective);
        CHECK(influenced_count(g, greedy.seed) == g.node_count());
        CHECK(influenced_count(g, oracle.seed) == g.node_count());
    }
}
