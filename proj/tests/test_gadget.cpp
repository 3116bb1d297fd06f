#include <doctest.h>

#include "evg/diffusion.hpp"
#include "evg/gadget.hpp"
#include "evg/generate.hpp"
#include "fixtures.hpp"

using namespace evg;

namespace {

IMInstance im_edge(int t0, int t1, int budget) {
    // single edge with thresholds (t0, t1)
    return make_im_instance(Graph::build(2, {{0, 1}}, {{t0, t0}, {t1, t1}}), budget);
}

} // namespace

TEST_CASE("im instances require matching thresholds") {
    CHECK_THROWS_AS(make_im_instance(fixtures::path3(), 1), ParseError); // node 1 is (1,2)
    CHECK_NOTHROW(im_edge(1, 1, 1));
}

TEST_CASE("single-edge construction") {
    Graph g = im_to_mes_gadget(im_edge(1, 1, 1));
    CHECK(g.node_count() == 6); // two 2-leaf stars
    CHECK(g.edge_count() == 1 + 4);

    const int c0 = gadget_center(0, 2), c1 = gadget_center(1, 2);
    CHECK(g.has_edge(c0, c1));
    CHECK(g.degree(c0) == 3); // original degree 1 + n leaves
    CHECK(g.degree(c1) == 3);
    CHECK(g.threshold_evangelize(c0) == 1);
    for (int j = 1; j <= 2; ++j) {
        CHECK(g.degree(c0 + j) == 1);
        CHECK(g.threshold_evangelize(c0 + j) == 1);
        CHECK(g.threshold_influence(c0 + j) == 1);
    }
}

TEST_CASE("zero-threshold nodes keep t_E = 0 in the gadget") {
    IMInstance im = make_im_instance(Graph::build(1, {}, {{0, 0}}), 0);
    Graph g = im_to_mes_gadget(im);
    CHECK(g.threshold_evangelize(gadget_center(0, 1)) == 0);
    CHECK(g.threshold_influence(gadget_center(0, 1)) == 0); // clamped to stay valid
}

TEST_CASE("node and edge counts follow the construction") {
    for (std::uint64_t s = 0; s < 10; ++s) {
        Rng rng(s);
        GenParams p;
        p.nodes = rng.uniform_int(1, 5);
        p.edge_prob = rng.uniform_real();
        Graph base = generate_instance(InstanceKind::random_gnp, p, s + 40);
        std::vector<std::pair<int, int>> th;
        for (int v = 0; v < base.node_count(); ++v) {
            int t = rng.uniform_int(0, base.degree(v) + 1);
            th.push_back({t, t});
        }
        IMInstance im = make_im_instance(
            Graph::build(base.node_count(), base.edges(), th), 1);
        Graph g = im_to_mes_gadget(im);
        const int n = base.node_count();
        CHECK(g.node_count() == n * (n + 1));
        CHECK(g.edge_count() == base.edge_count() + static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            CHECK(g.degree(gadget_center(i, n)) == base.degree(i) + n);
    }
}

TEST_CASE("correspondence spot checks") {
    SUBCASE("single edge, budget 1, k = 2: both sides reach") {
        GadgetReport r = verify_gadget_correspondence(im_edge(1, 1, 1), 2);
        CHECK(r.im_reaches);
        CHECK(r.mes_reaches);
        CHECK(r.holds());
        CHECK(r.mes_optimum == 6); // one center evangelizes everything
    }
    SUBCASE("k = 0 holds trivially") {
        CHECK(verify_gadget_correspondence(im_edge(1, 1, 0), 0).holds());
    }
    SUBCASE("two isolated nodes, one seed, k = 2: both sides fail") {
        IMInstance im = make_im_instance(Graph::build(2, {}, {{1, 1}, {1, 1}}), 1);
        GadgetReport r = verify_gadget_correspondence(im, 2);
        CHECK(!r.im_reaches);
        CHECK(!r.mes_reaches);
        CHECK(r.holds());
    }
}

TEST_CASE("correspondence on all graphs with up to 3 nodes") {
    for (int n = 1; n <= 3; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (int mask = 0; mask < (1 << pairs); ++mask) {
            std::vector<std::pair<int, int>> edges;
            int bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++bit)
                    if (mask & (1 << bit)) edges.emplace_back(u, v);
            Graph base = Graph::build(n, edges, std::vector<std::pair<int, int>>(n, {0, 0}));

            // every threshold assignment
            std::vector<int> t(n, 0);
            auto sweep = [&](auto&& self, int v) -> void {
                if (v == n) {
                    std::vector<std::pair<int, int>> th;
                    for (int u = 0; u < n; ++u) th.push_back({t[u], t[u]});
                    Graph g = Graph::build(n, base.edges(), th);
                    for (int beta = 0; beta <= n; ++beta) {
                        IMInstance im = make_im_instance(g, beta);
                        for (int k = 0; k <= n; ++k) {
                            GadgetReport r = verify_gadget_correspondence(im, k);
                            CAPTURE(n);
                            CAPTURE(mask);
                            CAPTURE(beta);
                            CAPTURE(k);
                            REQUIRE(r.holds());
                        }
                    }
                    return;
                }
                for (t[v] = 0; t[v] <= base.degree(v) + 1; ++t[v]) self(self, v + 1);
                t[v] = 0;
            };
            sweep(sweep, 0);
        }
    }
}
