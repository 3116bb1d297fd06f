#ifndef EVG_TEST_FIXTURES_HPP
#define EVG_TEST_FIXTURES_HPP

#include <vector>

#include "evg/generate.hpp"
#include "evg/graph.hpp"

namespace fixtures {

// path a-b-c with thresholds a:(1,1) b:(1,2) c:(1,1)
inline evg::Graph path3() {
    return evg::Graph::build(3, {{0, 1}, {1, 2}},
                             {{1, 1}, {1, 2}, {1, 1}});
}

// K4, all thresholds (2,2)
inline evg::Graph k4_22() {
    return evg::Graph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
                             {{2, 2}, {2, 2}, {2, 2}, {2, 2}});
}

// star K_{1,3}: center 0 with (1,2), leaves (1,1)
inline evg::Graph star4() {
    return evg::Graph::build(4, {{0, 1}, {0, 2}, {0, 3}},
                             {{1, 2}, {1, 1}, {1, 1}, {1, 1}});
}

inline evg::SeedSet seed(std::vector<int> members) {
    evg::SeedSet s;
    s.members = std::move(members);
    return s;
}

} // namespace fixtures

#endif
