#ifndef EVG_GADGET_HPP
#define EVG_GADGET_HPP

#include "evg/graph.hpp"
#include "evg/types.hpp"

namespace evg {

// Influence Maximization instance: one threshold per node, stored as a Graph
// with t_I(v) == t_E(v) == t(v).
struct IMInstance {
    Graph graph;
    int budget = 0;
};

// Validates the t_I == t_E convention.
IMInstance make_im_instance(Graph g, int budget);

// Star-per-node reduction to MES with influence thresholds forced to 1:
// gadget i occupies ids i*(n+1) (center) .. i*(n+1)+n (leaves); centers carry
// the original adjacency and t_E = t(v_i); every leaf has t_E = 1. Influence
// thresholds are min(1, t_E) so zero-threshold centers stay model-valid.
Graph im_to_mes_gadget(const IMInstance& im);

inline int gadget_center(int i, int n) { return i * (n + 1); }

struct GadgetReport {
    int im_optimum = 0;       // max |Evg_G[S]| over |S| <= beta
    int mes_optimum = 0;      // max |Inf_G'[S']| over |S'| <= beta
    bool im_reaches = false;  // im_optimum >= k
    bool mes_reaches = false; // mes_optimum >= k*(n+1)
    bool holds() const { return im_reaches == mes_reaches; }
};

// Exhaustively checks both sides of the reduction's iff claim. Guarded to n <= 5.
GadgetReport verify_gadget_correspondence(const IMInstance& im, int k);

} // namespace evg

#endif
