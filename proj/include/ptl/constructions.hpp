#ifndef PTL_CONSTRUCTIONS_HPP
#define PTL_CONSTRUCTIONS_HPP

#include "ptl/plane_map.hpp"

namespace ptl {

// Shape of the extremal family: two apices joined to floor((n-2)/3) paths P3
// plus a residual path on (n-2) mod 3 vertices.
struct ExtremalSpec {
    int n = 0;
    int t = 0;  // number of P3 components
    int r = 0;  // residual path size, 0..2
    static ExtremalSpec for_n(int n);
};

// K2 joined to a disjoint union of paths, drawn with both apices adjacent to
// a horizontal fence of path vertices; the apex edge runs through the outer
// face. Vertex 0 and 1 are the apices.
PlaneMap apex2_over_linear_forest(const std::vector<int>& path_sizes, bool with_apex_edge);

// The extremal plane graph for the C3+C5 problem: K2 v (t P3 u P_r) with
// floor((8n-13)/3) edges. Throws TooSmall for n < 7.
PlaneMap extremal_c3c5(int n);

// Hub joined to a cycle on k-1 vertices (k >= 4) / path on k-1 vertices
// (k >= 3). Vertex 0 is the hub.
PlaneMap wheel(int k);
PlaneMap fan(int k);

}  // namespace ptl

#endif
