#include "ptl/constructions.hpp"

#include <numeric>

namespace ptl {

ExtremalSpec ExtremalSpec::for_n(int n) {
    if (n < 7) throw TooSmall("extremal family starts at n = 7");
    ExtremalSpec s;
    s.n = n;
    s.t = (n - 2) / 3;
    s.r = (n - 2) % 3;
    return s;
}

PlaneMap apex2_over_linear_forest(const std::vector<int>& path_sizes, bool with_apex_edge) {
    int fence = 0;
    for (int s : path_sizes) {
        if (s < 1) throw std::invalid_argument("path size must be >= 1");
        fence += s;
    }
    int n = fence + 2;
    const int u = 0, v = 1;
    // fence vertices 2..n-1 in stacking order; rotations follow the layout
    // u above the fence, v below, apex edge around the outside
    std::vector<std::vector<int>> rot(n);
    if (with_apex_edge) rot[u].push_back(v);
    for (int i = 0; i < fence; ++i) rot[u].push_back(2 + i);
    if (with_apex_edge) rot[v].push_back(u);
    for (int i = fence - 1; i >= 0; --i) rot[v].push_back(2 + i);

    int w = 2;
    for (int s : path_sizes) {
        for (int i = 0; i < s; ++i, ++w) {
            rot[w].push_back(u);
            if (i > 0) rot[w].push_back(w - 1);
            rot[w].push_back(v);
            if (i + 1 < s) rot[w].push_back(w + 1);
        }
    }
    return PlaneMap::from_rotation(rot);
}

PlaneMap extremal_c3c5(int n) {
    ExtremalSpec s = ExtremalSpec::for_n(n);
    std::vector<int> paths(s.t, 3);
    if (s.r > 0) paths.push_back(s.r);
    return apex2_over_linear_forest(paths, true);
}

PlaneMap wheel(int k) {
    if (k < 4) throw TooSmall("wheel needs k >= 4");
    int rim = k - 1;
    std::vector<std::vector<int>> rot(k);
    for (int i = 0; i < rim; ++i) rot[0].push_back(1 + i);
    for (int i = 0; i < rim; ++i) {
        int v = 1 + i;
        rot[v] = {0, 1 + (i + rim - 1) % rim, 1 + (i + 1) % rim};
    }
    return PlaneMap::from_rotation(rot);
}

PlaneMap fan(int k) {
    if (k < 3) throw TooSmall("fan needs k >= 3");
    int len = k - 1;
    std::vector<std::vector<int>> rot(k);
    for (int i = 0; i < len; ++i) rot[0].push_back(1 + i);
    for (int i = 0; i < len; ++i) {
        int v = 1 + i;
        rot[v].push_back(0);
        if (i > 0) rot[v].push_back(v - 1);
        if (i + 1 < len) rot[v].push_back(v + 1);
    }
    return PlaneMap::from_rotation(rot);
}

}  // namespace ptl
