#ifndef PTL_NAIVE_PATTERNS_HPP
#define PTL_NAIVE_PATTERNS_HPP

#include <algorithm>
#include <numeric>

#include "ptl/cycles.hpp"

// Independent detection oracle: tries every assignment of disjoint vertex
// subsets to the pattern's requirements and checks each subset spans a cycle
// by brute-force permutation. Exponential; n <= 8 only.
namespace ptl::testing {

inline bool spans_cycle(const Graph& g, uint32_t mask) {
    std::vector<int> verts;
    for (int v = 0; v < g.n(); ++v)
        if ((mask >> v) & 1) verts.push_back(v);
    if (verts.size() < 3) return false;
    std::vector<int> rest(verts.begin() + 1, verts.end());
    std::sort(rest.begin(), rest.end());
    do {
        bool ok = g.has_edge(verts[0], rest.front()) && g.has_edge(rest.back(), verts[0]);
        for (size_t i = 0; ok && i + 1 < rest.size(); ++i) ok = g.has_edge(rest[i], rest[i + 1]);
        if (ok) return true;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return false;
}

inline bool naive_rec(const Graph& g, uint32_t remaining, const std::vector<int>& reqs,
                      size_t idx) {
    if (idx == reqs.size()) return true;
    int k = reqs[idx];
    for (uint32_t s = remaining;; s = (s - 1) & remaining) {
        if (s != 0) {
            int pc = std::popcount(s);
            bool size_ok = k > 0 ? pc == k : pc >= 3;
            if (size_ok && spans_cycle(g, s) && naive_rec(g, remaining & ~s, reqs, idx + 1))
                return true;
        }
        if (s == 0) break;
    }
    return false;
}

// k > 0 entries are exact lengths, 0 entries are wildcards.
inline bool naive_has_pattern(const Graph& g, const CyclePattern& p) {
    std::vector<int> reqs = p.exact_lengths;
    for (int i = 0; i < p.wildcard_count; ++i) reqs.push_back(0);
    uint32_t all = g.n() >= 32 ? ~uint32_t(0) : (uint32_t(1) << g.n()) - 1;
    return naive_rec(g, all, reqs, 0);
}

}  // namespace ptl::testing

#endif
