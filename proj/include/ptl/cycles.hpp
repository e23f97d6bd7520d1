#ifndef PTL_CYCLES_HPP
#define PTL_CYCLES_HPP

#include <optional>
#include <string>
#include <vector>

#include "ptl/graph.hpp"

namespace ptl {

// Forbidden pattern: a multiset of exact cycle lengths plus a number of
// additional vertex-disjoint cycles of arbitrary length ("2C", "3C").
struct CyclePattern {
    std::vector<int> exact_lengths;  // ascending, each >= 3
    int wildcard_count = 0;

    // Grammar: terms joined by '+'; each term is [t]C[k], e.g. "C3+C5",
    // "2C3", "3C", "2C". Throws std::invalid_argument on bad input.
    static CyclePattern parse(const std::string& s);
    std::string str() const;
    void validate() const;
    int min_vertices() const;

    bool operator==(const CyclePattern&) const = default;
};

inline CyclePattern pattern_c3c5() { return {{3, 5}, 0}; }

// Pairwise vertex-disjoint cycles matching a pattern; each cycle is a vertex
// list normalized to smallest vertex first, lexicographically smaller
// direction. Exact-length cycles come first (ascending), wildcards after.
struct CycleWitness {
    std::vector<std::vector<int>> cycles;
};

// Re-checks a witness against the host graph: cycles exist, disjoint,
// lengths match. Used internally on every detector return.
bool witness_valid(const Graph& g, const CyclePattern& p, const CycleWitness& w);

// A k-cycle if one exists (k >= 3).
std::optional<std::vector<int>> find_cycle(const Graph& g, int k);

// Exhaustive: never returns Absent when a matching family exists.
std::optional<CycleWitness> find_pattern(const Graph& g, const CyclePattern& p);

bool is_free(const Graph& g, const CyclePattern& p);

// Vertex lying on every triangle, if any.
struct TriangleHub {
    enum Kind { Found, Absent, AllVacuous } kind = Absent;
    int vertex = -1;
};
TriangleHub common_triangle_vertex(const Graph& g);

}  // namespace ptl

#endif
