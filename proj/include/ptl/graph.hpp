#ifndef PTL_GRAPH_HPP
#define PTL_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ptl {

// Simple undirected graph on dense vertex ids 0..n-1, adjacency kept as
// bitset rows. No loops, no parallel edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), words_((n + 63) / 64), rows_(size_t(n) * words_, 0) {}

    int n() const { return n_; }
    int m() const { return m_; }

    bool has_edge(int u, int v) const {
        return (rows_[size_t(u) * words_ + v / 64] >> (v % 64)) & 1u;
    }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    std::span<const uint64_t> row(int v) const {
        return {rows_.data() + size_t(v) * words_, size_t(words_)};
    }
    int degree(int v) const;
    // Calls f(u) for each neighbour u of v in increasing order.
    template <typename F>
    void for_neighbors(int v, F&& f) const {
        const uint64_t* r = rows_.data() + size_t(v) * words_;
        for (int w = 0; w < words_; ++w) {
            uint64_t bits = r[w];
            while (bits) {
                int b = std::countr_zero(bits);
                f(w * 64 + b);
                bits &= bits - 1;
            }
        }
    }
    std::vector<int> neighbors(int v) const;
    std::vector<std::pair<int, int>> edges() const;  // (u,v) with u<v, sorted

    bool is_connected() const;
    std::vector<int> component_ids() const;  // component index per vertex

    Graph relabel(const std::vector<int>& perm) const;  // vertex v -> perm[v]
    Graph induced(const std::vector<int>& keep) const;  // re-indexed subgraph

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && rows_ == o.rows_;
    }

    int words() const { return words_; }

private:
    int n_ = 0;
    int words_ = 0;
    int m_ = 0;
    std::vector<uint64_t> rows_;
};

// --- small constructors -------------------------------------------------

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);

// Join: disjoint union of a and b plus all edges between them.
Graph join(const Graph& a, const Graph& b);

// Biconnected components as edge lists; bridges come out as single-edge
// components, isolated vertices in no component.
std::vector<std::vector<std::pair<int, int>>> biconnected_components(const Graph& g);

// Some cycle of g as a vertex list, empty if the graph is acyclic.
std::vector<int> some_cycle(const Graph& g);

// Non-increasing degree sequence.
std::vector<int> degree_sequence(const Graph& g);

// --- canonical labeling -------------------------------------------------

// Byte sequence identifying the isomorphism class; equal codes iff isomorphic.
using CanonicalCode = std::vector<uint8_t>;

struct CanonResult {
    std::vector<int> labeling;  // vertex -> canonical position
    CanonicalCode code;
    std::vector<int> orbit;     // orbit representative per vertex (min element)
};

// Partition refinement with backtracking; tie-break is the lexicographically
// smallest adjacency matrix, so codes are stable across platforms. Tuned for
// n <= 12 or so; the search oracle never needs more.
CanonResult canonical_form(const Graph& g);
CanonicalCode canonical_code(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);

std::string code_hex(const CanonicalCode& c);

}  // namespace ptl

#endif
