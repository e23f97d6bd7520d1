#include <algorithm>
#include <cassert>
#include <numeric>

#include "ptl/graph.hpp"

namespace ptl {

namespace {

// Union-find over vertices, used to accumulate automorphism orbits.
struct OrbitUF {
    std::vector<int> parent;
    explicit OrbitUF(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

CanonicalCode pack_code(const Graph& g, const std::vector<int>& pos) {
    int n = g.n();
    std::vector<int> inv(n);
    for (int v = 0; v < n; ++v) inv[pos[v]] = v;
    CanonicalCode code;
    code.push_back(uint8_t(n));
    code.push_back(uint8_t(g.m() >> 8));
    code.push_back(uint8_t(g.m() & 0xff));
    int nbits = n * (n - 1) / 2;
    code.resize(3 + (nbits + 7) / 8, 0);
    int t = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++t)
            if (g.has_edge(inv[i], inv[j])) code[3 + t / 8] |= uint8_t(0x80 >> (t % 8));
    return code;
}

struct Canonicalizer {
    const Graph& g;
    int n;
    CanonicalCode best;
    std::vector<int> best_pos;
    OrbitUF uf;

    explicit Canonicalizer(const Graph& graph) : g(graph), n(graph.n()), uf(graph.n()) {}

    // Equitable refinement; new cell order depends only on (old cell,
    // neighbour-cell count vector), so it is invariant under relabeling.
    void refine(std::vector<int>& color) const {
        for (;;) {
            int k = color.empty() ? 0 : 1 + *std::max_element(color.begin(), color.end());
            std::vector<std::vector<int>> sig(n);
            for (int v = 0; v < n; ++v) {
                sig[v].assign(k + 1, 0);
                sig[v][0] = color[v];
                g.for_neighbors(v, [&](int u) { ++sig[v][1 + color[u]]; });
            }
            std::vector<int> order(n);
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(),
                      [&](int a, int b) { return sig[a] < sig[b]; });
            std::vector<int> next(n);
            int k2 = 0;
            for (int i = 0; i < n; ++i) {
                if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++k2;
                next[order[i]] = k2;
            }
            ++k2;
            if (k2 == k) return;
            color = std::move(next);
        }
    }

    void search(std::vector<int> color) {
        refine(color);
        int cell = -1;  // smallest non-singleton cell id
        {
            std::vector<int> count(n, 0);
            for (int v = 0; v < n; ++v) ++count[color[v]];
            for (int c = 0; c < n; ++c)
                if (count[c] > 1) {
                    cell = c;
                    break;
                }
        }
        if (cell < 0) {
            // Discrete: color is a full labeling, vertex -> position.
            CanonicalCode code = pack_code(g, color);
            if (best.empty() || code < best) {
                best = std::move(code);
                best_pos = color;
            } else if (code == best) {
                // Automorphism: map via positions of the two labelings.
                std::vector<int> inv(n);
                for (int v = 0; v < n; ++v) inv[best_pos[v]] = v;
                for (int v = 0; v < n; ++v) uf.unite(v, inv[color[v]]);
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (color[v] != cell) continue;
            std::vector<int> child(n);
            for (int u = 0; u < n; ++u) child[u] = color[u] * 2 + (u == v ? 0 : 1);
            search(std::move(child));
        }
    }
};

}  // namespace

CanonResult canonical_form(const Graph& g) {
    int n = g.n();
    CanonResult res;
    if (n == 0) {
        res.code = {0, 0, 0};
        return res;
    }
    // Fully symmetric graphs would otherwise branch factorially.
    if (g.m() == 0 || g.m() == n * (n - 1) / 2) {
        res.labeling.resize(n);
        std::iota(res.labeling.begin(), res.labeling.end(), 0);
        res.code = pack_code(g, res.labeling);
        res.orbit.assign(n, 0);
        return res;
    }
    Canonicalizer c(g);
    c.search(std::vector<int>(n, 0));
    res.labeling = c.best_pos;
    res.code = c.best;
    res.orbit.resize(n);
    for (int v = 0; v < n; ++v) res.orbit[v] = c.uf.find(v);
    return res;
}

CanonicalCode canonical_code(const Graph& g) { return canonical_form(g).code; }

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    if (degree_sequence(a) != degree_sequence(b)) return false;
    return canonical_code(a) == canonical_code(b);
}

}  // namespace ptl
