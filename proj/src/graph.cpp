#include "ptl/graph.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace ptl {

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("loop edge");
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("endpoint out of range");
    if (has_edge(u, v)) return;
    rows_[size_t(u) * words_ + v / 64] |= uint64_t(1) << (v % 64);
    rows_[size_t(v) * words_ + u / 64] |= uint64_t(1) << (u % 64);
    ++m_;
}

void Graph::remove_edge(int u, int v) {
    if (!has_edge(u, v)) return;
    rows_[size_t(u) * words_ + v / 64] &= ~(uint64_t(1) << (v % 64));
    rows_[size_t(v) * words_ + u / 64] &= ~(uint64_t(1) << (u % 64));
    --m_;
}

int Graph::degree(int v) const {
    int d = 0;
    for (auto w : row(v)) d += std::popcount(w);
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    out.reserve(8);
    for_neighbors(v, [&](int u) { out.push_back(u); });
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for_neighbors(u, [&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

std::vector<int> Graph::component_ids() const {
    std::vector<int> comp(n_, -1);
    int c = 0;
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for_neighbors(v, [&](int u) {
                if (comp[u] < 0) {
                    comp[u] = c;
                    stack.push_back(u);
                }
            });
        }
        ++c;
    }
    return comp;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    auto comp = component_ids();
    return *std::max_element(comp.begin(), comp.end()) == 0;
}

Graph Graph::relabel(const std::vector<int>& perm) const {
    assert((int)perm.size() == n_);
    Graph g(n_);
    for (auto [u, v] : edges()) g.add_edge(perm[u], perm[v]);
    return g;
}

Graph Graph::induced(const std::vector<int>& keep) const {
    std::vector<int> idx(n_, -1);
    for (size_t i = 0; i < keep.size(); ++i) idx[keep[i]] = int(i);
    Graph g(int(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i)
        for_neighbors(keep[i], [&](int u) {
            if (idx[u] > int(i)) g.add_edge(int(i), idx[u]);
        });
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs >= 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph join(const Graph& a, const Graph& b) {
    Graph g(a.n() + b.n());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(a.n() + u, a.n() + v);
    for (int u = 0; u < a.n(); ++u)
        for (int v = 0; v < b.n(); ++v) g.add_edge(u, a.n() + v);
    return g;
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d(g.n());
    for (int v = 0; v < g.n(); ++v) d[v] = g.degree(v);
    std::sort(d.rbegin(), d.rend());
    return d;
}

std::vector<int> some_cycle(const Graph& g) {
    int n = g.n();
    std::vector<int> parent(n, -2);
    std::vector<char> active(n, 0);
    struct Frame {
        int v;
        size_t idx;
    };
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
    for (int root = 0; root < n; ++root) {
        if (parent[root] != -2) continue;
        parent[root] = -1;
        std::vector<Frame> stack{{root, 0}};
        active[root] = 1;
        while (!stack.empty()) {
            Frame& fr = stack.back();
            int v = fr.v;
            if (fr.idx < adj[v].size()) {
                int u = adj[v][fr.idx++];
                if (u == parent[v]) continue;
                if (parent[u] == -2) {
                    parent[u] = v;
                    active[u] = 1;
                    stack.push_back({u, 0});
                } else if (active[u]) {
                    std::vector<int> cyc;
                    for (int x = v; x != u; x = parent[x]) cyc.push_back(x);
                    cyc.push_back(u);
                    return cyc;
                }
            } else {
                active[v] = 0;
                stack.pop_back();
            }
        }
    }
    return {};
}

std::string code_hex(const CanonicalCode& c) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(c.size() * 2);
    for (uint8_t b : c) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 15]);
    }
    return s;
}

}  // namespace ptl
