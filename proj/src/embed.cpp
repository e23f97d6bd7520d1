#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <set>

#include "ptl/plane_map.hpp"

namespace ptl {

std::vector<std::vector<std::pair<int, int>>> biconnected_components(const Graph& g) {
    int n = g.n();
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::pair<int, int>> estack;
    std::vector<std::vector<std::pair<int, int>>> comps;
    int timer = 0;

    struct Frame {
        int v, parent;
        size_t idx;
    };
    std::vector<Frame> stack;
    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        stack.push_back({root, -1, 0});
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& fr = stack.back();
            int v = fr.v;
            if (fr.idx < adj[v].size()) {
                int u = adj[v][fr.idx++];
                if (u == fr.parent) continue;
                if (disc[u] < 0) {
                    estack.emplace_back(v, u);
                    disc[u] = low[u] = timer++;
                    stack.push_back({u, v, 0});
                } else if (disc[u] < disc[v]) {
                    estack.emplace_back(v, u);
                    low[v] = std::min(low[v], disc[u]);
                }
            } else {
                stack.pop_back();
                if (stack.empty()) continue;
                int p = stack.back().v;
                low[p] = std::min(low[p], low[v]);
                if (low[v] >= disc[p]) {
                    comps.emplace_back();
                    std::pair<int, int> top{p, v};
                    for (;;) {
                        auto e = estack.back();
                        estack.pop_back();
                        comps.back().push_back(e);
                        if (e == top) break;
                    }
                }
            }
        }
    }
    return comps;
}

namespace {

struct Fragment {
    std::vector<int> attach;  // sorted H-vertices touching the fragment
    std::vector<int> inner;   // non-H vertices (empty for a chord)
    int cu = -1, cv = -1;     // chord endpoints when inner is empty
};

// Demoucron incremental embedding of a biconnected graph (n >= 3).
// Faces are maintained as simple vertex cycles; each admissibility failure
// certifies nonplanarity.
std::optional<std::vector<std::vector<int>>> demoucron_faces(const Graph& g) {
    int n = g.n();
    Graph H(n);
    std::vector<char> inH(n, 0);
    std::vector<std::vector<int>> faces;

    std::vector<int> cyc = some_cycle(g);
    assert(!cyc.empty());
    for (size_t i = 0; i < cyc.size(); ++i) {
        inH[cyc[i]] = 1;
        H.add_edge(cyc[i], cyc[(i + 1) % cyc.size()]);
    }
    faces.push_back(cyc);
    faces.emplace_back(cyc.rbegin(), cyc.rend());

    while (H.m() < g.m()) {
        // fragments relative to H
        std::vector<Fragment> frags;
        std::vector<int> comp_id(n, -1);
        for (int s = 0; s < n; ++s) {
            if (inH[s] || comp_id[s] >= 0) continue;
            Fragment f;
            std::set<int> att;
            std::vector<int> stack{s};
            comp_id[s] = int(frags.size());
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                f.inner.push_back(v);
                g.for_neighbors(v, [&](int u) {
                    if (inH[u]) {
                        att.insert(u);
                    } else if (comp_id[u] < 0) {
                        comp_id[u] = comp_id[s];
                        stack.push_back(u);
                    }
                });
            }
            f.attach.assign(att.begin(), att.end());
            frags.push_back(std::move(f));
        }
        for (auto [u, v] : g.edges()) {
            if (inH[u] && inH[v] && !H.has_edge(u, v)) {
                Fragment f;
                f.attach = {u, v};
                f.cu = u;
                f.cv = v;
                frags.push_back(std::move(f));
            }
        }
        assert(!frags.empty());

        // admissible faces per fragment
        std::vector<std::set<int>> fsets;
        fsets.reserve(faces.size());
        for (auto& F : faces) fsets.emplace_back(F.begin(), F.end());
        int best_frag = -1, best_cnt = -1, best_face = -1;
        for (size_t i = 0; i < frags.size(); ++i) {
            int cnt = 0, first = -1;
            for (size_t f = 0; f < faces.size(); ++f) {
                bool ok = true;
                for (int a : frags[i].attach)
                    if (!fsets[f].count(a)) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    ++cnt;
                    if (first < 0) first = int(f);
                }
            }
            if (cnt == 0) return std::nullopt;  // nonplanar
            if (best_cnt < 0 || cnt < best_cnt) {
                best_cnt = cnt;
                best_frag = int(i);
                best_face = first;
            }
        }

        // alpha-path between two attachments of the chosen fragment
        Fragment& fr = frags[best_frag];
        std::vector<int> path;
        if (fr.inner.empty()) {
            path = {fr.cu, fr.cv};
        } else {
            int a = fr.attach[0], b = fr.attach[1];
            // BFS from a through fragment interior to b
            std::vector<int> pred(n, -1);
            std::vector<char> mark(n, 0);
            for (int v : fr.inner) mark[v] = 1;
            std::vector<int> queue;
            size_t qi = 0;
            g.for_neighbors(a, [&](int u) {
                if (mark[u] && pred[u] < 0) {
                    pred[u] = a;
                    queue.push_back(u);
                }
            });
            int hit = -1;
            while (qi < queue.size() && hit < 0) {
                int v = queue[qi++];
                bool done = false;
                g.for_neighbors(v, [&](int u) {
                    if (done) return;
                    if (u == b) {
                        hit = v;
                        done = true;
                    } else if (mark[u] && pred[u] < 0) {
                        pred[u] = v;
                        queue.push_back(u);
                    }
                });
            }
            assert(hit >= 0);
            std::vector<int> rev{b};
            for (int x = hit; x != a; x = pred[x]) rev.push_back(x);
            rev.push_back(a);
            path.assign(rev.rbegin(), rev.rend());
        }

        // split the host face by the path
        int a = path.front(), b = path.back();
        std::vector<int>& F = faces[best_face];
        int L = int(F.size());
        int ia = -1, ib = -1;
        for (int i = 0; i < L; ++i) {
            if (F[i] == a) ia = i;
            if (F[i] == b) ib = i;
        }
        assert(ia >= 0 && ib >= 0 && ia != ib);
        std::vector<int> F1(path.begin(), path.end());
        for (int i = (ib + 1) % L; i != ia; i = (i + 1) % L) F1.push_back(F[i]);
        std::vector<int> F2(path.rbegin(), path.rend());
        for (int i = (ia + 1) % L; i != ib; i = (i + 1) % L) F2.push_back(F[i]);
        faces[best_face] = std::move(F1);
        faces.push_back(std::move(F2));

        for (size_t i = 0; i + 1 < path.size(); ++i) H.add_edge(path[i], path[i + 1]);
        for (int v : path) inH[v] = 1;
    }
    return faces;
}

// Rotation system of one component from its final face set.
std::vector<std::vector<int>> rotation_from_faces(const Graph& g,
                                                  const std::vector<std::vector<int>>& faces) {
    int n = g.n();
    std::vector<std::map<int, int>> succ(n);
    for (auto& F : faces) {
        int L = int(F.size());
        for (int j = 0; j < L; ++j) {
            int a = F[j], v = F[(j + 1) % L], b = F[(j + 2) % L];
            succ[v][a] = b;
        }
    }
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == 0) continue;
        int r0 = g.neighbors(v)[0];
        int x = r0;
        do {
            rot[v].push_back(x);
            auto it = succ[v].find(x);
            assert(it != succ[v].end());
            x = it->second;
        } while (x != r0);
        assert(int(rot[v].size()) == g.degree(v));
    }
    return rot;
}

}  // namespace

std::optional<PlaneMap> embed_planar(const Graph& g) {
    if (g.n() == 0) throw std::invalid_argument("empty graph");
    if (!g.is_connected()) throw std::invalid_argument("embed_planar: graph must be connected");
    if (g.n() == 1) return PlaneMap::from_rotation({{}});
    if (g.n() >= 3 && g.m() > 3 * g.n() - 6) return std::nullopt;

    auto comps = biconnected_components(g);
    std::vector<std::vector<int>> rot(g.n());
    for (auto& comp : comps) {
        // component subgraph, re-indexed
        std::vector<int> verts;
        {
            std::set<int> vs;
            for (auto [u, v] : comp) {
                vs.insert(u);
                vs.insert(v);
            }
            verts.assign(vs.begin(), vs.end());
        }
        std::vector<int> to_sub(g.n(), -1);
        for (size_t i = 0; i < verts.size(); ++i) to_sub[verts[i]] = int(i);
        Graph sub(int(verts.size()));
        for (auto [u, v] : comp) sub.add_edge(to_sub[u], to_sub[v]);

        std::vector<std::vector<int>> srot;
        if (sub.m() == 1) {
            srot = {{1}, {0}};
        } else {
            auto faces = demoucron_faces(sub);
            if (!faces) return std::nullopt;
            srot = rotation_from_faces(sub, *faces);
        }
        for (size_t i = 0; i < verts.size(); ++i)
            for (int u : srot[i]) rot[verts[i]].push_back(verts[u]);
    }
    PlaneMap m = PlaneMap::from_rotation(rot);
    assert(m.euler_ok());
    return m;
}

bool is_planar(const Graph& g) {
    if (g.n() <= 4) return true;
    auto comp = g.component_ids();
    int k = 1 + *std::max_element(comp.begin(), comp.end());
    if (k == 1) return embed_planar(g).has_value();
    for (int c = 0; c < k; ++c) {
        std::vector<int> keep;
        for (int v = 0; v < g.n(); ++v)
            if (comp[v] == c) keep.push_back(v);
        if (keep.size() <= 4) continue;
        if (!embed_planar(g.induced(keep))) return false;
    }
    return true;
}

}  // namespace ptl
