#include "ptl/tri_blocks.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "ptl/cycles.hpp"

namespace ptl {

namespace {

struct EdgeUF {
    std::vector<int> parent;
    explicit EdgeUF(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
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

}  // namespace

std::vector<TriBlock> decompose(const PlaneMap& m) {
    int e = m.m();
    EdgeUF uf(e);
    for (auto& walk : m.face_walks()) {
        if (walk.size() != 3) continue;
        uf.unite(walk[0] / 2, walk[1] / 2);
        uf.unite(walk[0] / 2, walk[2] / 2);
    }
    std::map<int, std::vector<int>> groups;  // root -> edge ids (keys ascending)
    for (int i = 0; i < e; ++i) groups[uf.find(i)].push_back(i);
    std::map<int, int> f3_of;
    for (auto& walk : m.face_walks())
        if (walk.size() == 3) f3_of[uf.find(walk[0] / 2)]++;

    std::vector<TriBlock> blocks;
    blocks.reserve(groups.size());
    for (auto& [root, ids] : groups) {
        TriBlock b;
        b.edge_ids = ids;
        std::vector<bool> keep(e, false);
        for (int i : ids) keep[i] = true;
        auto [sub, map] = m.restrict_edges(keep);
        b.sub_map = std::move(sub);
        b.sub_to_host = std::move(map);
        b.vertices = b.sub_to_host;
        auto it = f3_of.find(root);
        b.f3_in_host = it == f3_of.end() ? 0 : it->second;
        blocks.push_back(std::move(b));
    }
    return blocks;
}

std::vector<Hole> holes(const TriBlock& b) {
    std::vector<Hole> out;
    for (int f = 0; f < int(b.sub_map.face_walks().size()); ++f) {
        auto verts = b.sub_map.face_vertices(f);
        if (verts.size() < 4) continue;
        Hole h;
        for (int v : verts) h.walk.push_back(b.sub_to_host[v]);
        out.push_back(std::move(h));
    }
    return out;
}

namespace {

// All distinct vertex sets of 5-cycles, as bitmasks (n <= 64).
std::vector<uint64_t> five_cycle_sets(const Graph& g) {
    assert(g.n() <= 64);
    std::set<uint64_t> sets;
    std::vector<int> path;
    std::vector<char> used(g.n(), 0);
    std::function<void(int, int)> dfs = [&](int s, int last) {
        if (path.size() == 5) {
            if (g.has_edge(last, s) && path[1] < path.back()) {
                uint64_t m = 0;
                for (int v : path) m |= uint64_t(1) << v;
                sets.insert(m);
            }
            return;
        }
        g.for_neighbors(last, [&](int u) {
            if (u <= s || used[u]) return;
            path.push_back(u);
            used[u] = 1;
            dfs(s, u);
            used[u] = 0;
            path.pop_back();
        });
    };
    for (int s = 0; s + 5 <= g.n(); ++s) {
        path = {s};
        std::fill(used.begin(), used.end(), 0);
        used[s] = 1;
        dfs(s, s);
    }
    return {sets.begin(), sets.end()};
}

}  // namespace

bool is_good(const TriBlock& b) {
    if (b.v() < 6) throw TooSmall("good/bad is defined for blocks with >= 6 vertices");
    const Graph& g = b.sub_map.graph();
    auto cycles = five_cycle_sets(g);
    for (auto& walk : b.sub_map.face_walks()) {
        if (walk.size() < 4) continue;
        std::set<int> vs;
        for (int d : walk) vs.insert(b.sub_map.tail(d));
        std::vector<int> verts(vs.begin(), vs.end());
        for (size_t i = 0; i < verts.size(); ++i)
            for (size_t j = i + 1; j < verts.size(); ++j) {
                int u = verts[i], v = verts[j];
                if (g.has_edge(u, v)) continue;
                uint64_t pair = (uint64_t(1) << u) | (uint64_t(1) << v);
                bool ok = false;
                for (uint64_t c : cycles)
                    if (std::popcount(c & pair) <= 1) {
                        ok = true;
                        break;
                    }
                if (!ok) return false;
            }
    }
    return true;
}

bool is_wheel_graph(const Graph& g) {
    int n = g.n();
    if (n < 4) return false;
    for (int h = 0; h < n; ++h) {
        if (g.degree(h) != n - 1) continue;
        std::vector<int> rest;
        for (int v = 0; v < n; ++v)
            if (v != h) rest.push_back(v);
        Graph r = g.induced(rest);
        bool deg2 = true;
        for (int v = 0; v < r.n(); ++v) deg2 &= r.degree(v) == 2;
        if (deg2 && r.is_connected()) return true;
    }
    return false;
}

bool is_fan_graph(const Graph& g) {
    int n = g.n();
    if (n < 3) return false;
    for (int h = 0; h < n; ++h) {
        if (g.degree(h) != n - 1) continue;
        std::vector<int> rest;
        for (int v = 0; v < n; ++v)
            if (v != h) rest.push_back(v);
        Graph r = g.induced(rest);
        if (r.m() != r.n() - 1 || !r.is_connected()) continue;
        bool path = true;
        for (int v = 0; v < r.n(); ++v) path &= r.degree(v) <= 2;
        if (path) return true;
    }
    return false;
}

bool is_wheel(const TriBlock& b) { return is_wheel_graph(b.sub_map.graph()); }
bool is_fan(const TriBlock& b) { return is_fan_graph(b.sub_map.graph()); }

// --- catalog ----------------------------------------------------------------

namespace {

Graph k4ear_reference() {
    Graph g = complete_graph(4);
    Graph out(5);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    out.add_edge(4, 0);
    out.add_edge(4, 1);
    return out;
}

Graph k5me_reference() {
    Graph g = complete_graph(5);
    g.remove_edge(0, 1);
    return g;
}

Graph strip_reference() {
    // chain of four triangles sharing consecutive edges
    Graph g(6);
    int tri[4][3] = {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 5}};
    for (auto& t : tri) {
        g.add_edge(t[0], t[1]);
        g.add_edge(t[1], t[2]);
        g.add_edge(t[0], t[2]);
    }
    return g;
}

Graph octahedron_reference() {
    return join(empty_graph(2), join(empty_graph(2), empty_graph(2)));
}

std::string recognize(const Graph& g) {
    int n = g.n();
    if (n == 2) return "edge";
    if (n == 3 && g.m() == 3) return "triangle";
    if (n == 4 && g.m() == 5) return "diamond";
    if (n == 4 && g.m() == 6) return "k4";
    if (n == 5 && is_isomorphic(g, k4ear_reference())) return "k4ear";
    if (n == 5 && is_isomorphic(g, k5me_reference())) return "k5me";
    if (n == 6 && is_isomorphic(g, octahedron_reference())) return "octahedron";
    if (n == 6 && is_isomorphic(g, strip_reference())) return "strip6";
    if (is_wheel_graph(g)) return "wheel" + std::to_string(n);
    if (is_fan_graph(g)) return "fan" + std::to_string(n);
    return "";
}

// All abstract candidate graphs on exactly v vertices that could be a single
// triangular block: connected, min degree 2 (v >= 3), 2v-3 <= e <= 3v-6.
std::vector<Graph> block_candidates(int v) {
    if (v == 2) return {path_graph(2)};
    int pairs = v * (v - 1) / 2;
    std::vector<std::pair<int, int>> pe;
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b) pe.emplace_back(a, b);
    std::set<CanonicalCode> seen;
    std::vector<Graph> out;
    for (uint32_t mask = 0; mask < (uint32_t(1) << pairs); ++mask) {
        int e = std::popcount(mask);
        if (e < 2 * v - 3 || e > 3 * v - 6) continue;
        Graph g(v);
        for (int i = 0; i < pairs; ++i)
            if ((mask >> i) & 1) g.add_edge(pe[i].first, pe[i].second);
        bool deg_ok = true;
        for (int x = 0; x < v; ++x) deg_ok &= g.degree(x) >= 2;
        if (!deg_ok || !g.is_connected()) continue;
        if (seen.insert(canonical_code(g)).second) out.push_back(std::move(g));
    }
    return out;
}

BlockCatalog build_catalog(int max_v) {
    BlockCatalog cat;
    cat.max_vertices = max_v;
    for (int v = 2; v <= max_v; ++v) {
        std::vector<BlockClass> found;
        for (const PlaneMap& m : single_block_maps(v)) {
            auto blocks = decompose(m);
            BlockClass bc;
            bc.code = plane_code(m);
            bc.vertices = v;
            bc.edges = m.m();
            bc.f3 = m.f3();
            for (auto& [len, cnt] : m.profile().count)
                if (len >= 4)
                    for (int i = 0; i < cnt; ++i) bc.hole_lengths.push_back(len);
            bc.alias = recognize(m.graph());
            if (v >= 6) bc.good = is_good(blocks[0]);
            found.push_back(std::move(bc));
        }
        int idx = 0;
        for (auto& bc : found) {
            bc.tag = "b" + std::to_string(v) + "_" + std::to_string(idx++);
            if (bc.alias.empty()) bc.alias = bc.tag;
            cat.classes.push_back(std::move(bc));
        }
    }
    return cat;
}

}  // namespace

std::vector<PlaneMap> single_block_maps(int v) {
    std::map<PlaneCode, PlaneMap> found;
    for (const Graph& g : block_candidates(v)) {
        for (PlaneMap& m : all_embeddings(g, 8)) {
            if (decompose(m).size() != 1) continue;
            PlaneCode code = plane_code(m);
            if (!found.count(code)) found.emplace(std::move(code), std::move(m));
        }
    }
    std::vector<PlaneMap> out;
    out.reserve(found.size());
    for (auto& [code, m] : found) out.push_back(std::move(m));
    return out;
}

const BlockClass* BlockCatalog::find(const PlaneCode& c) const {
    for (auto& bc : classes)
        if (bc.code == c) return &bc;
    return nullptr;
}

const BlockClass* BlockCatalog::by_alias(const std::string& a) const {
    for (auto& bc : classes)
        if (bc.alias == a || bc.tag == a) return &bc;
    return nullptr;
}

std::vector<const BlockClass*> BlockCatalog::of_size(int v) const {
    std::vector<const BlockClass*> out;
    for (auto& bc : classes)
        if (bc.vertices == v) out.push_back(&bc);
    return out;
}

const BlockCatalog& block_catalog(int max_v) {
    if (max_v < 2 || max_v > 7) throw CapExceeded("block catalog supports 2 <= v <= 7");
    static std::mutex mu;
    static std::map<int, BlockCatalog> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(max_v);
    if (it == cache.end()) it = cache.emplace(max_v, build_catalog(max_v)).first;
    return it->second;
}

BlockClass classify(const TriBlock& b) {
    if (b.v() <= 6) {
        const BlockCatalog& cat = block_catalog(6);
        if (const BlockClass* bc = cat.find(plane_code(b.sub_map))) return *bc;
    }
    BlockClass out;
    out.code = plane_code(b.sub_map);
    out.vertices = b.v();
    out.edges = b.e();
    out.f3 = b.sub_map.f3();
    for (auto& [len, cnt] : b.sub_map.profile().count)
        if (len >= 4)
            for (int i = 0; i < cnt; ++i) out.hole_lengths.push_back(len);
    out.tag = "large";
    out.alias = "large";
    return out;
}

std::vector<FanRun> fan_partition(const PlaneMap& m, int v) {
    if (v < 0 || v >= m.n()) throw std::invalid_argument("vertex out of range");
    const auto& rot = m.rotation()[v];
    int deg = int(rot.size());
    if (deg == 0) return {};
    // corner i sits between darts (v->rot[i]) and (v->rot[i+1]); its face is
    // the face of the twin of (v->rot[i])
    std::vector<int> corner_face(deg);
    std::vector<char> tri(deg);
    for (int i = 0; i < deg; ++i) {
        int d = m.dart(v, rot[i]);
        corner_face[i] = m.face_of_dart(m.twin(d));
        tri[i] = m.face_walks()[corner_face[i]].size() == 3;
    }
    std::vector<FanRun> out;
    if (std::all_of(tri.begin(), tri.end(), [](char c) { return c != 0; })) {
        FanRun run;
        for (int i = 0; i < deg; ++i) run.faces.push_back(corner_face[i]);
        run.neighbors = rot;
        run.neighbors.push_back(rot[0]);
        out.push_back(std::move(run));
        return out;
    }
    // start scanning right after a non-triangle corner so runs never wrap
    int start = 0;
    while (tri[start]) ++start;
    int off = 0;
    while (off < deg) {
        int i = (start + off) % deg;
        if (!tri[i]) {
            ++off;
            continue;
        }
        FanRun run;
        run.neighbors.push_back(rot[i]);
        while (off < deg && tri[(start + off) % deg]) {
            int j = (start + off) % deg;
            run.faces.push_back(corner_face[j]);
            run.neighbors.push_back(rot[(j + 1) % deg]);
            ++off;
        }
        out.push_back(std::move(run));
    }
    return out;
}

PairBlockReport check_lemma3_list(const PlaneMap& m, int u, int v) {
    if (u == v) throw std::invalid_argument("vertices must differ");
    PlaneMap m2 = m.graph().has_edge(u, v) ? m.without_edge(u, v) : m;
    auto blocks = decompose(m2);

    const BlockCatalog& cat = block_catalog(6);
    std::set<std::string> allowed{"diamond", "fan5", "wheel5", "k4ear"};
    for (auto& bc : cat.classes)
        if (bc.good.has_value() && !*bc.good) allowed.insert(bc.alias);

    PairBlockReport rep;
    rep.every_block_contains_both = true;
    for (size_t i = 0; i < blocks.size(); ++i) {
        auto& b = blocks[i];
        PairBlockEntry e;
        e.block_index = int(i);
        e.v = b.v();
        e.e = b.e();
        e.f3 = b.f3_in_host;
        e.alias = classify(b).alias;
        e.contains_both = std::binary_search(b.vertices.begin(), b.vertices.end(), u) &&
                          std::binary_search(b.vertices.begin(), b.vertices.end(), v);
        if (e.contains_both) {
            ++rep.shared_blocks;
            e.allowed = allowed.count(e.alias) > 0;
            if (!e.allowed) rep.violations.push_back(int(i));
        } else {
            rep.every_block_contains_both = false;
        }
        rep.blocks.push_back(std::move(e));
    }
    return rep;
}

}  // namespace ptl
