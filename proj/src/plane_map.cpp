#include "ptl/plane_map.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

namespace ptl {

PlaneMap PlaneMap::from_rotation(const std::vector<std::vector<int>>& rotation) {
    int n = int(rotation.size());
    if (n == 0) throw MalformedRotation("empty rotation");
    Graph g(n);
    for (int v = 0; v < n; ++v) {
        std::set<int> seen;
        for (int u : rotation[v]) {
            if (u < 0 || u >= n) throw MalformedRotation("neighbor out of range");
            if (u == v) throw MalformedRotation("loop dart");
            if (!seen.insert(u).second) throw MalformedRotation("repeated neighbor");
        }
    }
    for (int v = 0; v < n; ++v)
        for (int u : rotation[v]) g.add_edge(std::min(u, v), std::max(u, v));
    // every edge must be listed at both ends: entries are distinct edges of g,
    // so equality of list size and degree pins the twin involution
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != int(rotation[v].size()))
            throw MalformedRotation("twin involution broken: one-sided edge");
    if (!g.is_connected()) throw MalformedRotation("map must be connected");

    PlaneMap m;
    m.g_ = std::move(g);
    m.rot_ = rotation;
    m.edges_ = m.g_.edges();
    int e = m.g_.m();
    m.tail_.assign(2 * e, -1);
    for (int i = 0; i < e; ++i) {
        m.tail_[2 * i] = m.edges_[i].first;
        m.tail_[2 * i + 1] = m.edges_[i].second;
    }
    m.rot_next_.assign(2 * e, -1);
    m.rot_prev_.assign(2 * e, -1);
    for (int v = 0; v < n; ++v) {
        int d = int(rotation[v].size());
        for (int i = 0; i < d; ++i) {
            int a = m.dart(v, rotation[v][i]);
            int b = m.dart(v, rotation[v][(i + 1) % d]);
            m.rot_next_[a] = b;
            m.rot_prev_[b] = a;
        }
    }
    m.build_faces();
    return m;
}

int PlaneMap::dart(int u, int v) const {
    std::pair<int, int> key{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) throw std::invalid_argument("no such edge");
    int id = int(it - edges_.begin());
    return 2 * id + (u < v ? 0 : 1);
}

void PlaneMap::build_faces() {
    int nd = darts();
    face_of_.assign(nd, -1);
    walks_.clear();
    profile_.count.clear();
    for (int d0 = 0; d0 < nd; ++d0) {
        if (face_of_[d0] >= 0) continue;
        int f = int(walks_.size());
        std::vector<int> walk;
        int d = d0;
        do {
            face_of_[d] = f;
            walk.push_back(d);
            d = face_next(d);
        } while (d != d0);
        profile_.count[int(walk.size())]++;
        walks_.push_back(std::move(walk));
    }
    face_count_ = nd == 0 ? 1 : int(walks_.size());
}

std::vector<int> PlaneMap::face_vertices(int f) const {
    std::vector<int> out;
    out.reserve(walks_[f].size());
    for (int d : walks_[f]) out.push_back(tail_[d]);
    return out;
}

PlaneMap PlaneMap::insert_vertex_in_face(int face, const std::vector<int>& attach) const {
    if (face < 0 || face >= int(walks_.size())) throw std::invalid_argument("no such face");
    int k = int(attach.size());
    if (k < 1) throw NotConsecutive("attach set empty");
    {
        std::set<int> s(attach.begin(), attach.end());
        if (int(s.size()) != k) throw NotConsecutive("attach vertices repeat");
    }
    auto tails = face_vertices(face);
    int L = int(tails.size());
    if (k > L) throw NotConsecutive("attach longer than face walk");
    int p = -1;
    for (int off = 0; off < L && p < 0; ++off) {
        bool ok = true;
        for (int j = 0; j < k && ok; ++j) ok = tails[(off + j) % L] == attach[j];
        if (ok) p = off;
    }
    if (p < 0) throw NotConsecutive("attach not consecutive along the face walk");

    int w = n();
    auto rot = rot_;
    rot.emplace_back(attach.rbegin(), attach.rend());
    for (int j = 0; j < k; ++j) {
        int v = attach[j];
        int departure = walks_[face][(p + j) % L];
        int nb = head(departure);
        auto& list = rot[v];
        auto it = std::find(list.begin(), list.end(), nb);
        assert(it != list.end());
        list.insert(it, w);
    }
    return from_rotation(rot);
}

PlaneMap PlaneMap::without_edge(int u, int v) const {
    if (!g_.has_edge(u, v)) throw std::invalid_argument("edge not present");
    auto rot = rot_;
    std::erase(rot[u], v);
    std::erase(rot[v], u);
    return from_rotation(rot);
}

std::pair<PlaneMap, std::vector<int>> PlaneMap::restrict_edges(const std::vector<bool>& keep) const {
    const auto& es = edges_;
    std::vector<bool> vkeep(n(), false);
    for (size_t i = 0; i < es.size(); ++i)
        if (keep[i]) vkeep[es[i].first] = vkeep[es[i].second] = true;
    std::vector<int> sub_to_host;
    std::vector<int> host_to_sub(n(), -1);
    for (int v = 0; v < n(); ++v)
        if (vkeep[v]) {
            host_to_sub[v] = int(sub_to_host.size());
            sub_to_host.push_back(v);
        }
    std::vector<std::vector<int>> rot(sub_to_host.size());
    for (int v = 0; v < n(); ++v) {
        if (!vkeep[v]) continue;
        for (int u : rot_[v]) {
            int id = dart(v, u) / 2;
            if (keep[id]) rot[host_to_sub[v]].push_back(host_to_sub[u]);
        }
    }
    return {from_rotation(rot), sub_to_host};
}

// --- plane code ----------------------------------------------------------

namespace {

void encode_from(const PlaneMap& m, int start, bool reflect, std::vector<uint8_t>& out) {
    int n = m.n();
    out.clear();
    out.push_back(uint8_t(n));
    out.push_back(uint8_t(m.m() >> 8));
    out.push_back(uint8_t(m.m() & 0xff));
    std::vector<int> label(n, -1), entry(n, -1), by_label(n, -1);
    label[m.tail(start)] = 0;
    entry[m.tail(start)] = start;
    by_label[0] = m.tail(start);
    int next = 1;
    for (int l = 0; l < n; ++l) {
        int v = by_label[l];
        assert(v >= 0);
        int deg = m.graph().degree(v);
        out.push_back(uint8_t(deg));
        int d = entry[v];
        for (int i = 0; i < deg; ++i) {
            int u = m.head(d);
            if (label[u] < 0) {
                label[u] = next;
                by_label[next] = u;
                entry[u] = m.twin(d);
                ++next;
            }
            out.push_back(uint8_t(label[u]));
            d = reflect ? m.sigma_inv(d) : m.sigma(d);
        }
    }
}

}  // namespace

PlaneCode plane_code(const PlaneMap& m) {
    if (m.darts() == 0) return {uint8_t(m.n()), 0, 0};
    PlaneCode best, cur;
    for (int d = 0; d < m.darts(); ++d)
        for (int r = 0; r < 2; ++r) {
            encode_from(m, d, r == 1, cur);
            if (best.empty() || cur < best) best = cur;
        }
    return best;
}

int count_faces_of_rotation(const std::vector<std::vector<int>>& rotation, int edge_count) {
    // Positions: dart = (v, index in rotation[v]); face successor computed
    // via twin lookup. Flat arrays keyed by cumulative offsets.
    int n = int(rotation.size());
    std::vector<int> off(n + 1, 0);
    for (int v = 0; v < n; ++v) off[v + 1] = off[v] + int(rotation[v].size());
    int nd = off[n];
    assert(nd == 2 * edge_count);
    // twin of dart (v->u) is the dart (u->v); index darts by (tail, head)
    std::vector<int> twin(nd, -1);
    {
        std::vector<std::vector<std::pair<int, int>>> by_tail(n);  // (head, dartid)
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < int(rotation[v].size()); ++i)
                by_tail[v].emplace_back(rotation[v][i], off[v] + i);
        for (int v = 0; v < n; ++v) std::sort(by_tail[v].begin(), by_tail[v].end());
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < int(rotation[v].size()); ++i) {
                int u = rotation[v][i];
                auto it = std::lower_bound(by_tail[u].begin(), by_tail[u].end(),
                                           std::make_pair(v, 0));
                assert(it != by_tail[u].end() && it->first == v);
                twin[off[v] + i] = it->second;
            }
    }
    std::vector<bool> seen(nd, false);
    std::vector<int> owner(nd);  // tail vertex of each dart
    for (int v = 0; v < n; ++v)
        for (int i = off[v]; i < off[v + 1]; ++i) owner[i] = v;
    int faces = 0;
    for (int d0 = 0; d0 < nd; ++d0) {
        if (seen[d0]) continue;
        ++faces;
        int d = d0;
        do {
            seen[d] = true;
            int t = twin[d];
            int v = owner[t];
            int i = t - off[v];
            d = off[v] + (i + 1) % int(rotation[v].size());
        } while (d != d0);
    }
    return faces;
}

// --- embedding enumeration ------------------------------------------------

std::vector<PlaneMap> all_embeddings(const Graph& g, int bound) {
    if (g.n() > bound) throw BoundExceeded("all_embeddings: n exceeds bound");
    if (g.n() == 0) throw std::invalid_argument("empty graph");
    if (!g.is_connected()) throw std::invalid_argument("all_embeddings: graph must be connected");
    if (g.n() == 1) return {PlaneMap::from_rotation({{}})};

    int n = g.n();
    // Candidate cyclic orders per vertex: first neighbour pinned (cyclic
    // normalization), the rest permuted. At the pivot vertex only one of each
    // mirror pair is kept; reflections are identified by plane_code anyway.
    int pivot = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) > g.degree(pivot)) pivot = v;
    std::vector<std::vector<std::vector<int>>> orders(n);
    for (int v = 0; v < n; ++v) {
        auto nb = g.neighbors(v);
        if (nb.empty()) throw std::invalid_argument("isolated vertex");
        std::vector<int> rest(nb.begin() + 1, nb.end());
        std::sort(rest.begin(), rest.end());
        do {
            if (v == pivot && rest.size() >= 2 && rest.front() > rest.back()) continue;
            std::vector<int> full;
            full.push_back(nb[0]);
            full.insert(full.end(), rest.begin(), rest.end());
            orders[v].push_back(std::move(full));
        } while (std::next_permutation(rest.begin(), rest.end()));
    }

    std::map<PlaneCode, PlaneMap> dedup;
    std::vector<std::vector<int>> rotation(n);
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            if (count_faces_of_rotation(rotation, g.m()) == 2 - n + g.m()) {
                PlaneMap m = PlaneMap::from_rotation(rotation);
                dedup.emplace(plane_code(m), std::move(m));
            }
            return;
        }
        for (auto& ord : orders[v]) {
            rotation[v] = ord;
            rec(v + 1);
        }
    };
    rec(0);
    std::vector<PlaneMap> out;
    out.reserve(dedup.size());
    for (auto& [code, m] : dedup) out.push_back(std::move(m));
    return out;
}

Rat discharge_bound(int64_t n, const Rat& c, const Rat& d) {
    if (!(c < Rat(2))) throw DivergentBound("discharge bound needs c < 2");
    return (Rat(4 * n) - Rat(8) + d) / (Rat(2) - c);
}

}  // namespace ptl
