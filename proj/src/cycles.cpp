#include "ptl/cycles.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <functional>
#include <set>

namespace ptl {

namespace {

// Vertex subset as a word-parallel bitset compatible with Graph rows.
struct VSet {
    std::vector<uint64_t> w;
    static VSet full(int n) {
        VSet s;
        s.w.assign((n + 63) / 64, ~uint64_t(0));
        if (n % 64) s.w.back() = (uint64_t(1) << (n % 64)) - 1;
        if (n == 0) s.w.clear();
        return s;
    }
    bool test(int v) const { return (w[v / 64] >> (v % 64)) & 1; }
    void set(int v) { w[v / 64] |= uint64_t(1) << (v % 64); }
    void reset(int v) { w[v / 64] &= ~(uint64_t(1) << (v % 64)); }
    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }
};

std::vector<int> members(const VSet& s) {
    std::vector<int> out;
    for (size_t i = 0; i < s.w.size(); ++i) {
        uint64_t bits = s.w[i];
        while (bits) {
            out.push_back(int(i * 64 + std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

// First common neighbour of u,v inside mask, or -1.
int common_neighbor(const Graph& g, const VSet& mask, int u, int v) {
    auto ru = g.row(u), rv = g.row(v);
    for (size_t i = 0; i < mask.w.size(); ++i) {
        uint64_t bits = ru[i] & rv[i] & mask.w[i];
        if (bits) return int(i * 64 + std::countr_zero(bits));
    }
    return -1;
}

std::vector<int> normalize_cycle(std::vector<int> c) {
    auto it = std::min_element(c.begin(), c.end());
    std::rotate(c.begin(), it, c.end());
    if (c.size() >= 3 && c[1] > c.back()) std::reverse(c.begin() + 1, c.end());
    return c;
}

// Exact k-cycle existence within mask. Biconnected components of the masked
// subgraph are searched separately; components smaller than k cannot host a
// cycle of length k, which keeps the common "no cycle" outcome near-linear.
std::optional<std::vector<int>> find_cycle_in(const Graph& g, const VSet& mask, int k) {
    if (k == 3) {
        auto verts = members(mask);
        for (int u : verts) {
            bool stop = false;
            int w2 = -1, v2 = -1;
            g.for_neighbors(u, [&](int v) {
                if (stop || v <= u || !mask.test(v)) return;
                int w = common_neighbor(g, mask, u, v);
                if (w >= 0) {
                    stop = true;
                    v2 = v;
                    w2 = w;
                }
            });
            if (stop) return std::vector<int>{u, v2, w2};
        }
        return std::nullopt;
    }

    auto verts = members(mask);
    if (int(verts.size()) < k) return std::nullopt;
    std::vector<int> to_sub(g.n(), -1);
    for (size_t i = 0; i < verts.size(); ++i) to_sub[verts[i]] = int(i);
    Graph sub(int(verts.size()));
    for (int v : verts)
        g.for_neighbors(v, [&](int u) {
            if (u > v && mask.test(u)) sub.add_edge(to_sub[v], to_sub[u]);
        });

    for (auto& comp : biconnected_components(sub)) {
        std::set<int> vs;
        for (auto [a, b] : comp) {
            vs.insert(a);
            vs.insert(b);
        }
        if (int(vs.size()) < k) continue;
        // DFS for a k-cycle inside this component
        std::vector<int> cvs(vs.begin(), vs.end());
        std::vector<int> to_c(sub.n(), -1);
        for (size_t i = 0; i < cvs.size(); ++i) to_c[cvs[i]] = int(i);
        Graph cg(int(cvs.size()));
        for (auto [a, b] : comp) cg.add_edge(to_c[a], to_c[b]);

        int cn = cg.n();
        std::vector<int> path;
        std::vector<char> used(cn, 0);
        std::function<bool(int, int)> dfs = [&](int s, int last) -> bool {
            if (int(path.size()) == k) return cg.has_edge(last, s);
            bool found = false;
            if (int(path.size()) == k - 1) {
                // final vertex must close back to s
                cg.for_neighbors(last, [&](int u) {
                    if (found || u <= s || used[u] || !cg.has_edge(u, s)) return;
                    path.push_back(u);
                    used[u] = 1;
                    if (dfs(s, u)) {
                        found = true;
                        return;
                    }
                    used[u] = 0;
                    path.pop_back();
                });
                return found;
            }
            cg.for_neighbors(last, [&](int u) {
                if (found || u <= s || used[u]) return;
                path.push_back(u);
                used[u] = 1;
                if (dfs(s, u)) {
                    found = true;
                    return;
                }
                used[u] = 0;
                path.pop_back();
            });
            return found;
        };
        for (int s = 0; s + k <= cn; ++s) {
            path = {s};
            std::fill(used.begin(), used.end(), 0);
            used[s] = 1;
            if (dfs(s, s)) {
                std::vector<int> out;
                for (int v : path) out.push_back(verts[cvs[v]]);
                return out;
            }
        }
    }
    return std::nullopt;
}

// Enumerate all k-cycles within mask that pass through `via` (existence
// driver for the two-cycle fast path). Stops when cb returns true.
bool for_each_cycle_through(const Graph& g, const VSet& mask, int k, int via,
                            const std::function<bool(const std::vector<int>&)>& cb) {
    std::vector<int> path{via};
    std::vector<char> used(g.n(), 0);
    used[via] = 1;
    bool stop = false;
    std::function<void(int)> dfs = [&](int last) {
        if (stop) return;
        if (int(path.size()) == k) {
            if (g.has_edge(last, via) && path[1] < path.back()) stop = cb(path);
            return;
        }
        g.for_neighbors(last, [&](int u) {
            if (stop || used[u] || !mask.test(u)) return;
            path.push_back(u);
            used[u] = 1;
            dfs(u);
            used[u] = 0;
            path.pop_back();
        });
    };
    dfs(via);
    return stop;
}

// Enumerate induced (chordless) cycles within mask; cb returning true stops.
// A family of t disjoint cycles exists iff one of t disjoint induced cycles
// does, so wildcard search only ever branches on these.
bool for_each_induced_cycle(const Graph& g, const VSet& mask,
                            const std::function<bool(const std::vector<int>&)>& cb) {
    auto verts = members(mask);
    std::vector<int> path;
    std::vector<char> used(g.n(), 0);
    bool stop = false;
    std::function<void(int, int)> dfs = [&](int s, int last) {
        if (stop) return;
        g.for_neighbors(last, [&](int u) {
            if (stop || u <= s || used[u] || !mask.test(u)) return;
            // chordless: u may touch only `last`, except for the closing edge to s
            bool chord = false;
            for (size_t i = 1; i + 1 < path.size(); ++i)
                if (g.has_edge(u, path[i])) {
                    chord = true;
                    break;
                }
            if (chord) return;
            bool closes = g.has_edge(u, s);
            if (closes && path.size() >= 2 && path[1] < u) {
                path.push_back(u);
                stop = cb(path);
                path.pop_back();
                if (stop) return;
            }
            if (!closes || path.size() < 2) {
                // extending past a neighbour of s would leave a chord
                if (!closes) {
                    path.push_back(u);
                    used[u] = 1;
                    dfs(s, u);
                    used[u] = 0;
                    path.pop_back();
                } else if (path.size() < 2) {
                    path.push_back(u);
                    used[u] = 1;
                    dfs(s, u);
                    used[u] = 0;
                    path.pop_back();
                }
            }
        });
    };
    for (int s : verts) {
        if (stop) break;
        path = {s};
        std::fill(used.begin(), used.end(), 0);
        used[s] = 1;
        dfs(s, s);
    }
    return stop;
}

VSet without(VSet mask, const std::vector<int>& verts) {
    for (int v : verts) mask.reset(v);
    return mask;
}

// General recursive matcher: exact lengths ascending, wildcards last.
bool match_rec(const Graph& g, const VSet& mask, const std::vector<int>& exacts, size_t idx,
               int wild, std::vector<std::vector<int>>& acc) {
    if (idx < exacts.size()) {
        int k = exacts[idx];
        bool found = false;
        // enumerate k-cycles: canonical DFS over start vertices
        std::vector<int> path;
        std::vector<char> used(g.n(), 0);
        std::function<void(int, int)> dfs = [&](int s, int last) {
            if (found) return;
            if (int(path.size()) == k) {
                if (g.has_edge(last, s) && path[1] < path.back()) {
                    acc.push_back(path);
                    if (match_rec(g, without(mask, path), exacts, idx + 1, wild, acc))
                        found = true;
                    else
                        acc.pop_back();
                }
                return;
            }
            g.for_neighbors(last, [&](int u) {
                if (found || u <= s || used[u] || !mask.test(u)) return;
                path.push_back(u);
                used[u] = 1;
                dfs(s, u);
                used[u] = 0;
                path.pop_back();
            });
        };
        for (int s : members(mask)) {
            if (found) break;
            path = {s};
            std::fill(used.begin(), used.end(), 0);
            used[s] = 1;
            dfs(s, s);
        }
        return found;
    }
    if (wild == 0) return true;
    if (wild == 1) {
        // any cycle at all
        auto verts = members(mask);
        std::vector<int> to_sub(g.n(), -1);
        for (size_t i = 0; i < verts.size(); ++i) to_sub[verts[i]] = int(i);
        Graph sub(int(verts.size()));
        for (int v : verts)
            g.for_neighbors(v, [&](int u) {
                if (u > v && mask.test(u)) sub.add_edge(to_sub[v], to_sub[u]);
            });
        auto cyc = some_cycle(sub);
        if (cyc.empty()) return false;
        for (int& v : cyc) v = verts[v];
        acc.push_back(cyc);
        return true;
    }
    bool found = false;
    for_each_induced_cycle(g, mask, [&](const std::vector<int>& c) {
        acc.push_back(c);
        if (match_rec(g, without(mask, c), exacts, idx, wild - 1, acc)) {
            found = true;
            return true;
        }
        acc.pop_back();
        return false;
    });
    return found;
}

// Fast exact path for patterns of two exact cycle lengths (C3+C5, 2C3, ...).
// Find one k2-cycle C; either some k1-cycle avoids it, or every solution's
// k1-cycle meets C, so branch over the k1-cycles through each vertex of C.
std::optional<std::vector<std::vector<int>>> find_two_exact(const Graph& g, int k1, int k2) {
    VSet full = VSet::full(g.n());
    auto c2 = find_cycle_in(g, full, k2);
    if (!c2) return std::nullopt;
    auto a = find_cycle_in(g, without(full, *c2), k1);
    if (a) return std::vector<std::vector<int>>{*a, *c2};
    for (int c : *c2) {
        // all k1-cycles through c need a k2-cycle avoiding c
        if (!find_cycle_in(g, without(full, {c}), k2)) continue;
        std::optional<std::vector<std::vector<int>>> res;
        for_each_cycle_through(g, full, k1, c, [&](const std::vector<int>& t) {
            auto b = find_cycle_in(g, without(full, t), k2);
            if (b) {
                res = {t, *b};
                return true;
            }
            return false;
        });
        if (res) return res;
    }
    return std::nullopt;
}

}  // namespace

// --- pattern type ----------------------------------------------------------

CyclePattern CyclePattern::parse(const std::string& s) {
    CyclePattern p;
    size_t pos = 0;
    if (s.empty()) throw std::invalid_argument("empty pattern");
    while (pos <= s.size()) {
        size_t plus = s.find('+', pos);
        std::string term = s.substr(pos, plus == std::string::npos ? plus : plus - pos);
        size_t c = term.find_first_of("Cc");
        if (c == std::string::npos) throw std::invalid_argument("pattern term without C: " + term);
        int count = 1;
        if (c > 0) {
            auto [e, err] = std::from_chars(term.data(), term.data() + c, count);
            if (err != std::errc() || e != term.data() + c)
                throw std::invalid_argument("bad multiplier in: " + term);
        }
        if (count < 1) throw std::invalid_argument("multiplier must be positive: " + term);
        if (c + 1 == term.size()) {
            p.wildcard_count += count;
        } else {
            int len = 0;
            auto [e, err] = std::from_chars(term.data() + c + 1, term.data() + term.size(), len);
            if (err != std::errc() || e != term.data() + term.size())
                throw std::invalid_argument("bad cycle length in: " + term);
            for (int i = 0; i < count; ++i) p.exact_lengths.push_back(len);
        }
        if (plus == std::string::npos) break;
        pos = plus + 1;
    }
    std::sort(p.exact_lengths.begin(), p.exact_lengths.end());
    p.validate();
    return p;
}

void CyclePattern::validate() const {
    if (exact_lengths.empty() && wildcard_count == 0)
        throw std::invalid_argument("pattern requires at least one cycle");
    if (wildcard_count < 0) throw std::invalid_argument("negative wildcard count");
    for (int k : exact_lengths)
        if (k < 3) throw std::invalid_argument("cycle length below 3");
}

std::string CyclePattern::str() const {
    std::string out;
    size_t i = 0;
    while (i < exact_lengths.size()) {
        size_t j = i;
        while (j < exact_lengths.size() && exact_lengths[j] == exact_lengths[i]) ++j;
        if (!out.empty()) out += "+";
        if (j - i > 1) out += std::to_string(j - i);
        out += "C" + std::to_string(exact_lengths[i]);
        i = j;
    }
    if (wildcard_count > 0) {
        if (!out.empty()) out += "+";
        if (wildcard_count > 1) out += std::to_string(wildcard_count);
        out += "C";
    }
    return out;
}

int CyclePattern::min_vertices() const {
    int s = 3 * wildcard_count;
    for (int k : exact_lengths) s += k;
    return s;
}

// --- public операции --------------------------------------------------------

bool witness_valid(const Graph& g, const CyclePattern& p, const CycleWitness& w) {
    if (int(w.cycles.size()) != int(p.exact_lengths.size()) + p.wildcard_count) return false;
    std::set<int> seen;
    for (size_t i = 0; i < w.cycles.size(); ++i) {
        auto& c = w.cycles[i];
        if (i < p.exact_lengths.size() && int(c.size()) != p.exact_lengths[i]) return false;
        if (c.size() < 3) return false;
        for (size_t j = 0; j < c.size(); ++j) {
            if (!seen.insert(c[j]).second) return false;  // disjointness + simplicity
            if (!g.has_edge(c[j], c[(j + 1) % c.size()])) return false;
        }
    }
    return true;
}

std::optional<std::vector<int>> find_cycle(const Graph& g, int k) {
    if (k < 3) throw std::invalid_argument("cycle length below 3");
    auto c = find_cycle_in(g, VSet::full(g.n()), k);
    if (!c) return std::nullopt;
    return normalize_cycle(*c);
}

std::optional<CycleWitness> find_pattern(const Graph& g, const CyclePattern& p) {
    p.validate();
    if (p.min_vertices() > g.n()) return std::nullopt;
    std::optional<std::vector<std::vector<int>>> raw;
    if (p.exact_lengths.size() == 2 && p.wildcard_count == 0) {
        raw = find_two_exact(g, p.exact_lengths[0], p.exact_lengths[1]);
    } else if (p.exact_lengths.size() == 1 && p.wildcard_count == 0) {
        auto c = find_cycle_in(g, VSet::full(g.n()), p.exact_lengths[0]);
        if (c) raw = std::vector<std::vector<int>>{*c};
    } else {
        std::vector<std::vector<int>> acc;
        if (match_rec(g, VSet::full(g.n()), p.exact_lengths, 0, p.wildcard_count, acc))
            raw = std::move(acc);
    }
    if (!raw) return std::nullopt;
    CycleWitness w;
    for (auto& c : *raw) w.cycles.push_back(normalize_cycle(c));
    assert(witness_valid(g, p, w));
    return w;
}

bool is_free(const Graph& g, const CyclePattern& p) { return !find_pattern(g, p); }

TriangleHub common_triangle_vertex(const Graph& g) {
    VSet cand = VSet::full(g.n());
    bool any = false;
    for (auto [u, v] : g.edges()) {
        auto ru = g.row(u), rv = g.row(v);
        int first = -1, cnt = 0;
        for (size_t i = 0; i < ru.size() && cnt < 2; ++i) {
            uint64_t bits = ru[i] & rv[i];
            while (bits && cnt < 2) {
                if (first < 0) first = int(i * 64 + std::countr_zero(bits));
                ++cnt;
                bits &= bits - 1;
            }
        }
        if (cnt == 0) continue;
        any = true;
        // intersect candidates with every triangle on this edge: {u,v} always,
        // plus the apex when it is unique
        VSet tri = VSet::full(g.n());
        std::fill(tri.w.begin(), tri.w.end(), 0);
        tri.set(u);
        tri.set(v);
        if (cnt == 1) tri.set(first);
        for (size_t i = 0; i < cand.w.size(); ++i) cand.w[i] &= tri.w[i];
    }
    TriangleHub out;
    if (!any) {
        out.kind = TriangleHub::AllVacuous;
        return out;
    }
    auto verts = members(cand);
    if (verts.empty()) {
        out.kind = TriangleHub::Absent;
        return out;
    }
    out.kind = TriangleHub::Found;
    out.vertex = verts[0];
    return out;
}

}  // namespace ptl
