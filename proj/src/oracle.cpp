#include "ptl/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <fstream>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include <json.hpp>

#include "ptl/constructions.hpp"
#include "ptl/plane_map.hpp"

namespace ptl {

namespace {

using json = nlohmann::json;

// Accept iff the added vertex (the last index) lies in the orbit of the
// canonically-last vertex; fills in the child's code for per-parent dedup.
bool canonical_child(const Graph& child, CanonicalCode& code) {
    CanonResult cr = canonical_form(child);
    code = std::move(cr.code);
    int last = child.n() - 1;
    int kappa = -1;
    for (int v = 0; v < child.n(); ++v)
        if (cr.labeling[v] == last) {
            kappa = v;
            break;
        }
    return cr.orbit[kappa] == cr.orbit[last];
}

struct GenDriver {
    int n_target;
    const GenOptions& opts;
    const std::function<bool(const Graph&)>& cb;
    uint64_t seen = 0, pruned = 0;
    bool stop = false;

    void leaf(const Graph& g) {
        if (opts.exact_edges && g.m() != *opts.exact_edges) return;
        if (opts.connected_only && !g.is_connected()) return;
        if (!cb(g)) stop = true;
    }

    // generic feasibility: remaining vertices add at most k edges each
    bool edges_unreachable(const Graph& g) const {
        if (!opts.exact_edges) return false;
        int m = *opts.exact_edges;
        if (g.m() > m) return true;
        int64_t mx = g.m();
        for (int j = g.n(); j < n_target; ++j) mx += j;
        return mx < m;
    }

    void rec(const Graph& g) {
        if (stop) return;
        ++seen;
        if (g.n() == n_target) {
            leaf(g);
            return;
        }
        int k = g.n();
        // distinct neighbor subsets can build the same child when the parent
        // has automorphisms; the code set rejects those repeats
        std::set<CanonicalCode> emitted;
        for (uint32_t mask = 0; mask < (uint32_t(1) << k) && !stop; ++mask) {
            Graph child(k + 1);
            for (auto [u, v] : g.edges()) child.add_edge(u, v);
            for (int b = 0; b < k; ++b)
                if ((mask >> b) & 1) child.add_edge(b, k);
            if (edges_unreachable(child) || (opts.prefix_prune && opts.prefix_prune(child))) {
                ++pruned;
                continue;
            }
            CanonicalCode code;
            if (canonical_child(child, code) && emitted.insert(std::move(code)).second)
                rec(child);
        }
    }
};

}  // namespace

void generate_graphs(int n, const GenOptions& opts, const std::function<bool(const Graph&)>& cb) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    if (n > opts.cap) throw CapExceeded("generate_graphs: n exceeds cap");
    Graph seed(1);
    if (opts.prefix_prune && opts.prefix_prune(seed)) return;
    GenDriver d{n, opts, cb};
    d.rec(seed);
}

// --- ex_planar ----------------------------------------------------------------

namespace {

int planar_edge_cap(int v) { return v <= 2 ? v * (v - 1) / 2 : 3 * v - 6; }

// best final edge count achievable from a planar prefix (k vertices, e edges)
int planar_max_future(int k, int e, int n) {
    for (int j = k; j < n; ++j) e = std::min(e + j, planar_edge_cap(j + 1));
    return e;
}

struct LevelOutcome {
    bool sat = false;
    std::vector<CanonicalCode> witnesses;
};

// one downward-scan level: is there a planar pattern-free graph with exactly
// m edges? collects every witness class
LevelOutcome run_level(int n, int m, const CyclePattern& p, const OracleOptions& opts,
                       SearchStats& stats) {
    auto prune = [&](const Graph& g) -> bool {
        if (opts.prune_edge_bound) {
            if (g.m() > m) return true;
            if (planar_max_future(g.n(), g.m(), n) < m) return true;
        }
        if (opts.prune_planar && !is_planar(g)) return true;
        if (opts.prune_pattern && !is_free(g, p)) return true;
        return false;
    };

    // leaf filter: exact edge count, connected, and (when pruning is off for
    // the soundness tests) the full planarity/freeness checks
    auto is_witness = [&](const Graph& g) -> bool {
        if (g.m() != m || !g.is_connected()) return false;
        if (!opts.prune_planar && !is_planar(g)) return false;
        if (!opts.prune_pattern && !is_free(g, p)) return false;
        return true;
    };

    LevelOutcome out;
    if (opts.jobs <= 1 || n <= 6) {
        GenOptions gopts;
        gopts.cap = std::max(opts.cap, n);
        gopts.exact_edges = m;
        gopts.prefix_prune = prune;
        GenDriver d{n, gopts, [&](const Graph& g) {
                        if (is_witness(g)) out.witnesses.push_back(canonical_code(g));
                        return true;
                    }};
        Graph seed(1);
        if (!prune(seed)) d.rec(seed);
        stats.seen += d.seen;
        stats.pruned += d.pruned;
    } else {
        // frontier split at a shallow level, dynamic pull by worker threads;
        // union of per-worker witness sets is order-independent
        int split = std::min(n - 1, 5);
        std::vector<Graph> frontier;
        {
            GenOptions gopts;
            gopts.cap = std::max(opts.cap, n);
            gopts.prefix_prune = prune;  // applies while collecting the frontier too
            GenDriver d{split, gopts, [&](const Graph& g) {
                            frontier.push_back(g);
                            return true;
                        }};
            Graph seed(1);
            if (!prune(seed)) d.rec(seed);
            stats.seen += d.seen;
            stats.pruned += d.pruned;
        }
        if (opts.seed != 0) {
            std::mt19937_64 rng(opts.seed);
            std::shuffle(frontier.begin(), frontier.end(), rng);
        }
        std::atomic<size_t> next{0};
        std::atomic<uint64_t> seen{0}, pruned{0};
        std::mutex out_mu;
        auto worker = [&]() {
            std::vector<CanonicalCode> local;
            for (;;) {
                size_t i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= frontier.size()) break;
                GenOptions gopts;
                gopts.cap = std::max(opts.cap, n);
                gopts.exact_edges = m;
                gopts.prefix_prune = prune;
                GenDriver d{n, gopts, [&](const Graph& g) {
                                if (is_witness(g)) local.push_back(canonical_code(g));
                                return true;
                            }};
                d.rec(frontier[i]);
                seen.fetch_add(d.seen, std::memory_order_relaxed);
                pruned.fetch_add(d.pruned, std::memory_order_relaxed);
            }
            std::lock_guard<std::mutex> lock(out_mu);
            out.witnesses.insert(out.witnesses.end(), local.begin(), local.end());
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < opts.jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        stats.seen += seen.load();
        stats.pruned += pruned.load();
    }
    std::sort(out.witnesses.begin(), out.witnesses.end());
    out.sat = !out.witnesses.empty();
    return out;
}

void code_list_hex(const std::vector<CanonicalCode>& cs, json& arr) {
    for (auto& c : cs) arr.push_back(code_hex(c));
}

CanonicalCode code_from_hex(const std::string& s) {
    CanonicalCode c;
    for (size_t i = 0; i + 1 < s.size(); i += 2)
        c.push_back(uint8_t(std::stoi(s.substr(i, 2), nullptr, 16)));
    return c;
}

}  // namespace

SearchResult ex_planar(int n, const CyclePattern& p, const OracleOptions& opts) {
    p.validate();
    if (n < 1) throw std::invalid_argument("need n >= 1");
    if (n > opts.cap) throw CapExceeded("ex_planar: n exceeds cap");
    auto t0 = std::chrono::steady_clock::now();

    SearchResult res;
    res.n = n;
    res.pattern = p;

    json ckpt;
    bool have_ckpt = false;
    if (!opts.checkpoint_path.empty()) {
        std::ifstream in(opts.checkpoint_path);
        if (in) {
            in >> ckpt;
            have_ckpt = ckpt.value("n", -1) == n && ckpt.value("pattern", "") == p.str();
        }
        if (!have_ckpt) {
            ckpt = json{{"schema", "ptl/1"}, {"n", n}, {"pattern", p.str()}, {"levels", json::object()}};
        }
    }

    int top = n <= 2 ? n * (n - 1) / 2 : 3 * n - 6;
    for (int m = top; m >= 0; --m) {
        LevelOutcome lo;
        std::string key = std::to_string(m);
        if (have_ckpt && ckpt["levels"].contains(key)) {
            auto& rec = ckpt["levels"][key];
            lo.sat = rec.value("sat", false);
            for (auto& h : rec["witnesses"]) lo.witnesses.push_back(code_from_hex(h));
        } else {
            lo = run_level(n, m, p, opts, res.stats);
            if (!opts.checkpoint_path.empty()) {
                json arr = json::array();
                code_list_hex(lo.witnesses, arr);
                ckpt["levels"][key] = json{{"sat", lo.sat}, {"witnesses", arr}};
                std::ofstream outf(opts.checkpoint_path + ".tmp");
                outf << ckpt.dump(1);
                outf.close();
                std::rename((opts.checkpoint_path + ".tmp").c_str(), opts.checkpoint_path.c_str());
                have_ckpt = true;
            }
        }
        if (lo.sat) {
            res.max_edges = m;
            res.witnesses = std::move(lo.witnesses);
            break;
        }
    }
    res.stats.elapsed_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

// --- catalog surface ------------------------------------------------------------

namespace {

json catalog_to_json(const BlockCatalog& cat) {
    json classes = json::array();
    for (auto& bc : cat.classes) {
        json cj{{"code", code_hex(bc.code)}, {"v", bc.vertices},   {"e", bc.edges},
                {"f3", bc.f3},              {"holes", bc.hole_lengths}, {"tag", bc.tag},
                {"alias", bc.alias}};
        if (bc.good.has_value()) cj["good"] = *bc.good;
        classes.push_back(std::move(cj));
    }
    return json{{"schema", "ptl/1"}, {"max_v", cat.max_vertices}, {"classes", classes}};
}

std::optional<BlockCatalog> catalog_from_json(const json& j, int max_v) {
    if (j.value("schema", "") != "ptl/1" || j.value("max_v", -1) != max_v) return std::nullopt;
    BlockCatalog cat;
    cat.max_vertices = max_v;
    for (auto& cj : j.at("classes")) {
        BlockClass bc;
        bc.code = code_from_hex(cj.at("code").get<std::string>());
        bc.vertices = cj.at("v");
        bc.edges = cj.at("e");
        bc.f3 = cj.at("f3");
        bc.hole_lengths = cj.at("holes").get<std::vector<int>>();
        bc.tag = cj.at("tag");
        bc.alias = cj.at("alias");
        if (cj.contains("good")) bc.good = cj.at("good").get<bool>();
        cat.classes.push_back(std::move(bc));
    }
    return cat;
}

}  // namespace

const BlockCatalog& enumerate_blocks(int max_v) {
    const char* dir = std::getenv("PTL_CACHE_DIR");
    if (!dir) return block_catalog(max_v);
    static std::mutex mu;
    static std::map<int, BlockCatalog> loaded;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = loaded.find(max_v); it != loaded.end()) return it->second;
    std::string path = std::string(dir) + "/block_catalog_" + std::to_string(max_v) + ".json";
    if (std::ifstream in(path); in) {
        json j;
        try {
            in >> j;
            if (auto cat = catalog_from_json(j, max_v))
                return loaded.emplace(max_v, std::move(*cat)).first->second;
        } catch (...) {
            // unreadable cache: fall through and rebuild
        }
    }
    const BlockCatalog& cat = block_catalog(max_v);
    std::ofstream out(path);
    if (out) out << catalog_to_json(cat).dump(1);
    return cat;
}

Lemma2Report verify_lemma2() {
    const BlockCatalog& cat = block_catalog(6);
    Lemma2Report rep;
    for (auto& bc : cat.classes) {
        if (bc.vertices != 6) continue;
        ++rep.six_classes;
        if (bc.good.has_value() && !*bc.good) rep.bad.push_back(bc);
    }
    rep.exactly_two = rep.bad.size() == 2;
    PlaneCode fan6_code = plane_code(fan(6));
    rep.contains_fan6 = false;
    rep.f3_bound_ok = true;
    for (auto& bc : rep.bad) {
        if (bc.code == fan6_code || bc.alias == "fan6") rep.contains_fan6 = true;
        if (2 * bc.f3 > bc.edges) rep.f3_bound_ok = false;
    }
    rep.pass = rep.exactly_two && rep.contains_fan6 && rep.f3_bound_ok;
    return rep;
}

CensusRecord lemma1_census(int64_t n) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    CensusRecord r;
    r.n = n;
    r.f_n = Rat(4 * n + 15097, 15555);
    r.alpha = r.f_n - Rat(1);
    r.pair_blocks = (r.f_n - Rat(15) - Rat(2) * Rat(10 + 5 + 1)) / Rat(10);
    r.pair_formula_ok = r.pair_blocks == Rat(2 * n - 357994, 77775);
    Rat lhs = Rat(5, 8) * (Rat(4 * n) + Rat(1037) * r.alpha + Rat(22));
    r.identity_ok = lhs == Rat(8 * n - 16, 3);
    r.threshold_ok = r.pair_blocks >= Rat(3);
    return r;
}

const std::vector<KnownFormula>& known_formulas() {
    static const std::vector<KnownFormula> reg = {
        {"2C3", "ceil(5n/2) - 5", 6, [](int64_t n) { return Rat((5 * n + 1) / 2 - 5); }},
        {"C3+C4", "floor(5n/2) - 4", 20, [](int64_t n) { return Rat(5 * n / 2 - 4); }},
        {"2C", "2n - 1", 5, [](int64_t n) { return Rat(2 * n - 1); }},
        {"3C", "3n - 6", 3, [](int64_t n) { return Rat(3 * n - 6); }},
        {"C5", "(12n - 33)/5", 11, [](int64_t n) { return Rat(12 * n - 33, 5); }},
        {"C3+C5", "floor((8n - 13)/3)", 295660, [](int64_t n) { return Rat(8 * n - 13, 3); }},
    };
    return reg;
}

const KnownFormula* known_formula_for(const CyclePattern& p) {
    // any t >= 3 arbitrary disjoint cycles share the 3n-6 value
    if (p.exact_lengths.empty() && p.wildcard_count >= 3) {
        for (auto& f : known_formulas())
            if (f.pattern == "3C") return &f;
    }
    std::string s = p.str();
    for (auto& f : known_formulas())
        if (f.pattern == s) return &f;
    return nullptr;
}

std::vector<CompareRow> compare_known(int n_lo, int n_hi, const CyclePattern& p,
                                      const OracleOptions& opts) {
    const KnownFormula* kf = known_formula_for(p);
    bool is_c3c5 = p == pattern_c3c5();
    std::vector<CompareRow> rows;
    for (int n = n_lo; n <= n_hi; ++n) {
        CompareRow row;
        row.n = n;
        row.oracle_value = ex_planar(n, p, opts).max_edges;
        if (kf && n >= kf->n0) row.formula_value = kf->eval(n).floor();
        if (is_c3c5 && n >= 7) row.construction_lb = extremal_c3c5(n).m();
        if (row.formula_value) row.match = *row.formula_value == row.oracle_value;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace ptl
