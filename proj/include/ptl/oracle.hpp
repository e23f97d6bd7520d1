#ifndef PTL_ORACLE_HPP
#define PTL_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "ptl/cycles.hpp"
#include "ptl/rational.hpp"
#include "ptl/tri_blocks.hpp"

namespace ptl {

// --- isomorph-free generation ------------------------------------------------

struct GenOptions {
    int cap = 10;                 // hard vertex cap (CapExceeded beyond)
    bool connected_only = false;  // filter on emitted graphs
    std::optional<int> exact_edges;
    // Monotone subtree discard: called on every augmented graph; returning
    // true prunes it and everything above it. Must be preserved by deleting
    // the canonically-last vertex, or completeness is lost.
    std::function<bool(const Graph&)> prefix_prune;
};

// Canonical augmentation: children extend a graph by one vertex joined to
// every neighbor subset, kept when the new vertex sits in the orbit of the
// canonically-last one. One representative per isomorphism class,
// deterministic order. cb returns false to stop early.
void generate_graphs(int n, const GenOptions& opts, const std::function<bool(const Graph&)>& cb);

// --- exact planar Turan search ------------------------------------------------

struct SearchStats {
    uint64_t seen = 0;    // canon-accepted augmentation nodes
    uint64_t pruned = 0;  // subtrees discarded
    double elapsed_s = 0;
};

struct SearchResult {
    int n = 0;
    CyclePattern pattern;
    int max_edges = -1;
    std::vector<CanonicalCode> witnesses;  // all extremal classes, sorted
    SearchStats stats;
};

struct OracleOptions {
    int cap = 10;
    int jobs = 1;
    std::string checkpoint_path;  // resumable per (n, m) level when set
    uint64_t seed = 0;            // shuffles work units only; results identical
    bool prune_planar = true;     // soundness toggles, exercised by tests
    bool prune_pattern = true;
    bool prune_edge_bound = true;
};

// Exact ex_P(n, pattern) with witnesses; scans edge targets downward from
// 3n-6, so the first satisfiable level is the maximum.
SearchResult ex_planar(int n, const CyclePattern& p, const OracleOptions& opts = {});

// --- block census and claim registry -----------------------------------------

// Single-block plane classes with at most max_v vertices (max_v <= 7).
const BlockCatalog& enumerate_blocks(int max_v);

struct Lemma2Report {
    int six_classes = 0;
    std::vector<BlockClass> bad;
    bool exactly_two = false;
    bool contains_fan6 = false;   // K1 v P5 among the bad ones
    bool f3_bound_ok = false;     // 2*f3 <= e on every bad class
    bool pass = false;
};
Lemma2Report verify_lemma2();

struct CensusRecord {
    int64_t n = 0;
    Rat f_n;           // (4n + 15097)/15555
    Rat alpha;         // f_n - 1
    Rat pair_blocks;   // (f_n - 15 - 2*(10+5+1))/10 == (2n - 357994)/77775
    bool pair_formula_ok = false;
    bool identity_ok = false;  // (5/8)(4n + 1037*alpha + 22) == (8n-16)/3
    bool threshold_ok = false; // pair_blocks >= 3
};
CensusRecord lemma1_census(int64_t n);

struct KnownFormula {
    std::string pattern;
    std::string formula;
    int64_t n0 = 0;
    std::function<Rat(int64_t)> eval;
};
const std::vector<KnownFormula>& known_formulas();
const KnownFormula* known_formula_for(const CyclePattern& p);

struct CompareRow {
    int n = 0;
    int oracle_value = -1;
    std::optional<int64_t> formula_value;  // floor(eval), when n >= n0
    std::optional<int> construction_lb;    // extremal family edges (C3+C5 only)
    std::optional<bool> match;
};
std::vector<CompareRow> compare_known(int n_lo, int n_hi, const CyclePattern& p,
                                      const OracleOptions& opts = {});

}  // namespace ptl

#endif
