#ifndef PTL_TRI_BLOCKS_HPP
#define PTL_TRI_BLOCKS_HPP

#include <optional>
#include <string>
#include <vector>

#include "ptl/plane_map.hpp"

namespace ptl {

// One triangular block of a plane map: a maximal edge set grown from a seed
// edge by absorbing 3-faces that share an edge with the set. Blocks partition
// the host's edges; a lone edge lying in no 3-face forms a 2-vertex block.
struct TriBlock {
    std::vector<int> edge_ids;      // host edge ids, ascending
    std::vector<int> vertices;      // host vertex ids, ascending
    int f3_in_host = 0;             // host 3-faces whose edges lie in this block
    PlaneMap sub_map;               // the block regarded as its own plane graph
    std::vector<int> sub_to_host;   // sub vertex -> host vertex

    int e() const { return int(edge_ids.size()); }
    int v() const { return int(vertices.size()); }
};

// The unique edge partition reachable by 3-face closure, ordered by smallest
// edge id. Sum of e(B) equals e(host) and sum of f3(B) equals f3(host).
std::vector<TriBlock> decompose(const PlaneMap& m);

// A hole is a face of the block's own map with length >= 4.
struct Hole {
    std::vector<int> walk;  // host vertex ids along the face walk
    int length() const { return int(walk.size()); }
};
std::vector<Hole> holes(const TriBlock& b);

// A block with >= 6 vertices is good when for every nonadjacent pair u,v on a
// common hole some 5-cycle of the block contains at most one of u, v.
// Vacuously true when no such pair exists. Throws TooSmall for < 6 vertices.
bool is_good(const TriBlock& b);

bool is_wheel_graph(const Graph& g);  // K1 joined to a cycle
bool is_fan_graph(const Graph& g);    // K1 joined to a path
bool is_wheel(const TriBlock& b);
bool is_fan(const TriBlock& b);

// Catalog of single-block plane classes by vertex count.
struct BlockClass {
    PlaneCode code;
    int vertices = 0;
    int edges = 0;
    int f3 = 0;                      // 3-faces of the standalone embedding
    std::vector<int> hole_lengths;   // ascending
    std::string tag;                 // systematic id, e.g. "b5_2"
    std::string alias;               // structural name when recognized, else == tag
    std::optional<bool> good;        // set for >= 6 vertices
};

struct BlockCatalog {
    int max_vertices = 0;
    std::vector<BlockClass> classes;  // sorted by (vertices, code)
    const BlockClass* find(const PlaneCode& c) const;
    const BlockClass* by_alias(const std::string& a) const;
    std::vector<const BlockClass*> of_size(int v) const;
};

// Complete for v <= max_v; built by exhaustive embedding enumeration and
// cached. Throws CapExceeded for max_v > 7.
const BlockCatalog& block_catalog(int max_v = 6);

// One representative map per single-block plane class on exactly v vertices,
// sorted by plane code. The catalog is built from these.
std::vector<PlaneMap> single_block_maps(int v);

// Catalog class of the block ("large" alias when outside the catalog).
BlockClass classify(const TriBlock& b);

// Maximal runs of consecutive 3-faces around v in rotation order.
struct FanRun {
    std::vector<int> faces;      // host face ids, consecutive around v
    std::vector<int> neighbors;  // the covered neighbor arc (|faces|+1 of them)
};
std::vector<FanRun> fan_partition(const PlaneMap& m, int v);

// Audit of the blocks containing a fixed vertex pair after removing the edge
// uv (when present): each such block must be one of {diamond, fan5, wheel5,
// k4ear} or one of the two bad 6-vertex classes.
struct PairBlockEntry {
    int block_index = 0;
    int v = 0, e = 0, f3 = 0;
    std::string alias;
    bool contains_both = false;
    bool allowed = false;  // meaningful when contains_both
};
struct PairBlockReport {
    std::vector<PairBlockEntry> blocks;  // all blocks of m - uv
    int shared_blocks = 0;               // how many contain both u and v
    std::vector<int> violations;         // indices of shared blocks not allowed
    bool every_block_contains_both = false;
};
PairBlockReport check_lemma3_list(const PlaneMap& m, int u, int v);

}  // namespace ptl

#endif
