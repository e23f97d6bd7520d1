#ifndef PTL_PLANE_MAP_HPP
#define PTL_PLANE_MAP_HPP

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "ptl/errors.hpp"
#include "ptl/graph.hpp"
#include "ptl/rational.hpp"

namespace ptl {

// Face length profile: length -> count. For every map, sum(i * f_i) == 2e.
struct FaceProfile {
    std::map<int, int> count;

    int faces() const {
        int f = 0;
        for (auto& [len, c] : count) f += c;
        return f;
    }
    int at(int len) const {
        auto it = count.find(len);
        return it == count.end() ? 0 : it->second;
    }
    bool operator==(const FaceProfile&) const = default;
};

using PlaneCode = std::vector<uint8_t>;

// Combinatorial embedding of a connected graph on the sphere: a rotation
// system (cyclic neighbour order per vertex). Darts are edge-ends: edge i
// gives darts 2i and 2i+1, twins of each other. Faces are the orbits of
// d -> rotation-successor of twin(d). Immutable once built; the editing
// operations return new maps.
class PlaneMap {
public:
    PlaneMap() = default;

    // Validates the rotation: each edge must appear exactly once at both
    // endpoints, and the underlying graph must be connected and simple.
    static PlaneMap from_rotation(const std::vector<std::vector<int>>& rotation);

    const Graph& graph() const { return g_; }
    int n() const { return g_.n(); }
    int m() const { return g_.m(); }
    int darts() const { return 2 * g_.m(); }

    int tail(int d) const { return tail_[d]; }
    int head(int d) const { return tail_[d ^ 1]; }
    int twin(int d) const { return d ^ 1; }
    int sigma(int d) const { return rot_next_[d]; }       // next dart out of tail(d)
    int sigma_inv(int d) const { return rot_prev_[d]; }
    int face_next(int d) const { return rot_next_[d ^ 1]; }

    const std::vector<std::vector<int>>& rotation() const { return rot_; }

    int face_count() const { return face_count_; }
    const std::vector<std::vector<int>>& face_walks() const { return walks_; }
    int face_of_dart(int d) const { return face_of_[d]; }
    const FaceProfile& profile() const { return profile_; }
    int f3() const { return profile_.at(3); }
    std::vector<int> face_vertices(int f) const;  // tail sequence of the walk

    // v - e + f == 2; genus-0 certificate for a connected map.
    bool euler_ok() const { return n() - m() + face_count() == 2; }

    // New map with one extra vertex placed in the given face, joined to
    // `attach`, which must list >= 1 consecutive vertices of the face walk.
    PlaneMap insert_vertex_in_face(int face, const std::vector<int>& attach) const;

    // New map with the edge removed; the rest of the rotation is unchanged.
    PlaneMap without_edge(int u, int v) const;

    // Restriction to the edges selected by `keep` (indexed by edge id in
    // edges() order), vertices re-indexed; also returns sub->host vertex map.
    std::pair<PlaneMap, std::vector<int>> restrict_edges(const std::vector<bool>& keep) const;

    // Dart ids of edge (u,v): dart u->v.
    int dart(int u, int v) const;

private:
    Graph g_;
    std::vector<std::pair<int, int>> edges_;  // sorted, edge id = index
    std::vector<int> tail_;
    std::vector<int> rot_next_, rot_prev_;
    std::vector<std::vector<int>> rot_;
    std::vector<std::vector<int>> walks_;
    std::vector<int> face_of_;
    FaceProfile profile_;
    int face_count_ = 0;

    void build_faces();
};

// Canonical byte code of the map up to dart relabeling and reflection.
PlaneCode plane_code(const PlaneMap& m);

// Planarity with an embedding certificate (Demoucron-style incremental face
// embedding). Input must be connected; returns nullopt when nonplanar.
std::optional<PlaneMap> embed_planar(const Graph& g);

// Any graph; checks component-wise.
bool is_planar(const Graph& g);

// All genus-0 rotation systems of a connected graph up to plane isomorphism
// (reflections identified), sorted by code. Throws BoundExceeded for n > bound.
std::vector<PlaneMap> all_embeddings(const Graph& g, int bound = 8);

// Number of faces a rotation system would have (no map object built).
int count_faces_of_rotation(const std::vector<std::vector<int>>& rotation, int edge_count);

// Max e consistent with Euler's formula given f3 <= c*e + d:
// (4n - 8 + d) / (2 - c). Throws DivergentBound if c >= 2.
Rat discharge_bound(int64_t n, const Rat& c, const Rat& d);

}  // namespace ptl

#endif
