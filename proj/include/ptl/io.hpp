#ifndef PTL_IO_HPP
#define PTL_IO_HPP

#include <iosfwd>
#include <string>

#include "ptl/plane_map.hpp"

namespace ptl::io {

// "adjlist v1": first line n, then `v: u1 u2 ...` with neighbours ascending;
// blank lines ignored, comments start with '#'. Vertices with no line are
// isolated. Throws ParseError with the offending line number.
Graph read_adjlist(std::istream& in);
void write_adjlist(std::ostream& out, const Graph& g);

// "rot v1": same shape, but the neighbour order is the cyclic rotation.
PlaneMap read_rot(std::istream& in);
void write_rot(std::ostream& out, const PlaneMap& m);

void write_dot(std::ostream& out, const Graph& g);
// DOT with the two incident face ids attached to every edge.
void write_dot(std::ostream& out, const PlaneMap& m);

Graph read_adjlist_file(const std::string& path);
PlaneMap read_rot_file(const std::string& path);

}  // namespace ptl::io

#endif
