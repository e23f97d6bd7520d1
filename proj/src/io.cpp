#include "ptl/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace ptl::io {

namespace {

struct Parsed {
    int n = 0;
    std::vector<std::vector<int>> lists;
};

Parsed read_lists(std::istream& in) {
    Parsed p;
    std::string line;
    int lineno = 0;
    bool have_n = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ss(line);
        if (!have_n) {
            if (!(ss >> p.n)) {
                if (ss.eof()) continue;  // blank
                throw ParseError(lineno, "expected vertex count");
            }
            if (p.n < 0) throw ParseError(lineno, "negative vertex count");
            std::string rest;
            if (ss >> rest) throw ParseError(lineno, "trailing tokens after vertex count");
            p.lists.assign(p.n, {});
            have_n = true;
            continue;
        }
        std::string head;
        if (!(ss >> head)) continue;  // blank
        if (head.back() != ':') throw ParseError(lineno, "expected `v:` prefix");
        int v = 0;
        try {
            size_t used = 0;
            v = std::stoi(head.substr(0, head.size() - 1), &used);
            if (used != head.size() - 1) throw std::invalid_argument("");
        } catch (...) {
            throw ParseError(lineno, "bad vertex id: " + head);
        }
        if (v < 0 || v >= p.n) throw ParseError(lineno, "vertex id out of range");
        if (!p.lists[v].empty()) throw ParseError(lineno, "repeated vertex line");
        int u;
        while (ss >> u) {
            if (u < 0 || u >= p.n) throw ParseError(lineno, "neighbor out of range");
            p.lists[v].push_back(u);
        }
        if (!ss.eof()) throw ParseError(lineno, "bad neighbor token");
    }
    if (!have_n) throw ParseError(lineno, "empty input");
    return p;
}

}  // namespace

Graph read_adjlist(std::istream& in) {
    Parsed p = read_lists(in);
    Graph g(p.n);
    for (int v = 0; v < p.n; ++v)
        for (int u : p.lists[v])
            if (u > v) g.add_edge(v, u);
    // symmetry: every edge must be listed from both sides
    for (int v = 0; v < p.n; ++v) {
        if (int(p.lists[v].size()) != g.degree(v)) throw ParseError(0, "asymmetric adjacency lists");
    }
    return g;
}

void write_adjlist(std::ostream& out, const Graph& g) {
    out << g.n() << "\n";
    for (int v = 0; v < g.n(); ++v) {
        out << v << ":";
        g.for_neighbors(v, [&](int u) { out << " " << u; });
        out << "\n";
    }
}

PlaneMap read_rot(std::istream& in) {
    Parsed p = read_lists(in);
    return PlaneMap::from_rotation(p.lists);
}

void write_rot(std::ostream& out, const PlaneMap& m) {
    out << m.n() << "\n";
    for (int v = 0; v < m.n(); ++v) {
        out << v << ":";
        for (int u : m.rotation()[v]) out << " " << u;
        out << "\n";
    }
}

void write_dot(std::ostream& out, const Graph& g) {
    out << "graph G {\n";
    for (int v = 0; v < g.n(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
}

void write_dot(std::ostream& out, const PlaneMap& m) {
    out << "graph G {\n";
    out << "  // faces:";
    for (auto& [len, cnt] : m.profile().count) out << " " << cnt << "x f" << len;
    out << "\n";
    for (int v = 0; v < m.n(); ++v) out << "  " << v << ";\n";
    auto es = m.graph().edges();
    for (size_t i = 0; i < es.size(); ++i) {
        int left = m.face_of_dart(int(2 * i));
        int right = m.face_of_dart(int(2 * i + 1));
        out << "  " << es[i].first << " -- " << es[i].second << " [faces=\"" << left << ","
            << right << "\"];\n";
    }
    out << "}\n";
}

Graph read_adjlist_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return read_adjlist(in);
}

PlaneMap read_rot_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return read_rot(in);
}

}  // namespace ptl::io
