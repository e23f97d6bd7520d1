#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "ptl/constructions.hpp"
#include "ptl/io.hpp"
#include "ptl/report.hpp"

namespace {

using namespace ptl;

void print_graph(const Graph& g, const std::string& format) {
    if (format == "adjlist") {
        io::write_adjlist(std::cout, g);
    } else if (format == "dot") {
        io::write_dot(std::cout, g);
    } else if (format == "json") {
        nlohmann::json j{{"n", g.n()}, {"edges", g.edges()}};
        std::cout << j.dump(2) << "\n";
    } else {
        throw CLI::ValidationError("--format", "graph output supports adjlist|dot|json");
    }
}

void print_map(const PlaneMap& m, const std::string& format) {
    if (format == "rot") {
        io::write_rot(std::cout, m);
    } else if (format == "adjlist") {
        io::write_adjlist(std::cout, m.graph());
    } else if (format == "dot") {
        io::write_dot(std::cout, m);
    } else if (format == "json") {
        nlohmann::json faces = nlohmann::json::array();
        for (int f = 0; f < int(m.face_walks().size()); ++f) faces.push_back(m.face_vertices(f));
        nlohmann::json j{{"n", m.n()}, {"rotation", m.rotation()}, {"faces", faces}};
        std::cout << j.dump(2) << "\n";
    } else {
        throw CLI::ValidationError("--format", "map output supports rot|adjlist|dot|json");
    }
}

int emit(const RunReport& rep) {
    std::cout << rep.to_json().dump(2) << "\n";
    return rep.exit_code();
}

std::pair<int, int> parse_range(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) {
        int n = std::stoi(s);
        return {n, n};
    }
    return {std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
}

std::string default_checkpoint(int n, const CyclePattern& p) {
    const char* dir = std::getenv("PTL_CACHE_DIR");
    if (!dir) return {};
    return std::string(dir) + "/ex_" + std::to_string(n) + "_" + p.str() + ".json";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"plane-graph combinatorics: triangular blocks, disjoint-cycle detection,\n"
                 "extremal constructions and exhaustive search oracles"};
    app.fallthrough();  // global flags may follow a subcommand
    app.require_subcommand(1);
    std::function<int()> run;

    std::string format = "rot";
    int jobs = 1;
    uint64_t seed = 0;
    app.add_option("--jobs", jobs, "worker threads for the search oracle")->capture_default_str();
    app.add_option("--seed", seed, "shuffles oracle work units; results are unaffected");

    // construct
    auto* construct = app.add_subcommand("construct", "emit a named plane graph");
    construct->add_option("--format", format, "rot|adjlist|dot|json")->capture_default_str();
    {
        auto* ex = construct->add_subcommand("extremal", "K2 v (t P3 u P_r) on n vertices");
        static int n = 14;
        ex->add_option("--n", n, "vertex count (>= 7)")->required();
        ex->callback([&]() { run = [&]() { print_map(extremal_c3c5(n), format); return 0; }; });

        auto* wh = construct->add_subcommand("wheel", "hub joined to a cycle");
        static int wk = 5;
        wh->add_option("--k", wk, "total vertices (>= 4)")->required();
        wh->callback([&]() { run = [&]() { print_map(wheel(wk), format); return 0; }; });

        auto* fa = construct->add_subcommand("fan", "hub joined to a path");
        static int fk = 5;
        fa->add_option("--k", fk, "total vertices (>= 3)")->required();
        fa->callback([&]() { run = [&]() { print_map(fan(fk), format); return 0; }; });

        auto* ap = construct->add_subcommand("apex2", "two apices over a linear forest");
        static std::vector<int> paths;
        static bool no_edge = false;
        ap->add_option("--paths", paths, "path sizes, e.g. --paths 3 3 3")->required();
        ap->add_flag("--no-apex-edge", no_edge, "omit the edge between the apices");
        ap->callback([&]() {
            run = [&]() { print_map(apex2_over_linear_forest(paths, !no_edge), format); return 0; };
        });
        construct->require_subcommand(1);
    }

    // decompose
    {
        auto* dec = app.add_subcommand("decompose", "triangular blocks of a rot v1 file");
        static std::string file;
        dec->add_option("file", file, "rot v1 input")->required();
        dec->callback([&]() { run = [&]() { return emit(cmd_decompose(io::read_rot_file(file))); }; });
    }

    // free
    {
        auto* fr = app.add_subcommand("free", "test a graph file against a cycle pattern");
        static std::string file, pattern;
        static bool rot = false;
        fr->add_option("file", file, "adjlist v1 input (or rot v1 with --rot)")->required();
        fr->add_option("--pattern", pattern, "e.g. C3+C5, 2C3, 3C")->required();
        fr->add_flag("--rot", rot, "input is a rotation file");
        fr->callback([&]() {
            run = [&]() {
                Graph g = rot ? io::read_rot_file(file).graph() : io::read_adjlist_file(file);
                return emit(cmd_free(g, CyclePattern::parse(pattern)));
            };
        });
    }

    // oracle
    {
        auto* oracle = app.add_subcommand("oracle", "exhaustive search");
        auto* ex = oracle->add_subcommand("ex", "exact planar Turan number");
        static int n = 6;
        static std::string pattern = "C3+C5";
        static std::string checkpoint;
        static int cap = 10;
        ex->add_option("--n", n, "vertex count")->required();
        ex->add_option("--pattern", pattern, "cycle pattern")->required();
        ex->add_option("--checkpoint", checkpoint, "resumable state file");
        ex->add_option("--cap", cap, "vertex cap")->capture_default_str();
        ex->callback([&]() {
            run = [&]() {
                OracleOptions opts;
                opts.jobs = jobs;
                opts.seed = seed;
                opts.cap = cap;
                CyclePattern p = CyclePattern::parse(pattern);
                opts.checkpoint_path = checkpoint.empty() ? default_checkpoint(n, p) : checkpoint;
                return emit(cmd_oracle_ex(n, p, opts));
            };
        });

        auto* blocks = oracle->add_subcommand("blocks", "triangular block classes");
        static int v = 5;
        blocks->add_option("--v", v, "max vertex count (<= 7)")->required();
        blocks->callback([&]() { run = [&]() { return emit(cmd_catalog(v)); }; });

        auto* l2 = oracle->add_subcommand("lemma2", "classify all 6-vertex blocks");
        l2->callback([&]() { run = [&]() { return emit(cmd_verify_lemma2()); }; });

        auto* ce = oracle->add_subcommand("census", "exact census arithmetic");
        static int64_t cn = 295660;
        ce->add_option("--n", cn, "vertex count")->required();
        ce->callback([&]() { run = [&]() { return emit(cmd_census(cn)); }; });

        auto* cmp = oracle->add_subcommand("compare", "oracle vs known formulas");
        static std::string range = "6:7", cpat = "2C3";
        cmp->add_option("--range", range, "LO:HI")->required();
        cmp->add_option("--pattern", cpat, "cycle pattern")->required();
        cmp->callback([&]() {
            run = [&]() {
                auto [lo, hi] = parse_range(range);
                OracleOptions opts;
                opts.jobs = jobs;
                return emit(cmd_compare(lo, hi, CyclePattern::parse(cpat), opts));
            };
        });
        oracle->require_subcommand(1);
    }

    // verify-theorem1
    {
        auto* vt = app.add_subcommand("verify-theorem1",
                                      "construction family: planarity, freeness, edge formula");
        static std::string range = "7:200";
        vt->add_option("--range", range, "LO:HI subset of [7, 10^6]")->capture_default_str();
        vt->callback([&]() {
            run = [&]() {
                auto [lo, hi] = parse_range(range);
                return emit(cmd_verify_theorem1(lo, hi));
            };
        });
    }

    // verify-lemma2 / census / catalog top-level aliases
    {
        auto* vl = app.add_subcommand("verify-lemma2", "exactly two bad 6-vertex block classes");
        vl->callback([&]() { run = [&]() { return emit(cmd_verify_lemma2()); }; });

        auto* ce = app.add_subcommand("census", "exact census arithmetic");
        static int64_t cn = 295660;
        ce->add_option("--n", cn, "vertex count")->required();
        ce->callback([&]() { run = [&]() { return emit(cmd_census(cn)); }; });

        auto* cat = app.add_subcommand("catalog", "block catalog up to a vertex count");
        static int v = 6;
        cat->add_option("--v", v, "max vertex count (<= 7)")->capture_default_str();
        cat->callback([&]() { run = [&]() { return emit(cmd_catalog(v)); }; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return run();
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const MalformedRotation& e) {
        std::cerr << "malformed rotation: " << e.what() << "\n";
        return 2;
    } catch (const TooSmall& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
