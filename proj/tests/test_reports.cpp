#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "ptl/constructions.hpp"
#include "ptl/report.hpp"

using namespace ptl;
using json = nlohmann::json;

namespace {

// Golden comparison: regenerate with PTL_REGEN_GOLDEN=1 in the environment.
void check_golden(const std::string& name, const RunReport& rep) {
    std::string path = std::string(PTL_TEST_DIR) + "/golden/" + name + ".json";
    std::string got = rep.to_json(false).dump(2) + "\n";
    if (std::getenv("PTL_REGEN_GOLDEN")) {
        std::ofstream out(path);
        out << got;
        return;
    }
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), "missing golden file ", path);
    std::string want((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK_MESSAGE(got == want, "report drifted from ", path);
}

}  // namespace

TEST_CASE("verify-theorem1 report") {
    RunReport rep = cmd_verify_theorem1(7, 60);
    CHECK(rep.all_pass());
    CHECK(rep.exit_code() == 0);
    check_golden("verify_theorem1_7_60", rep);
    CHECK_THROWS_AS(cmd_verify_theorem1(6, 10), std::invalid_argument);
}

TEST_CASE("decompose report") {
    RunReport rep = cmd_decompose(extremal_c3c5(14).without_edge(0, 1));
    CHECK(rep.all_pass());
    int wheel5_count = 0;
    for (auto& c : rep.checks)
        if (c.name == "blocks")
            for (auto& b : c.data["list"])
                if (b["alias"] == "wheel5") ++wheel5_count;
    CHECK(wheel5_count == 4);
    check_golden("decompose_extremal14_cut", rep);
}

TEST_CASE("free report") {
    RunReport rep = cmd_free(extremal_c3c5(20).graph(), pattern_c3c5());
    bool free = false;
    for (auto& c : rep.checks)
        if (c.name == "detector") free = c.data["free"];
    CHECK(free);
    check_golden("free_extremal20", rep);

    Graph k5e = complete_graph(5);
    k5e.remove_edge(0, 1);
    RunReport witness = cmd_free(k5e, CyclePattern::parse("C3"));
    for (auto& c : witness.checks)
        if (c.name == "detector") {
            CHECK(c.data["free"] == false);
            CHECK(c.data.contains("witness"));
        }
}

TEST_CASE("census report") {
    RunReport rep = cmd_census(295660);
    CHECK(rep.all_pass());
    check_golden("census_295660", rep);
}

TEST_CASE("lemma2 report") {
    RunReport rep = cmd_verify_lemma2();
    CHECK(rep.all_pass());
    check_golden("verify_lemma2", rep);
}

TEST_CASE("catalog report") {
    RunReport rep = cmd_catalog(5);
    CHECK(rep.all_pass());
    check_golden("catalog_5", rep);
}

TEST_CASE("reports are deterministic") {
    json a = cmd_census(295660).to_json(false);
    json b = cmd_census(295660).to_json(false);
    CHECK(a.dump() == b.dump());
    json c = cmd_decompose(extremal_c3c5(17)).to_json(false);
    json d = cmd_decompose(extremal_c3c5(17)).to_json(false);
    CHECK(c.dump() == d.dump());
}
