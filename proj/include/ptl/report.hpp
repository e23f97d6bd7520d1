#ifndef PTL_REPORT_HPP
#define PTL_REPORT_HPP

#include <json.hpp>

#include "ptl/oracle.hpp"

namespace ptl {

// One verdict line of a machine-readable run report. `claim` states the
// property the verdict checks, so reports are self-documenting.
struct Check {
    std::string name;
    std::string verdict;  // PASS | FAIL | INFO
    std::string claim;
    nlohmann::json data;
};

struct RunReport {
    std::string command;
    nlohmann::json inputs;
    std::vector<Check> checks;
    double elapsed_ms = 0;

    // with_elapsed=false yields the golden-file form (timestamps excluded)
    nlohmann::json to_json(bool with_elapsed = true) const;
    int exit_code() const;  // 0 all PASS/INFO, 1 some FAIL
    bool all_pass() const;
};

nlohmann::json rat_json(const Rat& r);

RunReport cmd_verify_theorem1(int n_lo, int n_hi);
RunReport cmd_decompose(const PlaneMap& m);
RunReport cmd_free(const Graph& g, const CyclePattern& p);
RunReport cmd_census(int64_t n);
RunReport cmd_verify_lemma2();
RunReport cmd_catalog(int max_v);
RunReport cmd_oracle_ex(int n, const CyclePattern& p, const OracleOptions& opts);
RunReport cmd_compare(int n_lo, int n_hi, const CyclePattern& p, const OracleOptions& opts);

}  // namespace ptl

#endif
