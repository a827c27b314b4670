#pragma once

#include <string>
#include <vector>

namespace periods::suites {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(const std::string& name, bool pass, const std::string& detail = "") {
        checks.push_back({name, pass, detail});
    }
};

// Named property suites at desk-scale default parameters:
//   crosscheck  three-way expansion equality, N in {1,2,3,5,6,7,10}, k <= 16
//   cusps       q->0 eigencomponent summands against the sinh oracle
//   eigencomp   character partition and per-sign cuspidal membership
//   haberland   pairing normalizations and companion relations
//   lfactors    local convolution identity grid
//   relations   2p-term and denominator-cleared slice relations
//   oldforms    level-1 -> level-2 transport of the weight-12 tensors
SuiteReport run_suite(const std::string& name);

std::vector<std::string> suite_names();

std::string render_suite_text(const SuiteReport& rep);

} // namespace periods::suites
