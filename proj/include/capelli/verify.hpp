#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace capelli::verify {

struct SweepConfig {
    int max_fusion_boxes = 5;   // partition-size cap for the fusion suite
    int max_pair_n = 4;         // box caps for the pole-order sweep
    int max_pair_m = 4;
    int max_gl_n = 3;           // gl sizes for the Capelli/Yangian suites
    int max_gl_m = 3;
    int jobs = 0;               // 0: hardware concurrency
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;  // smallest failing instance, or a short summary
    double seconds = 0.0;
};

using Criterion = std::function<CriterionResult(const SweepConfig&)>;

// The full battery, ordered by criterion number.
std::vector<std::pair<std::string, Criterion>> all_criteria();

// Subset selection: "fusion" covers the symmetric-group suite (1-5),
// "pole" the estimation sweep (6), "rtt" the Yangian evaluation suite
// (7-11), "capelli" the differential-operator suite (12-14), and "all"
// everything.
std::vector<std::pair<std::string, Criterion>> suite(const std::string& name);

int resolve_jobs(int requested);

// Runs criteria, printing one line per criterion to out; returns true
// when everything passed.
bool run(const std::vector<std::pair<std::string, Criterion>>& criteria,
         const SweepConfig& cfg, std::ostream& out);

}  // namespace capelli::verify
