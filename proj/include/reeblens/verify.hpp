#pragma once

#include <string>
#include <vector>

namespace reeblens::verify {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Named verification suites: "examples" replays the worked values from the
/// source material, "sharpness" checks the boundary instances that must NOT
/// violate the convexity constraints, "counterexamples" checks the
/// dynamically-convex instances that must violate them, and "properties"
/// runs the structural property sweeps. "all" concatenates everything.
std::vector<Check> run_suite(const std::string& suite);

bool all_passed(const std::vector<Check>& checks);

} // namespace reeblens::verify
