#pragma once

#include <string>
#include <vector>

namespace semitrans::tools {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// figure1, l1-orbits, quadrant-mix, grandpa-pig, splicing, nobst.
const std::vector<std::string>& reproduce_targets();

/// Runs the checks for one target. Throws std::invalid_argument for an unknown target.
std::vector<Check> reproduce(const std::string& target);

}  // namespace semitrans::tools
