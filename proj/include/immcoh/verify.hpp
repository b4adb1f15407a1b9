#pragma once

#include <string>
#include <vector>

namespace immcoh {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    std::string out_dir;         // chart artifacts land here when non-empty
    bool inject_failure = false; // appends a deliberately failing check
};

/// Runs every acceptance check and returns one result per criterion, in a
/// fixed order. Oracle-style cross checks (brute-force monomial reduction,
/// direct polynomial expansion, partition enumeration) are implemented
/// here, independent of the library code paths they validate.
std::vector<CheckResult> run_acceptance_checks(const VerifyOptions& opts);

bool all_passed(const std::vector<CheckResult>& results);

/// Cheap well-formedness scan for generated SVG: XML declaration, matched
/// tags, svg root element.
bool svg_well_formed(const std::string& text);

}  // namespace immcoh
