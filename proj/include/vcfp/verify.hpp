#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vcfp/config.hpp"

namespace vcfp {

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string details;  // measured values, "key=value" pairs
};

/// Runs the full verification suite (one check per numbered criterion,
/// each with its tolerances pinned in code) and streams one
/// "[PASS]/[FAIL] check_N name: details" line per check as it
/// completes. The shipped defaults pass end to end.
std::vector<CheckResult> run_verification(const RunConfig& config, std::ostream& log);

/// "check_N name: PASS/FAIL details" lines, suitable for the report file.
void write_report(const std::string& path, const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace vcfp
