#pragma once

#include <string>
#include <vector>

#include "rcx/critical.hpp"

namespace rcx::cli {

struct RowCheck {
    std::string name;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct RowResult {
    std::string id;
    std::string label;
    std::vector<RowCheck> checks;
    bool pass = true;
    bool timed_out = false;
};

struct VerifyConfig {
    bool full_tier = false;
    SearchOptions opts;  // per-arrowing-call limits; callers set the timeout
};

/// The reproduction table: every desk-scale expected value, computed
/// from scratch and compared exactly. Rows c01..c12; the property
/// suites (c13) live with the tests, since their oracles do.
std::vector<RowResult> run_verification_rows(const VerifyConfig& config);

}  // namespace rcx::cli
