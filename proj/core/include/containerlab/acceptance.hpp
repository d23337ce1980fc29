#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace clab {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::vector<std::string> details;  // human-readable lhs/rhs lines
};

struct AcceptanceOptions {
    bool full = false;  // full tier adds the r=6 scan and the n=6 exhaustive pass
    int workers = 1;
    std::uint64_t seed = 0xACCE97ULL;
};

/// Runs the whole battery; one result per criterion, in order.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

/// One "PASS/FAIL  <id>. <name>  (<seconds>s)" line per criterion plus a
/// summary; returns the number of failures.
int print_acceptance(const std::vector<CriterionResult>& results, std::ostream& out,
                     bool verbose = false);

}  // namespace clab
