// Acceptance battery driver: one PASS/FAIL line per criterion on stdout,
// nonzero exit when anything fails. `fast` trims the exhaustive tiers,
// `full` runs everything.

#include <cstring>
#include <iostream>
#include <string>

#include "containerlab/acceptance.hpp"

int main(int argc, char** argv) {
    clab::AcceptanceOptions options;
    options.workers = 2;
    bool verbose = false;
    std::string tier = "fast";
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "fast" || arg == "full") tier = arg;
        else if (arg == "-v" || arg == "--verbose") verbose = true;
        else {
            std::cerr << "usage: " << argv[0] << " [fast|full] [-v]\n";
            return 2;
        }
    }
    options.full = tier == "full";
    std::cerr << "running the " << tier << " acceptance tier\n";
    const auto results = clab::run_acceptance(options);
    const int failures = clab::print_acceptance(results, std::cout, verbose);
    return failures == 0 ? 0 : 1;
}
