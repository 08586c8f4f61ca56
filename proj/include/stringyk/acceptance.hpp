#pragma once

#include <string>
#include <vector>

namespace stringyk {

/**
 * End-to-end acceptance suite: one result per criterion. A criterion fails
 * (rather than aborting the run) when any of its exact checks is violated or
 * a mathematical invariant throws.
 */
struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail; // first failure, or a summary of what was covered
    double seconds = 0;
};

struct AcceptanceOptions {
    unsigned seed = 20240824; // drives all random sampling
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});

} // namespace stringyk
