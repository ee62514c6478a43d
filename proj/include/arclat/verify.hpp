#pragma once

#include <string>
#include <vector>

namespace arclat {

struct SuiteReport {
    std::string suite;
    int n = 0;
    bool pass = true;
    long checked = 0;
    long failures = 0;
    std::vector<std::string> counterexamples;  // the first few failures

    void fail(std::string what);
};

std::vector<std::string> suite_names();
// Throws Error for an unknown suite and ScopeExceeded when n is outside the suite's range.
SuiteReport run_suite(const std::string& name, int n);

}  // namespace arclat
