#pragma once

// The reproduction suite: fourteen checks with fixed seeds, shared by the acceptance
// binary and `twins verify`.

#include <string>
#include <vector>

namespace twins::verify {

struct CriterionResult {
    int id = 0;
    std::string section;  // s3 .. s6
    std::string title;
    bool pass = false;
    int checks = 0;       // individual assertions evaluated
    std::string detail;   // first failure, or a short summary
};

constexpr int kCriterionCount = 14;

// "all", "s3".."s6", "hirzebruch", "genus", "polytope", "quadrilateral" or a number 1..14.
// Throws std::invalid_argument for anything else.
std::vector<int> select(const std::string& selector);

// Section tag and one-line title of a criterion.
std::string section_of(int id);
std::string title_of(int id);

// Never throws; an exception inside a check is reported as a failure.
CriterionResult run(int id);
std::vector<CriterionResult> run_selected(const std::string& selector);

}  // namespace twins::verify
