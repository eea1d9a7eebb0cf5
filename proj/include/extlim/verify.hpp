#pragma once
#include <string>
#include <vector>

namespace extlim::verify {

struct CriterionResult {
    std::string name;
    bool passed;
    double seconds;
    std::string detail;
};

std::vector<std::string> suite_names();
CriterionResult run_suite(const std::string& name);
std::vector<CriterionResult> run_all();

}  // namespace extlim::verify
