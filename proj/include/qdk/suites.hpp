#pragma once

#include "qdk/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qdk {

// Zero or empty means the suite default.
struct SuiteOptions {
    std::uint64_t seed = 42;
    int trials = 0;
    std::string family;
    std::string shell;
    int k = 0;
    int nmax = 0;
    int wmax = 0;
};

const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown suite or bad option.
Report run_suite(const std::string& name, const SuiteOptions& opt = {});

}  // namespace qdk
