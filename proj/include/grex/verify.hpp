#pragma once

#include <string>
#include <vector>

namespace grex::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct Options {
    std::string fixtures_dir;
    bool extended = false; // also run the large optional cokernel targets
    unsigned threads = 1;  // parallelism across independent (p, n) instances
};

/// Run the whole verification suite; one result per criterion, fixed order.
std::vector<CheckResult> run_all(const Options& opt);

} // namespace grex::verify
