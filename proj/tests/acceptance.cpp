// Runs every acceptance criterion and prints one line per criterion.

#include <iostream>

#include "tle/verify.hpp"

int main() {
    tle::VerifyConfig cfg;
    int failed = 0, index = 0;
    for (const auto& s : tle::suites()) {
        auto r = s.run(cfg);
        ++index;
        failed += r.passed ? 0 : 1;
        std::cout << (r.passed ? "PASS" : "FAIL") << "  [" << index << "] " << r.name << " (" << r.seconds << " s, budget "
                  << r.budget << " s): " << r.detail << std::endl;
    }
    std::cout << (failed == 0 ? "all acceptance criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
    return failed == 0 ? 0 : 1;
}
