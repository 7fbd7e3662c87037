#include <iostream>

#include "modkit/cli.hpp"
#include "modkit/verification/acceptance.hpp"
#include "modkit/verification/oracles.hpp"

int main() {
    modkit::acceptance::Options options;
    options.seed = modkit::oracle::seed_from_env(options.seed);
    options.cli = modkit::cli::run;
    int failed = 0;
    for (const auto& r : modkit::acceptance::run_all(options)) {
        std::cout << modkit::acceptance::format(r) << std::endl;
        failed += r.passed ? 0 : 1;
    }
    std::cout << (failed == 0 ? "ALL PASS" : "FAILURES: " + std::to_string(failed)) << std::endl;
    return failed == 0 ? 0 : 1;
}
