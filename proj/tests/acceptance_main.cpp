// Prints one line per acceptance criterion; exit status is nonzero if any
// gating criterion fails.
#include <iostream>

#include "chromsym/acceptance.hpp"

int main(int argc, char** argv) {
    chromsym::AcceptanceOptions options;
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--extended") options.extended = true;
    int failures = 0;
    chromsym::run_acceptance(options, [&](const chromsym::CriterionResult& r) {
        std::cout << chromsym::format_result(r) << std::endl;
        if (r.gating && !r.pass) ++failures;
    });
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
