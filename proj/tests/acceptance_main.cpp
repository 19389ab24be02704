// Acceptance runner: one pass/fail line per criterion, nonzero exit on any
// failure. `--extended` adds the n=9 ELK block and the large ideal-slice
// rank certificates.

#include <cstdlib>
#include <cstring>
#include <iostream>

#include "starcat/acceptance.hpp"

int main(int argc, char** argv) {
    starcat::acceptance::Options opts;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--extended") == 0) opts.extended = true;
        if (std::strcmp(argv[i], "--search-n-max") == 0 && i + 1 < argc)
            opts.search_n_max = std::atoi(argv[++i]);
    }
    const auto results = starcat::acceptance::run_all(opts);
    for (const auto& r : results) std::cout << starcat::acceptance::format_line(r) << std::endl;
    const bool ok = starcat::acceptance::all_passed(results);
    std::cout << (ok ? "acceptance: all criteria passed" : "acceptance: FAILURES") << std::endl;
    return ok ? 0 : 1;
}
