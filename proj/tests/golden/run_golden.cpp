#include <cstring>
#include <fstream>
#include <iostream>

#include "golden.hpp"

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_golden <monomod> [--update]\n";
        return 2;
    }
    const std::string exe = argv[1];
    const bool update = argc > 2 && std::strcmp(argv[2], "--update") == 0;
    const std::string dir = MONOMOD_GOLDEN_DIR;
    int failures = 0;
    for (const auto& c : golden::loadCases(dir)) {
        const std::string got = golden::run(exe, dir, c);
        const std::string path = dir + "/" + c.name + ".out";
        if (update) {
            std::ofstream(path, std::ios::binary) << got;
            continue;
        }
        const std::string want = golden::slurp(path);
        if (got == want) {
            std::cout << "ok   " << c.name << '\n';
        } else {
            ++failures;
            std::cout << "DIFF " << c.name << "\n--- expected\n" << want << "--- actual\n" << got;
        }
    }
    return failures == 0 ? 0 : 1;
}
