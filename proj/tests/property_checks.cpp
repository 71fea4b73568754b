// Runs the full randomized property-check registry and prints one line per
// check. Exit status 0 when every check passes, 1 otherwise.
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "g2theta/checks.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 1;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
            seed = std::strtoull(argv[++i], nullptr, 10);
        } else {
            std::fprintf(stderr, "usage: %s [--seed N]\n", argv[0]);
            return 2;
        }
    }
    bool ok = true;
    for (const auto& r : g2theta::run_all_checks(seed)) {
        std::printf("%-36s %s  samples=%llu failures=%llu (%.2fs)\n", r.id.c_str(),
                    r.pass() ? "PASS" : "FAIL", (unsigned long long)r.samples,
                    (unsigned long long)r.failures, r.seconds);
        std::fflush(stdout);
        ok = ok && r.pass();
    }
    std::printf("property checks: %s\n", ok ? "PASS" : "FAIL");
    return ok ? 0 : 1;
}
