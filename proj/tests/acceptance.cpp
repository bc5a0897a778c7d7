// Acceptance suite: one pass/fail line per criterion.

#include <cstdio>

#include "wallx/selftest.hpp"

int main() {
    bool all = true;
    for (const auto& r : wallx::selftest::run_acceptance()) {
        all = all && r.pass;
        std::printf("%s %s (%ld ms) %s\n", r.id.c_str(), r.pass ? "PASS" : "FAIL", (long)r.ms,
                    r.detail.c_str());
    }
    return all ? 0 : 1;
}
