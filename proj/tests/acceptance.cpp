// Acceptance suite: runs every reproduction criterion at its stated range
// and tolerance (all exact; zero tolerance), one pass/fail line each.
// Exit code is the number of failed criteria.

#include <cstdio>

#include "iamonds/verify.hpp"

int main() {
    const auto results = iamonds::run_verification({});
    int failed = 0;
    int i = 0;
    for (const auto& r : results) {
        ++i;
        std::printf("[%d/%d] %s  %s\n", i, static_cast<int>(results.size()),
                    r.passed ? "PASS" : "FAIL", r.name.c_str());
        if (!r.passed) {
            std::printf("        %s\n", r.detail.c_str());
            ++failed;
        }
    }
    std::printf("%d/%d criteria passed\n", i - failed, i);
    return failed;
}
