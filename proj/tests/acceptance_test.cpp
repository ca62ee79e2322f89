// Runs every acceptance criterion and prints one line per result. Exit
// status is nonzero when any criterion fails.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "qpoker/verify.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 7;
    if (const char* env = std::getenv("QPOKER_SEED")) seed = std::strtoull(env, nullptr, 10);
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);

    auto results = qp::run_acceptance(seed, "all");
    for (const auto& r : results) {
        std::printf("[%s] %2d %-34s %7.2fs", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.seconds);
        if (!r.detail.empty()) std::printf("  %s", r.detail.c_str());
        std::printf("\n");
        for (const auto& f : r.flags) std::printf("         flag: %s\n", f.c_str());
    }
    bool ok = qp::all_passed(results);
    std::printf("%s (%zu criteria, seed %llu)\n", ok ? "ALL PASS" : "FAILURES PRESENT",
                results.size(), static_cast<unsigned long long>(seed));
    return ok ? 0 : 1;
}
