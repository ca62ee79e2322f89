#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qp {

struct criterion_result {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
    std::vector<std::string> flags;  // surfaced discrepancies, never suppressed
};

// Suites: "all" (criteria 1-12), "tables" (1-2), "classical" (3-5),
// "quantum" (6-10), "correlated" (11).
std::vector<criterion_result> run_acceptance(std::uint64_t seed, const std::string& suite);

bool all_passed(const std::vector<criterion_result>& results);

}  // namespace qp
