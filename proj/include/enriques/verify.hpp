#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

// Named verification claims shared by the CLI.
namespace enriques {

struct ClaimResult {
    std::string name;
    bool pass = false;
    std::vector<std::string> details;
};

std::vector<std::string> claim_names();
// Throws std::invalid_argument for an unknown name.
ClaimResult run_claim(const std::string& name);

// Flip sequences from the standard configuration against the word action.
struct IteratedFlipReport {
    int samples = 0;
    int failures = 0;
    std::vector<int> first_bad_word;
};
IteratedFlipReport iterated_flip_check(int samples, int max_length, std::uint64_t seed = 8);

// Enumeration under two lower bounds agrees for every A~, D~, E~ up to the rank.
struct StabilityReport {
    std::vector<std::string> differing;
    bool pass() const { return differing.empty(); }
};
StabilityReport bound_stability(int max_rank, std::int64_t lower_a = -6, std::int64_t lower_b = -8);

nlohmann::json to_json(const ClaimResult& r);

}  // namespace enriques
