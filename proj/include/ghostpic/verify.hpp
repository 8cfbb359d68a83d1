#pragma once

#include "ghostpic/fixtures.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ghostpic {

struct SuiteResult {
    std::string id;
    std::string name;
    size_t checks = 0;
    size_t failures = 0;
    size_t reported = 0;  // checks run but not asserted outside the proven hypotheses
    std::string detail;
    bool ok() const { return failures == 0; }
};

struct VerifyOptions {
    uint64_t seed = 0;
    int paths = 1000;
    int points_per_chamber = 25;
};

// splitmix64; fixed output across platforms
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next();
    long range(long lo, long hi);  // inclusive
};

LinearPath random_path(Rng& rng, size_t n);

SuiteResult suite_union_of_interiors(const std::vector<Fixture>& fx);
SuiteResult suite_locally_constant(const std::vector<Fixture>& fx, Rng& rng, int per_chamber);
SuiteResult suite_wall_crossing(const std::vector<Fixture>& fx);
SuiteResult suite_relative_stability(const std::vector<Fixture>& fx, Rng& rng, int paths);
SuiteResult suite_ghost_stability(const std::vector<Fixture>& fx, Rng& rng, int paths);
SuiteResult suite_hn_existence(const std::vector<Fixture>& fx);
SuiteResult suite_convexity(const std::vector<Fixture>& fx);
SuiteResult suite_duality();
SuiteResult suite_mgs_properties(const std::vector<Fixture>& fx);
SuiteResult suite_ghost_geometry(const std::vector<Fixture>& fx);

std::vector<SuiteResult> run_verify(const VerifyOptions& opt = {});
std::string format_table(const std::vector<SuiteResult>& r);

}  // namespace ghostpic
