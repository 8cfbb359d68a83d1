#pragma once

#include "ghostpic/stability.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ghostpic {

struct LinearPath {
    RatVec h;
    RatVec k;
};

struct NonGenericPath : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check_path(const LinearPath& p, size_t n);
Rat crossing_time(const LinearPath& p, const IntVec& dim);
RatVec point_at(const LinearPath& p, const Rat& t);

struct CrossingEvent {
    Rat t;
    bool ghost = false;
    int object = 0;  // brick index, or ghost index when ghost
    bool stable = false;
    bool concurrent = false;
};

struct CrossingSchedule {
    std::vector<CrossingEvent> events;
};

CrossingSchedule crossing_schedule(const ModuleClass& cls, const LinearPath& path);
bool is_relatively_stable(const ModuleClass& cls, const LinearPath& path, int m);
std::vector<int> linear_mgs(const ModuleClass& cls, const LinearPath& path);

struct Mgs {
    std::vector<int> walls;
    std::vector<int> chamber_ids;
};

struct MgsEnumeration {
    std::vector<Mgs> list;
    size_t count = 0;
    bool truncated = false;
};

inline size_t max_mgs_paths = 1000000;

MgsEnumeration enumerate_mgs(const ChamberGraph& g, const ModuleClass& cls);
std::vector<Mgs> enumerate_mgs(const ModuleClass& cls);
std::string walls_str(const BrickCatalog& c, const std::vector<int>& walls);

struct OrthogonalityResult {
    bool ok = true;
    int j = -1;
    int k = -1;
    ModuleSum image;
};

void validate_sequence(const ModuleClass& cls, const std::vector<int>& seq);
std::optional<ModuleSum> wa_morphism(const ModuleClass& cls, int x, int y);
OrthogonalityResult check_relative_hom_orthogonality(const ModuleClass& cls, const std::vector<int>& seq);

struct MaximalityResult {
    bool maximal = true;
    bool asserted = true;  // false when the class is not extension-closed
    int inserted = -1;
    int slot = -1;
};

MaximalityResult check_mgs_maximality(const ModuleClass& cls, const std::vector<int>& seq);

struct HnStep {
    int module = 0;
    int layer = 0;
    const SubquotientPair* pair = nullptr;
};

struct HnFiltration {
    std::vector<std::pair<int, int>> layers;  // (index into MGS, multiplicity)
    std::vector<HnStep> steps;
};

HnFiltration hn_stratification(const ModuleClass& cls, const ChamberGraph& g, const Mgs& mgs,
                               const ModuleSum& x);
// exhaustive search for a filtration with layers in add seq[i], increasing i
bool has_ordered_filtration(const ModuleClass& cls, const std::vector<int>& seq, const ModuleSum& x);
bool check_hn_minimality(const ModuleClass& cls, const std::vector<int>& seq);

}  // namespace ghostpic
