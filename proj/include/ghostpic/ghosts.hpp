#pragma once

#include "ghostpic/paths.hpp"

#include <map>
#include <string>
#include <vector>

namespace ghostpic {

enum class GhostKind { Subobject, Quotient, Extension };

const char* kind_name(GhostKind k);

// one boundary condition of a ghost domain beyond condition (0)
struct SideCondition {
    int case_no = 0;
    int object = 0;
    bool quotient_side = false;  // Y-type (theta >= 0) when true, X-type (theta <= 0) otherwise
};

struct Ghost {
    GhostKind kind = GhostKind::Subobject;
    int a = 0, b = 0, c = 0;
    int missing = 0;
    Cone domain;
    bool minimal = true;
    bool warning = false;  // class lacks the torsion / torsion-free assumption
    std::vector<SideCondition> sides;
};

std::string ghost_name(const BrickCatalog& c, const Ghost& g);

std::vector<Ghost> enumerate_ghosts(const ModuleClass& cls);
Cone subobject_ghost_domain(const ModuleClass& cls, const Ghost& g);
Cone quotient_ghost_domain(const ModuleClass& cls, const Ghost& g);
Cone extension_ghost_domain(const ModuleClass& cls, const Ghost& g);

bool ghost_stability(const ModuleClass& cls, const LinearPath& path, const Ghost& g);

enum class WallKind { SubobjectSplitting, QuotientSplitting, Extension };
const char* wall_kind_name(WallKind k);

struct Bifurcation {
    int child = 0;   // ghost indices
    int parent = 0;
    int case_no = 0;  // 1..5, or 0 for extension-ghost links
    int splitting_wall = 0;
    WallKind wall_kind = WallKind::SubobjectSplitting;
};

struct BifurcationIssue {
    int child = 0;
    int case_no = 0;
    int wall = 0;
    int other = -1;
    std::string reason;  // "decomposable", "parent-not-enumerated", "pathological"
};

struct BifurcationReport {
    std::vector<Bifurcation> links;
    std::vector<BifurcationIssue> issues;
};

BifurcationReport classify_bifurcations(const ModuleClass& cls, const std::vector<Ghost>& ghosts);
// child facet on the splitting hyperplane, parent crossing it
bool bifurcation_geometry_ok(const ModuleClass& cls, const std::vector<Ghost>& ghosts, const Bifurcation& b);

struct GhostSchedule {
    std::vector<CrossingEvent> events;  // bricks and ghosts, time sorted
};

GhostSchedule mgs_with_ghosts(const ModuleClass& cls, const LinearPath& path,
                              const std::vector<Ghost>& ghosts, const BifurcationReport& bif);
GhostSchedule mgs_with_ghosts(const ModuleClass& cls, const LinearPath& path);
struct FormatOptions {
    std::map<int, std::string> labels;  // ghost index -> display label
    bool only_labelled = false;
    bool show_unstable = true;  // unstable bricks in parentheses
};
// stable bricks by name, stable ghosts by label; unstable ghosts never shown
std::string format_schedule(const ModuleClass& cls, const std::vector<Ghost>& ghosts,
                            const GhostSchedule& s, const FormatOptions& opt = {});

int find_ghost(const std::vector<Ghost>& ghosts, GhostKind k, int a, int b, int c);

struct Duality {
    std::shared_ptr<const BrickCatalog> catalog;
    ModuleClass cls;
    std::vector<int> indec_map;  // original index -> dual index
    Ghost transport(const Ghost& g) const;
    std::vector<int> transport_sequence(const std::vector<int>& seq) const;
};

Duality dualize(const ModuleClass& cls);

}  // namespace ghostpic
