#pragma once

#include "ghostpic/ghosts.hpp"

#include <map>
#include <string>
#include <vector>

namespace ghostpic {

struct GhostLabel {
    std::string label;
    GhostKind kind;
    std::string a, b, c;
};

struct Fixture {
    std::string name;
    std::string builtin;   // builtin catalog name, empty for type A
    int n = 0;
    std::string word;
    std::string members;
    std::vector<GhostLabel> labels;
    std::vector<std::string> sequences;  // MGS-with-ghost strings realised by linear paths
    bool parenthesize_unstable = true;
    bool draw_extension_ghosts = true;
    std::string note;
};

const std::vector<Fixture>& fixtures();
const Fixture& fixture(const std::string& name);

std::shared_ptr<const BrickCatalog> fixture_catalog(const Fixture& f);
ModuleClass fixture_class(const Fixture& f);
// ghost index -> label, throws when a labelled ghost is absent from the census
std::map<int, std::string> fixture_labels(const Fixture& f, const ModuleClass& cls, const std::vector<Ghost>& ghosts);

}  // namespace ghostpic
