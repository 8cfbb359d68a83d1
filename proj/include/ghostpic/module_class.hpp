#pragma once

#include "ghostpic/catalog.hpp"

#include <memory>
#include <string>
#include <vector>

namespace ghostpic {

struct ClassFlags {
    bool known = false;
    bool quotient_closed = false;
    bool sub_closed = false;
    bool extension_closed = false;
    bool is_torsion = false;
    bool is_torsion_free = false;
};

struct ModuleClass {
    std::shared_ptr<const BrickCatalog> catalog;
    std::vector<int> bricks;  // sorted catalog indices
    std::vector<bool> member;
    std::vector<bool> filt;   // per catalog indec
    ClassFlags flags;

    const BrickCatalog& cat() const { return *catalog; }
    size_t rank() const { return catalog->quiver.n; }
    bool contains(int i) const { return member[i]; }
    std::string names() const;
};

ModuleClass make_class(std::shared_ptr<const BrickCatalog> cat, const std::vector<int>& bricks);
ModuleClass make_class(std::shared_ptr<const BrickCatalog> cat, const std::vector<std::string>& names);
ModuleClass make_class(std::shared_ptr<const BrickCatalog> cat, const std::string& csv);

bool in_add(const ModuleClass& cls, const ModuleSum& x);
bool in_filt(const ModuleClass& cls, const ModuleSum& x);
bool is_weakly_admissible_quotient(const ModuleClass& cls, int m, const SubquotientPair& pair);
// proper nonzero weakly admissible quotients, one per quotient ModuleSum
std::vector<const SubquotientPair*> wa_quotients(const ModuleClass& cls, int m);
ClassFlags classify_class(const ModuleClass& cls);

std::vector<std::string> split_csv(const std::string& csv);

}  // namespace ghostpic
