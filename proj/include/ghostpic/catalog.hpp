#pragma once

#include "ghostpic/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ghostpic {

struct CatalogError : std::runtime_error {
    std::string code;
    CatalogError(std::string c, const std::string& what)
        : std::runtime_error(c + ": " + what), code(std::move(c)) {}
};

struct Quiver {
    int n = 0;
    std::vector<std::pair<int, int>> arrows;  // (source, target), 1-based
    bool operator==(const Quiver&) const = default;
};

struct Indec {
    std::string id;
    std::string name;
    IntVec dim;
    bool operator==(const Indec&) const = default;
};

// sorted multiset of indec indices; empty is the zero module
using ModuleSum = std::vector<int>;

struct SubquotientPair {
    int parent = 0;
    ModuleSum sub;
    ModuleSum quot;
    bool sub_proper = false;
    std::string tag;
    bool operator==(const SubquotientPair&) const = default;
};

struct Ses {
    int a = 0, b = 0, c = 0;
    bool operator==(const Ses&) const = default;
    auto operator<=>(const Ses&) const = default;
};

struct BrickCatalog {
    Quiver quiver;
    std::vector<Indec> indecs;
    std::vector<std::vector<SubquotientPair>> subquotients;
    std::vector<std::vector<int>> hom;
    std::vector<Ses> ses_list;
    bool complete = false;

    int size() const { return (int)indecs.size(); }
    int rank() const { return quiver.n; }
    std::optional<int> find(const std::string& name_or_id) const;
    int require(const std::string& name_or_id) const;
    IntVec dim(const ModuleSum& m) const;
    const IntVec& dim(int i) const { return indecs[i].dim; }
    const std::string& name(int i) const { return indecs[i].name; }
    std::string name(const ModuleSum& m) const;
    bool has_ses(int a, int b, int c) const;
    // orientation word when the quiver is a type-A path
    std::optional<std::string> type_a_word() const;
    bool operator==(const BrickCatalog&) const = default;
};

inline int max_rank = 12;

BrickCatalog generate_type_a(int n, const std::string& orientation);
BrickCatalog builtin_kronecker();
BrickCatalog builtin(const std::string& name);
BrickCatalog load_catalog(const std::string& document);
std::string dump_catalog(const BrickCatalog& cat);

int hom_dim(const BrickCatalog& cat, int x, int y);

ModuleSum make_sum(std::vector<int> ids);
ModuleSum sum_union(const ModuleSum& a, const ModuleSum& b);

}  // namespace ghostpic
