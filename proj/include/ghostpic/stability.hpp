#pragma once

#include "ghostpic/geometry.hpp"
#include "ghostpic/module_class.hpp"

#include <vector>

namespace ghostpic {

struct Wall {
    int brick = 0;
    Cone cone;
    bool minimal = true;
    std::vector<ModuleSum> quotients;
};

inline size_t max_bricks = 20;

Wall wall(const ModuleClass& cls, int m);
std::vector<int> semistable_set(const ModuleClass& cls, const RatVec& theta);
bool semistable(const ModuleClass& cls, int m, const RatVec& theta);

struct Chamber {
    int id = 0;
    std::vector<int> cells;
    std::vector<int> label;
    RatVec sample;
    std::vector<std::pair<int, int>> bounding_walls;  // (brick, side sign)
};

struct ChamberEdge {
    int from = 0;
    int to = 0;
    int brick = 0;
    RatVec facet_sample;
    // X in S(to) \ S(from) with its weakly admissible epimorphism onto add M
    std::vector<std::pair<int, const SubquotientPair*>> witnesses;
};

struct ChamberComplex {
    std::vector<Wall> walls;  // parallel to cls.bricks
    std::vector<Hyperplane> hyperplanes;
    std::vector<Cell> cells;
    std::vector<Facet> facets;
    std::vector<bool> facet_in_wall;
    std::vector<int> cell_chamber;
    std::vector<Chamber> chambers;
};

struct ChamberGraph {
    ChamberComplex complex;
    std::vector<ChamberEdge> edges;
    int source = -1;
    int sink = -1;
    std::vector<std::pair<int, int>> duplicate_labels;

    const std::vector<Chamber>& chambers() const { return complex.chambers; }
    std::vector<int> out_edges(int chamber) const;
};

ChamberComplex build_complex(const ModuleClass& cls);
std::vector<Chamber> enumerate_chambers(const ModuleClass& cls);
ChamberGraph chamber_graph(const ModuleClass& cls);
int chamber_of(const ChamberComplex& cx, const RatVec& theta);

struct InvariantViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ghostpic
