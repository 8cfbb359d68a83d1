#pragma once

#include "ghostpic/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ghostpic {

// e.theta = 0, a.theta >= 0, s.theta > 0
struct Cone {
    size_t n = 0;
    std::vector<IntVec> equalities;
    std::vector<IntVec> weak_ineqs;
    std::vector<IntVec> strict_ineqs;

    bool contains(const RatVec& theta) const;
    // non-defining weak inequalities made strict
    Cone interior() const;
    Cone with_equality(const IntVec& e) const;
    bool operator==(const Cone&) const = default;
};

std::optional<RatVec> feasible_point(const Cone& c);
// inner is a subset of outer
bool cone_contains(const Cone& outer, const Cone& inner);
bool same_cone(const Cone& a, const Cone& b);

// primitive form with the orientation bit kept separately
struct Hyperplane {
    IntVec normal;
    bool flipped = false;
    IntVec primitive;
};

Hyperplane make_hyperplane(const IntVec& normal);
bool proportional(const IntVec& a, const IntVec& b);

struct Cell {
    std::vector<int> signs;  // +1 / -1 per hyperplane
    RatVec sample;
};

struct Facet {
    int a = 0;
    int b = 0;
    int hyperplane = 0;
    RatVec sample;
};

inline size_t max_hyperplanes = 20;

std::vector<Cell> enumerate_cells(const std::vector<Hyperplane>& hs, size_t n);
std::vector<Facet> cell_facet_neighbors(const std::vector<Cell>& cells,
                                        const std::vector<Hyperplane>& hs, size_t n);

std::vector<int> sign_vector(const std::vector<Hyperplane>& hs, const RatVec& theta);

}  // namespace ghostpic
