#pragma once

#include "ghostpic/rational.hpp"

#include <optional>
#include <vector>

namespace ghostpic {

enum class RowKind { Le, Eq, Ge };

struct LpRow {
    RatVec coef;
    RowKind kind = RowKind::Le;
    Rat rhs;
};

struct LpResult {
    bool feasible = false;
    bool bounded = true;
    Rat value;
    RatVec x;
};

// maximize c.x subject to rows and x >= 0; Bland's rule, exact arithmetic
LpResult lp_maximize(const RatVec& c, const std::vector<LpRow>& rows);

}  // namespace ghostpic
