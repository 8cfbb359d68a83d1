#pragma once

#include "ghostpic/ghosts.hpp"

#include <functional>
#include <optional>

namespace ghostpic {

struct PathGrid {
    int h_min = -4, h_max = 4;
    int k_max = 3;
};

// deterministic odometer over h in [h_min,h_max]^n, k in [1,k_max]^n; visitor returns true to stop
void for_each_grid_path(size_t n, const PathGrid& grid, const std::function<bool(const LinearPath&)>& visit);

std::optional<LinearPath> find_linear_realization(const ModuleClass& cls, const std::vector<int>& mgs,
                                                  const PathGrid& grid = {});

std::optional<LinearPath> find_ghost_sequence(const ModuleClass& cls, const std::vector<Ghost>& ghosts,
                                              const BifurcationReport& bif, const FormatOptions& opt,
                                              const std::string& target, const PathGrid& grid = {});

}  // namespace ghostpic
