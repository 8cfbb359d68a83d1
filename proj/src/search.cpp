#include "ghostpic/search.hpp"

namespace ghostpic {

void for_each_grid_path(size_t n, const PathGrid& grid, const std::function<bool(const LinearPath&)>& visit) {
    std::vector<int> h(n, grid.h_min), k(n, 1);
    while (true) {
        LinearPath p;
        for (size_t i = 0; i < n; ++i) {
            p.h.emplace_back(h[i]);
            p.k.emplace_back(k[i]);
        }
        if (visit(p)) return;
        size_t i = 0;
        for (; i < 2 * n; ++i) {
            if (i < n) {
                if (k[i] < grid.k_max) {
                    ++k[i];
                    break;
                }
                k[i] = 1;
            } else {
                if (h[i - n] < grid.h_max) {
                    ++h[i - n];
                    break;
                }
                h[i - n] = grid.h_min;
            }
        }
        if (i == 2 * n) return;
    }
}

std::optional<LinearPath> find_linear_realization(const ModuleClass& cls, const std::vector<int>& mgs,
                                                  const PathGrid& grid) {
    std::optional<LinearPath> found;
    for_each_grid_path(cls.rank(), grid, [&](const LinearPath& p) {
        try {
            if (linear_mgs(cls, p) == mgs) found = p;
        } catch (const NonGenericPath&) {
        }
        return found.has_value();
    });
    return found;
}

std::optional<LinearPath> find_ghost_sequence(const ModuleClass& cls, const std::vector<Ghost>& ghosts,
                                              const BifurcationReport& bif, const FormatOptions& opt,
                                              const std::string& target, const PathGrid& grid) {
    std::optional<LinearPath> found;
    for_each_grid_path(cls.rank(), grid, [&](const LinearPath& p) {
        try {
            if (format_schedule(cls, ghosts, mgs_with_ghosts(cls, p, ghosts, bif), opt) == target) found = p;
        } catch (const NonGenericPath&) {
        }
        return found.has_value();
    });
    return found;
}

}  // namespace ghostpic
