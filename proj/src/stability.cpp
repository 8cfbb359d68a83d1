#include "ghostpic/stability.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace ghostpic {

Wall wall(const ModuleClass& cls, int m) {
    if (m < 0 || m >= cls.cat().size() || !cls.contains(m))
        throw CatalogError("not-in-class", m >= 0 && m < cls.cat().size() ? cls.cat().name(m) : "?");
    Wall w;
    w.brick = m;
    w.cone.n = cls.rank();
    w.cone.equalities.push_back(cls.cat().dim(m));
    std::set<IntVec> seen;
    for (const auto* sp : wa_quotients(cls, m)) {
        w.quotients.push_back(sp->quot);
        auto d = cls.cat().dim(sp->quot);
        if (seen.insert(d).second) w.cone.weak_ineqs.push_back(d);
    }
    w.minimal = w.cone.weak_ineqs.empty();
    return w;
}

bool semistable(const ModuleClass& cls, int m, const RatVec& theta) {
    const auto& c = cls.cat();
    if (dot(theta, c.dim(m)) <= 0) return false;
    for (const auto* sp : wa_quotients(cls, m))
        if (dot(theta, c.dim(sp->quot)) <= 0) return false;
    return true;
}

std::vector<int> semistable_set(const ModuleClass& cls, const RatVec& theta) {
    std::vector<int> out;
    for (int b : cls.bricks)
        if (semistable(cls, b, theta)) out.push_back(b);
    return out;
}

std::vector<int> ChamberGraph::out_edges(int chamber) const {
    std::vector<int> r;
    for (size_t e = 0; e < edges.size(); ++e)
        if (edges[e].from == chamber) r.push_back((int)e);
    return r;
}

ChamberComplex build_complex(const ModuleClass& cls) {
    if (cls.bricks.size() > max_bricks)
        throw std::length_error("guard exceeded: " + std::to_string(cls.bricks.size()) + " bricks");
    ChamberComplex cx;
    const size_t n = cls.rank();
    for (int b : cls.bricks) {
        cx.walls.push_back(wall(cls, b));
        cx.hyperplanes.push_back(make_hyperplane(cls.cat().dim(b)));
    }
    cx.cells = enumerate_cells(cx.hyperplanes, n);
    cx.facets = cell_facet_neighbors(cx.cells, cx.hyperplanes, n);
    std::vector<int> parent(cx.cells.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& f : cx.facets) {
        bool in = cx.walls[f.hyperplane].cone.contains(f.sample);
        cx.facet_in_wall.push_back(in);
        if (!in) {
            int a = find(f.a), b = find(f.b);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::map<int, int> root_id;
    cx.cell_chamber.assign(cx.cells.size(), -1);
    for (size_t i = 0; i < cx.cells.size(); ++i) {
        int r = find((int)i);
        auto it = root_id.find(r);
        if (it == root_id.end()) {
            int id = (int)cx.chambers.size();
            root_id[r] = id;
            Chamber ch;
            ch.id = id;
            ch.sample = cx.cells[i].sample;
            ch.label = semistable_set(cls, ch.sample);
            cx.chambers.push_back(ch);
            it = root_id.find(r);
        }
        cx.cell_chamber[i] = it->second;
        cx.chambers[it->second].cells.push_back((int)i);
    }
    for (size_t k = 0; k < cx.facets.size(); ++k) {
        if (!cx.facet_in_wall[k]) continue;
        const auto& f = cx.facets[k];
        int brick = cls.bricks[f.hyperplane];
        for (int cell : {f.a, f.b}) {
            auto& bw = cx.chambers[cx.cell_chamber[cell]].bounding_walls;
            std::pair<int, int> entry{brick, cx.cells[cell].signs[f.hyperplane]};
            if (std::find(bw.begin(), bw.end(), entry) == bw.end()) bw.push_back(entry);
        }
    }
    for (auto& ch : cx.chambers) std::sort(ch.bounding_walls.begin(), ch.bounding_walls.end());
    return cx;
}

std::vector<Chamber> enumerate_chambers(const ModuleClass& cls) { return build_complex(cls).chambers; }

int chamber_of(const ChamberComplex& cx, const RatVec& theta) {
    auto s = sign_vector(cx.hyperplanes, theta);
    for (int v : s)
        if (v == 0) return -1;
    for (size_t i = 0; i < cx.cells.size(); ++i)
        if (cx.cells[i].signs == s) return cx.cell_chamber[i];
    return -1;
}

namespace {

bool strict_subset(const std::vector<int>& a, const std::vector<int>& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

ChamberGraph chamber_graph(const ModuleClass& cls) {
    ChamberGraph g;
    g.complex = build_complex(cls);
    auto& cx = g.complex;
    const auto& c = cls.cat();
    std::set<std::tuple<int, int, int>> seen;
    for (size_t k = 0; k < cx.facets.size(); ++k) {
        if (!cx.facet_in_wall[k]) continue;
        const auto& f = cx.facets[k];
        int brick = cls.bricks[f.hyperplane];
        int pos = cx.cells[f.a].signs[f.hyperplane] > 0 ? f.a : f.b;
        int negc = pos == f.a ? f.b : f.a;
        int from = cx.cell_chamber[negc], to = cx.cell_chamber[pos];
        if (from == to)
            throw InvariantViolation("wall facet inside one chamber at " + ratvec_str(f.sample));
        if (!seen.insert({from, to, brick}).second) continue;
        ChamberEdge e;
        e.from = from;
        e.to = to;
        e.brick = brick;
        e.facet_sample = f.sample;
        const auto& lf = cx.chambers[from].label;
        const auto& lt = cx.chambers[to].label;
        if (!strict_subset(lf, lt) || !std::binary_search(lt.begin(), lt.end(), brick) ||
            std::binary_search(lf.begin(), lf.end(), brick))
            throw InvariantViolation("wall crossing does not grow S at " + ratvec_str(f.sample) +
                                     " across D(" + c.name(brick) + ")");
        for (int x : lt) {
            if (std::binary_search(lf.begin(), lf.end(), x)) continue;
            const SubquotientPair* wit = nullptr;
            for (const auto& sp : c.subquotients[x]) {
                if (sp.quot.empty() || !in_filt(cls, sp.sub)) continue;
                bool all_m = std::all_of(sp.quot.begin(), sp.quot.end(), [&](int q) { return q == brick; });
                if (all_m) {
                    wit = &sp;
                    break;
                }
            }
            if (!wit)
                throw InvariantViolation("no weakly admissible epimorphism " + c.name(x) + " -> " +
                                         c.name(brick) + " at " + ratvec_str(f.sample));
            e.witnesses.push_back({x, wit});
        }
        g.edges.push_back(std::move(e));
    }
    g.source = chamber_of(cx, eta(cls.rank(), -1));
    g.sink = chamber_of(cx, eta(cls.rank(), 1));
    if (g.source < 0 || g.sink < 0 || !cx.chambers[g.source].label.empty() ||
        cx.chambers[g.sink].label != cls.bricks)
        throw InvariantViolation("source or sink chamber has the wrong label");
    for (size_t a = 0; a < cx.chambers.size(); ++a)
        for (size_t b = a + 1; b < cx.chambers.size(); ++b)
            if (cx.chambers[a].label == cx.chambers[b].label) g.duplicate_labels.push_back({(int)a, (int)b});
    return g;
}

}  // namespace ghostpic
