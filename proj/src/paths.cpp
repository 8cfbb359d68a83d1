#include "ghostpic/paths.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace ghostpic {

void check_path(const LinearPath& p, size_t n) {
    if (p.h.size() != n || p.k.size() != n) throw std::invalid_argument("path dimension mismatch");
    for (const auto& v : p.k)
        if (v <= 0) throw std::invalid_argument("path direction k must be strictly positive");
}

Rat crossing_time(const LinearPath& p, const IntVec& dim) {
    Rat r = -dot(p.h, dim) / dot(p.k, dim);
    r.canonicalize();
    return r;
}

RatVec point_at(const LinearPath& p, const Rat& t) {
    RatVec v(p.h.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = p.h[i] + t * p.k[i];
    return v;
}

bool is_relatively_stable(const ModuleClass& cls, const LinearPath& path, int m) {
    const auto& c = cls.cat();
    check_path(path, cls.rank());
    Rat tm = crossing_time(path, c.dim(m));
    bool stable = true;
    for (const auto* sp : wa_quotients(cls, m))
        if (!(tm > crossing_time(path, c.dim(sp->quot)))) stable = false;
    Cone in = wall(cls, m).cone.interior();
    if (in.contains(point_at(path, tm)) != stable)
        throw InvariantViolation("quotient-time stability disagrees with wall membership for " + c.name(m));
    return stable;
}

CrossingSchedule crossing_schedule(const ModuleClass& cls, const LinearPath& path) {
    check_path(path, cls.rank());
    const auto& c = cls.cat();
    CrossingSchedule s;
    std::map<Rat, int> seen;
    for (int b : cls.bricks) {
        Rat t = crossing_time(path, c.dim(b));
        auto [it, fresh] = seen.insert({t, b});
        if (!fresh) throw NonGenericPath("non-generic-path: " + c.name(it->second) + "," + c.name(b));
        s.events.push_back({t, false, b, is_relatively_stable(cls, path, b), false});
    }
    std::sort(s.events.begin(), s.events.end(), [](const auto& a, const auto& b) { return a.t < b.t; });
    return s;
}

std::vector<int> linear_mgs(const ModuleClass& cls, const LinearPath& path) {
    std::vector<int> out;
    for (const auto& e : crossing_schedule(cls, path).events)
        if (e.stable) out.push_back(e.object);
    return out;
}

std::string walls_str(const BrickCatalog& c, const std::vector<int>& walls) {
    std::string s;
    for (size_t i = 0; i < walls.size(); ++i) {
        if (i) s += ",";
        s += c.name(walls[i]);
    }
    return s;
}

MgsEnumeration enumerate_mgs(const ChamberGraph& g, const ModuleClass& cls) {
    MgsEnumeration res;
    const size_t nc = g.chambers().size();
    std::vector<std::vector<int>> out(nc);
    for (size_t e = 0; e < g.edges.size(); ++e) out[g.edges[e].from].push_back((int)e);
    std::vector<long double> memo(nc, -1);
    std::function<long double(int)> count = [&](int v) -> long double {
        if (v == g.sink) return 1;
        if (memo[v] >= 0) return memo[v];
        long double s = 0;
        for (int e : out[v]) s += count(g.edges[e].to);
        return memo[v] = s;
    };
    long double total = count(g.source);
    res.count = (size_t)total;
    if (total > (long double)max_mgs_paths) {
        res.truncated = true;
        return res;
    }
    Mgs cur;
    cur.chamber_ids.push_back(g.source);
    std::function<void(int)> dfs = [&](int v) {
        if (v == g.sink) {
            res.list.push_back(cur);
            return;
        }
        for (int e : out[v]) {
            cur.walls.push_back(g.edges[e].brick);
            cur.chamber_ids.push_back(g.edges[e].to);
            dfs(g.edges[e].to);
            cur.walls.pop_back();
            cur.chamber_ids.pop_back();
        }
    };
    dfs(g.source);
    const auto& c = cls.cat();
    auto key = [&](const Mgs& m) {
        std::vector<std::string> v;
        for (int w : m.walls) v.push_back(c.name(w));
        return v;
    };
    std::stable_sort(res.list.begin(), res.list.end(), [&](const Mgs& a, const Mgs& b) { return key(a) < key(b); });
    res.list.erase(std::unique(res.list.begin(), res.list.end(),
                               [](const Mgs& a, const Mgs& b) { return a.walls == b.walls; }),
                   res.list.end());
    res.count = res.list.size();
    return res;
}

std::vector<Mgs> enumerate_mgs(const ModuleClass& cls) {
    auto g = chamber_graph(cls);
    auto r = enumerate_mgs(g, cls);
    if (r.truncated) throw std::length_error("guard exceeded: " + std::to_string(r.count) + " MGS paths");
    return r.list;
}

void validate_sequence(const ModuleClass& cls, const std::vector<int>& seq) {
    std::set<int> seen;
    for (int m : seq) {
        if (m < 0 || m >= cls.cat().size() || !cls.contains(m))
            throw CatalogError("not-in-class", m >= 0 && m < cls.cat().size() ? cls.cat().name(m) : "?");
        if (!seen.insert(m).second) throw CatalogError("duplicate-brick", cls.cat().name(m));
    }
}

std::optional<ModuleSum> wa_morphism(const ModuleClass& cls, int x, int y) {
    const auto& c = cls.cat();
    for (const auto& p : c.subquotients[x]) {
        if (p.quot.empty() || !is_weakly_admissible_quotient(cls, x, p)) continue;
        for (const auto& q : c.subquotients[y])
            if (q.sub == p.quot && in_add(cls, q.quot)) return p.quot;
    }
    return std::nullopt;
}

OrthogonalityResult check_relative_hom_orthogonality(const ModuleClass& cls, const std::vector<int>& seq) {
    validate_sequence(cls, seq);
    OrthogonalityResult r;
    for (size_t j = 0; j < seq.size(); ++j)
        for (size_t k = j + 1; k < seq.size(); ++k)
            if (auto im = wa_morphism(cls, seq[j], seq[k])) {
                r.ok = false;
                r.j = (int)j;
                r.k = (int)k;
                r.image = *im;
                return r;
            }
    return r;
}

MaximalityResult check_mgs_maximality(const ModuleClass& cls, const std::vector<int>& seq) {
    validate_sequence(cls, seq);
    MaximalityResult r;
    r.asserted = cls.flags.extension_closed;
    for (int x : cls.bricks) {
        if (std::find(seq.begin(), seq.end(), x) != seq.end()) continue;
        for (size_t slot = 0; slot <= seq.size(); ++slot) {
            auto s = seq;
            s.insert(s.begin() + slot, x);
            if (check_relative_hom_orthogonality(cls, s).ok) {
                r.maximal = false;
                r.inserted = x;
                r.slot = (int)slot;
                return r;
            }
        }
    }
    return r;
}

HnFiltration hn_stratification(const ModuleClass& cls, const ChamberGraph& g, const Mgs& mgs,
                               const ModuleSum& x) {
    if (!cls.flags.extension_closed) throw CatalogError("not-extension-closed", cls.names());
    if (!in_add(cls, x)) throw CatalogError("not-in-class", cls.cat().name(x));
    const auto& c = cls.cat();
    std::map<int, int> mult;
    HnFiltration f;
    std::function<void(int, size_t)> rec = [&](int m, size_t bound) {
        size_t k = 1;
        for (; k <= bound; ++k) {
            const auto& lab = g.chambers()[mgs.chamber_ids[k]].label;
            if (std::binary_search(lab.begin(), lab.end(), m)) break;
        }
        if (k > bound) throw InvariantViolation("HN: " + c.name(m) + " not semistable along the MGS");
        int top = mgs.walls[k - 1];
        const SubquotientPair* pick = nullptr;
        for (const auto& sp : c.subquotients[m]) {
            if (sp.quot.empty() || !in_filt(cls, sp.sub)) continue;
            if (std::all_of(sp.quot.begin(), sp.quot.end(), [&](int q) { return q == top; })) {
                pick = &sp;
                break;
            }
        }
        if (!pick) throw InvariantViolation("HN: no epimorphism " + c.name(m) + " -> " + c.name(top));
        f.steps.push_back({m, (int)k - 1, pick});
        mult[(int)k - 1] += (int)pick->quot.size();
        for (int z : pick->sub) rec(z, k);
    };
    for (int m : x) rec(m, mgs.walls.size());
    IntVec total(cls.rank(), 0);
    for (auto [i, mu] : mult) {
        f.layers.push_back({i, mu});
        for (int r = 0; r < mu; ++r) total = add(total, c.dim(mgs.walls[i]));
    }
    if (total != c.dim(x)) throw InvariantViolation("HN layers do not add up for " + c.name(x));
    return f;
}

namespace {

bool ordered_rec(const ModuleClass& cls, const std::vector<int>& seq, const ModuleSum& x, int bound) {
    if (x.empty()) return true;
    const auto& c = cls.cat();
    for (int j = bound - 1; j >= 0; --j) {
        int top = seq[j];
        // componentwise choice of a quotient in add(top)
        std::vector<std::vector<const SubquotientPair*>> options(x.size());
        for (size_t i = 0; i < x.size(); ++i)
            for (const auto& sp : c.subquotients[x[i]])
                if (std::all_of(sp.quot.begin(), sp.quot.end(), [&](int q) { return q == top; }))
                    options[i].push_back(&sp);
        std::vector<size_t> pick(x.size(), 0);
        for (;;) {
            bool nonzero = false;
            ModuleSum rest;
            for (size_t i = 0; i < x.size(); ++i) {
                const auto* sp = options[i][pick[i]];
                if (!sp->quot.empty()) nonzero = true;
                rest.insert(rest.end(), sp->sub.begin(), sp->sub.end());
            }
            if (nonzero && ordered_rec(cls, seq, make_sum(rest), j)) return true;
            size_t i = 0;
            while (i < x.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
            if (i == x.size()) break;
        }
    }
    return false;
}

}  // namespace

bool has_ordered_filtration(const ModuleClass& cls, const std::vector<int>& seq, const ModuleSum& x) {
    return ordered_rec(cls, seq, x, (int)seq.size());
}

bool check_hn_minimality(const ModuleClass& cls, const std::vector<int>& seq) {
    validate_sequence(cls, seq);
    for (size_t i = 0; i < seq.size(); ++i) {
        auto rest = seq;
        rest.erase(rest.begin() + i);
        if (has_ordered_filtration(cls, rest, {seq[i]})) return false;
    }
    return true;
}

}  // namespace ghostpic
