#include "ghostpic/ghosts.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ghostpic {

const char* kind_name(GhostKind k) {
    switch (k) {
        case GhostKind::Subobject: return "subobject";
        case GhostKind::Quotient: return "quotient";
        case GhostKind::Extension: return "extension";
    }
    return "?";
}

const char* wall_kind_name(WallKind k) {
    switch (k) {
        case WallKind::SubobjectSplitting: return "subobject-splitting";
        case WallKind::QuotientSplitting: return "quotient-splitting";
        case WallKind::Extension: return "extension";
    }
    return "?";
}

std::string ghost_name(const BrickCatalog& c, const Ghost& g) {
    switch (g.kind) {
        case GhostKind::Subobject: return "Gh(" + c.name(g.a) + ";" + c.name(g.b) + ")";
        case GhostKind::Quotient: return "Gh*(" + c.name(g.c) + ";" + c.name(g.b) + ")";
        case GhostKind::Extension:
            return "Gh(" + c.name(g.a) + "->" + c.name(g.b) + "->" + c.name(g.c) + ")";
    }
    return "?";
}

namespace {

bool single(const ModuleSum& m, int x) { return m.size() == 1 && m[0] == x; }

const SubquotientPair* pair_with_sub(const BrickCatalog& c, int m, const ModuleSum& s) {
    for (const auto& p : c.subquotients[m])
        if (p.sub == s) return &p;
    return nullptr;
}

const SubquotientPair* pair_with_quot(const BrickCatalog& c, int m, const ModuleSum& q) {
    for (const auto& p : c.subquotients[m])
        if (p.quot == q && !p.sub.empty()) return &p;
    return nullptr;
}

bool disjoint(const IntVec& a, const IntVec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) return false;
    return true;
}

bool joins_to(const IntVec& a, const IntVec& b, const IntVec& whole) {
    for (size_t i = 0; i < a.size(); ++i)
        if (std::max(a[i], b[i]) != whole[i]) return false;
    return true;
}

// X in L0 embedded in B with zero intersection with the ghost's fixed sub, also a sub of C
bool sub_case2(const ModuleClass& cls, const Ghost& g, int x) {
    const auto& c = cls.cat();
    if (!cls.contains(x) || !disjoint(c.dim(x), c.dim(g.a))) return false;
    return pair_with_sub(c, g.b, {x}) && pair_with_sub(c, g.c, {x});
}

bool quot_case2(const ModuleClass& cls, const Ghost& g, int y) {
    const auto& c = cls.cat();
    if (!cls.contains(y)) return false;
    const auto* p = pair_with_quot(c, g.b, {y});
    return p && joins_to(c.dim(g.a), c.dim(p->sub), c.dim(g.b)) && pair_with_quot(c, g.a, {y});
}

std::vector<SideCondition> subobject_sides(const ModuleClass& cls, const Ghost& g) {
    const auto& c = cls.cat();
    std::vector<SideCondition> out;
    const int Z = g.a, B = g.b, C = g.c;
    for (const auto& p : c.subquotients[B]) {
        if (p.quot.size() != 1 || p.sub.empty()) continue;
        int y = p.quot[0];
        if (!cls.contains(y) || y == C || !in_filt(cls, p.sub)) continue;
        const auto* q = pair_with_quot(c, C, {y});
        if (q && in_filt(cls, q->sub)) out.push_back({1, y, true});
    }
    for (const auto& p : c.subquotients[B])
        if (p.sub.size() == 1 && sub_case2(cls, g, p.sub[0])) out.push_back({2, p.sub[0], false});
    for (const auto& p : c.subquotients[Z])
        if (p.sub.size() == 1 && cls.contains(p.sub[0]) && !p.quot.empty()) out.push_back({3, p.sub[0], false});
    for (const auto& q : c.subquotients[C]) {
        if (q.sub.size() != 1 || q.quot.size() != 1) continue;
        int x = q.sub[0];
        if (!cls.contains(x) || sub_case2(cls, g, x)) continue;
        IntVec kd = add(c.dim(Z), c.dim(x));
        for (const auto& p : c.subquotients[B]) {
            if (p.quot != q.quot || c.dim(p.sub) != kd) continue;
            if (!(in_add(cls, p.quot) && in_filt(cls, p.sub))) out.push_back({4, x, false});
            break;
        }
    }
    for (const auto& f : c.subquotients[B]) {
        if (f.quot.size() != 1 || f.sub.empty() || !cls.contains(f.quot[0])) continue;
        if (joins_to(c.dim(Z), c.dim(f.sub), c.dim(B))) out.push_back({5, f.quot[0], true});
    }
    return out;
}

std::vector<SideCondition> quotient_sides(const ModuleClass& cls, const Ghost& g) {
    const auto& c = cls.cat();
    std::vector<SideCondition> out;
    const int A = g.a, B = g.b, Zs = g.c;
    for (const auto& p : c.subquotients[A]) {
        if (p.sub.size() != 1 || p.quot.empty()) continue;
        int x = p.sub[0];
        if (!cls.contains(x) || x == A || !in_filt(cls, p.quot)) continue;
        const auto* q = pair_with_sub(c, B, {x});
        if (q && in_filt(cls, q->quot)) out.push_back({1, x, false});
    }
    for (const auto& p : c.subquotients[B])
        if (p.quot.size() == 1 && !p.sub.empty() && quot_case2(cls, g, p.quot[0]))
            out.push_back({2, p.quot[0], true});
    for (const auto& p : c.subquotients[Zs])
        if (p.quot.size() == 1 && cls.contains(p.quot[0]) && !p.sub.empty()) out.push_back({3, p.quot[0], true});
    for (const auto& q : c.subquotients[A]) {
        if (q.quot.size() != 1 || q.sub.size() != 1) continue;
        int y = q.quot[0];
        if (!cls.contains(y) || quot_case2(cls, g, y)) continue;
        const auto* p = pair_with_sub(c, B, q.sub);
        if (p && !(in_add(cls, q.sub) && in_filt(cls, p->quot))) out.push_back({4, y, true});
    }
    for (const auto& p : c.subquotients[B]) {
        if (p.sub.size() != 1 || p.quot.empty() || !cls.contains(p.sub[0])) continue;
        if (disjoint(c.dim(p.sub[0]), c.dim(A))) out.push_back({5, p.sub[0], false});
    }
    return out;
}

void push_unique(std::vector<IntVec>& v, const IntVec& x) {
    if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
}

Cone side_cone(const ModuleClass& cls, int missing, const IntVec& zero_side,
               const std::vector<SideCondition>& sides) {
    const auto& c = cls.cat();
    Cone k;
    k.n = cls.rank();
    k.equalities.push_back(c.dim(missing));
    push_unique(k.weak_ineqs, zero_side);
    for (const auto& s : sides) push_unique(k.weak_ineqs, s.quotient_side ? c.dim(s.object) : neg(c.dim(s.object)));
    return k;
}

}  // namespace

Cone subobject_ghost_domain(const ModuleClass& cls, const Ghost& g) {
    if (g.kind != GhostKind::Subobject) throw std::invalid_argument("wrong kind");
    return side_cone(cls, g.a, cls.cat().dim(g.b), subobject_sides(cls, g));
}

Cone quotient_ghost_domain(const ModuleClass& cls, const Ghost& g) {
    if (g.kind != GhostKind::Quotient) throw std::invalid_argument("wrong kind");
    return side_cone(cls, g.c, neg(cls.cat().dim(g.b)), quotient_sides(cls, g));
}

Cone extension_ghost_domain(const ModuleClass& cls, const Ghost& g) {
    if (g.kind != GhostKind::Extension) throw std::invalid_argument("wrong kind");
    const auto& c = cls.cat();
    const auto* p = pair_with_sub(c, g.b, {g.a});
    if (!p || !single(p->quot, g.c) || !is_weakly_admissible_quotient(cls, g.b, *p))
        throw std::invalid_argument("not a weakly admissible quotient: " + c.name(g.c));
    Cone k;
    k.n = cls.rank();
    k.equalities.push_back(c.dim(g.b));
    k.weak_ineqs.push_back(neg(c.dim(g.c)));
    return k;
}

std::vector<Ghost> enumerate_ghosts(const ModuleClass& cls) {
    const auto& c = cls.cat();
    std::vector<Ghost> out;
    for (const auto& s : c.ses_list) {
        bool ma = cls.contains(s.a), mb = cls.contains(s.b), mc = cls.contains(s.c);
        if (!ma + !mb + !mc >= 2) continue;
        Ghost g;
        g.a = s.a;
        g.b = s.b;
        g.c = s.c;
        if (!ma && mb && mc) {
            if (hom_dim(c, s.a, s.c) != 0) continue;
            g.kind = GhostKind::Subobject;
            g.missing = s.a;
            g.sides = subobject_sides(cls, g);
            g.domain = subobject_ghost_domain(cls, g);
            g.minimal = g.sides.empty();
            g.warning = !(cls.flags.known && cls.flags.is_torsion);
        } else if (ma && mb && !mc) {
            if (hom_dim(c, s.a, s.c) != 0) continue;
            g.kind = GhostKind::Quotient;
            g.missing = s.c;
            g.sides = quotient_sides(cls, g);
            g.domain = quotient_ghost_domain(cls, g);
            g.minimal = g.sides.empty();
            g.warning = !(cls.flags.known && cls.flags.is_torsion_free);
        } else if (ma && mb && mc) {
            g.kind = GhostKind::Extension;
            g.missing = s.b;
            g.domain = extension_ghost_domain(cls, g);
            auto qb = wa_quotients(cls, s.b);
            g.minimal = wa_quotients(cls, s.a).empty() && wa_quotients(cls, s.c).empty() && qb.size() == 1 &&
                        single(qb[0]->quot, s.c);
        } else {
            continue;
        }
        out.push_back(std::move(g));
    }
    return out;
}

int find_ghost(const std::vector<Ghost>& ghosts, GhostKind k, int a, int b, int c) {
    for (size_t i = 0; i < ghosts.size(); ++i)
        if (ghosts[i].kind == k && ghosts[i].a == a && ghosts[i].b == b && ghosts[i].c == c) return (int)i;
    return -1;
}

bool ghost_stability(const ModuleClass& cls, const LinearPath& path, const Ghost& g) {
    const auto& c = cls.cat();
    check_path(path, cls.rank());
    auto t = [&](int x) { return crossing_time(path, c.dim(x)); };
    std::set<int> involved{g.a, g.b, g.c};
    for (const auto& s : g.sides) involved.insert(s.object);
    std::map<Rat, int> seen;
    for (int x : involved) {
        auto [it, fresh] = seen.insert({t(x), x});
        if (!fresh) throw NonGenericPath("non-generic-path: " + c.name(it->second) + "," + c.name(x));
    }
    bool stable = true;
    const Rat tm = t(g.missing);
    switch (g.kind) {
        case GhostKind::Subobject:
            stable = t(g.c) < t(g.b);
            for (const auto& s : g.sides) stable = stable && (s.quotient_side ? t(s.object) < tm : t(s.object) > tm);
            break;
        case GhostKind::Quotient:
            stable = t(g.b) < t(g.a);
            for (const auto& s : g.sides) stable = stable && (s.quotient_side ? t(s.object) < tm : t(s.object) > tm);
            break;
        case GhostKind::Extension:
            stable = t(g.c) > t(g.b);
            break;
    }
    if (g.domain.contains(point_at(path, tm)) != stable)
        throw InvariantViolation("ghost time criterion disagrees with domain membership for " + ghost_name(c, g));
    return stable;
}

namespace {

int rank_of(std::vector<IntVec> rows) {
    std::vector<RatVec> m;
    for (auto& r : rows) {
        RatVec v;
        for (long x : r) v.emplace_back(x);
        m.push_back(v);
    }
    int rk = 0;
    size_t cols = m.empty() ? 0 : m[0].size();
    for (size_t col = 0; col < cols && rk < (int)m.size(); ++col) {
        size_t piv = rk;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rk]);
        for (size_t r = 0; r < m.size(); ++r) {
            if ((int)r == rk || m[r][col] == 0) continue;
            Rat f = m[r][col] / m[rk][col];
            for (size_t k = col; k < cols; ++k) m[r][k] -= f * m[rk][k];
        }
        ++rk;
    }
    return rk;
}

bool in_span(const std::vector<IntVec>& basis, const IntVec& v) {
    auto ext = basis;
    ext.push_back(v);
    return rank_of(basis) == rank_of(ext);
}

// weak inequalities outside the span of the equalities become strict
Cone relative_interior(const Cone& k) {
    Cone r = k;
    r.weak_ineqs.clear();
    for (const auto& v : k.weak_ineqs) {
        if (in_span(k.equalities, v))
            r.weak_ineqs.push_back(v);
        else
            r.strict_ineqs.push_back(v);
    }
    return r;
}

bool side_feasible(const Cone& k, const IntVec& w) {
    Cone r = relative_interior(k);
    r.strict_ineqs.push_back(w);
    return feasible_point(r).has_value();
}

}  // namespace

bool bifurcation_geometry_ok(const ModuleClass& cls, const std::vector<Ghost>& ghosts, const Bifurcation& b) {
    const auto& c = cls.cat();
    const IntVec& w = c.dim(b.splitting_wall);
    const Cone& child = ghosts[b.child].domain;
    const Cone& parent = ghosts[b.parent].domain;
    if (in_span(child.equalities, w)) return false;
    bool plus = side_feasible(child, w), minus = side_feasible(child, neg(w));
    if (plus == minus) return false;
    if (!feasible_point(relative_interior(child.with_equality(w))).has_value()) return false;
    return side_feasible(parent, w) && side_feasible(parent, neg(w));
}

BifurcationReport classify_bifurcations(const ModuleClass& cls, const std::vector<Ghost>& ghosts) {
    const auto& c = cls.cat();
    BifurcationReport rep;
    auto sub_of = [&](int m, int x) -> std::optional<ModuleSum> {
        const auto* p = pair_with_sub(c, m, {x});
        if (!p) return std::nullopt;
        return p->quot;
    };
    auto ker_of = [&](int m, int y) -> std::optional<ModuleSum> {
        const auto* p = pair_with_quot(c, m, {y});
        if (!p) return std::nullopt;
        return p->sub;
    };
    for (size_t gi = 0; gi < ghosts.size(); ++gi) {
        const Ghost& g = ghosts[gi];
        if (g.kind == GhostKind::Extension) continue;
        for (const auto& s : g.sides) {
            std::optional<ModuleSum> A, B, C;
            const int o = s.object;
            if (g.kind == GhostKind::Subobject) {
                ModuleSum Z{g.a}, Bs{g.b}, Cs{g.c};
                switch (s.case_no) {
                    case 1: A = Z; B = ker_of(g.b, o); C = ker_of(g.c, o); break;
                    case 2: A = Z; B = sub_of(g.b, o); C = sub_of(g.c, o); break;
                    case 3: A = sub_of(g.a, o); B = sub_of(g.b, o); C = Cs; break;
                    case 4: {
                        auto cq = sub_of(g.c, o);
                        B = Bs;
                        C = cq;
                        if (cq) {
                            IntVec kd = add(c.dim(g.a), c.dim(o));
                            for (const auto& p : c.subquotients[g.b])
                                if (p.quot == *cq && c.dim(p.sub) == kd) A = p.sub;
                        }
                        break;
                    }
                    case 5: A = ker_of(g.a, o); B = ker_of(g.b, o); C = Cs; break;
                }
            } else {
                ModuleSum As{g.a}, Bs{g.b}, Zs{g.c};
                switch (s.case_no) {
                    case 1: A = sub_of(g.a, o); B = sub_of(g.b, o); C = Zs; break;
                    case 2: A = ker_of(g.a, o); B = ker_of(g.b, o); C = Zs; break;
                    case 3: {
                        A = As;
                        C = ker_of(g.c, o);
                        if (C) {
                            IntVec kd = add(c.dim(g.a), c.dim(*C));
                            for (const auto& p : c.subquotients[g.b])
                                if (single(p.quot, o) && c.dim(p.sub) == kd) B = p.sub;
                        }
                        break;
                    }
                    case 4: {
                        A = ker_of(g.a, o);
                        B = Bs;
                        if (A) {
                            const auto* p = pair_with_sub(c, g.b, *A);
                            if (p) C = p->quot;
                        }
                        break;
                    }
                    case 5: A = As; B = sub_of(g.b, o); C = sub_of(g.c, o); break;
                }
            }
            if (!A || !B || !C) {
                rep.issues.push_back({(int)gi, s.case_no, o, -1, "parent-not-enumerated"});
                continue;
            }
            if (A->size() != 1 || B->size() != 1 || C->size() != 1) {
                rep.issues.push_back({(int)gi, s.case_no, o, -1, "decomposable"});
                continue;
            }
            int pi = find_ghost(ghosts, g.kind, (*A)[0], (*B)[0], (*C)[0]);
            if (pi < 0) {
                rep.issues.push_back({(int)gi, s.case_no, o, -1, "parent-not-enumerated"});
                continue;
            }
            Bifurcation b;
            b.child = (int)gi;
            b.parent = pi;
            b.case_no = s.case_no;
            b.splitting_wall = o;
            b.wall_kind = s.quotient_side ? WallKind::QuotientSplitting : WallKind::SubobjectSplitting;
            rep.links.push_back(b);
        }
    }
    for (size_t gi = 0; gi < ghosts.size(); ++gi) {
        const Ghost& g = ghosts[gi];
        for (size_t hi = 0; hi < ghosts.size(); ++hi) {
            const Ghost& h = ghosts[hi];
            if (gi == hi) continue;
            if (g.kind == GhostKind::Extension && h.kind == GhostKind::Extension) {
                int wall = -1;
                if (h.b == g.c) wall = g.a;
                if (h.b == g.a) wall = g.c;
                if (wall >= 0) rep.links.push_back({(int)gi, (int)hi, 0, wall, WallKind::Extension});
            }
            if (g.kind == GhostKind::Subobject && h.kind == GhostKind::Subobject && h.a == g.a && h.b != g.c) {
                const auto* p = pair_with_quot(c, g.c, {h.b});
                if (p && pair_with_quot(c, g.b, {h.b}))
                    rep.issues.push_back({(int)gi, 0, -1, (int)hi, "pathological"});
            }
        }
    }
    return rep;
}

GhostSchedule mgs_with_ghosts(const ModuleClass& cls, const LinearPath& path, const std::vector<Ghost>& ghosts,
                              const BifurcationReport& bif) {
    const auto& c = cls.cat();
    GhostSchedule s;
    s.events = crossing_schedule(cls, path).events;
    std::map<Rat, int> seen;
    for (const auto& e : s.events) seen[e.t] = e.object;
    std::map<int, Rat> missing_time;
    for (const auto& g : ghosts) {
        if (missing_time.count(g.missing)) continue;
        Rat t = crossing_time(path, c.dim(g.missing));
        if (cls.contains(g.missing)) {
            missing_time[g.missing] = t;
            continue;
        }
        auto [it, fresh] = seen.insert({t, g.missing});
        if (!fresh) throw NonGenericPath("non-generic-path: " + c.name(it->second) + "," + c.name(g.missing));
        missing_time[g.missing] = t;
    }
    for (size_t i = 0; i < ghosts.size(); ++i)
        s.events.push_back({missing_time[ghosts[i].missing], true, (int)i, ghost_stability(cls, path, ghosts[i]), false});
    std::stable_sort(s.events.begin(), s.events.end(), [](const auto& a, const auto& b) {
        if (a.t != b.t) return a.t < b.t;
        if (a.ghost != b.ghost) return !a.ghost;
        return a.object < b.object;
    });
    // within a concurrent group: (first, second) constraints from bifurcation links
    std::vector<std::pair<int, int>> before;
    for (const auto& l : bif.links) {
        bool parent_first = l.case_no == 2;
        if (ghosts[l.child].kind == GhostKind::Quotient) parent_first = !parent_first;
        if (parent_first)
            before.push_back({l.parent, l.child});
        else
            before.push_back({l.child, l.parent});
    }
    for (size_t i = 0; i < s.events.size();) {
        size_t j = i;
        while (j < s.events.size() && s.events[j].t == s.events[i].t) ++j;
        if (j - i > 1) {
            for (size_t k = i; k < j; ++k) s.events[k].concurrent = true;
            for (size_t pass = 0; pass < (j - i) * (j - i); ++pass) {
                bool moved = false;
                for (auto [x, y] : before) {
                    auto pos = [&](int g) {
                        for (size_t k = i; k < j; ++k)
                            if (s.events[k].ghost && s.events[k].object == g) return k;
                        return j;
                    };
                    size_t px = pos(x), py = pos(y);
                    if (px < j && py < j && px > py) {
                        auto ev = s.events[px];
                        s.events.erase(s.events.begin() + px);
                        s.events.insert(s.events.begin() + py, ev);
                        moved = true;
                    }
                }
                if (!moved) break;
            }
        }
        i = j;
    }
    return s;
}

GhostSchedule mgs_with_ghosts(const ModuleClass& cls, const LinearPath& path) {
    auto ghosts = enumerate_ghosts(cls);
    return mgs_with_ghosts(cls, path, ghosts, classify_bifurcations(cls, ghosts));
}

std::string format_schedule(const ModuleClass& cls, const std::vector<Ghost>& ghosts, const GhostSchedule& s,
                            const FormatOptions& opt) {
    const auto& c = cls.cat();
    std::string out;
    auto emit = [&](const std::string& x) {
        if (!out.empty()) out += ",";
        out += x;
    };
    for (const auto& e : s.events) {
        if (!e.ghost) {
            if (e.stable)
                emit(c.name(e.object));
            else if (opt.show_unstable)
                emit("(" + c.name(e.object) + ")");
        } else if (e.stable) {
            auto it = opt.labels.find(e.object);
            if (it != opt.labels.end())
                emit(it->second);
            else if (!opt.only_labelled)
                emit(ghost_name(c, ghosts[e.object]));
        }
    }
    return out;
}

Duality dualize(const ModuleClass& cls) {
    const auto& c = cls.cat();
    auto word = c.type_a_word();
    if (!word || !c.complete) throw CatalogError("incomplete", "duality needs a generated type-A catalog");
    std::string flipped = *word;
    for (char& ch : flipped) ch = ch == 'L' ? 'R' : 'L';
    Duality d;
    d.catalog = std::make_shared<const BrickCatalog>(generate_type_a(c.rank(), flipped));
    d.indec_map.assign(c.size(), -1);
    for (int i = 0; i < c.size(); ++i)
        for (int j = 0; j < d.catalog->size(); ++j)
            if (d.catalog->dim(j) == c.dim(i)) d.indec_map[i] = j;
    std::vector<int> bricks;
    for (int b : cls.bricks) bricks.push_back(d.indec_map[b]);
    d.cls = make_class(d.catalog, bricks);
    return d;
}

Ghost Duality::transport(const Ghost& g) const {
    Ghost h = g;
    const auto& m = indec_map;
    switch (g.kind) {
        case GhostKind::Subobject: h.kind = GhostKind::Quotient; break;
        case GhostKind::Quotient: h.kind = GhostKind::Subobject; break;
        case GhostKind::Extension: break;
    }
    h.a = m[g.c];
    h.b = m[g.b];
    h.c = m[g.a];
    h.missing = m[g.missing];
    for (auto& s : h.sides) {
        s.object = m[s.object];
        s.quotient_side = !s.quotient_side;
    }
    h.domain.equalities.clear();
    h.domain.weak_ineqs.clear();
    h.domain.strict_ineqs.clear();
    for (const auto& v : g.domain.equalities) h.domain.equalities.push_back(v);
    for (const auto& v : g.domain.weak_ineqs) h.domain.weak_ineqs.push_back(neg(v));
    for (const auto& v : g.domain.strict_ineqs) h.domain.strict_ineqs.push_back(neg(v));
    return h;
}

std::vector<int> Duality::transport_sequence(const std::vector<int>& seq) const {
    std::vector<int> out;
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) out.push_back(indec_map[*it]);
    return out;
}

}  // namespace ghostpic
