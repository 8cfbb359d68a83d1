#include "ghostpic/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

namespace ghostpic {

uint64_t Rng::next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

long Rng::range(long lo, long hi) { return lo + (long)(next() % (uint64_t)(hi - lo + 1)); }

LinearPath random_path(Rng& rng, size_t n) {
    LinearPath p;
    for (size_t i = 0; i < n; ++i) {
        p.h.emplace_back(rng.range(-30, 30), rng.range(1, 7));
        p.k.emplace_back(rng.range(1, 20), rng.range(1, 3));
        p.h.back().canonicalize();
        p.k.back().canonicalize();
    }
    return p;
}

namespace {

void fail(SuiteResult& r, const std::string& what) {
    ++r.failures;
    if (r.detail.size() < 400) r.detail += (r.detail.empty() ? "" : "; ") + what;
}

IntVec cross3(const IntVec& a, const IntVec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

RatVec to_rat(const IntVec& v) { return RatVec(v.begin(), v.end()); }

int brick_slot(const ModuleClass& cls, int b) {
    return (int)(std::find(cls.bricks.begin(), cls.bricks.end(), b) - cls.bricks.begin());
}

}  // namespace

SuiteResult suite_union_of_interiors(const std::vector<Fixture>& fx) {
    SuiteResult r{"a", "union of wall interiors", 0, 0, 0, ""};
    for (const auto& f : fx) {
        auto cls = fixture_class(f);
        auto cx = build_complex(cls);
        std::vector<RatVec> pts;
        for (const auto& fc : cx.facets) pts.push_back(fc.sample);
        if (cls.rank() == 3)
            for (size_t i = 0; i < cls.bricks.size(); ++i)
                for (size_t j = i + 1; j < cls.bricks.size(); ++j) {
                    IntVec x = cross3(cls.cat().dim(cls.bricks[i]), cls.cat().dim(cls.bricks[j]));
                    if (is_zero(x)) continue;
                    pts.push_back(to_rat(x));
                    pts.push_back(to_rat(neg(x)));
                }
        for (const auto& th : pts) {
            bool in_closed = false, in_interior = false;
            for (const auto& w : cx.walls) {
                in_closed = in_closed || w.cone.contains(th);
                in_interior = in_interior || w.cone.interior().contains(th);
            }
            if (!in_closed) continue;
            ++r.checks;
            if (!in_interior) fail(r, f.name + " at " + ratvec_str(th));
        }
    }
    return r;
}

SuiteResult suite_locally_constant(const std::vector<Fixture>& fx, Rng& rng, int per_chamber) {
    SuiteResult r{"b", "S(theta) locally constant on chambers", 0, 0, 0, ""};
    for (const auto& f : fx) {
        auto cls = fixture_class(f);
        auto cx = build_complex(cls);
        const size_t n = cls.rank();
        for (const auto& ch : cx.chambers) {
            for (int k = 0; k < per_chamber; ++k) {
                const Cell& a = cx.cells[ch.cells[rng.next() % ch.cells.size()]];
                const Cell& b = cx.cells[ch.cells[rng.next() % ch.cells.size()]];
                RatVec th(n);
                bool ok = false;
                if (k % 2 == 1) {
                    Rat lam(rng.range(1, 99), 100);
                    for (size_t i = 0; i < n; ++i) th[i] = lam * a.sample[i] + (1 - lam) * b.sample[i];
                    ok = chamber_of(cx, th) == ch.id;
                }
                if (!ok) {
                    Rat eps = 1;
                    IntVec dir(n);
                    for (auto& d : dir) d = rng.range(-10, 10);
                    for (int it = 0; it < 80; ++it, eps /= 2) {
                        for (size_t i = 0; i < n; ++i) th[i] = a.sample[i] + eps * dir[i];
                        if (sign_vector(cx.hyperplanes, th) == a.signs) break;
                    }
                }
                ++r.checks;
                if (chamber_of(cx, th) != ch.id || semistable_set(cls, th) != ch.label)
                    fail(r, f.name + " chamber " + std::to_string(ch.id));
            }
        }
    }
    return r;
}

SuiteResult suite_wall_crossing(const std::vector<Fixture>& fx) {
    SuiteResult r{"c", "wall-crossing monotonicity", 0, 0, 0, ""};
    for (const auto& f : fx) {
        auto cls = fixture_class(f);
        auto g = chamber_graph(cls);
        const auto& cx = g.complex;
        for (const auto& e : g.edges) {
            ++r.checks;
            const IntVec& w = cls.cat().dim(e.brick);
            int slot = brick_slot(cls, e.brick);
            auto s0 = sign_vector(cx.hyperplanes, e.facet_sample);
            RatVec lo, hi;
            Rat d = 1;
            bool found = false;
            for (int it = 0; it < 80 && !found; ++it, d /= 2) {
                lo = hi = e.facet_sample;
                for (size_t i = 0; i < w.size(); ++i) {
                    lo[i] -= d * w[i];
                    hi[i] += d * w[i];
                }
                auto sl = sign_vector(cx.hyperplanes, lo), sh = sign_vector(cx.hyperplanes, hi);
                found = true;
                for (size_t i = 0; i < s0.size(); ++i) {
                    if ((int)i == slot) found = found && s0[i] == 0 && sl[i] < 0 && sh[i] > 0;
                    else found = found && sl[i] == s0[i] && sh[i] == s0[i];
                }
            }
            if (!found) {
                fail(r, f.name + ": no local neighbours at " + ratvec_str(e.facet_sample));
                continue;
            }
            auto sm = semistable_set(cls, lo), sz = semistable_set(cls, e.facet_sample), sp = semistable_set(cls, hi);
            bool ok = sm == sz && sz.size() < sp.size() && std::includes(sp.begin(), sp.end(), sz.begin(), sz.end()) &&
                      std::binary_search(sp.begin(), sp.end(), e.brick) &&
                      !std::binary_search(sz.begin(), sz.end(), e.brick) && chamber_of(cx, lo) == e.from &&
                      chamber_of(cx, hi) == e.to;
            if (!ok) fail(r, f.name + ": edge across " + cls.cat().name(e.brick));
        }
    }
    return r;
}

SuiteResult suite_relative_stability(const std::vector<Fixture>& fx, Rng& rng, int paths) {
    SuiteResult r{"d", "quotient-time stability vs wall interior", 0, 0, 0, ""};
    for (const auto& f : fx) {
        auto cls = fixture_class(f);
        auto g = chamber_graph(cls);
        const auto& c = cls.cat();
        for (int done = 0, tries = 0; done < paths && tries < 20 * paths; ++tries) {
            LinearPath p = random_path(rng, cls.rank());
            std::vector<int> mgs;
            try {
                mgs = linear_mgs(cls, p);
            } catch (const NonGenericPath&) {
                continue;
            } catch (const InvariantViolation& e) {
                fail(r, f.name + ": " + e.what());
                ++done;
                continue;
            }
            ++done;
            r.checks += cls.bricks.size();
            std::vector<std::pair<Rat, int>> times;
            for (int b : cls.bricks) times.push_back({crossing_time(p, c.dim(b)), b});
            std::sort(times.begin(), times.end());
            std::vector<Rat> probes{times.front().first - 1};
            for (size_t i = 0; i + 1 < times.size(); ++i) probes.push_back((times[i].first + times[i + 1].first) / 2);
            probes.push_back(times.back().first + 1);
            std::vector<int> visited, walls;
            for (size_t i = 0; i < probes.size(); ++i) {
                int ch = chamber_of(g.complex, point_at(p, probes[i]));
                if (!visited.empty() && ch != visited.back()) {
                    int b = times[i - 1].second;
                    bool edge = false;
                    for (const auto& e : g.edges) edge = edge || (e.from == visited.back() && e.to == ch && e.brick == b);
                    if (!edge) fail(r, f.name + ": chamber step without a graph edge");
                    walls.push_back(b);
                }
                if (visited.empty() || ch != visited.back()) visited.push_back(ch);
            }
            ++r.checks;
            if (visited.front() != g.source || visited.back() != g.sink || walls != mgs)
                fail(r, f.name + ": chamber walk disagrees with linear MGS");
        }
    }
    return r;
}

SuiteResult suite_ghost_stability(const std::vector<Fixture>& fx, Rng& rng, int paths) {
    SuiteResult r{"e", "ghost time criterion vs domain", 0, 0, 0, ""};
    for (const auto& f : fx) {
        auto cls = fixture_class(f);
        auto ghosts = enumerate_ghosts(cls);
        if (ghosts.empty()) continue;
        auto bif = classify_bifurcations(cls, ghosts);
        for (int done = 0, tries = 0; done < paths && tries < 20 * paths; ++tries) {
            LinearPath p = random_path(rng, cls.rank());
            try {
                auto s = mgs_with_ghosts(cls, p, ghosts, bif);
                std::vector<int> bricks;
                for (const auto& e : s.events)
                    if (!e.ghost && e.stable) bricks.push_back(e.object);
                r.checks += ghosts.size() + 1;
                if (bricks != linear_mgs(cls, p)) fail(r, f.name + ": ghost schedule loses brick order");
                ++done;
            } catch (const NonGenericPath&) {
            } catch (const InvariantViolation& e) {
                fail(r, f.name + ": " + e.what());
                ++done;
            }
        }
    }
    return r;
}

SuiteResult suite_hn_existence(const std::vector<Fixture>& fx) {
    SuiteResult r{"f", "HN filtration over every MGS", 0, 0, 0, ""};
    for (const auto& f : fx) {
        auto cls = fixture_class(f);
        if (!cls.flags.extension_closed) continue;
        auto g = chamber_graph(cls);
        auto mgs = enumerate_mgs(g, cls);
        std::vector<ModuleSum> objects;
        for (size_t i = 0; i < cls.bricks.size(); ++i) {
            objects.push_back({cls.bricks[i]});
            for (size_t j = i; j < cls.bricks.size(); ++j) objects.push_back(make_sum({cls.bricks[i], cls.bricks[j]}));
        }
        for (const auto& m : mgs.list)
            for (const auto& x : objects) {
                ++r.checks;
                try {
                    auto hn = hn_stratification(cls, g, m, x);
                    if (!has_ordered_filtration(cls, m.walls, x)) fail(r, f.name + ": exhaustive search disagrees");
                    (void)hn;
                } catch (const std::exception& e) {
                    fail(r, f.name + ": " + e.what());
                }
            }
    }
    return r;
}

SuiteResult suite_convexity(const std::vector<Fixture>& fx) {
    SuiteResult r{"g", "chamber convexity and distinct labels", 0, 0, 0, ""};
    for (const auto& f : fx) {
        auto cls = fixture_class(f);
        auto g = chamber_graph(cls);
        const auto& cx = g.complex;
        bool asserted = cls.flags.extension_closed;
        for (const auto& ch : cx.chambers) {
            std::vector<int> region;
            for (size_t i = 0; i < cx.cells.size(); ++i) {
                bool in = true;
                for (auto [b, s] : ch.bounding_walls) in = in && cx.cells[i].signs[brick_slot(cls, b)] == s;
                if (in) region.push_back((int)i);
            }
            auto cells = ch.cells;
            std::sort(cells.begin(), cells.end());
            ++r.checks;
            if (region != cells) {
                if (asserted) fail(r, f.name + ": chamber " + std::to_string(ch.id) + " not convex");
                else ++r.reported;
            }
        }
        ++r.checks;
        if (!g.duplicate_labels.empty()) {
            if (asserted) fail(r, f.name + ": duplicate chamber labels");
            else ++r.reported;
        }
    }
    return r;
}

SuiteResult suite_duality() {
    SuiteResult r{"h", "duality round trip", 0, 0, 0, ""};
    for (const auto& name : {"fig2", "fig4", "case1", "case4"}) {
        auto cls = fixture_class(fixture(name));
        auto d = dualize(cls);
        auto ghosts = enumerate_ghosts(cls);
        auto dual_ghosts = enumerate_ghosts(d.cls);
        ++r.checks;
        if (ghosts.size() != dual_ghosts.size()) fail(r, std::string(name) + ": census sizes differ");
        for (const auto& g : ghosts) {
            Ghost t = d.transport(g);
            int i = find_ghost(dual_ghosts, t.kind, t.a, t.b, t.c);
            ++r.checks;
            if (i < 0) {
                fail(r, std::string(name) + ": " + ghost_name(cls.cat(), g) + " has no dual");
                continue;
            }
            if (!same_cone(dual_ghosts[i].domain, t.domain) || dual_ghosts[i].minimal != g.minimal)
                fail(r, std::string(name) + ": dual domain mismatch for " + ghost_name(cls.cat(), g));
        }
        ++r.checks;
        if (cls.flags.is_torsion != d.cls.flags.is_torsion_free || cls.flags.is_torsion_free != d.cls.flags.is_torsion)
            fail(r, std::string(name) + ": torsion flags not swapped");
        std::set<std::vector<int>> orig, dual;
        for (const auto& m : enumerate_mgs(cls)) orig.insert(d.transport_sequence(m.walls));
        for (const auto& m : enumerate_mgs(d.cls)) dual.insert(m.walls);
        ++r.checks;
        if (orig != dual) fail(r, std::string(name) + ": MGS sets do not reverse");
        auto dd = dualize(d.cls);
        ++r.checks;
        if (dd.cls.bricks != cls.bricks || *dd.catalog != cls.cat()) fail(r, std::string(name) + ": double dual");
        for (const auto& g : ghosts) {
            Ghost back = dd.transport(d.transport(g));
            ++r.checks;
            if (back.kind != g.kind || back.a != g.a || back.b != g.b || back.c != g.c || !same_cone(back.domain, g.domain))
                fail(r, std::string(name) + ": double dual ghost");
        }
        // dual path -h + t k reverses every crossing order
        auto bif = classify_bifurcations(cls, ghosts);
        auto dbif = classify_bifurcations(d.cls, dual_ghosts);
        Rng rng(7);
        for (int k = 0; k < 200; ++k) {
            LinearPath p = random_path(rng, 3);
            LinearPath q{{}, p.k};
            for (const auto& x : p.h) q.h.push_back(-x);
            try {
                auto s = mgs_with_ghosts(cls, p, ghosts, bif);
                auto t = mgs_with_ghosts(d.cls, q, dual_ghosts, dbif);
                std::vector<std::string> a, b;
                for (const auto& e : s.events) {
                    if (!e.stable) continue;
                    if (e.ghost) {
                        Ghost tg = d.transport(ghosts[e.object]);
                        a.push_back("g" + std::to_string(find_ghost(dual_ghosts, tg.kind, tg.a, tg.b, tg.c)));
                    } else {
                        a.push_back(std::to_string(d.indec_map[e.object]));
                    }
                }
                for (const auto& e : t.events)
                    if (e.stable) b.push_back(e.ghost ? "g" + std::to_string(e.object) : std::to_string(e.object));
                std::reverse(b.begin(), b.end());
                ++r.checks;
                if (a != b) fail(r, std::string(name) + ": ghost MGS not reversed");
            } catch (const NonGenericPath&) {
            }
        }
    }
    return r;
}

SuiteResult suite_mgs_properties(const std::vector<Fixture>& fx) {
    SuiteResult r{"mgs", "orthogonality, maximality, HN minimality", 0, 0, 0, ""};
    for (const auto& f : fx) {
        auto cls = fixture_class(f);
        for (const auto& m : enumerate_mgs(cls)) {
            ++r.checks;
            if (!check_relative_hom_orthogonality(cls, m.walls).ok) fail(r, f.name + ": " + walls_str(cls.cat(), m.walls));
            auto mx = check_mgs_maximality(cls, m.walls);
            bool minimal = check_hn_minimality(cls, m.walls);
            r.checks += 2;
            if (cls.flags.extension_closed) {
                if (!mx.maximal) fail(r, f.name + ": not maximal " + walls_str(cls.cat(), m.walls));
                if (!minimal) fail(r, f.name + ": HN not minimal " + walls_str(cls.cat(), m.walls));
            } else {
                r.reported += !mx.maximal + !minimal;
            }
        }
    }
    return r;
}

SuiteResult suite_ghost_geometry(const std::vector<Fixture>& fx) {
    SuiteResult r{"geo", "ghost domains and bifurcation geometry", 0, 0, 0, ""};
    std::vector<ModuleClass> classes;
    for (const auto& f : fx) {
        auto cls = fixture_class(f);
        const auto& c = cls.cat();
        auto ghosts = enumerate_ghosts(cls);
        for (const auto& g : ghosts) {
            if (g.kind == GhostKind::Extension) continue;
            Cone half;
            half.n = cls.rank();
            half.equalities.push_back(c.dim(g.missing));
            half.weak_ineqs.push_back(g.kind == GhostKind::Subobject ? c.dim(g.b) : neg(c.dim(g.b)));
            ++r.checks;
            if (!cone_contains(half, g.domain)) fail(r, f.name + ": domain escapes half plane " + ghost_name(c, g));
        }
        auto bif = classify_bifurcations(cls, ghosts);
        for (const auto& b : bif.links) {
            r.checks += 2;
            if (!bifurcation_geometry_ok(cls, ghosts, b)) fail(r, f.name + ": bifurcation geometry");
            if (b.wall_kind != WallKind::Extension && ghosts[b.child].kind == GhostKind::Subobject) {
                bool sub = b.case_no >= 2 && b.case_no <= 4;
                if (sub != (b.wall_kind == WallKind::SubobjectSplitting)) fail(r, f.name + ": wall kind");
            }
        }
        classes.push_back(cls);
    }
    // enlarging the class shrinks walls
    for (const auto& small : classes)
        for (const auto& big : classes) {
            if (&small == &big || small.cat() != big.cat()) continue;
            if (!std::includes(big.bricks.begin(), big.bricks.end(), small.bricks.begin(), small.bricks.end())) continue;
            for (int b : small.bricks) {
                ++r.checks;
                if (!cone_contains(wall(small, b).cone, wall(big, b).cone)) fail(r, "wall of " + small.cat().name(b) + " grew");
            }
        }
    return r;
}

std::vector<SuiteResult> run_verify(const VerifyOptions& opt) {
    const auto& fx = fixtures();
    Rng rng(opt.seed);
    std::vector<SuiteResult> out;
    out.push_back(suite_union_of_interiors(fx));
    out.push_back(suite_locally_constant(fx, rng, opt.points_per_chamber));
    out.push_back(suite_wall_crossing(fx));
    out.push_back(suite_relative_stability(fx, rng, opt.paths));
    out.push_back(suite_ghost_stability(fx, rng, opt.paths));
    out.push_back(suite_hn_existence(fx));
    out.push_back(suite_convexity(fx));
    out.push_back(suite_duality());
    out.push_back(suite_mgs_properties(fx));
    out.push_back(suite_ghost_geometry(fx));
    return out;
}

std::string format_table(const std::vector<SuiteResult>& rs) {
    std::ostringstream os;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-5s %-44s %8s %8s %8s  %s\n", "id", "suite", "checks", "failed", "reported", "result");
    os << buf;
    for (const auto& r : rs) {
        std::snprintf(buf, sizeof buf, "%-5s %-44s %8zu %8zu %8zu  %s\n", r.id.c_str(), r.name.c_str(), r.checks,
                      r.failures, r.reported, r.ok() ? "PASS" : "FAIL");
        os << buf;
        if (!r.ok()) os << "      " << r.detail << "\n";
    }
    return os.str();
}

}  // namespace ghostpic
