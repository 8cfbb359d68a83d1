#include "ghostpic/fixtures.hpp"
#include "ghostpic/search.hpp"

#include <doctest.h>

#include <algorithm>
#include <array>
#include <random>
#include <set>

using namespace ghostpic;

namespace {

std::shared_ptr<const BrickCatalog> type_a(int n, const std::string& w) {
    return std::make_shared<const BrickCatalog>(generate_type_a(n, w));
}

int G(const ModuleClass& cls, const std::vector<Ghost>& gs, GhostKind k, const std::string& a, const std::string& b,
      const std::string& c) {
    const auto& cat = cls.cat();
    return find_ghost(gs, k, cat.require(a), cat.require(b), cat.require(c));
}

constexpr auto Sub = GhostKind::Subobject;
constexpr auto Quo = GhostKind::Quotient;
constexpr auto Ext = GhostKind::Extension;

IntVec dimv(const ModuleClass& cls, const std::string& n) { return cls.cat().dim(cls.cat().require(n)); }

LinearPath random_path(std::mt19937& rng, size_t n) {
    std::uniform_int_distribution<long> hn(-30, 30), hd(1, 7), kn(1, 20), kd(1, 3);
    LinearPath p;
    for (size_t i = 0; i < n; ++i) {
        p.h.push_back(Rat(hn(rng), hd(rng)));
        p.k.push_back(Rat(kn(rng), kd(rng)));
    }
    return p;
}

const Bifurcation* link(const BifurcationReport& r, int child, int parent) {
    for (const auto& b : r.links)
        if (b.child == child && b.parent == parent) return &b;
    return nullptr;
}

}  // namespace

TEST_CASE("census: Kronecker fragment") {
    auto k = std::make_shared<const BrickCatalog>(builtin_kronecker());
    auto cls = make_class(k, "P1,P2,M");
    auto gs = enumerate_ghosts(cls);
    REQUIRE(gs.size() == 2);
    int q = G(cls, gs, Quo, "P1", "M", "S2");
    int e = G(cls, gs, Ext, "P1", "P2", "M");
    REQUIRE(q >= 0);
    REQUIRE(e >= 0);
    CHECK(ghost_name(*k, gs[q]) == "Gh*(S2;M)");
    CHECK(ghost_name(*k, gs[e]) == "Gh(P1->P2->M)");
    CHECK(same_cone(gs[q].domain, Cone{2, {dimv(cls, "S2")}, {neg(dimv(cls, "M"))}, {}}));
    CHECK(same_cone(gs[e].domain, Cone{2, {dimv(cls, "P2")}, {neg(dimv(cls, "M"))}, {}}));
    CHECK(gs[e].minimal);
    // the extension ghost fills the part of H(P2) outside D(P2)
    auto w = wall(cls, k->require("P2"));
    auto both = gs[e].domain;
    both.strict_ineqs.push_back(dimv(cls, "M"));
    CHECK_FALSE(feasible_point(both));
}

TEST_CASE("census: three minimal ghosts for P3, I2, S3") {
    auto c = type_a(3, "LL");
    auto cls = make_class(c, "P3,I2,S3");
    auto gs = enumerate_ghosts(cls);
    CHECK(gs.size() == 3);
    for (auto [a, b, cc] : {std::array<const char*, 3>{"S1", "P3", "I2"}, {"S2", "I2", "S3"}, {"P2", "P3", "S3"}}) {
        int i = G(cls, gs, Sub, a, b, cc);
        REQUIRE(i >= 0);
        CHECK(gs[i].minimal);
        CHECK(gs[i].kind == Sub);
    }
    int z = G(cls, gs, Sub, "S2", "I2", "S3");
    CHECK(ghost_name(*c, gs[z]) == "Gh(S2;I2)");
    CHECK(same_cone(gs[z].domain, Cone{3, {{0, 1, 0}}, {{0, 1, 1}}, {}}));
}

TEST_CASE("census: class without S2 has all three ghost kinds") {
    auto c = type_a(3, "LL");
    auto cls = make_class(c, "S1,P2,I2,P3,S3");
    auto gs = enumerate_ghosts(cls);
    CHECK(G(cls, gs, Sub, "S2", "I2", "S3") >= 0);
    CHECK(G(cls, gs, Quo, "S1", "P2", "S2") >= 0);
    int e1 = G(cls, gs, Ext, "S1", "P3", "I2");
    int e2 = G(cls, gs, Ext, "P2", "P3", "S3");
    REQUIRE(e1 >= 0);
    REQUIRE(e2 >= 0);
    CHECK(same_cone(gs[e1].domain, Cone{3, {{1, 1, 1}}, {{0, -1, -1}}, {}}));
    CHECK(same_cone(gs[e2].domain, Cone{3, {{1, 1, 1}}, {{0, 0, -1}}, {}}));
    Cone overlap{3, {{1, 1, 1}}, {{0, -1, -1}, {0, 0, -1}}, {}};
    CHECK(feasible_point(overlap.interior()));
}

TEST_CASE("census: all six bricks give four minimal extension ghosts") {
    auto c = type_a(3, "LL");
    auto cls = make_class(c, "S1,S2,S3,P2,P3,I2");
    auto gs = enumerate_ghosts(cls);
    CHECK(gs.size() == 4);
    for (const auto& g : gs) CHECK(g.kind == Ext);
    int d = G(cls, gs, Ext, "S1", "P2", "S2");
    REQUIRE(d >= 0);
    CHECK(gs[d].minimal);
}

TEST_CASE("subobject ghost domains carry their side conditions") {
    auto c = type_a(3, "LL");
    auto fig2 = make_class(c, "S1,P3,I2,S3");
    auto gs = enumerate_ghosts(fig2);
    int za = G(fig2, gs, Sub, "P2", "P3", "S3");
    REQUIRE(za >= 0);
    CHECK_FALSE(gs[za].minimal);
    CHECK(cone_contains(Cone{3, {}, {{-1, 0, 0}}, {}}, gs[za].domain));
    CHECK(same_cone(gs[za].domain, subobject_ghost_domain(fig2, gs[za])));

    auto case1 = make_class(c, "P2,I2,P3,S2,S3");
    auto g1 = enumerate_ghosts(case1);
    int z = G(case1, g1, Sub, "S1", "P3", "I2");
    REQUIRE(z >= 0);
    CHECK(cone_contains(Cone{3, {}, {{0, 0, 1}}, {}}, g1[z].domain));
    bool y_s3 = false;
    for (const auto& s : g1[z].sides) y_s3 = y_s3 || (s.quotient_side && c->name(s.object) == "S3");
    CHECK(y_s3);
}

TEST_CASE("ghost stability: case (2) class") {
    const auto& f = fixture("case2");
    auto cls = fixture_class(f);
    auto gs = enumerate_ghosts(cls);
    auto bif = classify_bifurcations(cls, gs);
    int za = G(cls, gs, Sub, "S3", "P2", "I1");
    int zb = G(cls, gs, Sub, "S3", "I3", "S2");
    REQUIRE(za >= 0);
    REQUIRE(zb >= 0);
    FormatOptions opt{fixture_labels(f, cls, gs), true, true};
    auto p = find_ghost_sequence(cls, gs, bif, opt, "S2,I3,I1,P2,Z_b,Z_a,S1");
    REQUIRE(p);
    CHECK(ghost_stability(cls, *p, gs[za]));
    CHECK(ghost_stability(cls, *p, gs[zb]));
    auto q = find_ghost_sequence(cls, gs, bif, opt, "S2,I1,I3,P2,S1,Z_b");
    REQUIRE(q);
    CHECK_FALSE(ghost_stability(cls, *q, gs[za]));
    CHECK(ghost_stability(cls, *q, gs[zb]));
}

TEST_CASE("ghost stability: minimal subobject ghost needs t_C before t_B") {
    auto c = type_a(3, "LL");
    auto cls = make_class(c, "P3,I2,S3");
    auto gs = enumerate_ghosts(cls);
    int z = G(cls, gs, Sub, "S2", "I2", "S3");
    std::mt19937 rng(2);
    int seen_true = 0, seen_false = 0;
    for (int i = 0; i < 400; ++i) {
        auto p = random_path(rng, 3);
        Rat tb = crossing_time(p, dimv(cls, "I2")), tc = crossing_time(p, dimv(cls, "S3"));
        if (tb == tc) continue;
        bool st = ghost_stability(cls, p, gs[z]);
        CHECK(st == (tc < tb));
        (st ? seen_true : seen_false)++;
    }
    CHECK(seen_true > 0);
    CHECK(seen_false > 0);
}

TEST_CASE("fixture sequences are realised by linear paths") {
    for (const auto& f : fixtures()) {
        if (f.sequences.empty()) continue;
        CAPTURE(f.name);
        auto cls = fixture_class(f);
        auto gs = enumerate_ghosts(cls);
        auto bif = classify_bifurcations(cls, gs);
        FormatOptions opt{fixture_labels(f, cls, gs), true, f.parenthesize_unstable};
        for (const auto& s : f.sequences) {
            CAPTURE(s);
            auto p = find_ghost_sequence(cls, gs, bif, opt, s);
            REQUIRE(p);
            CHECK(format_schedule(cls, gs, mgs_with_ghosts(cls, *p, gs, bif), opt) == s);
        }
    }
}

TEST_CASE("A1 without ghosts matches linear MGS") {
    auto c = type_a(1, "");
    auto cls = make_class(c, "S1");
    LinearPath p{{Rat(-2)}, {Rat(1)}};
    CHECK(enumerate_ghosts(cls).empty());
    CHECK(format_schedule(cls, {}, mgs_with_ghosts(cls, p)) == "S1");
}

TEST_CASE("bifurcations for the five cases") {
    struct Want {
        std::string fixture;
        std::array<const char*, 3> child, parent;
        int case_no;
        const char* wall;
    };
    const std::vector<Want> wants{
        {"case1", {"S1", "P3", "I2"}, {"S1", "P2", "S2"}, 1, "S3"},
        {"case2", {"S3", "P2", "I1"}, {"S3", "I3", "S2"}, 2, "S1"},
        {"fig2", {"P2", "P3", "S3"}, {"S2", "I2", "S3"}, 3, "S1"},
        {"case4", {"S1", "P3", "I2"}, {"P2", "P3", "S3"}, 4, "S2"},
        {"case5", {"P3", "I2", "S1"}, {"S2", "P1", "S1"}, 5, "S3"},
    };
    for (const auto& w : wants) {
        CAPTURE(w.fixture);
        auto cls = fixture_class(fixture(w.fixture));
        auto gs = enumerate_ghosts(cls);
        auto r = classify_bifurcations(cls, gs);
        int ch = G(cls, gs, Sub, w.child[0], w.child[1], w.child[2]);
        int pa = G(cls, gs, Sub, w.parent[0], w.parent[1], w.parent[2]);
        REQUIRE(ch >= 0);
        REQUIRE(pa >= 0);
        const auto* b = link(r, ch, pa);
        REQUIRE(b);
        CHECK(b->case_no == w.case_no);
        CHECK(cls.cat().name(b->splitting_wall) == w.wall);
        bool subobject_kind = w.case_no >= 2 && w.case_no <= 4;
        CHECK((b->wall_kind == WallKind::SubobjectSplitting) == subobject_kind);
        CHECK(bifurcation_geometry_ok(cls, gs, *b));
    }
}

TEST_CASE("extension ghost bifurcations for all six bricks") {
    auto cls = fixture_class(fixture("fig12"));
    auto gs = enumerate_ghosts(cls);
    auto r = classify_bifurcations(cls, gs);
    int za = G(cls, gs, Ext, "S1", "P3", "I2"), zb = G(cls, gs, Ext, "P2", "P3", "S3");
    int zc = G(cls, gs, Ext, "S2", "I2", "S3"), zd = G(cls, gs, Ext, "S1", "P2", "S2");
    const auto* ac = link(r, za, zc);
    const auto* bd = link(r, zb, zd);
    REQUIRE(ac);
    REQUIRE(bd);
    CHECK(cls.cat().name(ac->splitting_wall) == "S1");
    CHECK(cls.cat().name(bd->splitting_wall) == "S3");
    CHECK(ac->wall_kind == WallKind::Extension);
    CHECK(ac->case_no == 0);
}

TEST_CASE("duality: the fig2 class") {
    auto cls = fixture_class(fixture("fig2"));
    auto gs = enumerate_ghosts(cls);
    auto d = dualize(cls);
    auto dg = enumerate_ghosts(d.cls);
    const auto& m = d.indec_map;
    auto id = [&](const char* n) { return m[cls.cat().require(n)]; };
    int za = find_ghost(dg, Quo, id("S3"), id("P3"), id("P2"));
    int zb = find_ghost(dg, Quo, id("S3"), id("I2"), id("S2"));
    REQUIRE(za >= 0);
    REQUIRE(zb >= 0);
    size_t subs = 0;
    for (const auto& g : gs) {
        if (g.kind != Sub) continue;
        ++subs;
        auto t = d.transport(g);
        int j = find_ghost(dg, t.kind, t.a, t.b, t.c);
        REQUIRE(j >= 0);
        CHECK(same_cone(dg[j].domain, t.domain));
    }
    size_t quots = std::count_if(dg.begin(), dg.end(), [](const Ghost& g) { return g.kind == Quo; });
    CHECK(quots == subs);
    CHECK(d.cls.flags.is_torsion_free == cls.flags.is_torsion);
    CHECK(d.cls.flags.is_torsion == cls.flags.is_torsion_free);

    auto dd = dualize(d.cls);
    CHECK(dd.cls.bricks == cls.bricks);
    for (const auto& g : gs) {
        auto back = dd.transport(d.transport(g));
        CHECK(back.a == g.a);
        CHECK(back.b == g.b);
        CHECK(back.c == g.c);
        CHECK(back.kind == g.kind);
    }

    // the right-hand green path read backwards on the dual side
    auto bif = classify_bifurcations(cls, gs);
    const auto& f = fixture("fig2");
    FormatOptions opt{fixture_labels(f, cls, gs), true, false};
    auto p = find_ghost_sequence(cls, gs, bif, opt, "I2,S3,P3,Z_a,S1");
    REQUIRE(p);
    LinearPath dp{p->h, p->k};
    for (auto& x : dp.h) x = -x;
    auto dbif = classify_bifurcations(d.cls, dg);
    FormatOptions dopt{{{za, "Z_a*"}, {zb, "Z_b*"}}, true, false};
    auto got = format_schedule(d.cls, dg, mgs_with_ghosts(d.cls, dp, dg, dbif), dopt);
    const auto& dc = *d.catalog;
    std::string want = dc.name(id("S1")) + ",Z_a*," + dc.name(id("P3")) + "," + dc.name(id("S3")) + "," + dc.name(id("I2"));
    CHECK(got == want);
    CHECK(d.transport_sequence(linear_mgs(cls, *p)) == linear_mgs(d.cls, dp));
}

TEST_CASE("duality rejects user catalogs") {
    auto k = std::make_shared<const BrickCatalog>(builtin_kronecker());
    CHECK_THROWS_AS(dualize(make_class(k, "P1,P2,M")), CatalogError);
}

TEST_CASE("property: ghost stability equals domain membership on random paths") {
    std::mt19937 rng(23);
    for (const auto& f : fixtures()) {
        CAPTURE(f.name);
        auto cls = fixture_class(f);
        auto gs = enumerate_ghosts(cls);
        for (int i = 0; i < 1000; ++i) {
            auto p = random_path(rng, cls.rank());
            for (const auto& g : gs) {
                bool inside = g.domain.contains(point_at(p, crossing_time(p, cls.cat().dim(g.missing))));
                bool st = false;
                try {
                    st = ghost_stability(cls, p, g);
                } catch (const NonGenericPath&) {
                    continue;
                }
                CHECK(st == inside);
            }
        }
    }
}

TEST_CASE("property: non-minimal ghost domains sit inside the minimal half-hyperplane") {
    for (const auto& f : fixtures()) {
        auto cls = fixture_class(f);
        for (const auto& g : enumerate_ghosts(cls)) {
            const auto& c = cls.cat();
            Cone half{cls.rank(), {c.dim(g.missing)}, {}, {}};
            if (g.kind == Sub) half.weak_ineqs.push_back(c.dim(g.b));
            if (g.kind == Quo) half.weak_ineqs.push_back(neg(c.dim(g.b)));
            if (g.kind == Ext) half.weak_ineqs.push_back(neg(c.dim(g.c)));
            CHECK(cone_contains(half, g.domain));
            if (g.minimal) CHECK(same_cone(half, g.domain));
        }
    }
}

TEST_CASE("property: enlarging the class shrinks walls") {
    auto c = type_a(3, "LL");
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<int> small, big;
        for (int i = 0; i < c->size(); ++i) {
            int r = rng() % 3;
            if (r == 0) small.push_back(i);
            if (r <= 1) big.push_back(i);
        }
        if (small.empty()) continue;
        auto s = make_class(c, small), b = make_class(c, big);
        if (!s.flags.extension_closed || !b.flags.extension_closed) continue;
        for (int m : small) CHECK(cone_contains(wall(s, m).cone, wall(b, m).cone));
    }
}
