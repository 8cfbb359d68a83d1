#include "ghostpic/report.hpp"

namespace ghostpic {

using nlohmann::json;

json cone_json(const Cone& k) {
    json j;
    j["equalities"] = k.equalities;
    j["weak"] = k.weak_ineqs;
    j["strict"] = k.strict_ineqs;
    return j;
}

json names_json(const BrickCatalog& c, const std::vector<int>& ids) {
    json a = json::array();
    for (int i : ids) a.push_back(c.name(i));
    return a;
}

json ghost_json(const ModuleClass& cls, const Ghost& g) {
    const auto& c = cls.cat();
    json j;
    j["name"] = ghost_name(c, g);
    j["kind"] = kind_name(g.kind);
    j["sequence"] = {c.name(g.a), c.name(g.b), c.name(g.c)};
    j["missing"] = c.name(g.missing);
    j["domain"] = cone_json(g.domain);
    j["minimal"] = g.minimal;
    j["warning"] = g.warning;
    json sides = json::array();
    for (const auto& s : g.sides)
        sides.push_back({{"case", s.case_no}, {"object", c.name(s.object)}, {"type", s.quotient_side ? "Y" : "X"}});
    j["side_conditions"] = sides;
    return j;
}

json bifurcation_json(const ModuleClass& cls, const std::vector<Ghost>& ghosts, const BifurcationReport& r) {
    const auto& c = cls.cat();
    json links = json::array();
    for (const auto& b : r.links)
        links.push_back({{"child", ghost_name(c, ghosts[b.child])},
                         {"parent", ghost_name(c, ghosts[b.parent])},
                         {"case", b.case_no},
                         {"splitting_wall", c.name(b.splitting_wall)},
                         {"wall_kind", wall_kind_name(b.wall_kind)}});
    json issues = json::array();
    for (const auto& i : r.issues) {
        json e = {{"child", ghost_name(c, ghosts[i.child])}, {"case", i.case_no}, {"reason", i.reason}};
        if (i.wall >= 0) e["wall"] = c.name(i.wall);
        if (i.other >= 0) e["other"] = ghost_name(c, ghosts[i.other]);
        issues.push_back(e);
    }
    return {{"links", links}, {"issues", issues}};
}

namespace {

json ratvec_json(const RatVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rat_str(x));
    return a;
}

}  // namespace

json chambers_json(const ModuleClass& cls, const ChamberGraph& g) {
    const auto& c = cls.cat();
    json chambers = json::array();
    for (const auto& ch : g.chambers()) {
        json bw = json::array();
        for (auto [b, s] : ch.bounding_walls) bw.push_back({{"wall", c.name(b)}, {"side", s}});
        chambers.push_back({{"id", ch.id},
                            {"label", names_json(c, ch.label)},
                            {"sample", ratvec_json(ch.sample)},
                            {"cells", ch.cells.size()},
                            {"bounding_walls", bw}});
    }
    json edges = json::array();
    for (const auto& e : g.edges) {
        json w = json::array();
        for (auto [x, p] : e.witnesses) w.push_back({{"module", c.name(x)}, {"kernel", c.name(p->sub)}});
        edges.push_back({{"from", e.from},
                         {"to", e.to},
                         {"wall", c.name(e.brick)},
                         {"facet_sample", ratvec_json(e.facet_sample)},
                         {"witnesses", w}});
    }
    json dup = json::array();
    for (auto [a, b] : g.duplicate_labels) dup.push_back({a, b});
    return {{"chambers", chambers}, {"edges", edges}, {"source", g.source}, {"sink", g.sink}, {"duplicate_labels", dup}};
}

json ghosts_json(const ModuleClass& cls) {
    auto ghosts = enumerate_ghosts(cls);
    json list = json::array();
    for (const auto& g : ghosts) list.push_back(ghost_json(cls, g));
    return {{"ghosts", list}, {"bifurcations", bifurcation_json(cls, ghosts, classify_bifurcations(cls, ghosts))}};
}

json export_report(const ModuleClass& cls) {
    const auto& c = cls.cat();
    json j;
    j["schema"] = "ghostpic-report/1";
    j["rank"] = cls.rank();
    j["class"] = names_json(c, cls.bricks);
    if (auto w = c.type_a_word()) j["orientation"] = *w;
    j["flags"] = {{"quotient_closed", cls.flags.quotient_closed},
                  {"sub_closed", cls.flags.sub_closed},
                  {"extension_closed", cls.flags.extension_closed},
                  {"torsion", cls.flags.is_torsion},
                  {"torsion_free", cls.flags.is_torsion_free},
                  {"known", cls.flags.known}};
    auto g = chamber_graph(cls);
    json walls = json::array();
    for (const auto& w : g.complex.walls) {
        json q = json::array();
        for (const auto& m : w.quotients) q.push_back(c.name(m));
        walls.push_back({{"brick", c.name(w.brick)}, {"cone", cone_json(w.cone)}, {"minimal", w.minimal}, {"quotients", q}});
    }
    j["walls"] = walls;
    j["chamber_graph"] = chambers_json(cls, g);
    auto gj = ghosts_json(cls);
    j["ghosts"] = gj["ghosts"];
    j["bifurcations"] = gj["bifurcations"];
    return j;
}

}  // namespace ghostpic
