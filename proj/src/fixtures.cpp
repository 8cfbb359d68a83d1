#include "ghostpic/fixtures.hpp"

#include <stdexcept>

namespace ghostpic {

namespace {
constexpr auto Sub = GhostKind::Subobject;
constexpr auto Quo = GhostKind::Quotient;
constexpr auto Ext = GhostKind::Extension;
}  // namespace

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> all = [] {
        std::vector<Fixture> v;
        v.push_back({"a1", "", 1, "", "S1", {}, {}, true, true, ""});
        v.push_back({"fig2", "", 3, "LL", "S1,P3,I2,S3",
                     {{"Z_a", Sub, "P2", "P3", "S3"}, {"Z_b", Sub, "S2", "I2", "S3"}},
                     {"S1,S3,I2,Z_b", "I2,S3,P3,Z_a,S1"}, false, false,
                     "the class also carries the extension ghost S1->P3->I2, hidden in the picture"});
        v.push_back({"fig4", "", 3, "LL", "P3,I2,S3",
                     {{"Z_a", Sub, "S1", "P3", "I2"}, {"Z_b", Sub, "S2", "I2", "S3"}, {"Z_c", Sub, "P2", "P3", "S3"}},
                     {}, true, false, ""});
        v.push_back({"case1", "", 3, "LL", "P2,I2,P3,S2,S3",
                     {{"Z_a", Sub, "S1", "P3", "I2"}, {"Z_b", Sub, "S1", "P2", "S2"}},
                     {"S2,(I2),P2,(P3),S3,Z_a,Z_b", "S3,I2,P3,Z_a,P2,S2"}, true, false, ""});
        v.push_back({"case2", "", 3, "LR", "S1,P2,S2,I3,I1",
                     {{"Z_a", Sub, "S3", "P2", "I1"}, {"Z_b", Sub, "S3", "I3", "S2"}},
                     {"S2,I3,I1,P2,Z_b,Z_a,S1", "S2,I1,I3,P2,S1,Z_b", "S2,I3,Z_b,P2,I1,S1"}, true, false, ""});
        v.push_back({"case4", "", 3, "LL", "S2,I2,P3,S3",
                     {{"Z_a", Sub, "S1", "P3", "I2"}, {"Z_b", Sub, "P2", "P3", "S3"}},
                     {"S3,I2,P3,Z_a,Z_b,S2"}, true, false, ""});
        v.push_back({"case5", "", 3, "RL", "S1,S3,I2,P1",
                     {{"Z_a", Sub, "P3", "I2", "S1"}, {"Z_b", Sub, "S2", "P1", "S1"}},
                     {"S3,S1,I2,Z_a,P1,Z_b"}, true, false, ""});
        v.push_back({"fig10", "", 3, "LL", "S1,P2,I2,P3,S3",
                     {{"Z_a", Sub, "S2", "I2", "S3"}, {"Z_b", Quo, "S1", "P2", "S2"}}, {}, true, false, ""});
        v.push_back({"fig11", "", 3, "LL", "S1,P2,I2,P3,S3",
                     {{"Z_a", Ext, "S1", "P3", "I2"}, {"Z_b", Ext, "P2", "P3", "S3"}}, {}, true, true, ""});
        v.push_back({"fig12", "", 3, "LL", "S1,S2,S3,P2,P3,I2",
                     {{"Z_a", Ext, "S1", "P3", "I2"},
                      {"Z_b", Ext, "P2", "P3", "S3"},
                      {"Z_c", Ext, "S2", "I2", "S3"},
                      {"Z_d", Ext, "S1", "P2", "S2"}},
                     {}, true, true,
                     "Z_c is S2->I2->S3: over 1<-2<-3, S2 is the socle of I2 and S3 its top"});
        v.push_back({"kronecker", "kronecker", 2, "", "P1,P2,M",
                     {{"Z_a", Quo, "P1", "M", "S2"}, {"Z_b", Ext, "P1", "P2", "M"}}, {}, true, true, ""});
        return v;
    }();
    return all;
}

const Fixture& fixture(const std::string& name) {
    for (const auto& f : fixtures())
        if (f.name == name) return f;
    throw std::invalid_argument("unknown fixture: " + name);
}

std::shared_ptr<const BrickCatalog> fixture_catalog(const Fixture& f) {
    if (!f.builtin.empty()) return std::make_shared<const BrickCatalog>(builtin(f.builtin));
    return std::make_shared<const BrickCatalog>(generate_type_a(f.n, f.word));
}

ModuleClass fixture_class(const Fixture& f) { return make_class(fixture_catalog(f), f.members); }

std::map<int, std::string> fixture_labels(const Fixture& f, const ModuleClass& cls, const std::vector<Ghost>& ghosts) {
    const auto& c = cls.cat();
    std::map<int, std::string> out;
    for (const auto& l : f.labels) {
        int i = find_ghost(ghosts, l.kind, c.require(l.a), c.require(l.b), c.require(l.c));
        if (i < 0) throw std::runtime_error(f.name + ": labelled ghost " + l.label + " not in census");
        out[i] = l.label;
    }
    return out;
}

}  // namespace ghostpic
