#include "ghostpic/module_class.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace ghostpic;

namespace {

std::shared_ptr<const BrickCatalog> type_a(int n, const std::string& w) {
    return std::make_shared<const BrickCatalog>(generate_type_a(n, w));
}

oracle::Support support(const IntVec& d) { return oracle::Support(d.begin(), d.end()); }

std::vector<oracle::Support> supports(const BrickCatalog& c, const ModuleSum& m) {
    std::vector<oracle::Support> out;
    for (int i : m) out.push_back(support(c.dim(i)));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> words(int n) {
    std::vector<std::string> out{""};
    for (int i = 1; i < n; ++i) {
        std::vector<std::string> next;
        for (auto& w : out)
            for (char ch : {'L', 'R'}) next.push_back(w + ch);
        out = next;
    }
    return out;
}

// X has a filtration with all subquotients in the class, searched over every chain of subsupports
bool filt_oracle(const oracle::Quiver& q, const std::set<oracle::Support>& members, const oracle::Support& x) {
    if (std::count(x.begin(), x.end(), 1) == 0) return true;
    for (const auto& u : oracle::submodules(q, x)) {
        if (std::count(u.begin(), u.end(), 1) == 0) continue;
        if (!members.count(u)) continue;
        oracle::Support rest = oracle::minus(x, u);
        bool ok = true;
        for (const auto& comp : oracle::components(q, rest)) ok = ok && filt_oracle(q, members, comp);
        if (ok) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("type A generator: A3 LL names and dimension vectors") {
    auto c = generate_type_a(3, "LL");
    std::map<std::string, IntVec> want{{"S1", {1, 0, 0}}, {"S2", {0, 1, 0}}, {"S3", {0, 0, 1}},
                                       {"P2", {1, 1, 0}}, {"I2", {0, 1, 1}}, {"P3", {1, 1, 1}}};
    CHECK(c.size() == 6);
    for (auto& [name, dim] : want) CHECK(c.dim(c.require(name)) == dim);
    CHECK(c.complete);
}

TEST_CASE("type A generator: rank one and LR names") {
    auto a1 = generate_type_a(1, "");
    REQUIRE(a1.size() == 1);
    CHECK(a1.name(0) == "S1");
    auto lr = generate_type_a(3, "LR");
    CHECK(lr.dim(lr.require("P2")) == IntVec{1, 1, 1});
    CHECK(lr.dim(lr.require("I1")) == IntVec{1, 1, 0});
    CHECK(lr.dim(lr.require("I3")) == IntVec{0, 1, 1});
}

TEST_CASE("type A generator rejects bad input") {
    CHECK_THROWS_AS(generate_type_a(0, ""), CatalogError);
    CHECK_THROWS_AS(generate_type_a(3, "L"), CatalogError);
    CHECK_THROWS_AS(generate_type_a(3, "LX"), CatalogError);
}

TEST_CASE("generator agrees with brute force on every orientation up to rank 5") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& w : words(n)) {
            auto c = generate_type_a(n, w);
            auto q = oracle::type_a(w);
            auto ind = oracle::indecomposables(q);
            std::set<oracle::Support> got;
            for (int i = 0; i < c.size(); ++i) got.insert(support(c.dim(i)));
            CHECK(got == std::set<oracle::Support>(ind.begin(), ind.end()));
            for (int i = 0; i < c.size(); ++i) {
                auto m = support(c.dim(i));
                std::set<std::pair<std::vector<oracle::Support>, std::vector<oracle::Support>>> want, have;
                for (const auto& u : oracle::submodules(q, m))
                    want.insert({oracle::components(q, u), oracle::components(q, oracle::minus(m, u))});
                for (const auto& p : c.subquotients[i]) have.insert({supports(c, p.sub), supports(c, p.quot)});
                CHECK(want == have);
                for (int j = 0; j < c.size(); ++j) CHECK(hom_dim(c, i, j) == oracle::hom(q, m, support(c.dim(j))));
            }
            std::set<Ses> ses(c.ses_list.begin(), c.ses_list.end()), want;
            for (int b = 0; b < c.size(); ++b)
                for (const auto& u : oracle::submodules(q, support(c.dim(b)))) {
                    auto sub = oracle::components(q, u), quot = oracle::components(q, oracle::minus(support(c.dim(b)), u));
                    if (sub.size() != 1 || quot.size() != 1) continue;
                    int a = -1, cc = -1;
                    for (int i = 0; i < c.size(); ++i) {
                        if (support(c.dim(i)) == sub[0]) a = i;
                        if (support(c.dim(i)) == quot[0]) cc = i;
                    }
                    want.insert({a, b, cc});
                }
            CHECK(ses == want);
            for (const auto& s : c.ses_list) CHECK(hom_dim(c, s.a, s.c) == 0);
        }
}

TEST_CASE("hom examples") {
    auto c = generate_type_a(3, "LL");
    CHECK(hom_dim(c, c.require("P3"), c.require("I2")) == 1);
    CHECK(hom_dim(c, c.require("S1"), c.require("S3")) == 0);
    CHECK(hom_dim(c, c.require("S1"), c.require("I2")) == 0);
}

TEST_CASE("kronecker fragment") {
    auto k = builtin_kronecker();
    CHECK_FALSE(k.complete);
    int p1 = k.require("P1"), p2 = k.require("P2"), m = k.require("M"), s2 = k.require("S2");
    CHECK(k.has_ses(p1, p2, m));
    CHECK(k.has_ses(p1, m, s2));
    CHECK(k.ses_list.size() == 2);
    CHECK(hom_dim(k, p1, p2) == 2);
    bool squared = false;
    for (const auto& sp : k.subquotients[p2])
        if (sp.sub == ModuleSum{p1, p1} && sp.quot == ModuleSum{s2}) squared = true;
    CHECK(squared);
    CHECK(load_catalog(dump_catalog(k)) == k);
    CHECK_THROWS_AS(builtin("nope"), CatalogError);
}

TEST_CASE("catalog round trip") {
    for (const auto& w : words(4)) {
        auto c = generate_type_a(4, w);
        CHECK(load_catalog(dump_catalog(c)) == c);
    }
}

namespace {

std::string code_of(const std::string& doc) {
    try {
        load_catalog(doc);
    } catch (const CatalogError& e) {
        return e.code;
    }
    return "";
}

const char* base_doc = R"({"complete": false,
 "quiver": {"n": 2, "arrows": [[2, 1]]},
 "indecs": [{"id": "A", "dim": [1, 0]}, {"id": "B", "dim": [1, 1]}, {"id": "C", "dim": [0, 1]}],
 "subquotients": {"B": [{"sub": ["A"], "quot": ["C"]}]},
 "hom": [["A", "B", 1], ["B", "C", 1]],
 "ses": [["A", "B", "C"]]})";

std::string edit(std::string doc, const std::string& from, const std::string& to) {
    auto pos = doc.find(from);
    REQUIRE(pos != std::string::npos);
    return doc.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("catalog loader error codes") {
    CHECK(code_of(base_doc) == "");
    auto c = load_catalog(base_doc);
    CHECK(c.subquotients[c.require("B")].size() == 3);  // trivial pairs added
    CHECK(code_of("{") == "schema");
    CHECK(code_of(edit(base_doc, R"("complete": false,)", "")) == "schema");
    CHECK(code_of(edit(base_doc, R"("quot": ["C"])", R"("quot": ["Q"])")) == "unknown-id");
    CHECK(code_of(edit(base_doc, R"("quot": ["C"])", R"("quot": ["B"])")) == "subquotient-dimension-mismatch");
    CHECK(code_of(edit(base_doc, R"("ses": [["A", "B", "C"]])", R"("ses": [["A", "B", "B"]])")) ==
          "ses-dimension-mismatch");
    CHECK(code_of(edit(base_doc, R"("hom": [)", R"("hom": [["A", "A", 2], )")) == "not-a-brick");
    std::string no_pair = edit(base_doc, R"({"sub": ["A"], "quot": ["C"]})", "");
    CHECK(code_of(no_pair) == "ses-missing-subquotient");
    std::string complete = edit(edit(base_doc, R"("complete": false)", R"("complete": true)"), R"(["B", "C", 1])",
                                R"(["B", "C", 1], ["A", "C", 1])");
    CHECK(code_of(complete) == "ses-hom-nonzero");
}

TEST_CASE("module class construction") {
    auto c = type_a(3, "LL");
    CHECK_THROWS_AS(make_class(c, "S1,S1"), CatalogError);
    CHECK_THROWS_AS(make_class(c, "S1,X9"), CatalogError);
    auto k = std::make_shared<const BrickCatalog>(builtin_kronecker());
    auto cls = make_class(k, "P1,P2,M");
    CHECK_FALSE(cls.flags.known);
    CHECK(in_filt(cls, {k->require("P1"), k->require("P1")}));
    CHECK_FALSE(in_filt(cls, {k->require("S2")}));
}

TEST_CASE("filt example: P3 over S1 and I2") {
    auto c = type_a(3, "LL");
    auto cls = make_class(c, "S1,I2");
    CHECK(in_filt(cls, {c->require("P3")}));
    CHECK_FALSE(in_filt(cls, {c->require("S2")}));
}

TEST_CASE("weak admissibility examples") {
    auto k = std::make_shared<const BrickCatalog>(builtin_kronecker());
    auto cls = make_class(k, "P1,P2,M");
    int p1 = k->require("P1"), p2 = k->require("P2"), m = k->require("M");
    for (const auto& sp : k->subquotients[p2])
        if (sp.sub == ModuleSum{p1}) CHECK(is_weakly_admissible_quotient(cls, p2, sp));
    for (const auto& sp : k->subquotients[m])
        if (sp.sub == ModuleSum{p1}) CHECK_FALSE(is_weakly_admissible_quotient(cls, m, sp));
    auto c = type_a(3, "LL");
    auto fig4 = make_class(c, "P3,I2,S3");
    int p3 = c->require("P3");
    for (const auto& sp : c->subquotients[p3])
        if (sp.sub == ModuleSum{c->require("S1")}) CHECK_FALSE(is_weakly_admissible_quotient(fig4, p3, sp));
    CHECK(wa_quotients(fig4, p3).empty());
}

TEST_CASE("class flags") {
    auto c = type_a(3, "LL");
    auto all = make_class(c, "S1,S2,S3,P2,P3,I2");
    CHECK(all.flags.known);
    CHECK(all.flags.is_torsion);
    CHECK(all.flags.is_torsion_free);
    auto lr = type_a(3, "LR");
    CHECK(make_class(lr, "S1,P2,S2,I3,I1").flags.is_torsion);
    CHECK(make_class(c, "S1,P3,I2,S3").flags.is_torsion);
    auto fig10 = make_class(c, "S1,P2,I2,P3,S3");
    CHECK_FALSE(fig10.flags.is_torsion);
    CHECK_FALSE(fig10.flags.is_torsion_free);
}

TEST_CASE("property: Filt and flags agree with brute force on random classes") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + trial % 3;
        auto ws = words(n);
        std::string w = ws[rng() % ws.size()];
        auto c = type_a(n, w);
        auto q = oracle::type_a(w);
        std::vector<int> members;
        std::set<oracle::Support> mset;
        for (int i = 0; i < c->size(); ++i)
            if (rng() % 2) {
                members.push_back(i);
                mset.insert(support(c->dim(i)));
            }
        if (members.empty()) continue;
        ModuleClass cls;
        try {
            cls = make_class(c, members);
        } catch (const CatalogError&) {
            continue;
        }
        bool ext_closed = true, quot_closed = true;
        for (int i = 0; i < c->size(); ++i) {
            bool f = filt_oracle(q, mset, support(c->dim(i)));
            CHECK(in_filt(cls, {i}) == f);
            if (f && !cls.contains(i)) ext_closed = false;
        }
        for (int m : members)
            for (const auto& u : oracle::submodules(q, support(c->dim(m))))
                for (const auto& comp : oracle::components(q, oracle::minus(support(c->dim(m)), u)))
                    if (!mset.count(comp)) quot_closed = false;
        CHECK(cls.flags.quotient_closed == quot_closed);
        if (cls.flags.is_torsion) CHECK((quot_closed && ext_closed));
        if (cls.flags.is_torsion_free) CHECK(cls.flags.sub_closed);
    }
}
