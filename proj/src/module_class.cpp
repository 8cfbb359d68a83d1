#include "ghostpic/module_class.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace ghostpic {

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::string ModuleClass::names() const {
    std::string s;
    for (size_t i = 0; i < bricks.size(); ++i) {
        if (i) s += ",";
        s += catalog->name(bricks[i]);
    }
    return s;
}

namespace {

long total(const IntVec& d) { return std::accumulate(d.begin(), d.end(), 0L); }

}  // namespace

ModuleClass make_class(std::shared_ptr<const BrickCatalog> cat, const std::vector<int>& bricks) {
    ModuleClass cls;
    cls.catalog = cat;
    const BrickCatalog& c = *cat;
    cls.member.assign(c.size(), false);
    for (int b : bricks) {
        if (b < 0 || b >= c.size()) throw CatalogError("unknown-module", std::to_string(b));
        if (cls.member[b]) throw CatalogError("duplicate-brick", c.name(b));
        cls.member[b] = true;
    }
    for (int i = 0; i < c.size(); ++i)
        if (cls.member[i]) cls.bricks.push_back(i);
    for (size_t i = 0; i < cls.bricks.size(); ++i)
        for (size_t j = i + 1; j < cls.bricks.size(); ++j) {
            const auto& a = c.dim(cls.bricks[i]);
            const auto& b = c.dim(cls.bricks[j]);
            bool prop = true;
            for (size_t x = 0; x < a.size(); ++x)
                for (size_t y = x + 1; y < a.size(); ++y)
                    if (a[x] * b[y] != a[y] * b[x]) prop = false;
            if (prop)
                throw CatalogError("dependent-dimension-vectors", c.name(cls.bricks[i]) + "," + c.name(cls.bricks[j]));
        }
    // Filt membership by increasing total dimension
    std::vector<int> order(c.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return total(c.dim(a)) < total(c.dim(b)); });
    cls.filt.assign(c.size(), false);
    for (int x : order) {
        if (cls.member[x]) {
            cls.filt[x] = true;
            continue;
        }
        for (const auto& sp : c.subquotients[x]) {
            if (sp.sub.size() != 1 || sp.quot.empty() || !cls.member[sp.sub[0]]) continue;
            bool ok = true;
            for (int q : sp.quot)
                if (total(c.dim(q)) >= total(c.dim(x)) || !cls.filt[q]) ok = false;
            if (ok) {
                cls.filt[x] = true;
                break;
            }
        }
    }
    cls.flags = classify_class(cls);
    return cls;
}

ModuleClass make_class(std::shared_ptr<const BrickCatalog> cat, const std::vector<std::string>& names) {
    std::vector<int> ids;
    for (const auto& n : names) ids.push_back(cat->require(n));
    return make_class(cat, ids);
}

ModuleClass make_class(std::shared_ptr<const BrickCatalog> cat, const std::string& csv) {
    return make_class(cat, split_csv(csv));
}

bool in_add(const ModuleClass& cls, const ModuleSum& x) {
    for (int i : x)
        if (!cls.member[i]) return false;
    return true;
}

bool in_filt(const ModuleClass& cls, const ModuleSum& x) {
    for (int i : x)
        if (!cls.filt[i]) return false;
    return true;
}

bool is_weakly_admissible_quotient(const ModuleClass& cls, int m, const SubquotientPair& pair) {
    if (pair.parent != m) return false;
    return in_add(cls, pair.quot) && in_filt(cls, pair.sub);
}

std::vector<const SubquotientPair*> wa_quotients(const ModuleClass& cls, int m) {
    std::vector<const SubquotientPair*> out;
    std::set<ModuleSum> seen;
    for (const auto& sp : cls.cat().subquotients[m]) {
        if (!sp.sub_proper) continue;
        if (!is_weakly_admissible_quotient(cls, m, sp)) continue;
        if (!seen.insert(sp.quot).second) continue;
        out.push_back(&sp);
    }
    return out;
}

ClassFlags classify_class(const ModuleClass& cls) {
    ClassFlags f;
    const BrickCatalog& c = cls.cat();
    if (!c.complete) return f;
    f.known = true;
    f.quotient_closed = f.sub_closed = true;
    for (int b : cls.bricks)
        for (const auto& sp : c.subquotients[b]) {
            if (!in_add(cls, sp.quot)) f.quotient_closed = false;
            if (!in_add(cls, sp.sub)) f.sub_closed = false;
        }
    f.extension_closed = true;
    for (int i = 0; i < c.size(); ++i)
        if (!cls.member[i] && cls.filt[i]) f.extension_closed = false;
    for (const auto& s : c.ses_list)
        if (cls.member[s.a] && cls.member[s.c] && !cls.member[s.b]) f.extension_closed = false;
    f.is_torsion = f.quotient_closed && f.extension_closed;
    f.is_torsion_free = f.sub_closed && f.extension_closed;
    return f;
}

}  // namespace ghostpic
