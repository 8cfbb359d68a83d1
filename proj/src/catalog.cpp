#include "ghostpic/catalog.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <tuple>
#include <map>
#include <set>

namespace ghostpic {

using nlohmann::json;

ModuleSum make_sum(std::vector<int> ids) {
    std::sort(ids.begin(), ids.end());
    return ids;
}

ModuleSum sum_union(const ModuleSum& a, const ModuleSum& b) {
    ModuleSum r = a;
    r.insert(r.end(), b.begin(), b.end());
    std::sort(r.begin(), r.end());
    return r;
}

std::optional<int> BrickCatalog::find(const std::string& key) const {
    for (int i = 0; i < size(); ++i)
        if (indecs[i].name == key) return i;
    for (int i = 0; i < size(); ++i)
        if (indecs[i].id == key) return i;
    return std::nullopt;
}

int BrickCatalog::require(const std::string& key) const {
    auto i = find(key);
    if (!i) throw CatalogError("unknown-module", key);
    return *i;
}

IntVec BrickCatalog::dim(const ModuleSum& m) const {
    IntVec d(quiver.n, 0);
    for (int i : m) d = add(d, indecs[i].dim);
    return d;
}

std::string BrickCatalog::name(const ModuleSum& m) const {
    if (m.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < m.size(); ++i) {
        if (i) s += "+";
        s += indecs[m[i]].name;
    }
    return s;
}

bool BrickCatalog::has_ses(int a, int b, int c) const {
    return std::find(ses_list.begin(), ses_list.end(), Ses{a, b, c}) != ses_list.end();
}

std::optional<std::string> BrickCatalog::type_a_word() const {
    if (!complete) return std::nullopt;
    const int n = quiver.n;
    if ((int)quiver.arrows.size() != n - 1) return std::nullopt;
    std::string w(n - 1, '?');
    for (auto [s, t] : quiver.arrows) {
        if (t == s - 1) w[t - 1] = 'L';
        else if (t == s + 1) w[s - 1] = 'R';
        else return std::nullopt;
    }
    if (w.find('?') != std::string::npos) return std::nullopt;
    return w;
}

int hom_dim(const BrickCatalog& cat, int x, int y) {
    if (x < 0 || y < 0 || x >= cat.size() || y >= cat.size())
        throw CatalogError("unknown-module", "hom_dim index");
    return cat.hom[x][y];
}

namespace {

bool pair_less(const BrickCatalog& c, const SubquotientPair& p, const SubquotientPair& q) {
    auto ids = [&](const ModuleSum& m) {
        std::vector<std::string> v;
        for (int i : m) v.push_back(c.indecs[i].id);
        return v;
    };
    auto ps = ids(p.sub), qs = ids(q.sub);
    if (ps != qs) return ps < qs;
    return ids(p.quot) < ids(q.quot);
}

void canonicalize(BrickCatalog& c) {
    for (auto& list : c.subquotients) {
        std::stable_sort(list.begin(), list.end(), [&](const auto& p, const auto& q) {
            return pair_less(c, p, q);
        });
        for (size_t k = 0; k < list.size(); ++k) {
            auto& p = list[k];
            p.sub_proper = !p.sub.empty() && !p.quot.empty();
            p.tag = std::to_string(k);
        }
    }
    std::sort(c.ses_list.begin(), c.ses_list.end());
    std::sort(c.quiver.arrows.begin(), c.quiver.arrows.end());
}

void check_brick_dims(const BrickCatalog& c) {
    for (const auto& x : c.indecs) {
        if ((int)x.dim.size() != c.quiver.n)
            throw CatalogError("schema", "dimension vector length for " + x.id);
        bool nz = false;
        for (long v : x.dim) {
            if (v < 0) throw CatalogError("schema", "negative dimension for " + x.id);
            if (v) nz = true;
        }
        if (!nz) throw CatalogError("schema", "zero dimension vector for " + x.id);
    }
}

}  // namespace

BrickCatalog generate_type_a(int n, const std::string& orientation) {
    if (n < 1 || n > max_rank) throw CatalogError("invalid-rank", std::to_string(n));
    if ((int)orientation.size() != n - 1)
        throw CatalogError("invalid-orientation", "word length must be n-1");
    for (char ch : orientation)
        if (ch != 'L' && ch != 'R') throw CatalogError("invalid-orientation", orientation);

    BrickCatalog cat;
    cat.quiver.n = n;
    for (int i = 1; i < n; ++i) {
        if (orientation[i - 1] == 'L') cat.quiver.arrows.push_back({i + 1, i});
        else cat.quiver.arrows.push_back({i, i + 1});
    }
    auto pointing = [&](int i, bool forward) {
        // support of paths from i (forward) or into i
        int lo = i, hi = i;
        while (lo > 1) {
            char ch = orientation[lo - 2];
            bool step = forward ? ch == 'L' : ch == 'R';
            if (!step) break;
            --lo;
        }
        while (hi < n) {
            char ch = orientation[hi - 1];
            bool step = forward ? ch == 'R' : ch == 'L';
            if (!step) break;
            ++hi;
        }
        return std::pair{lo, hi};
    };
    std::map<std::pair<int, int>, std::string> names;
    for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b) {
            std::string nm;
            if (a == b) nm = "S" + std::to_string(a);
            for (int i = 1; i <= n && nm.empty(); ++i)
                if (pointing(i, true) == std::pair{a, b}) nm = "P" + std::to_string(i);
            for (int i = 1; i <= n && nm.empty(); ++i)
                if (pointing(i, false) == std::pair{a, b}) nm = "I" + std::to_string(i);
            if (nm.empty()) nm = "M" + std::to_string(a) + "-" + std::to_string(b);
            names[{a, b}] = nm;
        }
    std::vector<std::pair<std::string, std::pair<int, int>>> order;
    for (auto& [iv, nm] : names) order.push_back({nm, iv});
    std::sort(order.begin(), order.end());
    std::map<std::pair<int, int>, int> index;
    for (auto& [nm, iv] : order) {
        Indec x;
        x.id = nm;
        x.name = nm;
        x.dim.assign(n, 0);
        for (int v = iv.first; v <= iv.second; ++v) x.dim[v - 1] = 1;
        index[iv] = cat.size();
        cat.indecs.push_back(std::move(x));
    }
    auto runs = [&](const std::vector<bool>& in, int a) {
        ModuleSum m;
        int len = (int)in.size();
        int v = 0;
        while (v < len) {
            if (!in[v]) {
                ++v;
                continue;
            }
            int w = v;
            while (w + 1 < len && in[w + 1]) ++w;
            m.push_back(index[{a + v, a + w}]);
            v = w + 1;
        }
        return make_sum(m);
    };
    cat.subquotients.resize(cat.size());
    for (auto& [nm, iv] : order) {
        auto [a, b] = iv;
        int p = index[iv];
        int len = b - a + 1;
        for (unsigned mask = 0; mask < (1u << len); ++mask) {
            std::vector<bool> in(len), out(len);
            for (int v = 0; v < len; ++v) {
                in[v] = (mask >> v) & 1u;
                out[v] = !in[v];
            }
            bool closed = true;
            for (auto [s, t] : cat.quiver.arrows) {
                if (s < a || s > b || t < a || t > b) continue;
                if (in[s - a] && !in[t - a]) closed = false;
            }
            if (!closed) continue;
            SubquotientPair sp;
            sp.parent = p;
            sp.sub = runs(in, a);
            sp.quot = runs(out, a);
            cat.subquotients[p].push_back(std::move(sp));
        }
    }
    const int N = cat.size();
    cat.hom.assign(N, std::vector<int>(N, 0));
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y) {
            std::set<int> quots, subs;
            for (const auto& sp : cat.subquotients[x])
                if (sp.quot.size() == 1) quots.insert(sp.quot[0]);
            for (const auto& sp : cat.subquotients[y])
                if (sp.sub.size() == 1) subs.insert(sp.sub[0]);
            for (int q : quots)
                if (subs.count(q)) cat.hom[x][y] = 1;
        }
    for (int b = 0; b < N; ++b)
        for (const auto& sp : cat.subquotients[b])
            if (sp.sub.size() == 1 && sp.quot.size() == 1 && cat.hom[sp.sub[0]][sp.quot[0]] == 0)
                cat.ses_list.push_back({sp.sub[0], b, sp.quot[0]});
    cat.complete = true;
    canonicalize(cat);
    return cat;
}

BrickCatalog builtin_kronecker() {
    BrickCatalog cat;
    cat.quiver.n = 2;
    cat.quiver.arrows = {{2, 1}, {2, 1}};
    cat.indecs = {{"M", "M", {1, 1}}, {"P1", "P1", {1, 0}}, {"P2", "P2", {2, 1}}, {"S2", "S2", {0, 1}}};
    const int M = 0, P1 = 1, P2 = 2, S2 = 3;
    cat.subquotients.resize(4);
    auto add_pair = [&](int parent, ModuleSum sub, ModuleSum quot) {
        SubquotientPair sp;
        sp.parent = parent;
        sp.sub = make_sum(sub);
        sp.quot = make_sum(quot);
        cat.subquotients[parent].push_back(sp);
    };
    for (int i = 0; i < 4; ++i) {
        add_pair(i, {}, {i});
        add_pair(i, {i}, {});
    }
    add_pair(P2, {P1}, {M});
    add_pair(P2, {P1, P1}, {S2});
    add_pair(M, {P1}, {S2});
    cat.hom.assign(4, std::vector<int>(4, 0));
    for (int i = 0; i < 4; ++i) cat.hom[i][i] = 1;
    cat.hom[P1][P2] = 2;
    cat.hom[P1][M] = 1;
    cat.hom[P2][M] = 1;
    cat.hom[P2][S2] = 1;
    cat.hom[M][S2] = 1;
    cat.ses_list = {{P1, P2, M}, {P1, M, S2}};
    cat.complete = false;
    canonicalize(cat);
    return cat;
}

BrickCatalog builtin(const std::string& name) {
    if (name == "kronecker") return builtin_kronecker();
    throw CatalogError("unknown-builtin", name);
}

std::string dump_catalog(const BrickCatalog& c) {
    json doc;
    doc["complete"] = c.complete;
    json arrows = json::array();
    for (auto [s, t] : c.quiver.arrows) arrows.push_back({s, t});
    doc["quiver"] = {{"n", c.quiver.n}, {"arrows", arrows}};
    json indecs = json::array();
    for (const auto& x : c.indecs) indecs.push_back({{"id", x.id}, {"name", x.name}, {"dim", x.dim}});
    doc["indecs"] = indecs;
    auto ids = [&](const ModuleSum& m) {
        std::vector<std::string> v;
        for (int i : m) v.push_back(c.indecs[i].id);
        std::sort(v.begin(), v.end());
        return v;
    };
    json sq = json::object();
    for (int p = 0; p < c.size(); ++p) {
        json list = json::array();
        for (const auto& sp : c.subquotients[p]) list.push_back({{"sub", ids(sp.sub)}, {"quot", ids(sp.quot)}});
        sq[c.indecs[p].id] = list;
    }
    doc["subquotients"] = sq;
    std::vector<std::tuple<std::string, std::string, int>> hom;
    for (int x = 0; x < c.size(); ++x)
        for (int y = 0; y < c.size(); ++y)
            if (c.hom[x][y]) hom.push_back({c.indecs[x].id, c.indecs[y].id, c.hom[x][y]});
    std::sort(hom.begin(), hom.end());
    json homj = json::array();
    for (auto& [x, y, d] : hom) homj.push_back({x, y, d});
    doc["hom"] = homj;
    std::vector<std::array<std::string, 3>> ses;
    for (const auto& s : c.ses_list) ses.push_back({c.indecs[s.a].id, c.indecs[s.b].id, c.indecs[s.c].id});
    std::sort(ses.begin(), ses.end());
    doc["ses"] = ses;
    return doc.dump(2) + "\n";
}

BrickCatalog load_catalog(const std::string& document) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::exception& e) {
        throw CatalogError("schema", e.what());
    }
    BrickCatalog c;
    try {
        for (const char* key : {"quiver", "indecs", "subquotients", "ses", "complete"})
            if (!doc.contains(key)) throw CatalogError("schema", std::string("missing key ") + key);
        c.quiver.n = doc["quiver"].at("n").get<int>();
        if (c.quiver.n < 1) throw CatalogError("schema", "quiver n must be positive");
        for (const auto& a : doc["quiver"].at("arrows")) {
            int s = a.at(0).get<int>(), t = a.at(1).get<int>();
            if (s < 1 || t < 1 || s > c.quiver.n || t > c.quiver.n)
                throw CatalogError("schema", "arrow vertex out of range");
            if (s == t) throw CatalogError("schema", "loop arrow");
            c.quiver.arrows.push_back({s, t});
        }
        std::vector<std::pair<std::string, Indec>> rows;
        for (const auto& x : doc["indecs"]) {
            Indec ind;
            ind.id = x.at("id").get<std::string>();
            ind.name = x.contains("name") ? x["name"].get<std::string>() : ind.id;
            ind.dim = x.at("dim").get<IntVec>();
            rows.push_back({ind.id, ind});
        }
        std::sort(rows.begin(), rows.end(), [](auto& a, auto& b) { return a.first < b.first; });
        for (size_t i = 1; i < rows.size(); ++i)
            if (rows[i].first == rows[i - 1].first) throw CatalogError("schema", "duplicate id " + rows[i].first);
        for (auto& r : rows) c.indecs.push_back(r.second);
        check_brick_dims(c);
        std::map<std::string, int> index;
        for (int i = 0; i < c.size(); ++i) index[c.indecs[i].id] = i;
        auto look = [&](const json& v) {
            auto s = v.get<std::string>();
            auto it = index.find(s);
            if (it == index.end()) throw CatalogError("unknown-id", s);
            return it->second;
        };
        auto sum_of = [&](const json& arr) {
            ModuleSum m;
            for (const auto& v : arr) m.push_back(look(v));
            return make_sum(m);
        };
        c.subquotients.resize(c.size());
        for (auto it = doc["subquotients"].begin(); it != doc["subquotients"].end(); ++it) {
            int p = look(json(it.key()));
            for (const auto& e : it.value()) {
                SubquotientPair sp;
                sp.parent = p;
                sp.sub = sum_of(e.at("sub"));
                sp.quot = sum_of(e.at("quot"));
                if (add(c.dim(sp.sub), c.dim(sp.quot)) != c.indecs[p].dim)
                    throw CatalogError("subquotient-dimension-mismatch", c.indecs[p].id);
                c.subquotients[p].push_back(sp);
            }
        }
        for (int p = 0; p < c.size(); ++p) {
            auto& list = c.subquotients[p];
            auto has = [&](const ModuleSum& s, const ModuleSum& q) {
                for (const auto& sp : list)
                    if (sp.sub == s && sp.quot == q) return true;
                return false;
            };
            if (!has({}, {p})) list.push_back({p, {}, {p}, false, ""});
            if (!has({p}, {})) list.push_back({p, {p}, {}, false, ""});
        }
        c.hom.assign(c.size(), std::vector<int>(c.size(), 0));
        std::vector<bool> diag(c.size(), false);
        if (doc.contains("hom"))
            for (const auto& h : doc["hom"]) {
                int x = look(h.at(0)), y = look(h.at(1));
                int d = h.at(2).get<int>();
                if (d < 0) throw CatalogError("schema", "negative hom dimension");
                c.hom[x][y] = d;
                if (x == y) diag[x] = true;
            }
        for (int i = 0; i < c.size(); ++i) {
            if (!diag[i]) c.hom[i][i] = 1;
            if (c.hom[i][i] != 1) throw CatalogError("not-a-brick", c.indecs[i].id);
        }
        c.complete = doc["complete"].get<bool>();
        for (const auto& s : doc["ses"]) {
            Ses e{look(s.at(0)), look(s.at(1)), look(s.at(2))};
            if (add(c.indecs[e.a].dim, c.indecs[e.c].dim) != c.indecs[e.b].dim)
                throw CatalogError("ses-dimension-mismatch",
                                   c.indecs[e.a].id + "," + c.indecs[e.b].id + "," + c.indecs[e.c].id);
            bool found = false;
            for (const auto& sp : c.subquotients[e.b])
                if (sp.sub == ModuleSum{e.a} && sp.quot == ModuleSum{e.c}) found = true;
            if (!found) throw CatalogError("ses-missing-subquotient", c.indecs[e.b].id);
            if (c.complete && c.hom[e.a][e.c] != 0)
                throw CatalogError("ses-hom-nonzero", c.indecs[e.a].id + "," + c.indecs[e.c].id);
            c.ses_list.push_back(e);
        }
    } catch (const json::exception& e) {
        throw CatalogError("schema", e.what());
    }
    canonicalize(c);
    return c;
}

}  // namespace ghostpic
