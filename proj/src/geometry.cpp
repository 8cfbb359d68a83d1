#include "ghostpic/geometry.hpp"

#include "ghostpic/lp.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ghostpic {

Rat parse_rat(const std::string& s) {
    std::string t;
    for (char ch : s)
        if (ch != ' ') t += ch;
    if (t.empty()) throw std::invalid_argument("empty rational");
    auto dotpos = t.find('.');
    if (dotpos != std::string::npos) {
        std::string digits = t.substr(0, dotpos) + t.substr(dotpos + 1);
        std::string den = "1" + std::string(t.size() - dotpos - 1, '0');
        Rat r;
        if (r.set_str(digits + "/" + den, 10) != 0) throw std::invalid_argument("bad rational: " + s);
        r.canonicalize();
        return r;
    }
    Rat r;
    if (r.set_str(t, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

RatVec parse_ratvec(const std::string& csv) {
    RatVec v;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(parse_rat(item));
    return v;
}

std::string ratvec_str(const RatVec& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += rat_str(v[i]);
    }
    return s;
}

RatVec primitive(const RatVec& v) {
    mpz_class l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    mpz_class g = 0;
    std::vector<mpz_class> ints;
    for (const auto& x : v) {
        mpz_class z = x.get_num() * (l / x.get_den());
        ints.push_back(z);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    }
    if (g == 0) return v;
    RatVec out;
    for (auto& z : ints) out.emplace_back(Rat(z / g));
    return out;
}

bool Cone::contains(const RatVec& theta) const {
    for (const auto& e : equalities)
        if (dot(theta, e) != 0) return false;
    for (const auto& a : weak_ineqs)
        if (dot(theta, a) < 0) return false;
    for (const auto& s : strict_ineqs)
        if (dot(theta, s) <= 0) return false;
    return true;
}

Cone Cone::interior() const {
    Cone c = *this;
    c.strict_ineqs.insert(c.strict_ineqs.end(), weak_ineqs.begin(), weak_ineqs.end());
    c.weak_ineqs.clear();
    return c;
}

Cone Cone::with_equality(const IntVec& e) const {
    Cone c = *this;
    c.equalities.push_back(e);
    return c;
}

// closures compared; strict constraints of outer are read as weak
bool cone_contains(const Cone& outer, const Cone& inner) {
    auto escapes = [&](const IntVec& v) {
        Cone k = inner;
        k.strict_ineqs.push_back(neg(v));
        return feasible_point(k).has_value();
    };
    for (const auto& e : outer.equalities)
        if (escapes(e) || escapes(neg(e))) return false;
    for (const auto& v : outer.weak_ineqs)
        if (escapes(v)) return false;
    for (const auto& v : outer.strict_ineqs)
        if (escapes(v)) return false;
    return true;
}

bool same_cone(const Cone& a, const Cone& b) { return cone_contains(a, b) && cone_contains(b, a); }

std::optional<RatVec> feasible_point(const Cone& c) {
    // theta = x - 1 with x in [0,2]; maximize the slack s in [0,1]
    const size_t n = c.n;
    const size_t nv = n + 1;
    std::vector<LpRow> rows;
    auto shifted = [&](const IntVec& v, RowKind k, bool slack) {
        LpRow r;
        r.coef.assign(nv, Rat(0));
        Rat rhs = 0;
        for (size_t i = 0; i < n; ++i) {
            r.coef[i] = v[i];
            rhs += v[i];
        }
        if (slack) r.coef[n] = -1;
        r.kind = k;
        r.rhs = rhs;
        rows.push_back(std::move(r));
    };
    for (const auto& e : c.equalities) shifted(e, RowKind::Eq, false);
    for (const auto& a : c.weak_ineqs) shifted(a, RowKind::Ge, false);
    for (const auto& s : c.strict_ineqs) shifted(s, RowKind::Ge, true);
    for (size_t i = 0; i < nv; ++i) {
        LpRow r;
        r.coef.assign(nv, Rat(0));
        r.coef[i] = 1;
        r.kind = RowKind::Le;
        r.rhs = i < n ? 2 : 1;
        rows.push_back(std::move(r));
    }
    RatVec obj(nv, Rat(0));
    if (!c.strict_ineqs.empty()) obj[n] = 1;
    auto res = lp_maximize(obj, rows);
    if (!res.feasible) return std::nullopt;
    if (!c.strict_ineqs.empty() && res.value <= 0) return std::nullopt;
    RatVec theta(n);
    for (size_t i = 0; i < n; ++i) theta[i] = res.x[i] - 1;
    theta = primitive(theta);
    if (!c.contains(theta)) throw std::logic_error("feasible_point: certificate check failed");
    return theta;
}

bool proportional(const IntVec& a, const IntVec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

Hyperplane make_hyperplane(const IntVec& normal) {
    if (is_zero(normal)) throw std::invalid_argument("zero hyperplane normal");
    Hyperplane h;
    h.normal = normal;
    long g = 0;
    for (long v : normal) g = std::gcd(g, v < 0 ? -v : v);
    h.primitive = normal;
    for (auto& v : h.primitive) v /= g;
    for (long v : h.primitive) {
        if (v == 0) continue;
        if (v < 0) {
            h.flipped = true;
            for (auto& w : h.primitive) w = -w;
        }
        break;
    }
    return h;
}

std::vector<int> sign_vector(const std::vector<Hyperplane>& hs, const RatVec& theta) {
    std::vector<int> s;
    for (const auto& h : hs) {
        int v = sgn(dot(theta, h.normal));
        s.push_back(v);
    }
    return s;
}

namespace {

Cone sign_cone(const std::vector<Hyperplane>& hs, const std::vector<int>& signs, size_t n,
               int skip = -1) {
    Cone c;
    c.n = n;
    for (size_t i = 0; i < signs.size(); ++i) {
        if ((int)i == skip) {
            c.equalities.push_back(hs[i].normal);
            continue;
        }
        c.strict_ineqs.push_back(signs[i] > 0 ? hs[i].normal : neg(hs[i].normal));
    }
    return c;
}

}  // namespace

std::vector<Cell> enumerate_cells(const std::vector<Hyperplane>& hs, size_t n) {
    if (hs.size() > max_hyperplanes)
        throw std::length_error("guard exceeded: " + std::to_string(hs.size()) + " hyperplanes");
    for (size_t i = 0; i < hs.size(); ++i)
        for (size_t j = i + 1; j < hs.size(); ++j)
            if (proportional(hs[i].normal, hs[j].normal))
                throw std::invalid_argument("proportional hyperplanes");
    std::vector<Cell> out;
    std::vector<int> prefix;
    auto rec = [&](auto&& self) -> void {
        auto pt = feasible_point(sign_cone(hs, prefix, n));
        if (!pt) return;
        if (prefix.size() == hs.size()) {
            out.push_back({prefix, *pt});
            return;
        }
        for (int s : {+1, -1}) {
            prefix.push_back(s);
            self(self);
            prefix.pop_back();
        }
    };
    rec(rec);
    return out;
}

std::vector<Facet> cell_facet_neighbors(const std::vector<Cell>& cells,
                                        const std::vector<Hyperplane>& hs, size_t n) {
    std::vector<Facet> out;
    for (size_t a = 0; a < cells.size(); ++a) {
        for (size_t b = a + 1; b < cells.size(); ++b) {
            int diff = -1, count = 0;
            for (size_t i = 0; i < hs.size(); ++i)
                if (cells[a].signs[i] != cells[b].signs[i]) {
                    diff = (int)i;
                    ++count;
                }
            if (count != 1) continue;
            auto pt = feasible_point(sign_cone(hs, cells[a].signs, n, diff));
            if (!pt) continue;
            out.push_back({(int)a, (int)b, diff, *pt});
        }
    }
    return out;
}

}  // namespace ghostpic
