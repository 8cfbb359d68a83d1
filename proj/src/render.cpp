#include "ghostpic/render.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace ghostpic {

namespace {

using V3 = std::array<double, 3>;

double dot3(const V3& a, const V3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

V3 unit(V3 v) {
    double r = std::sqrt(dot3(v, v));
    return {v[0] / r, v[1] / r, v[2] / r};
}

IntVec cross(const IntVec& a, const IntVec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

V3 to_v3(const IntVec& v) { return {(double)v[0], (double)v[1], (double)v[2]}; }

const V3 U = unit({1, 1, 1});
const V3 E1 = unit({1, -1, 0});
const V3 E2 = unit({1, 1, -2});

PlanePoint project(const V3& raw) {
    V3 v = unit(raw);
    double den = 1 + dot3(v, U);
    if (den < 1e-12) throw std::domain_error("at-pole");
    return {2 * dot3(v, E1) / den, 2 * dot3(v, E2) / den};
}

double dist(const PlanePoint& a, const PlanePoint& b) { return std::hypot(a.x - b.x, a.y - b.y); }

}  // namespace

PlanePoint stereographic(const RatVec& theta) {
    if (theta.size() != 3) throw std::domain_error("rank-3-only");
    if (theta[0] == theta[1] && theta[1] == theta[2]) {
        if (theta[0] < 0) throw std::domain_error("at-pole");
        if (theta[0] == 0) throw std::domain_error("zero ray");
    }
    return project({theta[0].get_d(), theta[1].get_d(), theta[2].get_d()});
}

Polyline trace_wall_curve(const Cone& cone, int samples, double max_chord) {
    if (cone.n != 3) throw std::domain_error("rank-3-only");
    if (cone.equalities.size() != 1) throw std::invalid_argument("trace needs exactly one equality");
    Polyline out;
    if (!feasible_point(cone).has_value()) return out;
    const IntVec& e = cone.equalities[0];
    size_t gi = 0;
    for (size_t i = 1; i < 3; ++i)
        if (std::labs(e[i]) < std::labs(e[gi])) gi = i;
    IntVec g(3, 0);
    g[gi] = 1;
    IntVec b1 = cross(e, g), b2 = cross(e, b1);
    V3 u1 = unit(to_v3(b1)), u2 = unit(to_v3(b2));
    const double pi = std::numbers::pi;
    bool full = true;
    double lo = 0, hi = 2 * pi;
    auto half = [&](const IntVec& a, bool strict) -> bool {
        double al = dot3(to_v3(a), u1), be = dot3(to_v3(a), u2);
        if (std::hypot(al, be) < 1e-12) return !strict;
        double psi = std::atan2(be, al);
        if (full) {
            lo = psi - pi / 2;
            hi = psi + pi / 2;
            full = false;
            return true;
        }
        double mid = (lo + hi) / 2;
        while (psi < mid - pi) psi += 2 * pi;
        while (psi > mid + pi) psi -= 2 * pi;
        lo = std::max(lo, psi - pi / 2);
        hi = std::min(hi, psi + pi / 2);
        return hi - lo > 1e-12;
    };
    for (const auto& a : cone.weak_ineqs)
        if (!half(a, false)) return out;
    for (const auto& a : cone.strict_ineqs)
        if (!half(a, true)) return out;
    auto at = [&](double phi) {
        double c = std::cos(phi), s = std::sin(phi);
        return project({c * u1[0] + s * u2[0], c * u1[1] + s * u2[1], c * u1[2] + s * u2[2]});
    };
    out.closed = full;
    std::vector<double> phis;
    for (int i = 0; i <= samples; ++i) phis.push_back(lo + (hi - lo) * i / samples);
    out.pts.push_back(at(phis[0]));
    std::function<void(double, double, const PlanePoint&, const PlanePoint&, int)> refine =
        [&](double a, double b, const PlanePoint& pa, const PlanePoint& pb, int depth) {
            if (dist(pa, pb) <= max_chord || depth > 24) {
                out.pts.push_back(pb);
                return;
            }
            double m = (a + b) / 2;
            PlanePoint pm = at(m);
            refine(a, m, pa, pm, depth + 1);
            refine(m, b, pm, pb, depth + 1);
        };
    for (size_t i = 0; i + 1 < phis.size(); ++i) refine(phis[i], phis[i + 1], at(phis[i]), at(phis[i + 1]), 0);
    return out;
}

namespace {

const char* sub_palette[] = {"#d62728", "#1f77b4"};
const char* ext_palette[] = {"#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf", "#bcbd22"};
const char* quot_color = "#2ca02c";

std::string label_text(const BrickCatalog& c, const std::vector<int>& label) {
    std::string s;
    for (int b : label) s += c.name(b);
    return s;
}

void trace_all(const ModuleClass& cls, const std::vector<Ghost>& ghosts, const RenderOptions& opt, double chord,
               PictureScene& sc) {
    const auto& c = cls.cat();
    sc.wall_curves.clear();
    sc.ghost_curves.clear();
    for (int b : cls.bricks) {
        Curve cv;
        cv.id = b;
        cv.kind = "wall";
        cv.name = c.name(b);
        cv.line = trace_wall_curve(wall(cls, b).cone, 64, chord);
        cv.color = "#000000";
        if (!cv.line.pts.empty()) sc.wall_curves.push_back(cv);
    }
    if (!opt.ghosts) return;
    int nsub = 0, next = 0;
    std::map<IntVec, int> slots;
    for (size_t i = 0; i < ghosts.size(); ++i) {
        const Ghost& g = ghosts[i];
        if (g.kind == GhostKind::Extension && !opt.extension_ghosts) continue;
        Curve cv;
        cv.id = (int)i;
        cv.kind = kind_name(g.kind);
        auto it = opt.ghost_labels.find((int)i);
        cv.name = it != opt.ghost_labels.end() ? it->second + " = " + ghost_name(c, g) : ghost_name(c, g);
        cv.line = trace_wall_curve(g.domain, 64, chord);
        switch (g.kind) {
            case GhostKind::Subobject: cv.color = sub_palette[nsub++ % 2]; break;
            case GhostKind::Quotient:
                cv.color = quot_color;
                cv.dashed = true;
                break;
            case GhostKind::Extension: cv.color = ext_palette[next++ % 6]; break;
        }
        IntVec plane = make_hyperplane(g.domain.equalities[0]).primitive;
        cv.offset_slot = slots[plane]++;
        if (!cv.line.pts.empty()) sc.ghost_curves.push_back(cv);
    }
}

}  // namespace

PictureScene build_scene(const ModuleClass& cls, const RenderOptions& opt) {
    if (cls.rank() != 3) throw std::domain_error("rank-3-only: pictures need rank 3, use --report for a JSON dump");
    const auto& c = cls.cat();
    auto ghosts = enumerate_ghosts(cls);
    auto g = chamber_graph(cls);
    PictureScene sc;
    trace_all(cls, ghosts, opt, 0.05, sc);
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    auto grow = [&](const PlanePoint& p) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    };
    for (const auto& cv : sc.wall_curves)
        for (const auto& p : cv.line.pts) grow(p);
    for (const auto& cv : sc.ghost_curves)
        for (const auto& p : cv.line.pts) grow(p);
    if (xmin > xmax) xmin = -1, xmax = 1, ymin = -1, ymax = 1;
    double extent = std::max({xmax - xmin, ymax - ymin, 1e-9});
    sc.scale = 0.9 * viewport / extent;
    sc.center = {(xmin + xmax) / 2, (ymin + ymax) / 2};
    trace_all(cls, ghosts, opt, 0.005 * viewport / sc.scale, sc);
    for (const auto& ch : g.chambers()) {
        if (ch.id == g.source) continue;
        sc.labels.push_back({ch.id, stereographic(ch.sample), ch.label.size() == cls.bricks.size() ? "L" : label_text(c, ch.label)});
    }
    // wall intersections lying on both walls
    std::map<IntVec, size_t> seen;
    const auto& walls = g.complex.walls;
    for (size_t i = 0; i < walls.size(); ++i)
        for (size_t j = i + 1; j < walls.size(); ++j) {
            IntVec r = cross(c.dim(walls[i].brick), c.dim(walls[j].brick));
            if (is_zero(r)) continue;
            for (int s : {1, -1}) {
                IntVec ray = s > 0 ? r : neg(r);
                RatVec th(ray.begin(), ray.end());
                if (!walls[i].cone.contains(th) || !walls[j].cone.contains(th)) continue;
                IntVec key = make_hyperplane(ray).primitive;
                if (make_hyperplane(ray).flipped) key = neg(key);
                auto it = seen.find(key);
                if (it == seen.end()) {
                    seen[key] = sc.vertices.size();
                    sc.vertices.push_back({stereographic(th), {walls[i].brick, walls[j].brick}});
                } else {
                    auto& w = sc.vertices[it->second].walls;
                    for (int b : {walls[i].brick, walls[j].brick})
                        if (std::find(w.begin(), w.end(), b) == w.end()) w.push_back(b);
                }
            }
        }
    for (auto& v : sc.vertices) std::sort(v.walls.begin(), v.walls.end());
    return sc;
}

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s = buf;
    if (s == "-0.00") s = "0.00";
    return s;
}

std::string xml_escape(const std::string& s) {
    std::string o;
    for (char ch : s) {
        if (ch == '<') o += "&lt;";
        else if (ch == '>') o += "&gt;";
        else if (ch == '&') o += "&amp;";
        else o += ch;
    }
    return o;
}

}  // namespace

std::string render_svg(const ModuleClass& cls, const PictureScene& sc, const RenderOptions& opt) {
    const double offset_px = opt.offset_fraction * viewport;
    auto sx = [&](const PlanePoint& p) { return viewport / 2.0 + (p.x - sc.center.x) * sc.scale; };
    auto sy = [&](const PlanePoint& p) { return viewport / 2.0 - (p.y - sc.center.y) * sc.scale; };
    auto path_d = [&](const Curve& cv) {
        const auto& pts = cv.line.pts;
        std::string d;
        double off = cv.offset_slot * offset_px;
        for (size_t i = 0; i < pts.size(); ++i) {
            double x = sx(pts[i]), y = sy(pts[i]);
            if (off != 0 && pts.size() > 1) {
                size_t a = i == 0 ? 0 : i - 1, b = i + 1 < pts.size() ? i + 1 : i;
                double tx = sx(pts[b]) - sx(pts[a]), ty = sy(pts[b]) - sy(pts[a]);
                double len = std::hypot(tx, ty);
                if (len > 0) {
                    x += -ty / len * off;
                    y += tx / len * off;
                }
            }
            d += (i ? " L" : "M") + fmt(x) + " " + fmt(y);
        }
        if (cv.line.closed) d += " Z";
        return d;
    };
    nlohmann::json meta;
    meta["class"] = cls.names();
    meta["title"] = opt.title;
    meta["options"] = {{"ghosts", opt.ghosts},
                       {"extension_ghosts", opt.extension_ghosts},
                       {"offset_fraction", opt.offset_fraction}};
    meta["palette"] = {{"wall", "#000000"},
                       {"subobject", {sub_palette[0], sub_palette[1]}},
                       {"quotient", quot_color},
                       {"extension", std::vector<std::string>(std::begin(ext_palette), std::end(ext_palette))}};
    meta["offset_px"] = offset_px;
    meta["projection"] = "stereographic from -eta onto the tangent plane at eta";
    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1000\" height=\"1000\" viewBox=\"0 0 1000 1000\">\n";
    s += "<metadata>" + xml_escape(meta.dump()) + "</metadata>\n";
    s += "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"#ffffff\"/>\n";
    s += "<g id=\"walls\" fill=\"none\" stroke-width=\"2\">\n";
    for (const auto& cv : sc.wall_curves)
        s += "<path id=\"wall-" + cv.name + "\" stroke=\"" + cv.color + "\" d=\"" + path_d(cv) + "\"/>\n";
    s += "</g>\n<g id=\"ghosts\" fill=\"none\" stroke-width=\"2\">\n";
    for (const auto& cv : sc.ghost_curves) {
        s += "<path id=\"ghost-" + std::to_string(cv.id) + "\" class=\"" + cv.kind + "\" stroke=\"" + cv.color + "\"";
        if (cv.dashed) s += " stroke-dasharray=\"8 5\"";
        s += " d=\"" + path_d(cv) + "\"><title>" + xml_escape(cv.name) + "</title></path>\n";
    }
    s += "</g>\n<g id=\"vertices\" fill=\"#000000\">\n";
    for (const auto& v : sc.vertices)
        s += "<circle cx=\"" + fmt(sx(v.at)) + "\" cy=\"" + fmt(sy(v.at)) + "\" r=\"3\"/>\n";
    s += "</g>\n<g id=\"labels\" font-family=\"sans-serif\" font-size=\"16\" text-anchor=\"middle\">\n";
    for (const auto& l : sc.labels)
        s += "<text x=\"" + fmt(sx(l.at)) + "\" y=\"" + fmt(sy(l.at)) + "\">" + xml_escape(l.text) + "</text>\n";
    s += "</g>\n";
    if (!sc.ghost_curves.empty()) {
        s += "<g id=\"legend\" font-family=\"sans-serif\" font-size=\"14\">\n";
        int row = 0;
        for (const auto& cv : sc.ghost_curves) {
            std::string y = std::to_string(24 + 20 * row++);
            s += "<text x=\"20\" y=\"" + y + "\" fill=\"" + cv.color + "\">" + xml_escape(cv.name) + "</text>\n";
        }
        s += "</g>\n";
    }
    s += "</svg>\n";
    return s;
}

std::string render_picture(const ModuleClass& cls, const RenderOptions& opt) {
    return render_svg(cls, build_scene(cls, opt), opt);
}

}  // namespace ghostpic
