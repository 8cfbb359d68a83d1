#include "ghostpic/fixtures.hpp"
#include "ghostpic/render.hpp"
#include "ghostpic/report.hpp"
#include "ghostpic/search.hpp"
#include "ghostpic/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace ghostpic;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    int type_a = 0;
    std::string orient;
    std::string builtin_name;
    std::string catalog_file;
    std::string members;
    bool all = false;
    std::string h, k;
    std::string mgs;
    std::string module;
    std::string out;
    uint64_t seed = 0;
    bool report = false;
};

std::shared_ptr<const BrickCatalog> load(const Config& cfg) {
    int sources = (cfg.type_a > 0) + !cfg.builtin_name.empty() + !cfg.catalog_file.empty();
    if (sources != 1) throw UsageError("choose exactly one of --type-a, --builtin, --catalog");
    if (cfg.type_a > 0) {
        std::string word = cfg.orient;
        if (word.empty() && cfg.type_a > 1) throw UsageError("--type-a needs --orient");
        return std::make_shared<const BrickCatalog>(generate_type_a(cfg.type_a, word));
    }
    if (!cfg.builtin_name.empty()) return std::make_shared<const BrickCatalog>(builtin(cfg.builtin_name));
    std::ifstream in(cfg.catalog_file);
    if (!in) throw UsageError("cannot read " + cfg.catalog_file);
    std::stringstream ss;
    ss << in.rdbuf();
    return std::make_shared<const BrickCatalog>(load_catalog(ss.str()));
}

ModuleClass load_class(const Config& cfg) {
    auto cat = load(cfg);
    if (cfg.members.empty()) {
        std::vector<int> all;
        for (int i = 0; i < cat->size(); ++i) all.push_back(i);
        return make_class(cat, all);
    }
    return make_class(cat, cfg.members);
}

void emit(const Config& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream o(cfg.out, std::ios::binary);
    if (!o) throw UsageError("cannot write " + cfg.out);
    o << text;
}

void emit(const Config& cfg, const json& j) { emit(cfg, j.dump(2) + "\n"); }

LinearPath path_of(const Config& cfg, size_t n) {
    if (cfg.h.empty() || cfg.k.empty()) throw UsageError("--h and --k are required");
    LinearPath p{parse_ratvec(cfg.h), parse_ratvec(cfg.k)};
    check_path(p, n);
    return p;
}

std::vector<int> parse_sequence(const ModuleClass& cls, const std::string& csv) {
    std::vector<int> seq;
    for (const auto& s : split_csv(csv)) seq.push_back(cls.cat().require(s));
    validate_sequence(cls, seq);
    return seq;
}

json path_json(const LinearPath& p) {
    json h = json::array(), k = json::array();
    for (const auto& x : p.h) h.push_back(rat_str(x));
    for (const auto& x : p.k) k.push_back(rat_str(x));
    return {{"h", h}, {"k", k}};
}

json mgs_json(const ModuleClass& cls, const Mgs& m) {
    auto lin = find_linear_realization(cls, m.walls);
    return {{"mgs", names_json(cls.cat(), m.walls)},
            {"linear_realization", lin ? path_json(*lin) : json(nullptr)},
            {"chamber_path", m.chamber_ids}};
}

int run_mgs(const Config& cfg) {
    auto cls = load_class(cfg);
    const auto& c = cls.cat();
    auto g = chamber_graph(cls);
    if (cfg.all) {
        auto e = enumerate_mgs(g, cls);
        json j;
        j["count"] = e.count;
        j["truncated"] = e.truncated;
        json list = json::array();
        for (const auto& m : e.list) list.push_back(mgs_json(cls, m));
        j["list"] = list;
        emit(cfg, j);
        return 0;
    }
    if (!cfg.mgs.empty()) {
        auto seq = parse_sequence(cls, cfg.mgs);
        json j;
        j["mgs"] = names_json(c, seq);
        auto orth = check_relative_hom_orthogonality(cls, seq);
        j["hom_orthogonal"] = orth.ok;
        if (!orth.ok) j["witness"] = {{"from", c.name(seq[orth.j])}, {"to", c.name(seq[orth.k])}, {"image", c.name(orth.image)}};
        auto mx = check_mgs_maximality(cls, seq);
        j["maximal"] = mx.maximal;
        j["maximality_asserted"] = mx.asserted;
        if (!mx.maximal) j["insertable"] = {{"brick", c.name(mx.inserted)}, {"slot", mx.slot}};
        j["hn_minimal"] = check_hn_minimality(cls, seq);
        json path = nullptr;
        for (const auto& m : enumerate_mgs(g, cls).list)
            if (m.walls == seq) path = m.chamber_ids;
        j["chamber_path"] = path;
        auto lin = find_linear_realization(cls, seq);
        j["linear_realization"] = lin ? path_json(*lin) : json(nullptr);
        emit(cfg, j);
        return 0;
    }
    auto p = path_of(cfg, cls.rank());
    auto seq = linear_mgs(cls, p);
    json path = nullptr;
    for (const auto& m : enumerate_mgs(g, cls).list)
        if (m.walls == seq) path = m.chamber_ids;
    emit(cfg, json{{"mgs", names_json(c, seq)}, {"linear_realization", path_json(p)}, {"chamber_path", path}});
    return 0;
}

int run_hn(const Config& cfg) {
    auto cls = load_class(cfg);
    const auto& c = cls.cat();
    if (cfg.mgs.empty() || cfg.module.empty()) throw UsageError("hn needs --mgs and --module");
    auto seq = parse_sequence(cls, cfg.mgs);
    auto g = chamber_graph(cls);
    std::optional<Mgs> found;
    for (const auto& m : enumerate_mgs(g, cls).list)
        if (m.walls == seq) found = m;
    if (!found) throw UsageError("not a maximal green sequence of the class: " + cfg.mgs);
    ModuleSum x;
    for (const auto& s : split_csv(cfg.module)) x.push_back(c.require(s));
    x = make_sum(x);
    auto hn = hn_stratification(cls, g, *found, x);
    json layers = json::array();
    for (auto [i, mult] : hn.layers) layers.push_back({{"index", i}, {"brick", c.name(seq[i])}, {"multiplicity", mult}});
    json steps = json::array();
    for (const auto& s : hn.steps)
        steps.push_back({{"module", c.name(s.module)}, {"layer", s.layer}, {"kernel", s.pair ? c.name(s.pair->sub) : ""}});
    emit(cfg, json{{"module", c.name(x)}, {"mgs", names_json(c, seq)}, {"layers", layers}, {"steps", steps}});
    return 0;
}

int run_path(const Config& cfg) {
    auto cls = load_class(cfg);
    const auto& c = cls.cat();
    auto p = path_of(cfg, cls.rank());
    auto ghosts = enumerate_ghosts(cls);
    auto bif = classify_bifurcations(cls, ghosts);
    auto s = mgs_with_ghosts(cls, p, ghosts, bif);
    json events = json::array();
    for (const auto& e : s.events) {
        json ev = {{"t", rat_str(e.t)}, {"stable", e.stable}, {"concurrent", e.concurrent}};
        if (e.ghost) {
            ev["ghost"] = ghost_name(c, ghosts[e.object]);
            ev["kind"] = kind_name(ghosts[e.object].kind);
        } else {
            ev["brick"] = c.name(e.object);
        }
        events.push_back(ev);
    }
    emit(cfg, json{{"path", path_json(p)},
                   {"events", events},
                   {"linear_mgs", names_json(c, linear_mgs(cls, p))},
                   {"sequence", format_schedule(cls, ghosts, s)}});
    return 0;
}

int run_picture(const Config& cfg) {
    auto cls = load_class(cfg);
    if (cfg.report) {
        emit(cfg, export_report(cls));
        return 0;
    }
    if (cls.rank() != 3)
        throw UsageError("rank-3-only: pictures need rank 3 (this class has rank " + std::to_string(cls.rank()) +
                         "); use --report for the JSON report");
    RenderOptions opt;
    opt.title = cls.names();
    emit(cfg, render_picture(cls, opt));
    return 0;
}

int run_verify(const Config& cfg) {
    VerifyOptions opt;
    opt.seed = cfg.seed;
    auto results = ghostpic::run_verify(opt);
    emit(cfg, format_table(results));
    for (const auto& r : results)
        if (!r.ok()) return 1;
    return 0;
}

void apply_guard() {
    const char* g = std::getenv("GHOSTPIC_GUARD");
    if (!g) return;
    char* end = nullptr;
    unsigned long long v = std::strtoull(g, &end, 10);
    if (!end || *end || v == 0) throw UsageError("GHOSTPIC_GUARD must be a positive integer");
    max_mgs_paths = v;
    max_bricks = v;
    max_hyperplanes = v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ghostpic: relative pictures, maximal green sequences and ghosts"};
    app.require_subcommand(1);
    // -h is taken by the path offset
    app.set_help_flag("--help", "print this help message and exit");
    Config cfg;
    auto common = [&](CLI::App* s) {
        s->add_option("--type-a", cfg.type_a, "generate a type-A catalog of this rank");
        s->add_option("--orient", cfg.orient, "orientation word over {L,R}");
        s->add_option("--builtin", cfg.builtin_name, "builtin catalog name");
        s->add_option("--catalog", cfg.catalog_file, "catalog JSON file");
        s->add_option("--class", cfg.members, "comma separated brick names");
        s->add_option("--out", cfg.out, "output path");
    };
    auto cat_cmd = app.add_subcommand("catalog", "dump the brick catalog");
    auto cham = app.add_subcommand("chambers", "chambers and the chamber graph");
    auto mgs = app.add_subcommand("mgs", "maximal green sequences");
    auto gh = app.add_subcommand("ghosts", "ghost census and bifurcations");
    auto hn = app.add_subcommand("hn", "HN stratification along an MGS");
    auto path = app.add_subcommand("path", "crossing schedule of a linear path");
    auto pic = app.add_subcommand("picture", "rank-3 SVG picture or JSON report");
    auto ver = app.add_subcommand("verify", "run the property suites");
    for (auto* s : {cat_cmd, cham, mgs, gh, hn, path, pic}) common(s);
    mgs->add_flag("--all", cfg.all, "enumerate all MGSs");
    for (auto* s : {mgs, path}) {
        s->add_option("--h", cfg.h, "path offset, comma separated rationals");
        s->add_option("--k", cfg.k, "path direction, strictly positive");
    }
    for (auto* s : {mgs, hn}) s->add_option("--mgs", cfg.mgs, "comma separated brick sequence");
    hn->add_option("--module", cfg.module, "module to stratify (comma separated summands)");
    pic->add_flag("--report", cfg.report, "emit the JSON report instead of SVG");
    ver->add_option("--seed", cfg.seed, "seed for the random suites");
    ver->add_option("--out", cfg.out, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    try {
        apply_guard();
        if (*cat_cmd) {
            emit(cfg, dump_catalog(*load(cfg)) + "\n");
            return 0;
        }
        if (*cham) {
            auto cls = load_class(cfg);
            auto j = chambers_json(cls, chamber_graph(cls));
            j["class"] = names_json(cls.cat(), cls.bricks);
            emit(cfg, j);
            return 0;
        }
        if (*mgs) return run_mgs(cfg);
        if (*gh) {
            auto cls = load_class(cfg);
            auto j = ghosts_json(cls);
            j["class"] = names_json(cls.cat(), cls.bricks);
            emit(cfg, j);
            return 0;
        }
        if (*hn) return run_hn(cfg);
        if (*path) return run_path(cfg);
        if (*pic) return run_picture(cfg);
        if (*ver) return run_verify(cfg);
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 1;
    } catch (const std::length_error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
