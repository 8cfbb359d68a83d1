#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <sys/wait.h>

using nlohmann::json;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + GHOSTPIC_BIN + std::string(" ") + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

const std::string fig2 = "--type-a 3 --orient LL --class S1,P3,I2,S3";

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "ghostpic_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("ghosts subcommand lists the fig2 subobject ghosts") {
    auto r = run("ghosts " + fig2);
    REQUIRE(r.status == 0);
    auto j = json::parse(r.out);
    std::set<std::string> names;
    for (const auto& g : j["ghosts"]) names.insert(g["name"]);
    CHECK(names.count("Gh(P2;P3)"));
    CHECK(names.count("Gh(S2;I2)"));
    CHECK(j["bifurcations"]["links"].size() == 1);
}

TEST_CASE("mgs --all contains S1,S3,I2") {
    auto r = run("mgs " + fig2 + " --all");
    REQUIRE(r.status == 0);
    auto j = json::parse(r.out);
    bool found = false;
    for (const auto& m : j["list"]) found = found || m["mgs"] == json::array({"S1", "S3", "I2"});
    CHECK(found);
    CHECK(j["count"] == j["list"].size());
    CHECK(j["truncated"] == false);
}

TEST_CASE("mgs check of a given sequence") {
    auto r = run("mgs " + fig2 + " --mgs S1,S3");
    REQUIRE(r.status == 0);
    auto j = json::parse(r.out);
    CHECK(j["hom_orthogonal"] == true);
    CHECK(j["maximal"] == false);
    CHECK(j["insertable"]["brick"] == "I2");
    CHECK(run("mgs " + fig2 + " --mgs S1,S1").status == 2);
}

TEST_CASE("path subcommand accepts negative offsets") {
    auto r = run("path " + fig2 + " --h -5,1,2 --k 1,2,3");
    REQUIRE(r.status == 0);
    auto j = json::parse(r.out);
    CHECK(j["linear_mgs"] == json::array({"S3", "I2", "P3", "S1"}));
    CHECK(j["sequence"] == "S3,I2,Gh(S2;I2),P3,Gh(P2;P3),S1");
    CHECK(run("path " + fig2 + " --h 1,1,1 --k 1,0,1").status == 2);
    CHECK(run("path " + fig2 + " --h -1,0,-1 --k 1,1,1").status == 2);
}

TEST_CASE("hn subcommand") {
    auto r = run("hn " + fig2 + " --mgs S1,S3,I2 --module P3");
    REQUIRE(r.status == 0);
    auto j = json::parse(r.out);
    REQUIRE(j["layers"].size() == 2);
    CHECK(j["layers"][0]["brick"] == "S1");
    CHECK(j["layers"][1]["brick"] == "I2");
}

TEST_CASE("chambers and catalog subcommands") {
    auto r = run("chambers " + fig2);
    REQUIRE(r.status == 0);
    CHECK(json::parse(r.out)["chambers"].size() == 10);
    auto c = run("catalog --builtin kronecker");
    REQUIRE(c.status == 0);
    auto j = json::parse(c.out);
    CHECK(j["complete"] == false);
    CHECK(j["indecs"].size() == 4);
}

TEST_CASE("catalog files round trip through --catalog") {
    auto file = scratch("kronecker.json");
    std::ofstream(file) << run("catalog --builtin kronecker").out;
    auto r = run("ghosts --catalog " + file.string() + " --class P1,P2,M");
    REQUIRE(r.status == 0);
    CHECK(json::parse(r.out)["ghosts"].size() == 2);
    std::ofstream(scratch("broken.json")) << "{\"quiver\": 3}";
    CHECK(run("ghosts --catalog " + scratch("broken.json").string() + " --class P1").status == 2);
    CHECK(run("ghosts --catalog " + scratch("missing.json").string()).status == 2);
}

TEST_CASE("picture subcommand") {
    auto out = scratch("fig2.svg");
    REQUIRE(run("picture " + fig2 + " --out " + out.string()).status == 0);
    std::ifstream in(out);
    std::string svg((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(run("picture " + fig2).out == svg);
    CHECK(run("picture --builtin kronecker").status == 2);
    auto rep = run("picture --builtin kronecker --report");
    REQUIRE(rep.status == 0);
    CHECK(json::parse(rep.out)["schema"] == "ghostpic-report/1");
}

TEST_CASE("usage errors exit with status 2") {
    CHECK(run("").status == 2);
    CHECK(run("bogus").status == 2);
    CHECK(run("chambers --type-a 3 --orient LL --class S1,X9").status == 2);
    CHECK(run("chambers --type-a 3 --orient LX --class S1").status == 2);
    CHECK(run("chambers --type-a 3 --orient LL --class S1 --nope").status == 2);
    CHECK(run("--help").status == 0);
}

TEST_CASE("guard overrides from the environment") {
    CHECK(run("chambers " + fig2, "GHOSTPIC_GUARD=2").status == 1);
    CHECK(run("chambers " + fig2, "GHOSTPIC_GUARD=x").status == 2);
    CHECK(run("chambers " + fig2, "GHOSTPIC_GUARD=50").status == 0);
}

TEST_CASE("verify is deterministic and passes") {
    auto a = run("verify --seed 3");
    CHECK(a.status == 0);
    CHECK(a.out.find("FAIL") == std::string::npos);
    CHECK(run("verify --seed 3").out == a.out);
}
