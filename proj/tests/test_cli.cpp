#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "doctest.h"
#include "raowqo/serialize.hpp"

namespace fs = std::filesystem;
using raowqo::json;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

fs::path scratch() {
    static const fs::path dir = [] {
        fs::path p = fs::temp_directory_path() / ("rao_wqo_cli_" + std::to_string(::getpid()));
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

std::string file(const std::string& name, const std::string& content) {
    const fs::path p = scratch() / name;
    std::ofstream(p) << content;
    return p.string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

Run run(const std::string& args, const std::string& env = "") {
    const std::string out = (scratch() / "stdout.txt").string();
    const std::string cmd = env + " " + RAO_WQO_CLI + std::string(" ") + args + " > " + out + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    Run r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    return r;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("graphic") {
    CHECK(run("graphic " + file("t.json", "[2,2,2]")).code == 0);
    const auto no = run("graphic " + file("n.json", "[3,3,1,1]"));
    CHECK(no.code == 1);
    CHECK(no.out.find("graphic: no") != std::string::npos);
    CHECK(run("graphic " + file("bad.json", "[2,2,")).code == 2);
    CHECK(run("graphic /nonexistent.json").code == 2);
    CHECK(run("graphic").code == 2);
    CHECK(run("frobnicate x").code == 2);
    CHECK(run("graphic " + file("p.json", "[2,2,2,2]")).out.find("length bound alone decides: yes") !=
          std::string::npos);
}

TEST_CASE("realize") {
    const auto tri = run("realize " + file("t.json", "[2,2,2]"));
    CHECK(tri.code == 0);
    CHECK(json::parse(tri.out) == json::parse(R"({"n":3,"edges":[[0,1],[0,2],[1,2]]})"));
    CHECK(run("realize " + file("n.json", "[3,3,1,1]")).code == 1);
    const auto all = run("realize --all " + file("c4.json", "[2,2,2,2]"));
    CHECK(all.code == 0);
    CHECK(json::parse(all.out).size() == 3);
    const std::string eleven = file("z.json", "[0,0,0,0,0,0,0,0,0,0,0]");
    CHECK(run("realize --all " + eleven).code == 2);
    CHECK(run("realize --all --cap 11 " + eleven).code == 0);
    CHECK(run("realize --all " + eleven, "RAO_WQO_CAP=11").code == 0);
    CHECK(run("realize --all " + eleven, "RAO_WQO_CAP=junk").code == 2);
}

TEST_CASE("rao-le and verify-witness") {
    const std::string edge = file("e.json", "[1,1]");
    const std::string tri = file("t.json", "[2,2,2]");
    const std::string c4 = file("c4.json", "[2,2,2,2]");
    const std::string w = (scratch() / "w.json").string();

    const auto yes = run("rao-le " + edge + " " + tri + " --witness " + w);
    CHECK(yes.code == 0);
    CHECK(yes.out == "yes method=exact\n");
    CHECK(run("verify-witness " + w).code == 0);

    const auto no = run("rao-le " + tri + " " + c4);
    CHECK(no.code == 1);
    CHECK(no.out == "no method=exact\n");
    CHECK(run("rao-le --method exact " + tri + " " + c4).code == 1);
    CHECK(run("rao-le --method padding " + tri + " " + c4).code == 3);

    std::string big = "[";
    for (int i = 0; i < 40; ++i) big += i ? ",2" : "2";
    big += "]";
    // 40 vertices of degree 2 minus a triangle leaves 37 degree-2 entries, which is graphic.
    CHECK(run("rao-le --method padding " + tri + " " + file("big.json", big)).code == 0);
    std::string odd = "[";
    for (int i = 0; i < 20; ++i) odd += i ? ",1" : "1";
    odd += "]";
    CHECK(run("rao-le --method padding " + tri + " " + file("odd.json", odd)).code == 3);
    CHECK(run("rao-le --method auto " + tri + " " + file("odd.json", odd)).code == 3);
    CHECK(run("rao-le --method exact " + tri + " " + file("odd.json", odd)).code == 2);

    const std::string nat = file("nat.json", R"({"order":{"t":"nat"},"entries":[{"d":1,"label":1},{"d":1,"label":1}]})");
    CHECK(run("rao-le " + edge + " " + nat).code == 2);
    CHECK(run("rao-le --method bogus " + edge + " " + tri).code == 2);

    SUBCASE("mutated witnesses") {
        json j = json::parse(slurp(w));
        json bad_phi = j;
        bad_phi["phi"] = {0, 0};
        const auto r1 = run("verify-witness " + file("bad_phi.json", bad_phi.dump()));
        CHECK(r1.code == 1);
        CHECK(r1.out.find("not injective") != std::string::npos);

        json cut = j;
        const auto a = j["phi"][0].get<std::size_t>();
        const auto b = j["phi"][1].get<std::size_t>();
        json edges = json::array();
        for (const auto& e : j["g2"]["edges"]) {
            if (!(e[0] == std::min(a, b) && e[1] == std::max(a, b))) edges.push_back(e);
        }
        cut["g2"]["edges"] = edges;
        const auto r2 = run("verify-witness " + file("cut.json", cut.dump()));
        CHECK(r2.code == 1);
        CHECK(r2.out.find("induced condition") != std::string::npos);

        CHECK(run("verify-witness " + file("junk.json", "{\"phi\": 3}")).code == 2);
    }

    SUBCASE("deterministic output") {
        const std::string w2 = (scratch() / "w2.json").string();
        const std::string k4 = file("k4.json", "[3,3,3,3]");
        const auto first = run("rao-le " + tri + " " + k4 + " --witness " + w);
        const auto second = run("rao-le " + tri + " " + k4 + " --witness " + w2);
        CHECK(first.code == 0);
        CHECK(first.out == second.out);
        CHECK(slurp(w) == slurp(w2));
    }
}

TEST_CASE("good-pair") {
    const std::string same = file("same.json", "[[3,2,2,1],[3,2,2,1]]");
    const std::string w = (scratch() / "gp.json").string();
    const auto found = run("good-pair --max-degree 3 --witness " + w + " " + same);
    CHECK(found.code == 0);
    CHECK(found.out.rfind("pair 0 1", 0) == 0);
    CHECK(run("verify-witness " + w).code == 0);

    const std::string anti = file("anti.json", "[[3,3,3,3],[2,2,2,2,2],[1,1]]");
    CHECK(run("good-pair --max-degree 3 " + anti).code == 1);
    const std::string k4 = file("k4.json", "[3,3,3,3]");
    const std::string c5 = file("c5.json", "[2,2,2,2,2]");
    const std::string e = file("e.json", "[1,1]");
    CHECK(run("rao-le " + k4 + " " + c5).code == 1);
    CHECK(run("rao-le " + k4 + " " + e).code == 1);
    CHECK(run("rao-le " + c5 + " " + e).code == 1);

    CHECK(run("good-pair --max-degree 2 " + anti).code == 2);
    CHECK(run("good-pair " + anti).code == 2);
    CHECK(run("good-pair --max-degree 3 " + file("notarray.json", "{}")).code == 2);
}

TEST_CASE("higman-le") {
    const auto yes = run("higman-le --order nat " + file("a.json", "[1,2]") + " " + file("b.json", "[1,3,2]"));
    CHECK(yes.code == 0);
    CHECK(yes.out == "embeds: 0 1\n");
    const std::string empty = file("empty.json", "[]");
    CHECK(run("higman-le " + empty + " " + empty).code == 0);
    CHECK(run("higman-le " + file("c.json", "[2,2]") + " " + file("d.json", "[2,1,1]")).code == 1);
    CHECK(run("higman-le --order fin:3 " + file("f.json", "[1,3]") + " " + file("g.json", "[3,1,3]")).code == 0);
    CHECK(run("higman-le --order fin:3 " + file("h.json", "[4]") + " " + file("g.json", "[3,1,3]")).code == 2);
    CHECK(run("higman-le --order unit " + file("a.json", "[1,2]") + " " + empty).code == 2);
    CHECK(run("higman-le --order " + std::string("'{\"t\":\"seq\",\"v\":{\"t\":\"nat\"}}' ") +
              file("s1.json", R"([{"t":"seq","v":[{"t":"nat","v":1}]}])") + " " +
              file("s2.json", R"([{"t":"seq","v":[{"t":"nat","v":0},{"t":"nat","v":2}]}])"))
              .code == 0);
    CHECK(run("higman-le --order wat " + empty + " " + empty).code == 2);
}

TEST_CASE("every input lands on a documented exit code") {
    std::mt19937_64 rng(1);
    const std::string alphabet = "[]{},:0123456789-\"tdnvlabeorderentriesphig ";
    const char* commands[] = {"graphic", "realize", "realize --all", "verify-witness", "good-pair --max-degree 2"};
    for (int trial = 0; trial < 60; ++trial) {
        std::string text;
        if (trial % 3 == 0) {
            // Structurally plausible sequence with random values.
            text = "[";
            const int len = static_cast<int>(rng() % 6);
            for (int i = 0; i < len; ++i) text += (i ? "," : "") + std::to_string(static_cast<int>(rng() % 9) - 2);
            text += "]";
        } else {
            const std::size_t len = rng() % 40;
            for (std::size_t i = 0; i < len; ++i) text += alphabet[rng() % alphabet.size()];
        }
        const std::string f = file("fuzz.json", text);
        const std::string cmd = commands[trial % 5];
        const auto r = run(cmd + " " + f);
        CAPTURE(text);
        CAPTURE(cmd);
        CHECK((r.code >= 0 && r.code <= 3));
        const auto pair = run("rao-le " + f + " " + f);
        CHECK((pair.code >= 0 && pair.code <= 3));
    }
}

TEST_SUITE_END();
