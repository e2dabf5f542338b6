#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
    int code;
    std::string out;
};

Run cli(const std::string& args) {
    const std::string cmd = std::string("'") + GYROBALL_CLI + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json json_of(const Run& r) {
    REQUIRE(r.code == 0);
    return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("point commands") {
    CHECK(json_of(cli("add [0,0] [0.3,0.4]")) == nlohmann::json::parse("[0.3,0.4]"));
    const auto s = json_of(cli("add [0.6,0] [0,0.6]"));
    CHECK(s[0].get<double>() == doctest::Approx(0.6));
    CHECK(s[1].get<double>() == doctest::Approx(0.48));
    CHECK(json_of(cli("dist [0.5,0] [0.8,0]")).get<double>() == doctest::Approx(0.5493061443340548457));
    CHECK(json_of(cli("rapidity [0.8,0]")).get<double>() == doctest::Approx(1.0986122886681096914));
    CHECK(json_of(cli("gamma [0.6,0]")).get<double>() == doctest::Approx(1.25));
    const auto t = json_of(cli("thomas [0.5,0] [0,0.5]"));
    CHECK(t["angle"].get<double>() == doctest::Approx(-0.1433475689053653576));
    CHECK(cli("add [0,0] [0.3,0.4]").out.back() == '\n');
}

TEST_CASE("isometry commands") {
    const auto r = json_of(cli("reflect [0,0]"));
    CHECK(r["tau"] == nlohmann::json::parse("[[-1.0,0.0],[0.0,-1.0]]"));
    CHECK(r["u"] == nlohmann::json::parse("[0.0,0.0]"));

    const auto c = json_of(cli(R"(compose '{"u":[0.5,0],"tau":[[1,0],[0,1]]}' '{"u":[0,0.5],"tau":[[1,0],[0,1]]}')"));
    CHECK(c["tau"][0][1].get<double>() == doctest::Approx(1.0 / 7.0));

    const auto moved = json_of(cli(R"(apply '{"u":[0.5,0],"tau":[[0,-1],[1,0]]}' [0,0])"));
    CHECK(moved[0].get<double>() == doctest::Approx(0.5));

    const auto t = json_of(cli("transport [0.1,0.2] [-0.3,0.4]"));
    CHECK(t.contains("tau"));
}

TEST_CASE("decompose reads probe pairs from a file") {
    const std::string path = "cli_probes.json";
    {
        // Probes of w -> [0.5,0] (+) w, a pure translation.
        std::ofstream f(path);
        f << R"({"probes": [[[0,0],[0.5,0]], [[0.5,0],[0.8,0]], [[-0.5,0],[0,0]], [[0,0.5],[0.5,0.4330127018922193]]]})";
    }
    const auto d = json_of(cli("decompose @" + path));
    CHECK(d["u"][0].get<double>() == doctest::Approx(0.5));
    CHECK(d["u"][1].get<double>() == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(d["tau"][0][0].get<double>() == doctest::Approx(1.0));
    CHECK(d["max_residual"].get<double>() <= 1e-9);

    {
        std::ofstream f(path);
        f << R"([[[0,0],[0,0]], [[0.5,0],[0.25,0]], [[0,0.5],[0,0.25]]])";
    }
    CHECK(cli("decompose @" + path).code == 6);
    std::remove(path.c_str());
}

TEST_CASE("exit codes") {
    CHECK(cli("add [1,0] [0,0]").code == 3);
    CHECK(cli("add [0.1,0] [0,0,0]").code == 4);
    CHECK(cli("add [0.1, [0,0]").code == 2);
    CHECK(cli(R"(apply '{"u":[0,0],"tau":[[1,1],[0,1]]}' [0,0])").code == 5);
    CHECK(cli("check nope").code == 2);
    CHECK(cli("frobnicate").code == 2);
    CHECK(cli("check all --trials 20 --tol 1e-30").code == 1);
}

TEST_CASE("check output is byte-identical across runs") {
    const Run a = cli("--seed 42 check all -n 3 --trials 100");
    const Run b = cli("--seed 42 check all -n 3 --trials 100");
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j["suite"] == "all");
    CHECK(j["passed"] == true);
    CHECK(j["seed"] == 42);
    CHECK(j["dimension"] == 3);
}
