#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#ifndef SKAB_CLI
#error "SKAB_CLI must name the command-line binary"
#endif

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + SKAB_CLI + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

} // namespace

TEST_CASE("params") {
    const auto r = run("params --s 1 --format json");
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["params"][0]["q0"] == 2);
    CHECK(j["params"][0]["q"] == 8);
    CHECK(j["params"][0]["genus"] == 196);
    CHECK(run("params --s 7").status == 2);
}

TEST_CASE("semigroup") {
    const auto r = run("semigroup --s 1 --point rational --emit stats --format json");
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["stats"]["multiplicity"] == 40);
    CHECK(j["stats"]["conductor"] == 392);
    CHECK(j["stats"]["symmetric"] == true);

    const auto g = run("semigroup --s 1 --point quartic --emit generators --format json");
    CHECK(nlohmann::json::parse(g.out)["values"] ==
          nlohmann::json::array({57, 61, 63, 64, 65, 112, 113, 162, 211}));

    CHECK(run("semigroup --s 4 --point generic --emit stats").status == 2);
    CHECK(run("semigroup --s 1 --point rational --emit witnesses").status == 2);
    CHECK(run("semigroup --s 1 --point nowhere --emit stats").status == 2);
}

TEST_CASE("usage errors") {
    CHECK(run("").status == 2);
    CHECK(run("frobnicate").status == 2);
    CHECK(run("params").status == 2);
    CHECK(run("params --s 1 --format xml").status == 2);
    CHECK(run("verify --s 2..1").status == 2);
    CHECK(run("verify --s one").status == 2);
    CHECK(run("params --s 1", "SKAB_THREADS=0").status == 2);
}

TEST_CASE("table1") {
    const auto r = run("table1 --max-s 2 --format csv");
    CHECK(r.status == 0);
    CHECK(r.out == "s,F1,F2,F3,F4,F5,F6,F,g\n1,146,31,8,0,9,2,196,196\n2,12584,2393,192,96,87,24,15376,15376\n");
    CHECK(run("table1 --max-s 4").status == 2);
}

TEST_CASE("verify and fault injection") {
    CHECK(run("verify --s 1..2").status == 0);
    CHECK(run("verify --s 1..1 --corrupt-generator").status == 1);
}

TEST_CASE("output is byte-identical across runs and thread counts") {
    const auto a = run("table1 --max-s 3 --format json", "SKAB_THREADS=1");
    const auto b = run("table1 --max-s 3 --format json", "SKAB_THREADS=4");
    const auto c = run("table1 --max-s 3 --format json");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    const auto w1 = run("semigroup --s 2 --point generic --emit witnesses --format json", "SKAB_THREADS=1");
    const auto w2 = run("semigroup --s 2 --point generic --emit witnesses --format json", "SKAB_THREADS=3");
    CHECK(w1.out == w2.out);
}

TEST_CASE("--out writes the same bytes") {
    const auto path = std::filesystem::temp_directory_path() / "skab_cli_test_out.json";
    const auto r = run("verify --s 1 --format json --out " + path.string());
    CHECK(r.status == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream file;
    file << in.rdbuf();
    CHECK(file.str() == run("verify --s 1 --format json").out);
    std::filesystem::remove(path);
}
