#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(TNIELSEN_BIN_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
    return r;
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

} // namespace

TEST_CASE("report command cross checks and exits zero") {
    RunResult r = run("report --A 1,0,0,1 --B 1,0,0,3 --c1 2 --c2 0 --format json");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["algebraic"]["nielsen_number"] == 4);
    CHECK(j["geometric"]["circle_count"] == 4);
    CHECK(j["minimal_circle_count"] == 4);
    CHECK(j["agreement"]["agree"] == true);
    CHECK(j["exit_code"] == 0);

    RunResult t = run("report --A 1,0,0,1 --B 1,0,0,3 --c1 2 --c2 0");
    CHECK(t.code == 0);
    CHECK(t.out.find("agreement: yes") != std::string::npos);
}

TEST_CASE("report command rejects invalid input") {
    CHECK(run("report --A 2,0,0,1 --B 1,0,0,2").code == 3);
    CHECK(run("report --A 1,0,0 --B 1,0,0,2").code == 3);
    CHECK(run("report --A 1,0,x,1 --B 1,0,0,2").code == 3);
    CHECK(run("report --format yaml").code == 3);
}

TEST_CASE("report command signals unsupported families") {
    CHECK(run("report --A -1,0,0,-1 --B 1,0,0,3").code == 4);
    CHECK(run("report --A 1,0,0,1 --B 1,2,0,1 --c2 1").code == 4);
}

TEST_CASE("classify command prints the normal form") {
    RunResult r = run("classify --A 1,2,0,-1 --B 1,-2,0,3");
    CHECK(r.code == 0);
    CHECK(r.out.find("case III") != std::string::npos);

    RunResult j = run("classify --A 1,2,0,-1 --B 1,-2,0,3 --format json");
    CHECK(j.code == 0);
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["classified"] == true);
    CHECK(doc["case"] == "III");

    RunResult u = run("classify");
    CHECK(u.code == 4);
    CHECK(u.out.find("unclassified") != std::string::npos);
}

TEST_CASE("sweep command reports every grid point") {
    RunResult r = run("sweep --family square --c1 0:2 --b4 2 --jobs 2");
    REQUIRE(r.code == 0);
    CHECK(count_lines(r.out) == 3);
    CHECK(r.out.find("c1=2 c2=0 b4=2 mf=2 nielsen=2 circles=2 agree") != std::string::npos);

    RunResult j = run("sweep --family triangulated --c1 1 --c2 -1 --format json --jobs 1");
    REQUIRE(j.code == 0);
    auto doc = nlohmann::json::parse(j.out);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 1);
    CHECK(doc[0]["minimal_circle_count"] == 1);
    CHECK(doc[0]["nielsen_number"] == 1);
    CHECK(doc[0]["circle_count"] == 1);
    CHECK(doc[0]["agree"] == true);

    CHECK(run("sweep --c1 3:1").code == 3);
}

TEST_CASE("dump command prints the model and its checks") {
    RunResult r = run("dump-model --family square --c1 1 --b4 2");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("boundary degree 1") != std::string::npos);
    CHECK(r.out.find("transport D0") != std::string::npos);
    CHECK(r.out.find("boundary squared is zero: yes") != std::string::npos);
    CHECK(r.out.find("transport identity") != std::string::npos);

    RunResult t = run("dump-model --family triangulated --c1 1 --c2 1 --source rederived");
    REQUIRE(t.code == 0);
    CHECK(t.out.find("transport identity holds: yes") != std::string::npos);
}

TEST_CASE("help and missing subcommand") {
    CHECK(run("--help").code == 0);
    CHECK(run("").code == 3);
}
