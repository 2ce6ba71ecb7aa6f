// End-to-end checks of the installed CLI binary: exit codes, JSON output,
// CSV schemas. The binary path arrives in the DBLCOV_CLI environment
// variable (set by the test harness).

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct CmdResult {
    int exit_code;
    std::string out;
};

std::string cli_path() {
    const char* p = std::getenv("DBLCOV_CLI");
    REQUIRE_MESSAGE(p != nullptr, "DBLCOV_CLI must point at the CLI binary");
    return p;
}

CmdResult run(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int rc = pclose(pipe);
    return CmdResult{WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, std::move(out)};
}

} // namespace

TEST_CASE("census runs clean and emits the tables") {
    auto r = run("census --k-max 8");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["ok"] == true);
    CHECK(j["results"]["tables"]["dim"].size() == 6);
}

TEST_CASE("census CSV schema") {
    auto r = run("census --out csv --k-max 6");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("n,k,d,dim_Vd,dim_VW,dim_Z,dim_W,fiber_dim") != std::string::npos);
}

TEST_CASE("lift of a canned bundle") {
    auto r = run("lift --canned quadric-surface --samples 5");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["command"] == "lift");
    CHECK(j["ok"] == true);
}

TEST_CASE("gen then lift through a file") {
    std::string path = "cli_test_tmp_bundle.json";
    auto g = run("gen --n 2 --d 1 --k 2 --seed 4 -o " + path);
    CHECK(g.exit_code == 0);
    auto l = run("lift --input " + path + " --samples 3");
    CHECK(l.exit_code == 0);
    json j = json::parse(l.out);
    CHECK(j["ok"] == true);
    std::remove(path.c_str());
}

TEST_CASE("roundtrip across the extremes") {
    auto r = run("roundtrip --n 2 --d 3 --k 7 --samples 3 --seed 2");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["results"]["dimension"] == 0);
}

TEST_CASE("exit codes distinguish the failure modes") {
    CHECK(run("gen --name no-such-bundle").exit_code == 14);        // unknown-name
    CHECK(run("census --n 12").exit_code == 7);                     // cap-exceeded
    CHECK(run("lift").exit_code == 13);                             // missing input

    // tampered image: not in the square of the ideal
    std::string path = "cli_test_tampered.json";
    auto g = run("gen --name quadric-surface -o " + path);
    REQUIRE(g.exit_code == 0);
    {
        std::ifstream is(path);
        json b = json::parse(is);
        // replace the branch/divisor form with an explicit bad image
        json ring = b["polys"]["fk"]["ring"];
        json gpoly = {{"ring", ring},
                      {"terms", json::array({{{"e", {4, 0, 0}}, {"c", 1}}})}};
        b["polys"].erase("g2d");
        b["polys"]["g"] = gpoly;
        std::ofstream os(path);
        os << b.dump();
    }
    auto l = run("lift --input " + path);
    CHECK(l.exit_code == 3); // not-in-ideal-square
    std::remove(path.c_str());
}

TEST_CASE("hilbert verify table") {
    auto r = run("hilbert --a-max 2 --b-max 2 --m-max 6 --verify");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["ok"] == true);
}
