#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>

#ifndef NUBAR_CLI_PATH
#error "NUBAR_CLI_PATH must point at the built command-line binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = env.empty() ? std::string(NUBAR_CLI_PATH) + " " + args
                                  : env + " " + std::string(NUBAR_CLI_PATH) + " " + args;
    cmd += " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

nlohmann::json parse(const RunResult& r) {
    return nlohmann::json::parse(r.out);
}

std::string strip_timing(std::string text) {
    nlohmann::json j = nlohmann::json::parse(text);
    j.erase("timing_ms");
    return j.dump();
}

const std::string kCusp = "'{\"vars\":[\"x\",\"y\"],\"generators\":[[2,0],[0,3]]}'";

} // namespace

TEST_CASE("nubar command: exact value, certificate, oracle") {
    RunResult r = run("nubar -I " + kCusp + " -f '[1,1]' --oracle");
    CHECK(r.exit_code == 0);
    nlohmann::json j = parse(r);
    CHECK(j["command"] == "nubar");
    CHECK(j["result"] == "5/6");
    CHECK(j["certificate"]["normal"] == nlohmann::json::array({3, 2}));
    CHECK(j["certificate"]["level"] == 6);
    CHECK(j["oracle"]["consistent"] == true);
    CHECK(j["oracle"]["max"] == "5/6");
    CHECK(j.contains("timing_ms"));
    CHECK(j.contains("inputs_echo"));

    // without the flag there is no oracle block
    RunResult r2 = run("nubar -I " + kCusp + " -f '[1,1]'");
    CHECK_FALSE(parse(r2).contains("oracle"));
}

TEST_CASE("polynomial input with coefficients") {
    RunResult r = run(
        "nubar -I " + kCusp +
        " -f '{\"terms\":[{\"exp\":[1,1],\"coeff\":\"1\"},"
        "{\"exp\":[3,0],\"coeff\":\"-2\"}]}'");
    CHECK(r.exit_code == 0);
    CHECK(parse(r)["result"] == "5/6");
}

TEST_CASE("verify command: a false statement is still a consistent run") {
    RunResult r = run("verify -I " + kCusp + " -f '[0,1]' -p 1 -q 2");
    CHECK(r.exit_code == 0); // all five routes agree the statement is false
    nlohmann::json j = parse(r);
    CHECK(j["result"]["consistent"] == true);
    CHECK(j["result"]["membership"] == false);
    CHECK(j["result"]["nubar"] == "1/3");

    RunResult t = run("verify -I " + kCusp + " -f '[1,1]' -p 5 -q 6");
    CHECK(t.exit_code == 0);
    nlohmann::json jt = parse(t);
    CHECK(jt["result"]["membership"] == true);
}

TEST_CASE("closure and certificate commands") {
    RunResult r = run("closure -I " + kCusp + " -k 1");
    CHECK(r.exit_code == 0);
    nlohmann::json j = parse(r);
    CHECK(j["result"]["generators"] == nlohmann::json::array({
        nlohmann::json::array({0, 3}), nlohmann::json::array({1, 2}),
        nlohmann::json::array({2, 0})}));

    RunResult c = run("certificate -I " + kCusp + " -m '[1,1]' -p 5 -q 6");
    CHECK(c.exit_code == 0);
    nlohmann::json jc = parse(c);
    CHECK(jc["result"]["m"] == 1);
}

TEST_CASE("branch command") {
    RunResult r = run("branch -b 4,6,7 -k 2");
    CHECK(r.exit_code == 0);
    nlohmann::json j = parse(r);
    CHECK(j["result"]["delta"] == 8);
    CHECK(j["result"]["conductor"] == 16);
    CHECK(j["result"]["semigroup_generators"] == nlohmann::json::array({4, 6, 13}));
    CHECK(j["closure_window"]["orders"][0] == 8);
}

TEST_CASE("malformed input exits 2 with a structured error") {
    RunResult r = run("nubar -I '{\"vars\":[\"x\"],\"generators\":[[-1]]}' -f '[1]'");
    CHECK(r.exit_code == 2);
    nlohmann::json j = parse(r);
    CHECK(j.contains("error"));
    CHECK(j.contains("message"));

    RunResult miss = run("nubar -f '[1,1]'");
    CHECK(miss.exit_code == 2);

    RunResult unknown = run("nubar -I " + kCusp + " -f '[1,1]' --no-such-flag");
    CHECK(unknown.exit_code == 2);

    RunResult nofile = run("nubar -I /nonexistent/ideal.json -f '[1,1]'");
    CHECK(nofile.exit_code == 2);
}

TEST_CASE("deterministic output apart from timing") {
    std::string args = "arcs -I " + kCusp + " -f '[1,1]' -c 15 --seed 11";
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(strip_timing(a.out) == strip_timing(b.out));
}

TEST_CASE("seed comes from NUBAR_SEED unless --seed is given") {
    RunResult env7 = run("arcs -I " + kCusp + " -f '[1,1]' -c 10", "NUBAR_SEED=7");
    RunResult flag7 = run("arcs -I " + kCusp + " -f '[1,1]' -c 10 --seed 7");
    CHECK(strip_timing(env7.out) == strip_timing(flag7.out));
    RunResult flag9 = run("arcs -I " + kCusp + " -f '[1,1]' -c 10 --seed 9",
                          "NUBAR_SEED=7");
    // an explicit flag wins over the environment
    RunResult plain9 = run("arcs -I " + kCusp + " -f '[1,1]' -c 10 --seed 9");
    CHECK(strip_timing(flag9.out) == strip_timing(plain9.out));
}

TEST_CASE("loja and gap produce well-formed reports") {
    RunResult r = run("loja -I " + kCusp + " -f '[1,1]' --samples 40 --seed 3");
    CHECK(r.exit_code == 0);
    nlohmann::json j = parse(r);
    CHECK(j["result"]["theta"] == "6/5");
    CHECK(j["result"]["violations"] == 0);

    RunResult g = run("gap -I " + kCusp + " -d 7");
    CHECK(g.exit_code == 0);
    nlohmann::json jg = parse(g);
    CHECK(jg["result"]["max_gap"] == "7/6");
    CHECK(jg["result"]["argmax"] == nlohmann::json::array({1, 2}));
}
