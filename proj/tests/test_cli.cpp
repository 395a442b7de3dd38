#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <string>

#include "cuntz/rfs.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env_prefix = {}) {
    const std::string cmd =
        env_prefix + CUNTZ_CLI_PATH + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof buf, p)) r.out.append(buf, n);
    const int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("equality command") {
    auto r = run("eq \"s1* s1\" \"I\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "equal\n");
    r = run("eq \"s1\" \"s2\"");
    CHECK(r.exit_code == 1);
    CHECK(r.out == "not equal\n");
    r = run("eq --d 3 \"s1* s1 + s3* s3\" \"2\"");
    CHECK(r.exit_code == 0);
    // one side uses a higher generator index; counts are reconciled
    r = run("eq \"s3* s3\" \"I\"");
    CHECK(r.exit_code == 0);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("").exit_code == 2);
    CHECK(run("normalize \"s0\"").exit_code == 2);
    CHECK(run("normalize \"s1 +\"").exit_code == 2);
    CHECK(run("eq \"s1\"").exit_code == 2);
    CHECK(run("check nosuchsuite").exit_code == 2);
    CHECK(run("check cuntz 4").exit_code == 2);  // count only valid for car/fa
    CHECK(run("matrix \"s1 s1*\"").exit_code == 2);  // --level required
    CHECK(run("matrix \"s1\" --level 2").exit_code == 2);  // not balanced
    CHECK(run("--help").exit_code == 0);
}

TEST_CASE("normalize and apply") {
    auto r = run("normalize \"s1 s1* + s2 s2*\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "s1 s1* + s2 s2*\n");
    r = run("normalize \"s1 s1*\" --level 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "s1 s1 s1* s1* + s1 s2 s2* s1*\n");
    r = run("apply zeta \"I\"");
    CHECK(r.out == "s1 s1* - s2 s2*\n");
    r = run("apply delta-star \"s1 s2*\"");
    CHECK(r.out == "0\n");
}

TEST_CASE("car printing matches the library") {
    auto r = run("car 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == cuntz::to_string(cuntz::car_generator(3).value) + "\n");
}

TEST_CASE("grade output") {
    auto r = run("grade \"s1 + s1 s2*\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "degree 0: s1 s2*\ndegree 1: s1\n");
}

TEST_CASE("decompose emits the coefficient map") {
    auto r = run("decompose \"s1\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"1\":\"s1 s1*\"}\n");
    r = run("decompose \"s2*\"");
    CHECK(r.out == "{\"-1\":\"s1 s2*\"}\n");
}

TEST_CASE("matrix printing") {
    auto r = run("matrix \"s1 s2*\" --level 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "[0, 1]\n[0, 0]\n");
}

TEST_CASE("norm command") {
    auto r = run("norm \"s1 s2* + s2 s1*\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("norm = 1") != std::string::npos);
    r = run("norm \"s1\" --lower-bound-depth 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("depth 3: lower bound") != std::string::npos);
}

TEST_CASE("check command and json output") {
    auto r = run("check cuntz");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("RESULT: pass") != std::string::npos);

    r = run("check cuntz --json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("ok") == true);
    CHECK(j.at("failed") == 0);
    REQUIRE(j.at("suites").size() == 1);
    CHECK(j.at("suites")[0].at("failed") == 0);

    r = run("check car 4 --json");
    CHECK(r.exit_code == 0);
    CHECK(nlohmann::json::parse(r.out).at("ok") == true);

    r = run("--json eq \"s1* s1\" \"I\"");
    CHECK(nlohmann::json::parse(r.out).at("equal") == true);
}

TEST_CASE("resource bounds exit with 3") {
    CHECK(run("car 20").exit_code == 3);
    CHECK(run("normalize \"s1 s1*\" --level 20").exit_code == 3);
    CHECK(run("car 9 --max-car 8").exit_code == 3);
}

TEST_CASE("config file and environment variable") {
    const std::string path = "cli_test_config.txt";
    {
        std::ofstream f(path);
        f << "# test configuration\nmax_car_index = 2\n";
    }
    CHECK(run("car 3 --config " + path).exit_code == 3);
    CHECK(run("car 2 --config " + path).exit_code == 0);
    CHECK(run("car 3", "CUNTZ_CONFIG=" + path + " ").exit_code == 3);
    // an explicit flag beats the file
    CHECK(run("car 3 --config " + path + " --max-car 5").exit_code == 0);
    CHECK(run("car 3 --config /nonexistent.conf").exit_code == 2);
    std::remove(path.c_str());
}
