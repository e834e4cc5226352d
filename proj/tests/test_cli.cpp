#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "conifold/fixtures.hpp"

namespace {

int run_cli(const std::string& args) {
    std::string cmd = std::string(CONIFOLD_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::filesystem::path temp_dir() {
    auto dir = std::filesystem::temp_directory_path() / "conifold_cli_test";
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("cli exit codes: passing suites return 0") {
    CHECK(run_cli("wallcross") == 0);
    CHECK(run_cli("paths") == 0);
    CHECK(run_cli("verify-compositions --max-a 2 --max-i 1") == 0);
    CHECK(run_cli("verify-hms --max-slope 2") == 0);
    CHECK(run_cli("skyscraper --lambda 1/2 --max-index 2") == 0);
    CHECK(run_cli("transfer --max-arity 5") == 0);
    CHECK(run_cli("dimer --emit quiver") == 0);
    CHECK(run_cli("dimer --emit ainfinity") == 0);
}

TEST_CASE("cli exit code 2 on bad usage or bad input") {
    CHECK(run_cli("no-such-subcommand") == 2);
    CHECK(run_cli("dimer --emit nonsense") == 2);

    auto dir = temp_dir();
    auto bad = dir / "bad.json";
    std::ofstream(bad) << "{ not json";
    CHECK(run_cli("transfer --input " + bad.string()) == 2);
    CHECK(run_cli("dimer --input " + bad.string() + " --emit quiver") == 2);

    // structurally bad dimer: broken bipartition
    auto badDimer = dir / "bad_dimer.json";
    std::ofstream(badDimer) << R"({"nodes":[{"id":"b","color":"black"},{"id":"w","color":"black"}],
        "edges":[{"id":"e1","black":"b","white":"w"},{"id":"e2","black":"b","white":"w"}],
        "rotation":{"b":["e1","e2"],"w":["e1","e2"]}})";
    CHECK(run_cli("dimer --input " + badDimer.string() + " --emit quiver") == 2);
}

TEST_CASE("cli reports are written and deterministic modulo the timestamp") {
    auto dir = temp_dir();
    auto r1 = dir / "r1.json", r2 = dir / "r2.json";
    CHECK(run_cli("wallcross --report " + r1.string()) == 0);
    CHECK(run_cli("wallcross --report " + r2.string()) == 0);
    std::string a = conifold::read_text_file(r1.string());
    std::string b = conifold::read_text_file(r2.string());
    auto strip = [](std::string s) {
        auto pos = s.find("\"timestamp\"");
        if (pos != std::string::npos) {
            auto end = s.find('\n', pos);
            s.erase(pos, end - pos + 1);
        }
        return s;
    };
    CHECK(strip(a) == strip(b));
    CHECK(a.find("\"suite\": \"wallcross\"") != std::string::npos);
}

TEST_CASE("cli transfer export and fixture generation") {
    auto dir = temp_dir();
    auto exp = dir / "transferred.json";
    CHECK(run_cli("transfer --max-arity 4 --export " + exp.string()) == 0);
    CHECK(std::filesystem::exists(exp));

    auto fxDir = dir / "fx";
    CHECK(run_cli("fixtures --out " + fxDir.string()) == 0);
    CHECK(std::filesystem::exists(fxDir / "conifold_dimer.json"));
    CHECK(std::filesystem::exists(fxDir / "sigma1.json"));

    // the generated model file feeds back into the transfer subcommand
    CHECK(run_cli("transfer --input " + (fxDir / "vanishing_cycle_model.json").string() +
                  " --max-arity 4") == 0);
}
