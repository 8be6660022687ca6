#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#ifndef SYMDECOMP_BIN
#error "SYMDECOMP_BIN must point at the symdecomp executable"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(SYMDECOMP_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.output.append(buf.data(), got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string temp_path(const std::string& name) {
    return std::string("cli_test_") + name;
}

}  // namespace

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("").exit_code == 2);                          // missing subcommand
    CHECK(run_cli("frobnicate").exit_code == 2);                // unknown subcommand
    CHECK(run_cli("dims --no-such-flag").exit_code == 2);       // unknown flag
    CHECK(run_cli("dims --group dihedral").exit_code == 2);     // unknown group
    CHECK(run_cli("decompose --topology torus").exit_code == 2);
    CHECK(run_cli("verify --block-tol -1").exit_code == 2);
}

TEST_CASE("help exits cleanly") {
    auto r = run_cli("--help");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("decompose") != std::string::npos);
}

TEST_CASE("resource guards exit with code 3") {
    CHECK(run_cli("verify --group symmetric --n 11").exit_code == 3);
    CHECK(run_cli("gys --group cyclic --n 25").exit_code == 3);
}

TEST_CASE("dims output") {
    auto r = run_cli("dims --group cyclic --n 4 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["dim_u_G"] == 70);
    CHECK(j["m_k"] == nlohmann::json::array({6, 3, 4, 3}));

    auto rs = run_cli("dims --group symmetric --n 3 --format json");
    REQUIRE(rs.exit_code == 0);
    CHECK(nlohmann::json::parse(rs.output)["dim_u_G"] == 20);

    auto rt = run_cli("dims --group symmetric --n 3");
    CHECK(rt.exit_code == 0);
    CHECK(rt.output.find("20") != std::string::npos);
}

TEST_CASE("verify passes for the standard families") {
    CHECK(run_cli("verify --group symmetric --n 4").exit_code == 0);
    CHECK(run_cli("verify --group cyclic --n 5 --with-oracles").exit_code == 0);
    auto r = run_cli("verify --group cyclic --n 4 --format json --with-oracles");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["passes"] == true);
    CHECK(j["sum_mk_squared"] == j["dim_u_cyclic"]);
}

TEST_CASE("classical symmetrizers fail verification") {
    // Hermitian only up to n = 2; orthogonality additionally breaks at n = 5.
    CHECK(run_cli("verify --group symmetric --n 2 --classical-symmetrizers").exit_code == 0);
    CHECK(run_cli("verify --group symmetric --n 4 --classical-symmetrizers").exit_code == 1);
    CHECK(run_cli("verify --group symmetric --n 5 --classical-symmetrizers").exit_code == 1);
    // The escape hatch is only defined for symmetric groups.
    CHECK(run_cli("verify --group cyclic --n 4 --classical-symmetrizers").exit_code == 2);
}

TEST_CASE("gys prints a family") {
    auto r = run_cli("gys --group symmetric --n 3 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["records"].size() == 4);
    CHECK(j["verification"]["passes"] == true);
}

TEST_CASE("decompose end to end with JSON report") {
    auto r = run_cli("decompose --topology ring --n 3 --format json --with-lie-closure");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["schema_version"] == 1);
    CHECK(j["verification"]["passes"] == true);
    CHECK(j["lie_closure"]["global_dimension"] == 19);
    CHECK(j["operators"].size() == 3);  // drift + two controls
}

TEST_CASE("decompose is deterministic") {
    std::string args = "decompose --topology complete --n 3 --format json --emit-basis";
    CHECK(run_cli(args).output == run_cli(args).output);
}

TEST_CASE("decompose with oracles agrees") {
    auto r = run_cli("decompose --topology complete --n 3 --format json --with-oracles");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["oracles"]["agree"] == true);
}

TEST_CASE("csv output is parseable") {
    auto r = run_cli("decompose --topology ring --n 3 --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.rfind("operator,class_block,row,col,re,im", 0) == 0);
}

TEST_CASE("--out writes the report to a file") {
    std::string path = temp_path("out.json");
    auto r = run_cli("dims --group cyclic --n 3 --format json --out " + path);
    REQUIRE(r.exit_code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    auto j = nlohmann::json::parse(in);
    CHECK(j["dim_u_G"] == 24);
    std::remove(path.c_str());
}

TEST_CASE("config file sets defaults, flags override") {
    std::string path = temp_path("config.txt");
    {
        std::ofstream out(path);
        out << "# ring defaults\n";
        out << "topology = ring\n";
        out << "n = 4\n";
        out << "format = json\n";
    }
    auto r = run_cli("dims --config " + path);
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["m_k"].size() == 4);

    auto r2 = run_cli("dims --config " + path + " --n 3");
    REQUIRE(r2.exit_code == 0);
    CHECK(nlohmann::json::parse(r2.output)["m_k"].size() == 3);
    std::remove(path.c_str());

    {
        std::ofstream out(path);
        out << "flux_capacitance = 11\n";
    }
    CHECK(run_cli("dims --config " + path).exit_code == 2);
    std::remove(path.c_str());
    CHECK(run_cli("dims --config does_not_exist.cfg").exit_code == 2);
}
