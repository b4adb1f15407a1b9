#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "immcoh/verify.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

int counter = 0;

RunResult run_cli(const std::string& args)
{
    std::filesystem::create_directories("cli_test_out");
    const std::string capture = "cli_test_out/stdout_" + std::to_string(counter++) + ".txt";
    const std::string cmd =
        std::string(IMMCOH_CLI_PATH) + " " + args + " > " + capture + " 2>&1";
    RunResult r;
    const int rc = std::system(cmd.c_str());
    r.exit_code = (rc == -1 || !WIFEXITED(rc)) ? -1 : WEXITSTATUS(rc);
    std::ifstream is(capture, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    r.output = os.str();
    return r;
}

std::string slurp(const std::string& path)
{
    std::ifstream is(path, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("stable-cohomology subcommand")
{
    RunResult r = run_cli("stable-cohomology --dim 7 --max-degree 20 --json");
    REQUIRE(r.exit_code == 0);
    auto js = nlohmann::json::parse(r.output);
    CHECK(js["d"] == 7);
    REQUIRE(js["generators"].size() == 4);
    CHECK(js["generators"][3]["name"] == "kappa_4");
    CHECK(js["generators"][3]["degree"] == 8);
    CHECK(js["hilbert"]["coeffs"][0] == 1);

    CHECK(run_cli("stable-cohomology --dim 3").exit_code == 0);
    CHECK(run_cli("stable-cohomology --dim 3").output.find("trivial") != std::string::npos);
    CHECK(run_cli("stable-cohomology --dim 2").exit_code == 2);
    CHECK(run_cli("stable-cohomology").exit_code == 2);
}

TEST_CASE("ranges subcommand")
{
    RunResult r = run_cli("ranges --dim 3 --genus 13 --map closed --json");
    REQUIRE(r.exit_code == 0);
    CHECK(nlohmann::json::parse(r.output)["bound"] == 4);
    CHECK(run_cli("ranges --dim 5 --genus 3 --map alpha --mode epi --json").output.find(
              "\"bound\": 2") != std::string::npos);
    CHECK(run_cli("ranges --dim 2 --genus 3").exit_code == 2);
    CHECK(run_cli("ranges --dim 3 --genus 3 --map sideways").exit_code == 2);
    CHECK(run_cli("ranges --dim 3 --genus 3 --mode maybe").exit_code == 2);
}

TEST_CASE("stabilizers subcommand")
{
    RunResult r = run_cli("stabilizers --genus 7 --json");
    REQUIRE(r.exit_code == 0);
    auto js = nlohmann::json::parse(r.output);
    std::vector<long long> ks;
    for (const auto& o : js["orders"])
        ks.push_back(o["k"].get<long long>());
    CHECK(ks == std::vector<long long>{1, 2, 3, 6});
    CHECK(run_cli("stabilizers --genus 1").exit_code == 2);
}

TEST_CASE("qseries and looijenga subcommands")
{
    CHECK(run_cli("qseries --order-q 0 --order-x 0").exit_code == 0);
    RunResult ok = run_cli("qseries --order-q 20 --order-x 8 --json");
    REQUIRE(ok.exit_code == 0);
    auto js = nlohmann::json::parse(ok.output);
    CHECK(js["holds"] == true);
    CHECK(js["first_mismatch"].is_null());

    RunResult bad = run_cli("qseries --order-q 12 --order-x 6 --perturb --json");
    CHECK(bad.exit_code == 1);
    auto bjs = nlohmann::json::parse(bad.output);
    CHECK(bjs["holds"] == false);
    CHECK(bjs["first_mismatch"].is_array());

    CHECK(run_cli("looijenga --order-t 20 --order-u 6 --json").exit_code == 0);
}

TEST_CASE("pi0 subcommand")
{
    RunResult r4 = run_cli("pi0 --dim 4 --h2 trivial --json");
    REQUIRE(r4.exit_code == 0);
    CHECK(nlohmann::json::parse(r4.output)["components"] == "2Z");

    RunResult r3 = run_cli("pi0 --dim 3 --h2 trivial --genus 2 --json");
    REQUIRE(r3.exit_code == 0);
    CHECK(nlohmann::json::parse(r3.output)["mcg_orbits"] == 2);

    RunResult r5 = run_cli("pi0 --dim 6 --h2 Z^2+Z/4 --w2 101 --json");
    REQUIRE(r5.exit_code == 0);
    CHECK(nlohmann::json::parse(r5.output)["dim_class"] == "dimAtLeast5");

    CHECK(run_cli("pi0 --dim 4 --h2 Z/3 --w2 1").exit_code == 2);  // odd torsion
    CHECK(run_cli("pi0 --dim 4 --h2 what").exit_code == 2);
}

TEST_CASE("imm subcommand")
{
    RunResult r = run_cli("imm --genus 2 --n 2 --max-degree 12 --json");
    REQUIRE(r.exit_code == 0);
    auto js = nlohmann::json::parse(r.output);
    CHECK(js["dims"]["6"] == 4);
    CHECK(js["dims"]["12"] == 11);
    CHECK(run_cli("imm --genus 2 --n 1").exit_code == 2);
}

TEST_CASE("specseq subcommand writes deterministic artifacts")
{
    std::filesystem::create_directories("cli_test_out");
    RunResult r = run_cli(
        "specseq --n 2 --max-total 14 --svg cli_test_out/c.svg --tsv cli_test_out/c.tsv "
        "--json cli_test_out/c.json --genus 20");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("verified") != std::string::npos);

    const std::string svg1 = slurp("cli_test_out/c.svg");
    CHECK(immcoh::svg_well_formed(svg1));
    auto js = nlohmann::json::parse(slurp("cli_test_out/c.json"));
    CHECK(js["n"] == 2);
    CHECK(js["verified"] == true);

    RunResult again = run_cli(
        "specseq --n 2 --max-total 14 --svg cli_test_out/c2.svg --tsv cli_test_out/c2.tsv "
        "--json cli_test_out/c2.json --genus 20");
    REQUIRE(again.exit_code == 0);
    CHECK(svg1 == slurp("cli_test_out/c2.svg"));
    CHECK(slurp("cli_test_out/c.tsv") == slurp("cli_test_out/c2.tsv"));
    CHECK(slurp("cli_test_out/c.json") == slurp("cli_test_out/c2.json"));

    CHECK(run_cli("specseq --n 1").exit_code == 2);
}

TEST_CASE("relative outputs resolve against IMMCOH_OUTDIR")
{
    std::filesystem::create_directories("cli_test_out/envdir");
    setenv("IMMCOH_OUTDIR", "cli_test_out/envdir", 1);
    RunResult r = run_cli("stable-cohomology --dim 5 --json -o stable5.json");
    unsetenv("IMMCOH_OUTDIR");
    REQUIRE(r.exit_code == 0);
    auto js = nlohmann::json::parse(slurp("cli_test_out/envdir/stable5.json"));
    CHECK(js["d"] == 5);
}

TEST_CASE("bad invocations exit with code 2")
{
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("specseq").exit_code == 2);  // missing required --n
}
