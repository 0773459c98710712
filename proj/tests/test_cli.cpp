#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

std::string cli_path() {
    const char* env = std::getenv("UWBPC_CLI");
    REQUIRE_MESSAGE(env != nullptr, "UWBPC_CLI must point at the uwbpc binary");
    return env;
}

struct RunOutput {
    int exit_code;
    std::string stdout_text;
};

RunOutput run(const std::string& args) {
    const fs::path out = fs::temp_directory_path() / "uwbpc_cli_test_stdout.txt";
    const std::string cmd = cli_path() + " " + args + " > " + out.string() + " 2>/dev/null";
    const int raw = std::system(cmd.c_str());
    std::ifstream in(out);
    std::stringstream buf;
    buf << in.rdbuf();
    fs::remove(out);
    return {WEXITSTATUS(raw), buf.str()};
}

std::string write_scenario(const std::string& name, const std::string& text) {
    const fs::path path = fs::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST_CASE("analyze prints the table and exits 0") {
    const auto result = run("analyze --grid \"rho=1.0;beta=0,0.25,1.0\"");
    CHECK(result.exit_code == 0);
    CHECK(result.stdout_text.rfind("lambda_db,rho,beta,", 0) == 0);
    CHECK(std::count(result.stdout_text.begin(), result.stdout_text.end(), '\n') == 4);
}

TEST_CASE("malformed scenario: exit 1 and no partial CSV") {
    const std::string bad = write_scenario("uwbpc_bad.json", "{\"channel\": {");
    const fs::path out = fs::temp_directory_path() / "uwbpc_cli_should_not_exist.csv";
    fs::remove(out);
    const auto result =
        run("analyze " + bad + " --out " + out.string());
    CHECK(result.exit_code == 1);
    CHECK_FALSE(fs::exists(out));
    fs::remove(bad);
}

TEST_CASE("unknown grid axis: exit 1") {
    CHECK(run("analyze --grid \"bogus=1\"").exit_code == 1);
    CHECK(run("loss --grid \"rho=0:1:0\"").exit_code == 1);
}

TEST_CASE("infeasible cells: exit 2 with the table still written") {
    const auto result = run("loss --grid \"N=128;K=20\"");
    CHECK(result.exit_code == 2);
    CHECK(result.stdout_text.rfind("N,K,L,", 0) == 0);
    CHECK(result.stdout_text.find("nan") != std::string::npos);
}

TEST_CASE("simulate writes CSV to --out and respects --seed") {
    const std::string scenario = write_scenario("uwbpc_tiny.json", R"({
      "channel": {"num_users": 3, "num_paths": 10},
      "run": {"realizations": 8, "seed": 5, "processing_gains": [64],
              "modes": ["uwb"], "chips_per_frame": [4], "finger_fractions": [1.0]}
    })");
    const fs::path out = fs::temp_directory_path() / "uwbpc_cli_sim.csv";
    const auto result = run("simulate " + scenario + " --workers 2 --out " + out.string());
    CHECK(result.exit_code == 0);
    REQUIRE(fs::exists(out));
    std::stringstream buf;
    buf << std::ifstream(out).rdbuf();
    CHECK(buf.str().rfind("N,Nf,Nc,K,L,rho,mode,n_real,", 0) == 0);

    const auto reseeded = run("simulate " + scenario + " --workers 2 --seed 6");
    CHECK(reseeded.exit_code == 0);
    CHECK(reseeded.stdout_text != buf.str());
    fs::remove(out);
    fs::remove(scenario);
}

TEST_CASE("missing subcommand: usage error") {
    CHECK(run("").exit_code != 0);
}
