#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

// Drives the installed command-line binary end to end and checks that every
// JSON output round-trips through its documented schema.

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + " " + std::string(APOLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        output.append(buffer.data(), got);
    const int status = pclose(pipe);
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, output};
}

nlohmann::json run_json(const std::string& args) {
    RunResult r = run_cli(args + " --format json");
    REQUIRE(r.exit_code == 0);
    return nlohmann::json::parse(r.output);
}

}  // namespace

TEST_CASE("harmonic basis text output") {
    RunResult r = run_cli("harmonic-basis --d 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "u^2/2\nu*z\nz^2/2 - u*v\n");
}

TEST_CASE("harmonic basis json schema") {
    auto doc = run_json("harmonic-basis --d 3");
    CHECK(doc["d"] == 3);
    REQUIRE(doc["elements"].size() == 4);
    CHECK(doc["elements"][0]["k"] == 3);
    CHECK(doc["elements"][3]["k"] == 0);
    CHECK(doc["elements"][3]["poly"].get<std::string>() == "z^3/6 - u*z*v");
}

TEST_CASE("certificates over a range of powers") {
    auto doc = run_json("certify --s 1");
    CHECK(doc["s"] == 1);
    CHECK(doc["r"] == 3);
    CHECK(doc["conclusion"] == 3);
    CHECK(doc["checks"]["groebner_ok"] == true);
    CHECK(doc["checks"]["saturated"] == true);
    for (const auto& member : doc["checks"]["apolar_membership"]) CHECK(member == true);

    auto two = run_json("certify --s 2");
    CHECK(two["conclusion"] == 6);

    auto range = run_json("certify --s-range 1..3");
    REQUIRE(range.is_array());
    REQUIRE(range.size() == 3);
    CHECK(range[2]["conclusion"] == 10);
}

TEST_CASE("classification output") {
    auto doc = run_json("classify \"x1^2+x2^2\"");
    CHECK(doc["rank"] == 2);
    CHECK(doc["brk_formula"] == "s + 1");
    CHECK(doc["brk_examples"][0]["brk"] == 2);

    RunResult text = run_cli("classify \"x1^2+x2^2\"");
    CHECK(text.exit_code == 0);
    CHECK(text.output.find("rank 2") != std::string::npos);
    CHECK(text.output.find("s + 1") != std::string::npos);
}

TEST_CASE("binary decomposition: four points doubling to a regular octagon") {
    auto doc = run_json("decompose-q2 --s 3");
    REQUIRE(doc["points"].size() == 4);
    CHECK(doc["residual"].get<double>() < 1e-9);
    CHECK(doc["exact_contraction_zero"] == true);

    std::vector<double> angles;
    for (const auto& p : doc["points"]) {
        const double x = p["x1"][0].get<double>();
        const double y = p["x2"][0].get<double>();
        angles.push_back(std::atan2(y, x));
        angles.push_back(std::atan2(-y, -x));
    }
    std::sort(angles.begin(), angles.end());
    const double pi = std::acos(-1.0);
    for (std::size_t i = 1; i < angles.size(); ++i)
        CHECK(std::abs(angles[i] - angles[i - 1] - pi / 4) < 1e-9);
}

TEST_CASE("groebner witness is reproducible byte for byte") {
    RunResult a = run_cli("groebner-check --d 3 --format json");
    RunResult b = run_cli("groebner-check --d 3 --format json");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    auto doc = nlohmann::json::parse(a.output);
    CHECK(doc["ok"] == true);
    CHECK(doc["generators"].size() == 4);
    CHECK(doc["steps"].size() == 3);
}

TEST_CASE("hilbert table") {
    auto doc = run_json("hilbert --s 2");
    REQUIRE(doc["values"].size() == 9);  // degrees 0 .. 2s+4
    CHECK(doc["values"][0]["value"] == 1);
    CHECK(doc["values"][8]["value"] == 6);
    CHECK(doc["stable_from"] == 2);
    CHECK(doc["stable_value"] == 6);

    auto single = run_json("hilbert --s 2 --d 3");
    CHECK(single["value"] == 6);
}

TEST_CASE("apolar comparison table") {
    auto doc = run_json("apolar --n 2 --s 2");
    CHECK(doc["theorem_holds"] == true);
    for (const auto& row : doc["degrees"]) CHECK(row["subspaces_equal"] == true);

    auto comp = run_json("apolar --n 3 --s 2 --d 3");
    CHECK(comp["dim"] == 7);
    REQUIRE(comp["basis"].size() == 7);
}

TEST_CASE("usage errors exit with code two") {
    CHECK(run_cli("certify").exit_code == 2);
    CHECK(run_cli("certify --nope 1").exit_code == 2);
    CHECK(run_cli("classify \"x1^2 + w\"").exit_code == 2);
    CHECK(run_cli("classify \"x1^3\"").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("output file and harmonic cache directory") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "apolab_cli_test";
    fs::remove_all(dir);
    fs::create_directories(dir);

    const fs::path out = dir / "basis.json";
    RunResult r = run_cli("harmonic-basis --d 2 --format json --out " + out.string());
    CHECK(r.exit_code == 0);
    std::ifstream in(out);
    REQUIRE(in.good());
    nlohmann::json doc = nlohmann::json::parse(in);
    CHECK(doc["elements"].size() == 3);

    const std::string env = "APOLARITY_LAB_CACHE=" + (dir / "cache").string();
    RunResult first = run_cli("harmonic-basis --d 4", env);
    CHECK(first.exit_code == 0);
    CHECK(fs::exists(dir / "cache" / "harmonic_basis_3_d4.txt"));
    RunResult second = run_cli("harmonic-basis --d 4", env);
    CHECK(second.output == first.output);
    fs::remove_all(dir);
}
