// End-to-end tests of the command-line surface: exit codes, report shape,
// and byte-level determinism. The binary path arrives in $GENUS_CLI.
#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

using Json = nlohmann::ordered_json;

struct RunResult {
    int exit_code;
    std::string out;
};

std::string cli_path() {
    const char* env = std::getenv("GENUS_CLI");
    REQUIRE(env != nullptr);
    return env;
}

RunResult run(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("cli_") + name;
    std::ofstream f(path);
    f << content;
    return path;
}

const std::string kTwistedCubic =
    "ambient: 3\nx0*x2 - x1^2\nx1*x3 - x2^2\nx0*x3 - x1*x2\n";

} // namespace

TEST_CASE("analyze a generator file") {
    auto path = write_temp("tc.gens", kTwistedCubic);
    auto res = run("analyze --gens " + path);
    REQUIRE(res.exit_code == 0);
    Json doc = Json::parse(res.out);
    REQUIRE(doc["schema_version"] == 1);
    REQUIRE(doc["command"]["name"] == "analyze");
    REQUIRE(doc["result"]["dimension"] == 1);
    REQUIRE(doc["result"]["degree"] == "3");
    REQUIRE(doc["result"]["p_a"] == "0");
    REQUIRE(doc["result"]["chi"] == "1");
    REQUIRE(doc["result"]["hilbert_polynomial"]["text"] == "3*t + 1");
}

TEST_CASE("analyze inline generators") {
    auto res = run("analyze --ambient 2 --gen \"x0^3 + x1^3 + x2^3\"");
    REQUIRE(res.exit_code == 0);
    Json doc = Json::parse(res.out);
    REQUIRE(doc["result"]["p_a"] == "1");
}

TEST_CASE("analyze the zero ideal from a header-only file") {
    auto path = write_temp("p3.gens", "ambient: 3\n");
    auto res = run("analyze --gens " + path);
    REQUIRE(res.exit_code == 0);
    Json doc = Json::parse(res.out);
    REQUIRE(doc["result"]["dimension"] == 3);
    REQUIRE(doc["result"]["p_a"] == "0");
    REQUIRE(doc["result"]["chi"] == "1");
    // an explicit --ambient must agree with the file header
    REQUIRE(run("analyze --ambient 3 --gens " + path).exit_code == 0);
    REQUIRE(run("analyze --ambient 2 --gens " + path).exit_code == 3);
}

TEST_CASE("hypersurface reports the closed-form comparison") {
    auto res = run("hypersurface --d 3 --ambient 2");
    REQUIRE(res.exit_code == 0);
    Json doc = Json::parse(res.out);
    REQUIRE(doc["result"]["variety"]["p_a"] == "1");
    REQUIRE(doc["result"]["closed_form_pa"] == "1");
    REQUIRE(doc["result"]["closed_form_match"] == true);
    REQUIRE(doc["command"]["parameters"]["seed"] == "1");
}

TEST_CASE("product closed form and pipeline") {
    auto left = write_temp("line.gens", "ambient: 2\nx0 + 2*x1 - x2\n");
    auto right = write_temp("cubic.gens", "ambient: 2\nx0^3 + x1^3 + x2^3\n");
    auto res = run("product --left " + left + " --right " + right + " --pipeline");
    REQUIRE(res.exit_code == 0);
    Json doc = Json::parse(res.out);
    REQUIRE(doc["result"]["closed_form_pa"] == "-1");
    REQUIRE(doc["result"]["pipeline"]["run"] == true);
    REQUIRE(doc["result"]["pipeline"]["match"] == true);
    REQUIRE(doc["result"]["pipeline"]["variety"]["p_a"] == "-1");
}

TEST_CASE("family maincorr matches the corollary") {
    auto res = run("family maincorr --n-min 4 --n-max 4 --l-max 6");
    REQUIRE(res.exit_code == 0);
    Json doc = Json::parse(res.out);
    auto& records = doc["result"]["records"];
    REQUIRE(records.size() == 2);
    REQUIRE(records[0]["l"] == 5);
    REQUIRE(records[0]["pa_y"] == "-1");
    REQUIRE(records[1]["l"] == 6);
    REQUIRE(records[1]["pa_y"] == "-5");
    REQUIRE(records[0]["gap_witness"] == true);
    REQUIRE(records[0]["model"].is_null());
}

TEST_CASE("family gap walks the composite degrees") {
    auto base = write_temp("cubic2.gens", "ambient: 2\nx0^3 + x1^3 + x2^3\n");
    auto res = run("family gap --base " + base + " --degrees 1,2,3");
    REQUIRE(res.exit_code == 0);
    Json doc = Json::parse(res.out);
    auto& records = doc["result"]["records"];
    REQUIRE(records.size() == 3);
    REQUIRE(records[0]["pa_composite"] == "1");
    REQUIRE(records[1]["pa_composite"] == "4");
    REQUIRE(records[2]["pa_composite"] == "10");
}

TEST_CASE("verify prod on the default grid") {
    auto res = run("verify prod --default-grid");
    REQUIRE(res.exit_code == 0);
    Json doc = Json::parse(res.out);
    REQUIRE(doc["result"]["mismatches"] == 0);
    REQUIRE(doc["result"]["rows"].size() == 210);
    REQUIRE(doc["result"]["pipeline_checked"] > 0);
}

TEST_CASE("verify prod on a grid file") {
    auto grid = write_temp("grid.txt", "# d n l m\n1 1 3 2\n1 2 5 4\n");
    auto res = run("verify prod --grid " + grid);
    REQUIRE(res.exit_code == 0);
    Json doc = Json::parse(res.out);
    REQUIRE(doc["result"]["rows"].size() == 2);
    REQUIRE(doc["result"]["rows"][0]["closed_form"] == "-1");
    REQUIRE(doc["result"]["rows"][1]["pipeline"]["run"] == false);
}

TEST_CASE("project emits the image and its analysis") {
    auto path = write_temp("tc2.gens", kTwistedCubic);
    auto res = run("project --gens " + path + " --seed 1 --max-attempts 5");
    REQUIRE(res.exit_code == 0);
    Json doc = Json::parse(res.out);
    REQUIRE(doc["result"]["is_principal"] == true);
    REQUIRE(doc["result"]["image_degree"] == 3);
    REQUIRE(doc["result"]["birational_certified"] == false);
    REQUIRE(doc["result"]["analysis"]["p_a"] == "1");
}

TEST_CASE("exit codes follow the contract") {
    REQUIRE(run("analyze --no-such-flag").exit_code == 1);           // usage
    REQUIRE(run("nonsense").exit_code == 1);                         // usage
    REQUIRE(run("analyze --ambient 2 --gen \"x0 + \"").exit_code == 2); // parse error
    auto bad = write_temp("bad.gens", "x0 + x1\n");
    REQUIRE(run("analyze --gens " + bad).exit_code == 2);            // missing header
    REQUIRE(run("family maincorr --n-min 3 --n-max 3 --l-max 9").exit_code == 3);
    auto conic = write_temp("conic.gens", "ambient: 2\nx0^2 - x1*x2\n");
    REQUIRE(run("family gap --base " + conic + " --degrees 1").exit_code == 3);

    // a plane together with an isolated point never projects to a
    // hypersurface, so the attempt budget runs out
    auto stubborn = write_temp("stubborn.gens", "ambient: 3\nx0*x1\nx0*x2\nx0*x3\n");
    REQUIRE(run("project --gens " + stubborn + " --max-attempts 2").exit_code == 5);
}

TEST_CASE("reports are byte-identical apart from timing") {
    auto first = run("hypersurface --d 4 --ambient 3 --seed 9");
    auto second = run("hypersurface --d 4 --ambient 3 --seed 9");
    Json a = Json::parse(first.out);
    Json b = Json::parse(second.out);
    a["timing_seconds"] = 0;
    b["timing_seconds"] = 0;
    REQUIRE(a.dump() == b.dump());
    // and the timing field is the only difference in the raw bytes
    auto strip = [](const std::string& s) {
        auto pos = s.find("\"timing_seconds\"");
        return s.substr(0, pos);
    };
    REQUIRE(strip(first.out) == strip(second.out));
}

TEST_CASE("generator files with variable aliases") {
    auto path = write_temp("alias.gens", "ambient: 3\nvars: a, b, c, d\na*c - b^2\nb*d - c^2\na*d - b*c\n");
    auto res = run("analyze --gens " + path);
    REQUIRE(res.exit_code == 0);
    Json doc = Json::parse(res.out);
    REQUIRE(doc["result"]["degree"] == "3");
}
