#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>

#include "commands.hpp"
#include "json.hpp"

using namespace lobcli;
using Json = nlohmann::json;

namespace {

struct CliRun {
    int code;
    std::string out;
};

CliRun run_cli(const std::string& args) {
    const std::string cmd = std::string(LOB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Solve, HyperbolicEquilateralJson) {
    const CliRun r = run_cli("solve --geometry hyperbolic --mode sss 1.3169579 1.3169579 1.3169579 --format json");
    ASSERT_EQ(r.code, 0);
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["schema"], 1);
    for (const char* key : {"angle_a", "angle_b", "angle_c"}) EXPECT_NEAR(j[key].get<double>(), 0.8410687, 1e-7);
    EXPECT_EQ(j["residuals"].size(), 4u);
    EXPECT_LT(j["angle_excess"].get<double>(), 0.0);
}

TEST(Solve, SphericalOctant) {
    const CliRun r = run_cli("solve --geometry spherical --mode sss 1.5707963 1.5707963 1.5707963 --format json");
    ASSERT_EQ(r.code, 0);
    const Json j = Json::parse(r.out);
    for (const char* key : {"angle_a", "angle_b", "angle_c"}) EXPECT_NEAR(j[key].get<double>(), lob::half_pi, 1e-7);
}

TEST(Solve, EuclideanAaaIsASimilarityError) {
    const CliRun r = run_cli("solve --geometry euclidean --mode aaa 1 1 1.1415926 --format json");
    EXPECT_EQ(r.code, 3);
    EXPECT_EQ(Json::parse(r.out)["error"], "similarity");
}

TEST(Solve, HumanFormatShowsDegrees) {
    std::ostringstream out, err;
    ASSERT_EQ(cmd_solve(lob::Curvature::euclidean(), SolveMode::Sss, {3, 4, 5}, OutputFormat::Human, out, err), 0);
    EXPECT_NE(out.str().find("(90 deg)"), std::string::npos) << out.str();
}

TEST(Solve, CsvHasHeaderAndOneRow) {
    std::ostringstream out, err;
    ASSERT_EQ(cmd_solve(lob::Curvature::hyperbolic(), SolveMode::Sas, {1, 1, 1}, OutputFormat::Csv, out, err), 0);
    const std::string s = out.str();
    EXPECT_EQ(s.substr(0, s.find('\n')),
              "geometry,mode,a,b,c,angle_a,angle_b,angle_c,angle_excess,hyperbolic_1,hyperbolic_2,hyperbolic_3,hyperbolic_4");
    EXPECT_EQ(std::count(s.begin(), s.end(), '\n'), 2);
}

TEST(Solve, InfeasibleInputs) {
    std::ostringstream out, err;
    EXPECT_EQ(cmd_solve(lob::Curvature::hyperbolic(), SolveMode::Sss, {1, 1, 5}, OutputFormat::Json, out, err), 3);
    EXPECT_EQ(Json::parse(out.str())["error"], "infeasible");
    EXPECT_EQ(cmd_solve(lob::Curvature::hyperbolic(), SolveMode::Sss, {-1, 1, 1}, OutputFormat::Human, out, err), 3);
}

TEST(Parallelism, ThreeStepsToAcosh2) {
    const CliRun r = run_cli("parallelism --p-min 0 --p-max 1.3169578969248167 --steps 3 --format csv");
    ASSERT_EQ(r.code, 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "p,parallelism_angle");
    std::vector<std::pair<double, double>> rows;
    while (std::getline(in, line)) {
        const auto comma = line.find(',');
        rows.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
    }
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0].second, lob::half_pi);
    EXPECT_NEAR(rows[2].first, 1.3169578969248167, 0.0);
    EXPECT_NEAR(rows[2].second, lob::pi / 6, 1e-15);
}

TEST(Parallelism, StrictlyDecreasingColumn) {
    std::ostringstream out, err;
    ASSERT_EQ(cmd_parallelism_curve(lob::Curvature::hyperbolic(2.0), 0.0, 40.0, 4001, OutputFormat::Json, out, err), 0);
    const Json j = Json::parse(out.str());
    ASSERT_EQ(j["rows"].size(), 4001u);
    for (std::size_t i = 1; i < j["rows"].size(); ++i)
        ASSERT_LT(j["rows"][i]["parallelism_angle"].get<double>(), j["rows"][i - 1]["parallelism_angle"].get<double>());
}

TEST(Parallelism, BadRangeIsUsageError) {
    EXPECT_EQ(run_cli("parallelism --p-min 0 --p-max 0 --steps 3").code, 2);
    EXPECT_EQ(run_cli("parallelism --p-min 0 --p-max 1 --steps 1").code, 2);
    EXPECT_EQ(run_cli("parallelism --p-min 2 --p-max 1").code, 2);
}

TEST(Parallelism, NonHyperbolicGeometryIsRejected) {
    EXPECT_EQ(run_cli("parallelism --geometry spherical --p-max 1 --steps 3").code, 3);
}

TEST(Verify, PrismSuiteJson) {
    const CliRun r = run_cli("verify prism --samples 100 --format json");
    ASSERT_EQ(r.code, 0);
    const Json j = Json::parse(r.out);
    EXPECT_TRUE(j["passed"].get<bool>());
    bool found = false;
    for (const auto& e : j["relations"])
        if (e["relation"] == "right_angle_at_m") {
            found = true;
            EXPECT_LT(e["max_abs"].get<double>(), 1e-8);
        }
    EXPECT_TRUE(found);
}

TEST(Verify, SubstitutionSuite) {
    const CliRun r = run_cli("verify substitution --samples 1000 --format csv");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "suite,relation,count,max_abs,mean_abs,p99_abs,tolerance,pass,conjecture");
}

TEST(Verify, FailureGivesExitOne) {
    EXPECT_EQ(run_cli("verify hyperbolic --samples 50 --tol 1e-30 --format json").code, 1);
}

TEST(Verify, UsageErrors) {
    EXPECT_EQ(run_cli("verify nonsense").code, 2);
    EXPECT_EQ(run_cli("verify euclidean --samples 0").code, 2);
    EXPECT_EQ(run_cli("verify euclidean --tol -1").code, 2);
    EXPECT_EQ(run_cli("verify euclidean --format xml").code, 2);
    EXPECT_EQ(run_cli("frobnicate").code, 2);
    EXPECT_EQ(run_cli("").code, 2);
    EXPECT_EQ(run_cli("solve --mode sss 1 2").code, 2);
}

TEST(Verify, OutWritesFile) {
    const std::string path = ::testing::TempDir() + "lob_cli_out.json";
    std::remove(path.c_str());
    ASSERT_EQ(run_cli("verify euclidean --samples 10 --format json --out " + path).code, 0);
    FILE* f = std::fopen(path.c_str(), "r");
    ASSERT_NE(f, nullptr);
    std::string text;
    std::array<char, 4096> buf;
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), f)) text.append(buf.data(), n);
    std::fclose(f);
    EXPECT_EQ(Json::parse(text)["suite"], "euclidean");
}
