// Copyright 2026 The phasesat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult cli(const std::string& args) {
    const std::string cmd = std::string(PHASESAT_CLI) + " " + args + " 2>/dev/null";
    CliResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path temp_dir() {
    const fs::path d = fs::temp_directory_path() / ("phasesat_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
}

}  // namespace

TEST(Cli, ComputeThreeModeOrigin) {
    const CliResult r = cli("compute --model mzi3 --theta 0,0");
    ASSERT_EQ(r.code, 0);
    const Json j = Json::parse(r.out);
    EXPECT_NEAR(j["qfim"][0][0].get<double>(), 16.0 / 3, 1e-9);
    EXPECT_NEAR(j["qfim"][0][1].get<double>(), -8.0 / 3, 1e-9);
    EXPECT_NEAR(j["fim"][0][1].get<double>(), 4.0 / 3, 1e-6);
    EXPECT_NEAR(j["gap"].get<double>(), 8.0, 1e-6);
}

TEST(Cli, ComputeFourModeAndPiSyntax) {
    const CliResult r = cli("compute --model mzi4 --theta 0,pi");
    ASSERT_EQ(r.code, 0);
    const Json j = Json::parse(r.out);
    EXPECT_NEAR(j["theta"][1].get<double>(), M_PI, 0.0);
    EXPECT_LT(j["gap"].get<double>(), 1e-6);
}

TEST(Cli, ConfigErrors) {
    EXPECT_EQ(cli("compute --model nope --theta 0,0").code, 2);
    EXPECT_EQ(cli("compute --model mzi3 --theta 0").code, 2);
    EXPECT_EQ(cli("compute --model mzi3").code, 2);
    EXPECT_EQ(cli("compute --theta 0,x").code, 2);
    EXPECT_EQ(cli("scan --resolution 1").code, 2);
    EXPECT_EQ(cli("frobnicate").code, 2);
    EXPECT_EQ(cli("").code, 2);
    EXPECT_EQ(cli("--help").code, 0);
}

TEST(Cli, ConfigFileWithCommandLinePrecedence) {
    const fs::path dir = temp_dir();
    const fs::path cfg = dir / "run.cfg";
    std::ofstream(cfg) << "# defaults\nmodel = mzi4\ntheta = 0,0\n";
    CliResult r = cli("--config " + cfg.string() + " compute");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(Json::parse(r.out)["model"]["modes"].get<int>(), 4);
    r = cli("--config " + cfg.string() + " compute --model mzi3");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(Json::parse(r.out)["model"]["modes"].get<int>(), 3);
    std::ofstream(dir / "bad.cfg") << "no-such-key = 1\n";
    EXPECT_EQ(cli("--config " + (dir / "bad.cfg").string() + " compute --theta 0,0").code, 2);
    fs::remove_all(dir);
}

TEST(Cli, ScanWritesCsvAndSummary) {
    const fs::path dir = temp_dir();
    const fs::path out = dir / "grid.csv";
    const CliResult r = cli("scan --model mzi4 --resolution 6 --out " + out.string());
    ASSERT_EQ(r.code, 0);
    std::ifstream in(out);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "theta1,theta2,gap,verdict,f11,f12,f22,fq11,fq12,fq22");
    const Json summary = Json::parse(std::ifstream(dir / "grid.csv.summary.json"));
    EXPECT_EQ(summary["cells"].get<int>(), 36);
    EXPECT_EQ(summary["zero_gap_cells"].size(), 12u);  // diagonal plus the pi-shifted diagonal
    fs::remove_all(dir);
}

TEST(Cli, ScanFailureLeavesNoPartialOutput) {
    const fs::path dir = temp_dir();
    const fs::path out = dir / "grid.csv";
    // A zero convergence tolerance cannot be met at the singular origin.
    const CliResult r = cli("scan --model mzi3 --resolution 2 --limit-convergence 0 --out " + out.string());
    EXPECT_EQ(r.code, 3);
    EXPECT_FALSE(fs::exists(out));
    EXPECT_FALSE(fs::exists(dir / "grid.csv.summary.json"));
    fs::remove_all(dir);
}

TEST(Cli, CheckSaturationReportsVerdictAsData) {
    CliResult r = cli("check-saturation --model mzi3 --theta 0,0");
    ASSERT_EQ(r.code, 0);
    Json j = Json::parse(r.out);
    EXPECT_EQ(j["verdict"], "DoesNotSaturate");
    int triples = 0;
    for (const Json& t : j["t1"]) triples += std::abs(t["residual"].get<double>() - 1.0 / (3 * std::sqrt(3.0))) < 1e-9;
    EXPECT_EQ(triples, 6);
    r = cli("check-saturation --model mzi4 --theta 0,0");
    EXPECT_EQ(Json::parse(r.out)["verdict"], "Saturates");
    r = cli("check-saturation --model mzi4 --theta 0.3,1.1");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(Json::parse(r.out)["verdict"], "DoesNotSaturate");
}

TEST(Cli, ConstructOptimalFeedsCheckSaturation) {
    const fs::path dir = temp_dir();
    const fs::path out = dir / "set.json";
    CliResult r = cli("construct-optimal --model mzi3 --theta 0,0 --variant nonorthogonal --mix 0.5 --out " + out.string());
    ASSERT_EQ(r.code, 0);
    const Json set = Json::parse(std::ifstream(out));
    EXPECT_EQ(set["projectors"].size(), 10u);
    EXPECT_LT(set["verification"]["gap"].get<double>(), 1e-8);
    r = cli("check-saturation --model mzi3 --theta 0,0 --projectors " + out.string());
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(Json::parse(r.out)["verdict"], "Saturates");
    r = cli("construct-optimal --model mzi4 --theta 1,1");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(cli("construct-optimal --model mzi3 --theta 0,0 --variant nonorthogonal --mix 1.5").code, 2);
    fs::remove_all(dir);
}

TEST(Cli, VerifyPaperSelection) {
    CliResult r = cli("verify-paper --only qfim3");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("PASS qfim3"), std::string::npos);
    EXPECT_EQ(r.out.find("qfim4"), std::string::npos);
    EXPECT_EQ(cli("verify-paper --only nonsense").code, 2);
    r = cli("verify-paper");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}
