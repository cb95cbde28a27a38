/*
   Copyright 2026 the wsigma authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <catch2/catch_amalgamated.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("WSIGMA_BIN");
    REQUIRE(bin != nullptr);
    const std::string cmd = std::string("\"") + bin + "\" " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    char buf[4096];
    size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    const int rc = pclose(p);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

const fs::path& work_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "wsigma-cli-test";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write_config(const std::string& name, const std::string& body) {
    const fs::path p = work_dir() / name;
    std::ofstream(p) << body;
    return p.string();
}

const std::string kElliptic = "[curve]\nr = 2\ns = 3\ncoefficients = [[2, 1, 1]]\n";
const std::string kGenus2 = "[curve]\nr = 2\ns = 5\ncoefficients = [[2, 0, -1]]\n";

}  // namespace

TEST_CASE("semigroup subcommand prints the diagram data") {
    RunResult r = run_cli("semigroup 5,7,11");
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["genus"] == 8);
    CHECK(j["conductor"] == 14);
    CHECK(j["symmetric"] == false);
    CHECK(j["rows"] == json({6, 3, 3, 2, 1, 1, 1, 1}));
    CHECK(j["frobenius"]["arms"] == json({0, 2, 7}));
    CHECK(j["frobenius"]["legs"] == json({0, 1, 5}));
    CHECK(j["gaps"] == json({1, 2, 3, 4, 6, 8, 9, 13}));
    CHECK(j["standard_basis"]["ordered"] == json({0, 7, 11, 14, 18}));
}

TEST_CASE("invalid generators exit with a typed error") {
    RunResult r = run_cli("semigroup 4,6");
    CHECK(r.status == 1);
    json j = json::parse(r.out);
    CHECK(j["error"]["code"] == "NonCoprimeGenerators");
}

TEST_CASE("curve subcommand reports the model") {
    const std::string cfg = write_config("elliptic.toml", kElliptic);
    RunResult r = run_cli("curve " + cfg);
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["r"] == 2);
    CHECK(j["s"] == 3);
    CHECK(j["genus"] == 1);
    CHECK(j["d_h"] == 3);
    CHECK(j["semigroup"]["gaps"] == json({1}));
    REQUIRE(j["lambda"].size() == 1);
    CHECK(j["lambda"][0][0] == 2);
    CHECK(j["lambda"][0][1] == 1);
    CHECK(j["lambda"][0][2] == "1");
}

TEST_CASE("malformed configs are rejected") {
    CHECK(run_cli("curve /nonexistent/path.toml").status == 1);
    const std::string bad1 = write_config("bad1.toml", "[curve]\nr = 2\n");
    CHECK(run_cli("curve " + bad1).status == 1);
    const std::string bad2 =
        write_config("bad2.toml", "[curve]\nr = 2\ns = 3\nmystery = 4\n");
    RunResult r2 = run_cli("curve " + bad2);
    CHECK(r2.status == 1);
    CHECK(json::parse(r2.out)["error"]["code"] == "ConfigError");
    const std::string bad3 = write_config("bad3.toml",
                                          "[curve]\nr = 2\ns = 3\n"
                                          "coefficients = [[2, 1, 1], [2, 1, 2]]\n");
    CHECK(run_cli("curve " + bad3).status == 1);
}

TEST_CASE("differentials subcommand carries the chart and duality flags") {
    const std::string cfg = write_config("elliptic2.toml", kElliptic);
    RunResult r = run_cli("differentials " + cfg);
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["duality"]["identity"] == true);
    CHECK(j["duality"]["first_kind_isotropic"] == true);
    CHECK(j["duality"]["second_kind_isotropic"] == true);
    /* chart x = t^-2 + t^2 - t^6 + ... */
    CHECK(j["chart"]["x"][0] == json({-2, "1"}));
    CHECK(j["chart"]["x"][1] == json({2, "1"}));
    CHECK(j["chart"]["x"][2] == json({6, "-1"}));
    CHECK(j["nu_I"].size() == 1);
    CHECK(j["nu_II"].size() == 1);
}

TEST_CASE("periods subcommand is deterministic and cache transparent") {
    const std::string cfg = write_config("genus2.toml", kGenus2);
    const std::string cache = (work_dir() / "cache").string();
    const std::string env = "WSIGMA_CACHE_DIR=\"" + cache + "\" ";

    const char* bin = std::getenv("WSIGMA_BIN");
    REQUIRE(bin != nullptr);
    auto run_env = [&](const std::string& args) {
        RunResult r;
        const std::string cmd = env + "\"" + bin + "\" " + args + " 2>&1";
        FILE* p = popen(cmd.c_str(), "r");
        REQUIRE(p != nullptr);
        char buf[4096];
        size_t n = 0;
        while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
        const int rc = pclose(p);
        r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
        return r;
    };

    RunResult cold = run_env("periods " + cfg);
    REQUIRE(cold.status == 0);
    RunResult warm = run_env("periods " + cfg);
    REQUIRE(warm.status == 0);
    /* cache hits replay the identical payload */
    CHECK(cold.out == warm.out);
    RunResult fresh = run_env("periods --no-cache " + cfg);
    REQUIRE(fresh.status == 0);
    CHECK(fresh.out == cold.out);

    json j = json::parse(cold.out);
    CHECK(j["residuals"]["legendre"].get<double>() < 1e-6);
    CHECK(j["residuals"]["tau_asymmetry"].get<double>() < 1e-9);
    CHECK(j["residuals"]["im_tau_min_eig"].get<double>() > 0.0);
    CHECK(j["flipped"] == false);
    CHECK(j["tau"].size() == 2);
}

TEST_CASE("sigma subcommand evaluates at requested points") {
    const std::string cfg = write_config("elliptic3.toml", kElliptic);
    RunResult r = run_cli("sigma " + cfg + " --at 0.31");
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["epsilon"] == 1);
    REQUIRE(j["evaluations"].size() == 1);
    const std::string s = j["evaluations"][0]["sigma"].get<std::string>();
    CHECK(s.substr(0, 10) == "0.30995228");
    /* component count must match the genus */
    CHECK(run_cli("sigma " + cfg + " --at 0.1,0.2").status == 1);
    CHECK(run_cli("sigma " + cfg + " --at doesnotparse").status == 1);
}

TEST_CASE("verify subcommand runs the named suites") {
    const std::string cfg = write_config("elliptic4.toml", kElliptic);
    RunResult r = run_cli("verify " + cfg + " --suite legendre,parity");
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    REQUIRE(j["suites"].size() == 2);
    CHECK(j["suites"][0]["suite"] == "legendre");
    CHECK(j["suites"][0]["pass"] == true);
    for (const auto& row : j["suites"][0]["rows"]) CHECK(row["pass"] == true);
    CHECK(run_cli("verify " + cfg + " --suite bogus").status == 1);
}

TEST_CASE("output can be redirected to a file") {
    const std::string cfg = write_config("elliptic5.toml", kElliptic);
    const std::string out = (work_dir() / "semi.json").string();
    RunResult r = run_cli("curve " + cfg + " --out " + out);
    REQUIRE(r.status == 0);
    std::ifstream in(out);
    json j = json::parse(in);
    CHECK(j["genus"] == 1);
}
