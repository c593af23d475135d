#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "doctest.h"
#include "wco/report.hpp"

using Json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
};

/// Runs the CLI with `args` (shell syntax), capturing stdout; stderr is discarded.
Run cli(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " \"" WCO_CLI_PATH "\" " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, n);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string tmp(const char* name) { return std::string(WCO_TMP_DIR) + "/" + name; }

}  // namespace

TEST_CASE("classify examples") {
    auto r = cli("classify --phi 3,1,1,3");
    CHECK(r.code == 0);
    CHECK(r.out.find("class: HyperbolicAutomorphism") != std::string::npos);
    CHECK(r.out.find("dw_derivative: 0.5+0i") != std::string::npos);

    r = cli("classify --phi 1,0,0,1 --json");
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["class"] == "Identity");

    r = cli("classify --phi 0,0.5,-0.5,1 --json");
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["class"] == "ParabolicNonAutomorphism");
    CHECK(wco::parse_complex(j["dw_point"].get<std::string>()) == wco::Complex(1.0, 0.0));
    CHECK_FALSE(j["automorphism"].get<bool>());
}

TEST_CASE("classify rejects bad input with exit 2") {
    CHECK(cli("classify --phi 5,-1,1,1").code == 2);  // not a self-map
    CHECK(cli("classify --phi 1,2,x,1").code == 2);
    CHECK(cli("classify --phi 1,2,3").code == 2);
    CHECK(cli("classify --phi 1,nan,0,1").code == 2);
    CHECK(cli("classify").code == 2);
    CHECK(cli("no-such-command").code == 2);
}

TEST_CASE("check: the J instance passes") {
    const auto r = cli("check --family j --a0 0.5i --a1 0.75 --b 1");
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["family"] == "j");
    CHECK(j["predicates"]["normal"].get<bool>());
    CHECK(j["residuals"]["symmetry"].get<double>() <= 1e-7);
    CHECK(j["residuals"]["normality"].get<double>() <= 1e-7);
    CHECK(j["residuals"]["involution"].get<double>() <= 1e-14);
    CHECK(j["verdict"] == "pass");
}

TEST_CASE("check: C1 instance is symmetric but not normal") {
    const auto r = cli("check --family c1 --alpha i --c0 0.3 --c1 0.5");
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK_FALSE(j["predicates"]["normal"].get<bool>());
    CHECK(j["residuals"]["normality"].get<double>() >= 1e-3);
    CHECK(j["residuals"]["symmetry"].get<double>() <= 1e-7);
}

TEST_CASE("check: worked C2 instance is not a self-map") {
    CHECK(cli("check --family c2 --alpha 0.5 --c0 0.6 --c1 0.36 --c2 0.54").code == 2);
}

TEST_CASE("check: mismatched conjugation fails the symmetry check") {
    const auto r = cli("check --family j --a0 0.5i --a1 0.75 --conjugation c1 --conj-alpha i");
    const Json j = Json::parse(r.out);
    CHECK(j["residuals"]["symmetry"].get<double>() >= 1e-3);
    CHECK(j["verdict"] == "fail");
    CHECK(r.code == 1);
}

TEST_CASE("check: domain violations exit 2") {
    CHECK(cli("check --family c1 --alpha 0.5 --c0 0.3 --c1 0.3").code == 2);  // |alpha| != 1
    CHECK(cli("check --family c3 --alpha 0.5").code == 2);
    CHECK(cli("check --family j --a0 0.5i").code == 2);
}

TEST_CASE("suite exit codes") {
    CHECK(cli("suite --id interior-normal --seed 7 --samples 20").code == 0);
    const auto r = cli("suite --id c2-normality --samples 4 --json -");
    CHECK(r.code == 3);
    const Json j = Json::parse(r.out);
    CHECK(j["summary"]["discrepancy"].get<int>() >= 1);
    CHECK(j["records"][0]["verdict"] == "discrepancy");
    CHECK(cli("suite --id no-such-suite").code == 2);
    CHECK(cli("suite --id j-symmetric --dim 16").code == 2);
}

TEST_CASE("suite JSON is deterministic and matches the library") {
    const auto a = tmp("cli_a.json"), b = tmp("cli_b.json");
    REQUIRE(cli("suite --id j-normality --seed 5 --samples 8 --threads 1 --json " + a).code == 0);
    REQUIRE(cli("suite --id j-normality --seed 5 --samples 8 --threads 2 --json " + b).code == 0);
    CHECK(slurp(a) == slurp(b));
    wco::SuiteConfig cfg;
    cfg.seed = 5;
    cfg.samples = 8;
    CHECK(slurp(a) == wco::report_json(wco::run_suite("j-normality", cfg)));
}

TEST_CASE("unwritable output path exits 2") {
    CHECK(cli("suite --id j-normality --samples 2 --json /nonexistent-dir/x.json").code == 2);
}

TEST_CASE("WCO_DEFAULT_DIM sets the default dimension") {
    auto r = cli("suite --id j-symmetric --samples 2 --json -", "WCO_DEFAULT_DIM=96");
    CHECK(Json::parse(r.out)["config"]["dim"] == 96);
    r = cli("suite --id j-symmetric --samples 2 --dim 80 --json -", "WCO_DEFAULT_DIM=96");
    CHECK(Json::parse(r.out)["config"]["dim"] == 80);
    CHECK(cli("suite --id j-symmetric --samples 2", "WCO_DEFAULT_DIM=x").code == 2);
}

TEST_CASE("sweep CSV has deficiency at least 1e-3") {
    const auto path = tmp("cli_sweep.csv");
    REQUIRE(cli("sweep --family j-hyperbolic --csv " + path).code == 0);
    std::istringstream in(slurp(path));
    std::string line;
    std::getline(in, line);
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        for (std::string c; std::getline(ss, c, ',');) cells.push_back(c);
        REQUIRE(cells.size() == 13);
        CHECK(std::stod(cells[11]) >= 1e-3);
        ++rows;
    }
    CHECK(rows > 0);
}

TEST_CASE("sweep grid options") {
    const auto r = cli("sweep --family j-hyperbolic --r 2,3 --t 0,0.5i --csv -");
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 5);
    CHECK(cli("sweep --family j-hyperbolic --r 0.5 --csv -").code == 2);
    CHECK(cli("sweep --family c9-hyperbolic").code == 2);
}

TEST_CASE("print-schema matches the library schema") {
    const auto r = cli("--print-schema");
    CHECK(r.code == 0);
    CHECK(r.out == std::string(wco::report_schema()));
}
