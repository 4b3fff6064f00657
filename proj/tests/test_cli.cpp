// End-to-end checks of the CLI binary: subcommand behavior, exit codes and
// byte-identical reports for identical configurations.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(EXTREMAL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0)
        output.append(buf, got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("verify-sharp passes and reports the constant") {
    const RunResult r = run_cli("verify-sharp --n 3 --L 16 --radial 24");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("\"pass\":true") != std::string::npos);
    CHECK(r.stdout_text.find("0.6743400734") != std::string::npos);
}

TEST_CASE("unknown flags give a usage error") {
    CHECK(run_cli("verify-sharp --bogus 1").exit_code == 1);
    CHECK(run_cli("no-such-command").exit_code == 1);
    CHECK(run_cli("").exit_code == 1);
}

TEST_CASE("solve-el supercritical run reaches the constant") {
    const RunResult r = run_cli("solve-el --n 3 --p 5 --L 10 --radial 16 --init linear --tol 1e-9");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("\"converged\":true") != std::string::npos);
    CHECK(r.stdout_text.find("0.72963") != std::string::npos);
}

TEST_CASE("carleman zero series gives equal sides") {
    const std::string path = "/tmp/extremal_cli_zero.json";
    {
        std::ofstream f(path);
        f << "{\"a0\": 0.0}";
    }
    const RunResult r = run_cli("carleman --coeffs " + path + " --radial 32 --angular 64");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("\"pass\":true") != std::string::npos);
    CHECK(r.stdout_text.find("3.14159265358979") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("reports are byte-identical for identical configurations") {
    const std::string out1 = "/tmp/extremal_cli_rep1.json";
    const std::string out2 = "/tmp/extremal_cli_rep2.json";
    const std::string args = "solve-el --n 3 --p 5 --L 8 --radial 12 --init random --seed 42 --out ";
    CHECK(run_cli(args + out1).exit_code == 0);
    CHECK(run_cli(args + out2).exit_code == 0);
    const std::string a = slurp(out1), b = slurp(out2);
    REQUIRE(!a.empty());
    CHECK(a == b);
    std::remove(out1.c_str());
    std::remove(out2.c_str());
}

TEST_CASE("config file supplies defaults, flags override") {
    const std::string cfgpath = "/tmp/extremal_cli_cfg.json";
    {
        std::ofstream f(cfgpath);
        f << "{\"n\": 3, \"L\": 16, \"radial\": 24}";
    }
    const RunResult base = run_cli("--config " + cfgpath + " verify-sharp");
    CHECK(base.exit_code == 0);
    CHECK(base.stdout_text.find("\"L\":16") != std::string::npos);
    const RunResult over = run_cli("--config " + cfgpath + " verify-sharp --L 12");
    CHECK(over.exit_code == 0);
    CHECK(over.stdout_text.find("\"L\":12") != std::string::npos);
    std::remove(cfgpath.c_str());
}

TEST_CASE("concentration emits CSV when asked") {
    const RunResult r = run_cli(
        "concentration --n 3 --p 4 --resolution 24 --lambdas 0.5,0.9 --alphas 0.785398 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.rfind("lambda,alpha,fraction", 0) == 0);
}

TEST_CASE("remark31 fit passes at p = 3") {
    const RunResult r = run_cli("remark31 --n 3 --p 3 --L 10 --radial 24");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("\"pass\":true") != std::string::npos);
}

TEST_CASE("expand-kernel writes coefficients and residuals") {
    const RunResult r = run_cli("expand-kernel --n 3 --H 2 --h identity --L 12");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("\"coefficients\":[{") != std::string::npos);
    CHECK(r.stdout_text.find("\"residual_l2\":") != std::string::npos);
    CHECK(r.stdout_text.find("\"boundary_trace_max\":") != std::string::npos);
}

TEST_CASE("rearrange passes on a random field") {
    const RunResult r = run_cli("rearrange --n 3 --band 6 --L 10 --radial 14 --seed 9 --max-rows 4");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("\"pass\":true") != std::string::npos);
}

TEST_CASE("kw-check at reduced size") {
    const RunResult r = run_cli("kw-check --n 3 --L 16 --radial 20 --count 3 --band 4 --seed 5");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("\"pass\":true") != std::string::npos);
}
