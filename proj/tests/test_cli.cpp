#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

// End-to-end checks of the installed command-line surface: exact exit codes,
// byte-exact headers, and run-to-run determinism.

#ifndef SOLFAC_CLI_PATH
#error "SOLFAC_CLI_PATH must point at the built binary"
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
};

fs::path workdir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "solfac_cli_tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

fs::path write_file(const std::string& name, const std::string& content) {
    const fs::path p = workdir() / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p;
}

RunResult run(const std::string& args) {
    const std::string cmd = std::string(SOLFAC_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int raw = std::system(cmd.c_str());
    return {WEXITSTATUS(raw)};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const char* kSmallConfig =
    "[grid]\n"
    "xmin = -3\nxmax = 3\nnx = 13\ntmin = -1\ntmax = 1\nnt = 7\n"
    "[soliton]\n"
    "alpha = 0.2\nbeta = 0.45\nx0 = 0.1\nphi = 0.3\n";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("nls subcommand writes the exact header and is deterministic") {
    const fs::path cfg = write_file("small.cfg", kSmallConfig);
    const fs::path out1 = workdir() / "u1.csv";
    const fs::path out2 = workdir() / "u2.csv";
    CHECK(run("nls --config " + cfg.string() + " --out " + out1.string()).exit_code == 0);
    CHECK(run("nls --config " + cfg.string() + " --out " + out2.string()).exit_code == 0);
    const std::string csv = slurp(out1);
    CHECK(csv.rfind("x,t,re_u,im_u,abs_u\n", 0) == 0);
    CHECK(csv == slurp(out2));
    // 13 x 7 nodes + header
    std::size_t lines = 0;
    for (char ch : csv) lines += ch == '\n';
    CHECK(lines == 92);
}

TEST_CASE("hm subcommand honors the time-convention flag") {
    const fs::path cfg = write_file("small.cfg", kSmallConfig);
    const fs::path half_out = workdir() / "s_half.csv";
    const fs::path unit_out = workdir() / "s_unit.csv";
    CHECK(run("hm --config " + cfg.string() + " --out " + half_out.string()).exit_code == 0);
    CHECK(run("hm --config " + cfg.string() + " --time-convention unit --out " +
              unit_out.string())
              .exit_code == 0);
    const std::string half_csv = slurp(half_out);
    CHECK(half_csv.rfind("x,t,s1,s2,s3,norm_err\n", 0) == 0);
    CHECK(half_csv != slurp(unit_out));  // dilation changes rows away from t = 0
}

TEST_CASE("json format flag") {
    const fs::path cfg = write_file("small.cfg", kSmallConfig);
    const fs::path out = workdir() / "u.json";
    CHECK(run("nls --config " + cfg.string() + " --format json --out " + out.string())
              .exit_code == 0);
    CHECK(slurp(out).find("\"schema_version\": 1") != std::string::npos);
}

TEST_CASE("usage errors stay inside the documented exit-code set") {
    CHECK(run("").exit_code == 1);                   // no subcommand
    CHECK(run("nls").exit_code == 1);                // missing --config
    CHECK(run("frobnicate").exit_code == 1);         // unknown subcommand
    CHECK(run("verify --which bogus --config x").exit_code == 1);
    CHECK(run("--help").exit_code == 0);
    CHECK(run("--help-config").exit_code == 0);
}

TEST_CASE("exit code 1 on validation failures") {
    const fs::path bad = write_file(
        "outside.cfg",
        "[spectral]\nre_p = 1.2\nim_p = 0.1\nre_lambda = 1\nim_lambda = 0\n");
    CHECK(run("nls --config " + bad.string()).exit_code == 1);

    const fs::path dup = write_file(
        "dup.cfg",
        "[spectral]\nre_p = 0.3\nim_p = 0.4\nre_lambda = 1\nim_lambda = 0\n"
        "[spectral]\nre_p = 0.3\nim_p = 0.4\nre_lambda = 2\nim_lambda = 0\n");
    CHECK(run("verify --config " + dup.string()).exit_code == 1);

    CHECK(run("nls --config " + (workdir() / "does_not_exist.cfg").string()).exit_code == 1);
}

TEST_CASE("exit code 2 on numerical failures") {
    // A pivot floor above the max entry magnitude makes the first elimination
    // step fail: valid data, unsolvable numerics.
    const fs::path cfg = write_file("pivot.cfg",
                                    std::string(kSmallConfig) +
                                        "[tolerances]\nrel_pivot = 10\n");
    CHECK(run("nls --config " + cfg.string()).exit_code == 2);
}

TEST_CASE("verify exits 0 on a sound configuration") {
    const fs::path cfg = write_file(
        "verify.cfg",
        "[grid]\n"
        "xmin = -5\nxmax = 5\nnx = 81\ntmin = -1\ntmax = 1\nnt = 41\n"
        "[soliton]\n"
        "alpha = 0\nbeta = 0.4\nx0 = 0\nphi = 0\n");
    const fs::path report = workdir() / "verify.json";
    CHECK(run("verify --config " + cfg.string() + " --which all --out " + report.string())
              .exit_code == 0);
    const std::string json = slurp(report);
    CHECK(json.find("\"pass\": true") != std::string::npos);
    CHECK(json.find("\"exit_code\": 0") != std::string::npos);
}

TEST_CASE("crosscheck exit codes: 0 pinned, 3 for the flipped negative control") {
    const fs::path cfg = write_file("small.cfg", kSmallConfig);
    CHECK(run("crosscheck --config " + cfg.string()).exit_code == 0);
    CHECK(run("crosscheck --config " + cfg.string() + " --tanh-sign plus").exit_code == 3);
}

}  // TEST_SUITE
