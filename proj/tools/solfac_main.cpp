// solfac: exact multisoliton fields of the focusing NLS and Heisenberg
// magnet equations from spectral data, with built-in residual verification.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "solfac/drivers.hpp"
#include "solfac/sampling.hpp"

namespace {

// Exit codes: 0 ok, 1 validation, 2 numerical, 3 threshold violation.
constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitNumerical = 2;

void write_output(const std::string& content, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw solfac::ValidationError("cannot open output file: " + out_path);
    out << content;
}

struct CommonOpts {
    std::string config_path;
    std::string out_path;
    std::string format;  // empty = take from config
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_format) {
    cmd->add_option("--config", opts.config_path, "path to the run config file")->required();
    cmd->add_option("--out", opts.out_path, "output file ('-' or empty for stdout)");
    if (with_format) {
        cmd->add_option("--format", opts.format, "output format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    }
}

solfac::OutputFormat effective_format(const solfac::RunConfig& cfg, const std::string& flag) {
    if (flag == "csv") return solfac::OutputFormat::Csv;
    if (flag == "json") return solfac::OutputFormat::Json;
    return cfg.output_format;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "solfac: multisoliton solutions of the focusing nonlinear Schrodinger and\n"
        "Heisenberg magnet equations via Birkhoff factorization, plus residual\n"
        "verification and algebraic cross-checks."};
    app.require_subcommand(0, 1);

    bool show_schema = false;
    app.add_flag("--help-config", show_schema, "print the config file schema and exit");

    CommonOpts nls_opts, hm_opts, verify_opts, cross_opts;
    std::string time_convention;  // CLI override for hm
    std::string which = "all";
    std::string tanh_sign = "minus";
    bool verify_refine = false;
    bool cross_refine = false;

    CLI::App* nls_cmd = app.add_subcommand("nls", "sample u(x,t) = b_1 on the config grid");
    add_common(nls_cmd, nls_opts, true);

    CLI::App* hm_cmd = app.add_subcommand("hm", "sample the spin field (S1,S2,S3) on the grid");
    add_common(hm_cmd, hm_opts, true);
    hm_cmd->add_option("--time-convention", time_convention,
                       "half: native S_t = (1/2) S x S_xx; unit: sample at (x, 2t)")
        ->check(CLI::IsMember({"half", "unit"}));

    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "residual suites at the config grid and its half-step refinement");
    add_common(verify_cmd, verify_opts, false);
    verify_cmd->add_option("--which", which, "suite selection")
        ->check(CLI::IsMember({"nls", "hm", "zcc", "all"}));
    verify_cmd->add_flag("--refine", verify_refine, "add a quarter-step refinement level");

    CLI::App* cross_cmd = app.add_subcommand(
        "crosscheck", "determinant-quotient vs linear-solve (and n=1 closed-form) comparison");
    add_common(cross_cmd, cross_opts, false);
    cross_cmd->add_flag("--refine", cross_refine, "repeat the comparison on the refined grid");
    cross_cmd
        ->add_option("--tanh-sign", tanh_sign,
                     "closed-form tanh sign; 'plus' is a negative control that must fail")
        ->check(CLI::IsMember({"minus", "plus"}));

    // Only the documented exit codes leave this program: usage problems are
    // validation errors (1), never CLI11's own code family.
    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help / --version
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    if (show_schema) {
        std::cout << solfac::config_schema_help();
        return kExitOk;
    }
    if (app.get_subcommands().empty()) {
        std::cerr << app.help();
        return kExitValidation;
    }

    try {
        if (nls_cmd->parsed()) {
            const solfac::RunConfig cfg = solfac::load_config(nls_opts.config_path);
            const solfac::NlsField field = solfac::sample_nls(cfg);
            const bool csv = effective_format(cfg, nls_opts.format) == solfac::OutputFormat::Csv;
            write_output(csv ? solfac::write_nls_csv(field) : solfac::write_nls_json(field),
                         nls_opts.out_path);
            return kExitOk;
        }
        if (hm_cmd->parsed()) {
            solfac::RunConfig cfg = solfac::load_config(hm_opts.config_path);
            if (time_convention == "half") cfg.time_convention = solfac::HmConvention::Half;
            if (time_convention == "unit") cfg.time_convention = solfac::HmConvention::Unit;
            const solfac::SpinField field = solfac::sample_hm(cfg);
            const bool csv = effective_format(cfg, hm_opts.format) == solfac::OutputFormat::Csv;
            write_output(csv ? solfac::write_hm_csv(field) : solfac::write_hm_json(field),
                         hm_opts.out_path);
            return kExitOk;
        }
        if (verify_cmd->parsed()) {
            const solfac::RunConfig cfg = solfac::load_config(verify_opts.config_path);
            const solfac::VerifySuite suite = which == "nls"   ? solfac::VerifySuite::Nls
                                              : which == "hm"  ? solfac::VerifySuite::Hm
                                              : which == "zcc" ? solfac::VerifySuite::Zcc
                                                               : solfac::VerifySuite::All;
            const solfac::DriverResult res = solfac::run_verify(cfg, suite, verify_refine);
            write_output(res.report_json, verify_opts.out_path);
            return res.exit_code;
        }
        if (cross_cmd->parsed()) {
            const solfac::RunConfig cfg = solfac::load_config(cross_opts.config_path);
            const auto sign = tanh_sign == "plus" ? solfac::ClosedFormTanhSign::Plus
                                                  : solfac::ClosedFormTanhSign::Minus;
            const solfac::DriverResult res = solfac::run_crosscheck(cfg, cross_refine, sign);
            write_output(res.report_json, cross_opts.out_path);
            return res.exit_code;
        }
    } catch (const solfac::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const solfac::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const solfac::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitOk;
}
