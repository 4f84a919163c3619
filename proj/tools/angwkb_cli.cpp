// Batch front end: reproducible CSV/JSON reports comparing the WKB partial
// sums, the summed series, the torus limit, SWKB, the shooting oracle and
// the contour checks over parameter grids.
//
// Exit codes: 0 success, 2 invalid configuration, 3 numerical gate failure.

#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "angwkb/contour_integrator.hpp"
#include "angwkb/errors.hpp"
#include "angwkb/phase_algebra.hpp"
#include "angwkb/reporting.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

struct Options {
    std::string mSpec = "1..1";
    std::string nThetaSpec = "0..0";
    std::string lSpec;
    int order = 8;
    int samples = 1024;
    double tolerance = 1e-10;
    std::string format = "csv";
    std::string outPath;
};

angwkb::Range parse_range(const std::string& spec, const char* flag) {
    const auto pos = spec.find("..");
    try {
        if (pos == std::string::npos) {
            const int v = std::stoi(spec);
            return {v, v};
        }
        const int lo = std::stoi(spec.substr(0, pos));
        const int hi = std::stoi(spec.substr(pos + 2));
        if (hi < lo)
            throw angwkb::DomainError(std::string(flag) + ": empty range '" + spec + "'");
        return {lo, hi};
    } catch (const std::invalid_argument&) {
        throw angwkb::DomainError(std::string(flag) + ": cannot parse range '" + spec + "'");
    } catch (const std::out_of_range&) {
        throw angwkb::DomainError(std::string(flag) + ": range value out of bounds in '" +
                                  spec + "'");
    }
}

void add_common(CLI::App* cmd, Options& opt, bool withL) {
    cmd->add_option("--m", opt.mSpec, "m range A..B (inclusive)");
    cmd->add_option("--n-theta", opt.nThetaSpec, "n_theta range A..B (inclusive)");
    if (withL) cmd->add_option("--l", opt.lSpec, "l range A..B (default m..m+k per command)");
    cmd->add_option("--order", opt.order, "series order N");
    cmd->add_option("--samples", opt.samples, "initial contour sample count");
    cmd->add_option("--tolerance", opt.tolerance, "oracle energy tolerance");
    cmd->add_option("--format", opt.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", opt.outPath, "output file (stdout when omitted)");
}

void emit(const angwkb::Table& table, const Options& opt, const std::string& command) {
    const std::string payload =
        (opt.format == "json") ? angwkb::to_json(table, command) : angwkb::to_csv(table);
    if (opt.outPath.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(opt.outPath, std::ios::binary);
    if (!out)
        throw angwkb::DomainError("--out: cannot open '" + opt.outPath + "'");
    out << payload;
}

void emit_raw(const std::string& payload, const Options& opt) {
    if (opt.outPath.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(opt.outPath, std::ios::binary);
    if (!out)
        throw angwkb::DomainError("--out: cannot open '" + opt.outPath + "'");
    out << payload;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"WKB / SWKB quantization reports for the angular momentum spectrum"};
    app.require_subcommand(1);

    Options opt;
    CLI::App* quantize = app.add_subcommand(
        "quantize", "partial sums, summed series and torus limit per (m, n_theta)");
    add_common(quantize, opt, false);
    CLI::App* contour =
        app.add_subcommand("contour", "cycle integrals of sigma_n' versus closed forms");
    add_common(contour, opt, true);
    CLI::App* swkb = app.add_subcommand("swkb", "SWKB spectrum and CBC integrals");
    add_common(swkb, opt, false);
    CLI::App* oracle = app.add_subcommand("oracle", "shooting-method eigenvalues");
    add_common(oracle, opt, true);
    CLI::App* report =
        app.add_subcommand("report", "cross-method comparison per (m, l)");
    add_common(report, opt, true);
    CLI::App* coeffs = app.add_subcommand(
        "coeffs", "canonical phase coefficient tables as JSON");
    coeffs->add_option("--order", opt.order, "deepest order to certify");
    coeffs->add_option("--out", opt.outPath, "output file (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitConfig;
    }

    try {
        if (quantize->parsed()) {
            emit(angwkb::quantize_table(parse_range(opt.mSpec, "--m"),
                                        parse_range(opt.nThetaSpec, "--n-theta"), opt.order),
                 opt, "quantize");
        } else if (contour->parsed()) {
            angwkb::Range l{};
            if (!opt.lSpec.empty()) l = parse_range(opt.lSpec, "--l");
            emit(angwkb::contour_table(parse_range(opt.mSpec, "--m"), l, opt.order,
                                       opt.samples),
                 opt, "contour");
        } else if (swkb->parsed()) {
            emit(angwkb::swkb_table(parse_range(opt.mSpec, "--m"),
                                    parse_range(opt.nThetaSpec, "--n-theta")),
                 opt, "swkb");
        } else if (oracle->parsed()) {
            angwkb::Range l{};
            if (!opt.lSpec.empty()) l = parse_range(opt.lSpec, "--l");
            angwkb::OracleConfig cfg;
            cfg.tolerance = opt.tolerance;
            emit(angwkb::oracle_table(parse_range(opt.mSpec, "--m"), l, cfg), opt, "oracle");
        } else if (report->parsed()) {
            angwkb::Range l{};
            if (!opt.lSpec.empty()) l = parse_range(opt.lSpec, "--l");
            emit(angwkb::report_table(parse_range(opt.mSpec, "--m"), l, opt.order), opt,
                 "report");
        } else if (coeffs->parsed()) {
            if (opt.order < 1 || opt.order > angwkb::kMaxOrder)
                throw angwkb::DomainError("--order: must lie in 1.." +
                                          std::to_string(angwkb::kMaxOrder));
            const auto series = angwkb::wkb_series(opt.order);
            std::vector<angwkb::CanonicalPhase> tables;
            for (int n = 1; n <= opt.order; ++n)
                tables.push_back(angwkb::extract_canonical(series[n], n));
            emit_raw(angwkb::coefficient_dump(tables), opt);
        }
    } catch (const angwkb::DomainError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const angwkb::StructureViolation& e) {
        std::cerr << "structure violation: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumeric;
    }
    return 0;
}
