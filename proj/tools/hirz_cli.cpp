#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hirz/commands.hpp"

using hirz::Int;
namespace cli = hirz::cli;

int main(int argc, char** argv) {
    CLI::App app{"Invariants of rank-two bundles on Hirzebruch surfaces and their threefold scrolls"};
    app.require_subcommand(1);

    std::string format = "plain";
    std::string out_path;
    Int e = 0, b = 0, t = 0, a = 0, c = 0, e_max = 0, t_max = 0;
    std::optional<Int> force_b;
    bool paper_only = false;
    std::string fault = "none";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "plain, json or csv")
            ->check(CLI::IsMember({"plain", "json", "csv"}));
        sub->add_option("--out", out_path, "write output to PATH instead of stdout");
    };

    auto* report = app.add_subcommand("report", "scroll invariants, uniformity and cohomology for one (e, b, t)");
    report->add_option("-e", e)->required();
    report->add_option("-b", b)->required();
    report->add_option("-t", t)->required();
    add_common(report);

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert-scheme component for b = 2e+3+t");
    hilbert->add_option("-e", e)->required();
    hilbert->add_option("-t", t)->required();
    hilbert->add_option("--force-b", force_b, "use this b instead of 2e+3+t (flag-gated)");
    add_common(hilbert);

    auto* coh = app.add_subcommand("cohomology", "line-bundle cohomology of aC0 + cf on F_e");
    coh->add_option("-e", e)->required();
    coh->add_option("-a", a)->required();
    coh->add_option("-c", c)->required();
    add_common(coh);

    auto* table = app.add_subcommand("table", "one row per valid (e, b, t), sorted by (e, t, b)");
    table->add_option("--e-max", e_max)->required();
    table->add_option("--t-max", t_max)->required();
    table->add_flag("--paper-regime-only", paper_only, "keep only b = 2e+3+t with e <= 2");
    add_common(table);

    auto* verify = app.add_subcommand("verify", "run every identity over the parameter grid");
    verify->add_option("--e-max", e_max)->required();
    verify->add_option("--t-max", t_max)->required();
    verify->add_option("--inject-fault", fault, "exercise the verifier: none or canonical-sign")
        ->check(CLI::IsMember({"none", "canonical-sign"}))
        ->group("");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        const int rc = app.exit(ex);
        return rc == 0 ? 0 : 1;
    }

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "error: cannot open " << out_path << "\n";
            return 1;
        }
    }
    std::ostream& out = out_path.empty() ? std::cout : file;
    const cli::OutputFormat fmt = cli::parse_format(format);

    if (report->parsed()) return cli::cmd_report(e, b, t, fmt, out, std::cerr);
    if (hilbert->parsed()) return cli::cmd_hilbert(e, t, force_b, fmt, out, std::cerr);
    if (coh->parsed()) return cli::cmd_cohomology(e, a, c, fmt, out, std::cerr);
    if (table->parsed()) return cli::cmd_table(e_max, t_max, paper_only, fmt, out, std::cerr);
    const hirz::Fault f = fault == "canonical-sign" ? hirz::Fault::canonical_sign : hirz::Fault::none;
    return cli::cmd_verify(e_max, t_max, f, fmt, out, std::cerr);
}
