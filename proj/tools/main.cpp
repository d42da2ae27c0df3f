#include <fstream>
#include <iostream>
#include <map>
#include <memory>

#include <CLI11.hpp>

#include "cli/commands.hpp"

using namespace galperin::cli;

namespace {

void add_common(CLI::App* sub, RunConfig& cfg, std::string& out_path) {
    sub->add_option("--base,-b", cfg.base, "Base b > 1: a number, p/q, phi, e or pi");
    sub->add_option("--mantissa,-N", cfg.mantissa, "Mantissa N; M/m = b^(2N)");
    sub->add_flag("--literal", cfg.literal, "Accept decimals that look like a named constant");
    sub->add_option("--precision-cap", cfg.precision_cap, "Largest working precision in bits")
        ->check(CLI::PositiveNumber);
    sub->add_option("--out,-o", out_path, "Output file (default stdout)");
    const std::map<std::string, Format> formats = {
        {"table", Format::Table}, {"csv", Format::Csv}, {"json", Format::Json}};
    sub->add_option("--format,-f", cfg.format, "Output format: table, csv or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
}

void add_physics(CLI::App* sub, RunConfig& cfg) {
    const std::map<std::string, FieldMode> fields = {
        {"auto", FieldMode::Auto}, {"rational", FieldMode::Rational}, {"interval", FieldMode::Interval}};
    sub->add_option("--field", cfg.field, "Arithmetic: auto, rational or interval")
        ->transform(CLI::CheckedTransformer(fields, CLI::ignore_case));
    sub->add_option("--step-limit", cfg.step_limit, "Maximum number of collisions");
    sub->add_option("--m", cfg.m, "Light mass");
    sub->add_option("--M", cfg.heavy_mass, "Heavy mass (overrides base and mantissa)");
    sub->add_option("--X0", cfg.X0, "Initial heavy-ball position");
    sub->add_option("--x0", cfg.x0, "Initial light-ball position");
    sub->add_option("--V0", cfg.V0, "Initial heavy-ball velocity");
    sub->add_option("--v0", cfg.v0, "Initial light-ball velocity");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Digits of pi from two colliding balls and a wall"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string out_path;

    auto* digits = app.add_subcommand("digits", "Collision counts and digits of pi in base b");
    add_common(digits, cfg, out_path);
    digits->add_flag("--dual", cfg.dual, "Both base-phi forms (leading 100 and 11)");
    digits->add_option("--from", cfg.first_row, "First mantissa of the table");
    digits->add_option("--to", cfg.last_row, "Last mantissa of the table");

    auto* simulate = app.add_subcommand("simulate", "Run the billiard and compare with the count");
    add_common(simulate, cfg, out_path);
    add_physics(simulate, cfg);

    auto* trace = app.add_subcommand("trace", "Event stream n,kind,t,X,x,V,v");
    add_common(trace, cfg, out_path);
    add_physics(trace, cfg);

    auto* check = app.add_subcommand("check", "Invariant and geometry audits of one trajectory");
    add_common(check, cfg, out_path);
    add_physics(check, cfg);
    check->add_option("--superintegrable,-q", cfg.superintegrable,
                      "Use m/M = tan^2(pi/q) and audit J (q in 3, 4, 6)");

    auto* emap = app.add_subcommand("error-map", "Systematic error over a (b, N) grid");
    add_common(emap, cfg, out_path);
    emap->add_option("--b-min", cfg.b_min, "Smallest base");
    emap->add_option("--b-max", cfg.b_max, "Largest base");
    emap->add_option("--b-points", cfg.b_points, "Number of bases")->check(CLI::PositiveNumber);
    emap->add_option("--n-min", cfg.n_min, "Smallest mantissa");
    emap->add_option("--n-max", cfg.n_max, "Largest mantissa");
    emap->add_option("--n-points", cfg.n_points, "Number of mantissas")->check(CLI::PositiveNumber);
    emap->add_option("--workers,-j", cfg.workers, "Worker threads (0: all cores)");
    emap->add_option("--sidecar", cfg.sidecar, "File listing undecided cells");

    auto* bench = app.add_subcommand("bench", "Time simulation against the closed-form count");
    add_common(bench, cfg, out_path);
    bench->add_option("--max-mantissa", cfg.bench_max_mantissa, "Largest simulated mantissa");
    bench->add_option("--count-mantissa", cfg.bench_count_mantissa, "Mantissa of the large count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_code::ok : exit_code::usage;
    }
    if (emap->parsed() && cfg.precision_cap == galperin::kDefaultPrecisionCap) cfg.precision_cap = 4096;
    if (emap->parsed() && !cfg.sidecar && !out_path.empty()) cfg.sidecar = out_path + ".ambiguous.csv";

    std::unique_ptr<std::ofstream> file;
    if (!out_path.empty()) {
        file = std::make_unique<std::ofstream>(out_path);
        if (!*file) {
            std::cerr << "error: invalid_argument: cannot write " << out_path << '\n';
            return exit_code::usage;
        }
    }
    std::ostream& out = file ? static_cast<std::ostream&>(*file) : std::cout;

    return run_guarded(std::cerr, [&]() -> int {
        if (digits->parsed()) return cmd_digits(cfg, out, std::cerr);
        if (simulate->parsed()) return cmd_simulate(cfg, out, std::cerr);
        if (trace->parsed()) return cmd_trace(cfg, out, std::cerr);
        if (check->parsed()) return cmd_check(cfg, out, std::cerr);
        if (emap->parsed()) return cmd_error_map(cfg, out, std::cerr);
        return cmd_bench(cfg, out, std::cerr);
    });
}
