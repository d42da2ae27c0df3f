#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

#include "galperin/dynamics.hpp"
#include "galperin/precision.hpp"

namespace galperin::cli {

enum class FieldMode { Auto, Rational, Interval };
enum class Format { Table, Csv, Json };

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int degenerate = 2;
inline constexpr int step_limit = 3;
inline constexpr int precision_cap = 4;
inline constexpr int audit_failed = 5;
}  // namespace exit_code

struct RunConfig {
    std::string base = "10";
    bool literal = false;
    std::optional<std::string> mantissa;
    FieldMode field = FieldMode::Auto;
    long precision_cap = kDefaultPrecisionCap;
    std::optional<Format> format;
    long step_limit = -1;
    unsigned workers = 0;

    // Initial conditions and masses.
    std::string m = "1";
    std::optional<std::string> heavy_mass;
    std::string X0 = "-2";
    std::string x0 = "-1";
    std::string V0 = "1";
    std::string v0 = "0";

    // digits
    bool dual = false;
    long first_row = 0;
    long last_row = 10;

    // check
    std::optional<int> superintegrable;

    // error-map
    std::string b_min = "1.05";
    std::string b_max = "16";
    std::size_t b_points = 200;
    std::string n_min = "0";
    std::string n_max = "3";
    std::size_t n_points = 200;
    std::optional<std::string> sidecar;

    // bench
    long bench_max_mantissa = 5;
    long bench_count_mantissa = 100;
};

/// Billiard described by the configuration; for --superintegrable q the
/// masses are M = 1 and m = tan^2(pi/q).
BilliardSpec make_spec(const RunConfig& cfg);

/// Rational when b^(2N) is rational and the run is short enough for exact
/// arithmetic, interval otherwise.
bool use_rational(const RunConfig& cfg, const BilliardSpec& spec);

/// Each command writes its result to out, diagnostics to err, and returns
/// the process exit code.
int cmd_digits(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_trace(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_error_map(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Runs fn and maps library errors to exit codes with a reason line on err.
int run_guarded(std::ostream& err, const std::function<int()>& fn);

}  // namespace galperin::cli
