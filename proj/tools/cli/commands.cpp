#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "galperin/base_repr.hpp"
#include "galperin/closed_form.hpp"
#include "galperin/errors.hpp"
#include "galperin/geometry.hpp"
#include "galperin/invariants.hpp"
#include "io.hpp"

namespace galperin::cli {

namespace {

using nlohmann::json;

long integer_mantissa(const std::string& text) {
    const Rational n = Rational::parse(text);
    if (!n.is_integer() || !n.num().fits_slong_p())
        throw InvalidArgument("digits need an integer mantissa, got '" + text + "'");
    return n.num().get_si();
}

Format format_or(const RunConfig& cfg, Format fallback) { return cfg.format.value_or(fallback); }

double elapsed(std::chrono::steady_clock::time_point since) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - since).count();
}

double mass_ratio(const BilliardSpec& spec) {
    if (spec.heavy_mass) return spec.heavy_mass->to_double() / spec.m.to_double();
    return std::pow(spec.base.to_double(), 2 * spec.mantissa.to_double());
}

// Closed-form count applies to the light ball starting at rest.
bool count_applies(const BilliardSpec& spec) { return !spec.heavy_mass && spec.v0.is_zero(); }

struct CountCheck {
    bool available = false;
    mpz_class count;
    bool degenerate = false;
};

CountCheck closed_form_count(const RunConfig& cfg, const BilliardSpec& spec) {
    CountCheck c;
    if (!count_applies(spec)) return c;
    c.available = true;
    try {
        c.count = count_collisions_exact(spec.base, spec.mantissa, cfg.precision_cap);
    } catch (const SubmultipleDegeneracy& d) {
        c.count = d.formula_value();
        c.degenerate = true;
    }
    return c;
}

template <class F>
json state_json(const KinematicState<F>& s) {
    return {{"t", to_json(s.t)}, {"X", to_json(s.X)}, {"x", to_json(s.x)},
            {"V", to_json(s.V)}, {"v", to_json(s.v)}};
}

void emit_key_values(std::ostream& out, Format fmt, const std::vector<std::pair<std::string, std::string>>& kv,
                     const json& j) {
    if (fmt == Format::Json) {
        out << j.dump(2) << '\n';
        return;
    }
    if (fmt == Format::Csv) out << "key,value\n";
    for (const auto& [k, v] : kv) out << k << (fmt == Format::Csv ? "," : ": ") << v << '\n';
}

}  // namespace

BilliardSpec make_spec(const RunConfig& cfg) {
    BilliardSpec spec;
    spec.base = Real::parse(cfg.base, cfg.literal);
    spec.mantissa = cfg.mantissa ? Rational::parse(*cfg.mantissa) : Rational(1);
    spec.m = Rational::parse(cfg.m);
    spec.X0 = Rational::parse(cfg.X0);
    spec.x0 = Rational::parse(cfg.x0);
    spec.V0 = Rational::parse(cfg.V0);
    spec.v0 = Rational::parse(cfg.v0);
    if (cfg.heavy_mass) spec.heavy_mass = Rational::parse(*cfg.heavy_mass);
    if (cfg.superintegrable) {
        auto t2 = exact_tan_sq(*cfg.superintegrable);
        if (!t2) throw InvalidArgument("superintegrable runs support q in {3, 4, 6}");
        spec.heavy_mass = Rational(1);
        spec.m = *t2;
    }
    spec.validate();
    return spec;
}

bool use_rational(const RunConfig& cfg, const BilliardSpec& spec) {
    switch (cfg.field) {
        case FieldMode::Rational:
            if (!spec.rational_masses())
                throw InvalidArgument("b^(2N) is not rational; rational mode is unavailable");
            return true;
        case FieldMode::Interval: return false;
        case FieldMode::Auto: break;
    }
    // Exact values grow by about log2(M + m) bits per collision, so long runs
    // are done with intervals.
    return spec.rational_masses() && 3.141592653589793 * std::sqrt(mass_ratio(spec)) <= 20000;
}

int run_guarded(std::ostream& err, const std::function<int()>& fn) {
    try {
        return fn();
    } catch (const SubmultipleDegeneracy& e) {
        err << "error: submultiple_degeneracy: " << e.what() << '\n';
        return exit_code::degenerate;
    } catch (const FloorAmbiguity& e) {
        err << "error: floor_ambiguity: " << e.what() << '\n';
        return exit_code::degenerate;
    } catch (const TripleCollision& e) {
        err << "error: triple_collision: " << e.what() << '\n';
        return exit_code::degenerate;
    } catch (const PrecisionExhausted& e) {
        err << "error: precision_cap: " << e.what() << '\n';
        return exit_code::precision_cap;
    } catch (const std::exception& e) {
        err << "error: invalid_argument: " << e.what() << '\n';
        return exit_code::usage;
    }
}

int cmd_digits(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Real b = Real::parse(cfg.base, cfg.literal);
    const bool golden = b.kind() == Real::Kind::Golden && *b.golden() == Golden::phi();
    if (cfg.dual && !golden) throw InvalidArgument("--dual is only defined for base phi");
    long first = cfg.first_row, last = cfg.last_row;
    if (cfg.mantissa) first = last = integer_mantissa(*cfg.mantissa);
    if (first < 0 || last < first) throw InvalidArgument("invalid row range");
    const Format fmt = format_or(cfg, Format::Table);
    const bool decimal = b.is_integer() && *b.rational() == Rational(10);

    struct Row {
        long N;
        PiDigits d;
        std::string type_two;
    };
    std::vector<Row> rows;
    for (long N = first; N <= last; ++N) {
        Row r{N, pi_digits_row(b, N, cfg.precision_cap), {}};
        if (cfg.dual) {
            const Golden x = Golden(Rational(r.d.count)) / Golden::phi_pow(N);
            auto forms = golden_dual_forms(Real(x), N, cfg.precision_cap);
            r.d.digits = forms.first;
            r.type_two = forms.second.str();
        }
        rows.push_back(std::move(r));
    }

    const std::string label = b.label();
    if (fmt == Format::Json) {
        json j = {{"schema", 1}, {"command", "digits"}, {"base", label}, {"rows", json::array()}};
        for (const auto& r : rows) {
            json row = {{"N", r.N},
                        {"count", r.d.count.get_str()},
                        {"count_base", r.d.integer_form.str()},
                        {"digits", r.d.digits.str()},
                        {"error_unit", error_unit(r.N)},
                        {"epsilon", r.d.epsilon},
                        {"degenerate", r.d.degenerate}};
            if (cfg.dual) row["digits_type2"] = r.type_two;
            j["rows"].push_back(row);
        }
        out << j.dump(2) << '\n';
    } else if (fmt == Format::Csv) {
        out << "N,count,count_base,digits," << (cfg.dual ? "digits_type2," : "")
            << "error_unit,epsilon,degenerate\n";
        for (const auto& r : rows) {
            out << r.N << ',' << r.d.count.get_str() << ',' << r.d.integer_form.str() << ','
                << r.d.digits.str() << ',' << (cfg.dual ? r.type_two + "," : "") << error_unit(r.N)
                << ',' << r.d.epsilon << ',' << (r.d.degenerate ? "true" : "false") << '\n';
        }
    } else {
        if (decimal)
            out << "N | Pi(10,N) | Pi(10,N)/10^N | 1/10^N\n";
        else
            out << "N | Pi(b,N) | Pi(b,N) in base " << label << " | Pi(b,N)/b^N"
                << (cfg.dual ? " (I) | Pi(b,N)/b^N (II)" : "") << " | 1/b^N\n";
        for (const auto& r : rows) {
            out << r.N << " | " << r.d.count.get_str() << " | ";
            if (!decimal) out << r.d.integer_form.str() << " | ";
            out << r.d.digits.str() << " | ";
            if (cfg.dual) out << r.type_two << " | ";
            out << error_unit(r.N);
            if (r.d.epsilon != 0) out << "  [epsilon=" << r.d.epsilon << "]";
            if (r.d.degenerate) out << "  [degenerate]";
            out << '\n';
        }
    }
    int code = exit_code::ok;
    for (const auto& r : rows) {
        if (r.d.degenerate) {
            err << "reason: submultiple_degeneracy N=" << r.N
                << " (formula value " << r.d.count.get_str() << " exceeds the physical count by one)\n";
            code = exit_code::degenerate;
        }
    }
    return code;
}

namespace {

template <class F>
int report_run(const RunConfig& cfg, const BilliardSpec& spec, const RunSummary<F>& run,
               const char* field, std::ostream& out, std::ostream& err) {
    const CountCheck cc = closed_form_count(cfg, spec);
    std::vector<std::pair<std::string, std::string>> kv = {
        {"base", spec.base.label()},
        {"mantissa", spec.mantissa.str()},
        {"field", field},
        {"precision_bits", std::to_string(run.precision_bits)},
        {"events", std::to_string(run.events)},
        {"termination", to_string(run.termination)},
        {"t", to_text(run.final_state.t)},
        {"X", to_text(run.final_state.X)},
        {"x", to_text(run.final_state.x)},
        {"V", to_text(run.final_state.V)},
        {"v", to_text(run.final_state.v)}};
    json j = {{"schema", 1},
              {"command", "simulate"},
              {"spec", spec_to_json(spec)},
              {"field", field},
              {"precision_bits", run.precision_bits},
              {"events", run.events},
              {"termination", to_string(run.termination)},
              {"final_state", state_json(run.final_state)}};
    bool mismatch = false;
    if (cc.available) {
        const bool match = cc.count == run.events;
        mismatch = !match;
        kv.emplace_back("closed_form_count", cc.count.get_str());
        kv.emplace_back("degenerate", cc.degenerate ? "true" : "false");
        kv.emplace_back("match", match ? "true" : "false");
        j["closed_form_count"] = cc.count.get_str();
        j["degenerate"] = cc.degenerate;
        j["match"] = match;
    }
    emit_key_values(out, format_or(cfg, Format::Table), kv, j);
    if (run.termination == Termination::StepLimit) {
        err << "reason: step_limit after " << run.events << " collisions\n";
        return exit_code::step_limit;
    }
    if (cc.available && cc.degenerate) {
        err << "reason: submultiple_degeneracy (formula " << cc.count.get_str() << ", simulated "
            << run.events << ")\n";
        return exit_code::degenerate;
    }
    if (mismatch) {
        err << "reason: count_mismatch\n";
        return exit_code::degenerate;
    }
    return exit_code::ok;
}

auto noop_observer() {
    return [](long, CollisionKind, const auto&, const auto&) {};
}

}  // namespace

int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const BilliardSpec spec = make_spec(cfg);
    if (use_rational(cfg, spec)) {
        const System<Rational> sys = make_system<Rational>(spec);
        const auto run = simulate_stream(sys, cfg.step_limit, noop_observer());
        return report_run(cfg, spec, run, "rational", out, err);
    }
    const auto run = simulate_certified(spec, default_policy(spec, cfg.precision_cap), cfg.step_limit,
                                        noop_observer(), [&](long bits) {
                                            err << "note: restarting at " << bits << " bits\n";
                                        });
    return report_run(cfg, spec, run, "interval", out, err);
}

namespace {

template <class F>
RunSummary<F> stream_trace(const System<F>& sys, const RunConfig& cfg, const BilliardSpec& spec,
                           const char* field, long bits, std::ostream& out) {
    const Format fmt = format_or(cfg, Format::Csv);
    if (fmt == Format::Json) {
        JsonTraceWriter w(out, spec, field, bits);
        auto run = simulate_stream(sys, cfg.step_limit,
                                   [&](long n, CollisionKind k, const KinematicState<F>& s,
                                       const F& dt) { w.event(n, k, s, dt); });
        w.finish(run.events, run.termination);
        return run;
    }
    out << kTraceHeader << '\n';
    return simulate_stream(sys, cfg.step_limit,
                           [&](long n, CollisionKind k, const KinematicState<F>& s, const F&) {
                               write_csv_event(out, n, k, s);
                           });
}

}  // namespace

int cmd_trace(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const BilliardSpec spec = make_spec(cfg);
    Termination term;
    long events;
    if (use_rational(cfg, spec)) {
        const auto run = stream_trace(make_system<Rational>(spec), cfg, spec, "rational", 0, out);
        term = run.termination;
        events = run.events;
    } else {
        // A silent pass finds the precision at which every predicate is decided;
        // the emitting pass then repeats it deterministically.
        const auto probe = simulate_certified(spec, default_policy(spec, cfg.precision_cap),
                                              cfg.step_limit, noop_observer(), [](long) {});
        PrecisionScope scope(probe.precision_bits);
        const auto run = stream_trace(make_system<Interval>(spec), cfg, spec, "interval",
                                      probe.precision_bits, out);
        err << "note: interval values are midpoints at " << probe.precision_bits << " bits\n";
        term = run.termination;
        events = run.events;
    }
    if (term == Termination::StepLimit) {
        err << "reason: step_limit after " << events << " collisions\n";
        return exit_code::step_limit;
    }
    return exit_code::ok;
}

namespace {

struct AuditLine {
    std::string name;
    bool ok;
    std::string detail;
};

template <class F>
std::vector<AuditLine> audit(const RunConfig& cfg, const BilliardSpec& spec, const Trajectory<F>& traj) {
    std::vector<AuditLine> lines;
    const auto rep = audit_invariants(traj, cfg.superintegrable);
    auto series = [&](const std::string& name, const InvariantSeries<F>& s) {
        lines.push_back({name, s.consistent, "drift=" + to_text(s.drift)});
    };
    series("energy", rep.energy);
    series("angular_momentum_sq", rep.angular_momentum_sq);
    series("action_bw", rep.action_bw);
    series("action_bb", rep.action_bb);
    bool zero_dp = true;
    for (const auto& d : rep.bb_momentum_change.values) {
        if constexpr (FieldTraits<F>::exact)
            zero_dp = zero_dp && d.is_zero();
        else
            zero_dp = zero_dp && d.contains_zero();
    }
    lines.push_back({"bb_momentum", zero_dp, "max_change=" + to_text(rep.bb_momentum_change.drift)});
    lines.push_back({"actions_agree", rep.actions_agree, ""});
    if (rep.chevalley) series("chevalley_J", *rep.chevalley);

    if (spec.v0.is_zero() && !rep.action_bw.values.empty()) {
        const F expected = from_rational<F>(abs(spec.x0) * spec.V0);
        const F got = rep.action_bw.values.front();
        bool ok;
        if constexpr (FieldTraits<F>::exact)
            ok = got == expected;
        else
            ok = got.overlaps(expected);
        lines.push_back({"action_initial", ok, "X*v=" + to_text(got) + " |x0|V0=" + to_text(expected)});
    }

    const auto avg = averaged_position_product(traj);
    if (avg.size() >= 2) {
        const bool varies = !detail::values_consistent(avg);
        lines.push_back({"negative_control", true,
                         varies ? "averaged-position product varies (not an invariant)"
                                : "averaged-position product constant on this run"});
    }

    if (cfg.superintegrable && spec.v0.sign() > 0 && !(spec.V0 < spec.v0)) {
        const auto [Vo, vo] = outgoing_map(*cfg.superintegrable, from_rational<F>(spec.V0),
                                           from_rational<F>(spec.v0));
        const auto& fs = traj.final_state;
        bool ok;
        if constexpr (FieldTraits<F>::exact)
            ok = fs.V == Vo && fs.v == vo;
        else
            ok = fs.V.overlaps(Vo) && fs.v.overlaps(vo);
        lines.push_back({"outgoing_map", ok, "V=" + to_text(fs.V) + " v=" + to_text(fs.v)});
    }

    if (!traj.events.empty() && !cfg.superintegrable) {
        const auto g = analyze_geometry(traj);
        lines.push_back({"x_min", true,
                         "observed=" + to_text(g.X_min_observed) +
                             " predicted=" + g.X_min_predicted.str(8)});
        lines.push_back({"v_max", true,
                         "observed=" + to_text(g.v_max_observed) +
                             " predicted=" + g.v_max_predicted.str(8)});
        // Interval residuals pass when below half the working precision.
        const double tol = std::ldexp(1.0, -static_cast<int>(working_precision() / 2));
        auto negligible = [&](const F& r) {
            if constexpr (FieldTraits<F>::exact)
                return r.is_zero();
            else
                return r.hi_d() <= tol;
        };
        const bool hyp_ok = negligible(g.hyperbola.bw);
        lines.push_back({"hyperbola_bw", hyp_ok, "max=" + to_text(g.hyperbola.bw)});
        lines.push_back({"hyperbola_bb", true, "max=" + to_text(g.hyperbola.bb)});
        const bool ell_ok = negligible(g.ellipse.bw);
        if (spec.v0.is_zero()) lines.push_back({"ellipse_bw", ell_ok, "max=" + to_text(g.ellipse.bw)});
        try {
            const auto p = parabola_residual(traj);
            lines.push_back({"parabola", true,
                             "residual=" + std::to_string(p.residual) + " origin=" +
                                 std::to_string(p.origin) + " window=" + std::to_string(p.window)});
        } catch (const InvalidArgument& e) {
            lines.push_back({"parabola", true, std::string("skipped: ") + e.what()});
        }
    }
    return lines;
}

int print_audit(const RunConfig& cfg, const std::vector<AuditLine>& lines, const char* field,
                long events, std::ostream& out) {
    bool ok = true;
    for (const auto& l : lines) ok = ok && l.ok;
    if (format_or(cfg, Format::Table) == Format::Json) {
        json j = {{"schema", 1}, {"command", "check"}, {"field", field}, {"events", events},
                  {"ok", ok},    {"audits", json::array()}};
        for (const auto& l : lines) j["audits"].push_back({{"name", l.name}, {"ok", l.ok}, {"detail", l.detail}});
        out << j.dump(2) << '\n';
    } else {
        out << "field: " << field << "\nevents: " << events << '\n';
        for (const auto& l : lines)
            out << l.name << ": " << (l.ok ? "ok" : "FAILED") << (l.detail.empty() ? "" : "  ")
                << l.detail << '\n';
    }
    return ok ? exit_code::ok : exit_code::audit_failed;
}

}  // namespace

int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const BilliardSpec spec = make_spec(cfg);
    if (use_rational(cfg, spec)) {
        const auto traj = simulate(make_system<Rational>(spec), cfg.step_limit);
        if (traj.termination == Termination::StepLimit) {
            err << "reason: step_limit\n";
            return exit_code::step_limit;
        }
        return print_audit(cfg, audit(cfg, spec, traj), "rational",
                           static_cast<long>(traj.events.size()), out);
    }
    const auto traj = with_escalation(default_policy(spec, cfg.precision_cap), [&](long) {
        auto t = simulate(make_system<Interval>(spec), cfg.step_limit);
        t.precision_bits = working_precision();
        return t;
    });
    if (traj.termination == Termination::StepLimit) {
        err << "reason: step_limit\n";
        return exit_code::step_limit;
    }
    PrecisionScope scope(traj.precision_bits);
    return print_audit(cfg, audit(cfg, spec, traj), "interval", static_cast<long>(traj.events.size()),
                       out);
}

int cmd_error_map(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto bases = linspace(Rational::parse(cfg.b_min), Rational::parse(cfg.b_max), cfg.b_points);
    const auto mantissas =
        linspace(Rational::parse(cfg.n_min), Rational::parse(cfg.n_max), cfg.n_points);
    const ErrorMap map = error_map(bases, mantissas, cfg.workers, cfg.precision_cap);
    if (format_or(cfg, Format::Csv) == Format::Json) {
        json j = {{"schema", 1},
                  {"command", "error-map"},
                  {"b_points", bases.size()},
                  {"n_points", mantissas.size()},
                  {"cells", json::array()}};
        for (const auto& c : map.cells)
            j["cells"].push_back({{"b", c.b.str()}, {"N", c.N.str()}, {"epsilon", c.epsilon}});
        out << j.dump() << '\n';
    } else {
        out << "b,N,epsilon\n";
        for (const auto& c : map.cells)
            out << decimal_or_fraction(c.b) << ',' << decimal_or_fraction(c.N) << ',' << c.epsilon << '\n';
    }
    if (map.ambiguous.empty()) return exit_code::ok;
    std::ostringstream side;
    side << "b,N\n";
    for (auto k : map.ambiguous)
        side << decimal_or_fraction(map.cells[k].b) << ',' << decimal_or_fraction(map.cells[k].N) << '\n';
    if (cfg.sidecar) {
        std::ofstream f(*cfg.sidecar);
        if (!f) throw InvalidArgument("cannot write " + *cfg.sidecar);
        f << side.str();
        err << "reason: " << map.ambiguous.size() << " undecided cells listed in " << *cfg.sidecar << '\n';
    } else {
        err << "reason: " << map.ambiguous.size() << " undecided cells:\n" << side.str();
    }
    return exit_code::degenerate;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const Real b = Real::parse(cfg.base, cfg.literal);
    json rows = json::array();
    for (long N = 1; N <= cfg.bench_max_mantissa; ++N) {
        BilliardSpec spec;
        spec.base = b;
        spec.mantissa = Rational(N);
        auto t0 = std::chrono::steady_clock::now();
        const auto run = simulate_certified(spec, default_policy(spec, cfg.precision_cap), -1,
                                            noop_observer(), [](long) {});
        const double sim = elapsed(t0);
        t0 = std::chrono::steady_clock::now();
        const CollisionCount c = collision_count(b, Rational(N), cfg.precision_cap);
        const double cnt = elapsed(t0);
        json row = {{"N", N},
                    {"events", run.events},
                    {"precision_bits", run.precision_bits},
                    {"simulate_seconds", sim},
                    {"ns_per_collision", run.events > 0 ? sim * 1e9 / static_cast<double>(run.events) : 0.0},
                    {"count", c.exact.get_str()},
                    {"count_seconds", cnt},
                    {"match", c.exact == run.events}};
        if (N <= 3 && spec.rational_masses()) {
            t0 = std::chrono::steady_clock::now();
            const auto exact = simulate_stream(make_system<Rational>(spec), -1, noop_observer());
            row["rational_seconds"] = elapsed(t0);
            row["rational_events"] = exact.events;
        }
        rows.push_back(row);
    }
    auto t0 = std::chrono::steady_clock::now();
    const mpz_class big = count_collisions_exact(b, Rational(cfg.bench_count_mantissa), cfg.precision_cap);
    const double big_s = elapsed(t0);
    json j = {{"schema", 1},
              {"command", "bench"},
              {"base", b.label()},
              {"simulation", rows},
              {"closed_form", {{"N", cfg.bench_count_mantissa}, {"count", big.get_str()}, {"seconds", big_s}}}};
    if (format_or(cfg, Format::Json) == Format::Json) {
        out << j.dump(2) << '\n';
    } else {
        out << "N | events | simulate s | ns/collision | count s | match\n";
        for (const auto& r : rows)
            out << r["N"] << " | " << r["events"] << " | " << r["simulate_seconds"] << " | "
                << r["ns_per_collision"] << " | " << r["count_seconds"] << " | " << r["match"] << '\n';
        out << "closed form N=" << cfg.bench_count_mantissa << ": " << big_s << " s\n";
    }
    return exit_code::ok;
}

}  // namespace galperin::cli
