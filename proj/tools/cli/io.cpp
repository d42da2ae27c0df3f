#include "io.hpp"

#include <ostream>

#include "galperin/errors.hpp"

namespace galperin::cli {

std::string to_text(const Rational& q) { return q.str(); }
std::string to_text(const Interval& a) { return a.mid_str(); }

std::string decimal_or_fraction(const Rational& q) {
    mpz_class den = q.den();
    long twos = 0, fives = 0;
    while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
        den /= 2;
        ++twos;
    }
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
        den /= 5;
        ++fives;
    }
    if (den != 1) return q.str();
    const long k = std::max(twos, fives);
    if (k == 0) return q.num().get_str();
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(k));
    mpz_class scaled = q.num() * scale / q.den();
    const bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    std::string digits = scaled.get_str();
    if (static_cast<long>(digits.size()) <= k)
        digits = std::string(static_cast<std::size_t>(k) + 1 - digits.size(), '0') + digits;
    digits.insert(digits.size() - static_cast<std::size_t>(k), ".");
    return neg ? "-" + digits : digits;
}

nlohmann::json to_json(const Rational& q) { return q.str(); }

nlohmann::json to_json(const Interval& a) { return {{"mid", a.mid_str()}, {"rad", a.rad_str()}}; }

Rational rational_from_json(const nlohmann::json& j) {
    if (!j.is_string()) throw InvalidArgument("expected a rational string");
    return Rational::parse(j.get<std::string>());
}

Interval interval_from_json(const nlohmann::json& j, long prec) {
    if (!j.is_object() || !j.contains("mid") || !j.contains("rad"))
        throw InvalidArgument("expected an interval object with mid and rad");
    return Interval::from_mid_rad(j.at("mid").get<std::string>(), j.at("rad").get<std::string>(),
                                  prec);
}

nlohmann::json spec_to_json(const BilliardSpec& spec) {
    nlohmann::json j = {{"base", spec.base.label()},       {"mantissa", spec.mantissa.str()},
                        {"m", spec.m.str()},               {"X0", spec.X0.str()},
                        {"x0", spec.x0.str()},             {"V0", spec.V0.str()},
                        {"v0", spec.v0.str()}};
    if (spec.heavy_mass) j["M"] = spec.heavy_mass->str();
    return j;
}

BilliardSpec spec_from_json(const nlohmann::json& j) {
    BilliardSpec s;
    s.base = Real::parse(j.at("base").get<std::string>(), true);
    s.mantissa = rational_from_json(j.at("mantissa"));
    s.m = rational_from_json(j.at("m"));
    s.X0 = rational_from_json(j.at("X0"));
    s.x0 = rational_from_json(j.at("x0"));
    s.V0 = rational_from_json(j.at("V0"));
    s.v0 = rational_from_json(j.at("v0"));
    if (j.contains("M")) s.heavy_mass = rational_from_json(j.at("M"));
    return s;
}

template <class F>
void write_csv_event(std::ostream& out, long n, CollisionKind kind, const KinematicState<F>& s) {
    out << n << ',' << to_string(kind) << ',' << to_text(s.t) << ',' << to_text(s.X) << ','
        << to_text(s.x) << ',' << to_text(s.V) << ',' << to_text(s.v) << '\n';
}

template <class F>
nlohmann::json event_to_json(long n, CollisionKind kind, const KinematicState<F>& s, const F& dt) {
    return {{"n", n},
            {"kind", to_string(kind)},
            {"t", to_json(s.t)},
            {"X", to_json(s.X)},
            {"x", to_json(s.x)},
            {"V", to_json(s.V)},
            {"v", to_json(s.v)},
            {"dt", to_json(dt)}};
}

template void write_csv_event<Rational>(std::ostream&, long, CollisionKind,
                                        const KinematicState<Rational>&);
template void write_csv_event<Interval>(std::ostream&, long, CollisionKind,
                                        const KinematicState<Interval>&);
template nlohmann::json event_to_json<Rational>(long, CollisionKind, const KinematicState<Rational>&,
                                                const Rational&);
template nlohmann::json event_to_json<Interval>(long, CollisionKind, const KinematicState<Interval>&,
                                                const Interval&);

JsonTraceWriter::JsonTraceWriter(std::ostream& out, const BilliardSpec& spec,
                                 const std::string& field, long precision_bits)
    : out_(out) {
    out_ << "{\"schema\":1,\"command\":\"trace\",\"field\":" << nlohmann::json(field).dump()
         << ",\"precision_bits\":" << precision_bits << ",\"spec\":" << spec_to_json(spec).dump()
         << ",\"events\":[";
}

void JsonTraceWriter::finish(long events, Termination termination) {
    out_ << (first_ ? "]" : "\n]") << ",\"count\":" << events << ",\"termination\":"
         << nlohmann::json(to_string(termination)).dump() << "}\n";
}

Termination termination_from_string(const std::string& s) {
    if (s == "OutgoingState") return Termination::OutgoingState;
    if (s == "DegenerateStop") return Termination::DegenerateStop;
    if (s == "StepLimit") return Termination::StepLimit;
    throw InvalidArgument("unknown termination '" + s + "'");
}

CollisionKind kind_from_string(const std::string& s) {
    if (s == "BB") return CollisionKind::BallBall;
    if (s == "BW") return CollisionKind::BallWall;
    throw InvalidArgument("unknown collision kind '" + s + "'");
}

namespace {

template <class F, class Read>
Trajectory<F> read_events(const nlohmann::json& j, const System<F>& sys, Termination term,
                          Read&& read) {
    Trajectory<F> traj;
    traj.system = sys;
    traj.termination = term;
    for (const auto& e : j.at("events")) {
        CollisionEvent<F> ev;
        ev.n = e.at("n").get<long>();
        ev.kind = kind_from_string(e.at("kind").get<std::string>());
        ev.state.n = ev.n;
        ev.state.t = read(e.at("t"));
        ev.state.X = read(e.at("X"));
        ev.state.x = read(e.at("x"));
        ev.state.V = read(e.at("V"));
        ev.state.v = read(e.at("v"));
        ev.dt = read(e.at("dt"));
        traj.events.push_back(std::move(ev));
    }
    traj.final_state = traj.events.empty() ? initial_state(sys) : traj.events.back().state;
    return traj;
}

}  // namespace

LoadedTrace load_trace_json(const nlohmann::json& j) {
    if (j.value("schema", 0) != 1) throw InvalidArgument("unsupported trace schema");
    LoadedTrace out;
    out.spec = spec_from_json(j.at("spec"));
    out.field = j.at("field").get<std::string>();
    out.precision_bits = j.value("precision_bits", 0L);
    out.termination = termination_from_string(j.at("termination").get<std::string>());
    if (out.field == "rational") {
        const System<Rational> sys = make_system<Rational>(out.spec);
        out.rational = read_events(j, sys, out.termination,
                                   [](const nlohmann::json& v) { return rational_from_json(v); });
        out.rational->precision_bits = 0;
    } else if (out.field == "interval") {
        const long prec = out.precision_bits > 0 ? out.precision_bits : kDefaultWorkingPrecision;
        PrecisionScope scope(prec);
        const System<Interval> sys = make_system<Interval>(out.spec);
        out.interval = read_events(j, sys, out.termination, [prec](const nlohmann::json& v) {
            return interval_from_json(v, prec);
        });
        out.interval->precision_bits = prec;
    } else {
        throw InvalidArgument("unknown field '" + out.field + "'");
    }
    return out;
}

}  // namespace galperin::cli
