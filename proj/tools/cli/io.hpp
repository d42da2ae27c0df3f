#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "galperin/base_repr.hpp"
#include "galperin/dynamics.hpp"

namespace galperin::cli {

/// "p/q" (or "p").
std::string to_text(const Rational& q);
/// Decimal midpoint.
std::string to_text(const Interval& a);

/// A rational as an exact finite decimal when its denominator divides a
/// power of ten, otherwise as "p/q".
std::string decimal_or_fraction(const Rational& q);

nlohmann::json to_json(const Rational& q);
/// {"mid": "...", "rad": "..."}.
nlohmann::json to_json(const Interval& a);

Rational rational_from_json(const nlohmann::json& j);
Interval interval_from_json(const nlohmann::json& j, long prec);

nlohmann::json spec_to_json(const BilliardSpec& spec);
BilliardSpec spec_from_json(const nlohmann::json& j);

inline constexpr const char* kTraceHeader = "n,kind,t,X,x,V,v";

template <class F>
void write_csv_event(std::ostream& out, long n, CollisionKind kind, const KinematicState<F>& s);

template <class F>
nlohmann::json event_to_json(long n, CollisionKind kind, const KinematicState<F>& s, const F& dt);

/// Streams a trace as JSON: metadata first, one event per line, and the
/// closing fields written by finish().
class JsonTraceWriter {
public:
    JsonTraceWriter(std::ostream& out, const BilliardSpec& spec, const std::string& field,
                    long precision_bits);
    template <class F>
    void event(long n, CollisionKind kind, const KinematicState<F>& s, const F& dt) {
        out_ << (first_ ? "\n" : ",\n") << event_to_json(n, kind, s, dt).dump();
        first_ = false;
    }
    void finish(long events, Termination termination);

private:
    std::ostream& out_;
    bool first_ = true;
};

/// A trace read back from JSON.
struct LoadedTrace {
    BilliardSpec spec;
    std::string field;
    long precision_bits = 0;
    Termination termination = Termination::OutgoingState;
    std::optional<Trajectory<Rational>> rational;
    std::optional<Trajectory<Interval>> interval;
};

LoadedTrace load_trace_json(const nlohmann::json& j);

Termination termination_from_string(const std::string& s);
CollisionKind kind_from_string(const std::string& s);

}  // namespace galperin::cli
