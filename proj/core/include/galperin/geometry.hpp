#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "galperin/dynamics.hpp"
#include "galperin/field.hpp"
#include "galperin/interval.hpp"
#include "galperin/precision.hpp"

namespace galperin {

/// Asymptotic extremes of the motion.
struct Extremes {
    Interval v_max;  // b^N V0
    Interval P_max;  // M V0
    Interval p_max;  // b^-N P_max
    Interval X_min;  // x0 / b^N, signed
};

Extremes predicted_extremes(const BilliardSpec& spec, long prec = kDefaultWorkingPrecision);

/// Collision at which the heavy ball turns back.
struct ReturnIndex {
    /// Smallest k with 2k arctan(b^-N) >= pi/2.
    long pair = 0;
    /// Ball-ball event 2k - 1 after which V <= 0.
    long event = 0;
};

ReturnIndex return_index(const Real& b, const Rational& N, long cap_bits = kDefaultPrecisionCap);

/// Closest approach of the unfolded straight line, computed exactly from the
/// initial conditions:
///   t* = -(M X0 V0 + m x0 v0) / (M V0^2 + m v0^2)
///   X_min^2 = m (X0 v0 - x0 V0)^2 / (M V0^2 + m v0^2)
///   V_max^2 = (M V0^2 + m v0^2) / M
template <class F>
struct ClosestApproach {
    F t_star;
    F X_min_sq;
    F V_max_sq;
};

template <class F>
ClosestApproach<F> closest_approach(const System<F>& sys) {
    const F q = sys.M * sys.V0 * sys.V0 + sys.m * sys.v0 * sys.v0;
    const F cross = sys.X0 * sys.v0 - sys.x0 * sys.V0;
    return {-(sys.M * sys.X0 * sys.V0 + sys.m * sys.x0 * sys.v0) / q, sys.m * cross * cross / q,
            q / sys.M};
}

/// Per-event residual of (X/a)^2 - ((t - t*) V_max / X_min)^2 - 1 with a = X_min
/// at ball-wall events and a^2 = X_min^2 M/(M+m) at ball-ball events.
template <class F>
F hyperbola_value(const CollisionEvent<F>& ev, const System<F>& sys, const ClosestApproach<F>& ca) {
    const F dt = ev.state.t - ca.t_star;
    const F rhs = dt * dt * ca.V_max_sq / ca.X_min_sq;
    const F X2 = ev.state.X * ev.state.X;
    const F a2 = ev.kind == CollisionKind::BallWall ? ca.X_min_sq
                                                    : ca.X_min_sq * sys.M / (sys.M + sys.m);
    return X2 / a2 - rhs - from_rational<F>(1);
}

template <class F>
struct HyperbolaResidual {
    F bw;  // max |residual| over ball-wall events
    F bb;  // max |residual| over ball-ball events
};

namespace detail {

inline Rational field_abs(const Rational& a) { return abs(a); }
inline Interval field_abs(const Interval& a) { return abs(a); }

}  // namespace detail

template <class F>
HyperbolaResidual<F> hyperbola_residual(const Trajectory<F>& traj) {
    const auto ca = closest_approach(traj.system);
    HyperbolaResidual<F> r{from_rational<F>(0), from_rational<F>(0)};
    for (const auto& ev : traj.events) {
        const F d = detail::field_abs(hyperbola_value(ev, traj.system, ca));
        if (ev.kind == CollisionKind::BallWall)
            r.bw = field_max(r.bw, d);
        else
            r.bb = field_max(r.bb, d);
    }
    return r;
}

/// (m/M)(x0/X)^2 + (V/V0)^2 - 1 for a state.
template <class F>
F ellipse_value(const KinematicState<F>& s, const System<F>& sys) {
    const F a = sys.x0 / s.X;
    const F b = s.V / sys.V0;
    return sys.m / sys.M * a * a + b * b - from_rational<F>(1);
}

template <class F>
struct EllipseResidual {
    F bw;                    // max |residual| over ball-wall events
    F bb;                    // max |residual| over ball-ball events
    std::vector<F> values;   // per event, in order
};

template <class F>
EllipseResidual<F> ellipse_residual(const Trajectory<F>& traj) {
    EllipseResidual<F> r{from_rational<F>(0), from_rational<F>(0), {}};
    r.values.reserve(traj.events.size());
    for (const auto& ev : traj.events) {
        F v = ellipse_value(ev.state, traj.system);
        const F d = detail::field_abs(v);
        if (ev.kind == CollisionKind::BallWall)
            r.bw = field_max(r.bw, d);
        else
            r.bb = field_max(r.bb, d);
        r.values.push_back(std::move(v));
    }
    return r;
}

/// Largest relative deviation of |X|/X_min from 1 + (V0 t'/X_min)^2 / 2 over
/// the events with |n - n_r| <= b^N/4, where n_r is the first ball-ball event
/// with V <= 0, t' = t - t_(n_r) and X_min = |x0| b^-N.
struct ParabolaResidual {
    double residual = 0;
    long origin = 0;
    long window = 0;
    long samples = 0;
};

template <class F>
ParabolaResidual parabola_residual(const Trajectory<F>& traj) {
    const auto& sys = traj.system;
    const long prec = FieldTraits<F>::exact ? 128 : std::max(64L, enclose(sys.M).prec());
    PrecisionScope scope(prec);
    const Interval M = enclose(sys.M), m = enclose(sys.m);
    const Interval bn = sqrt(M / m);
    const Interval V0 = enclose(sys.V0);
    const Interval X_min = abs(enclose(sys.x0)) / bn;
    ParabolaResidual out;
    const auto& ev = traj.events;
    std::size_t origin = ev.size();
    for (std::size_t i = 0; i < ev.size(); ++i) {
        if (ev[i].kind == CollisionKind::BallBall && ev[i].state.V.sign() <= 0) {
            origin = i;
            break;
        }
    }
    if (origin == ev.size()) throw InvalidArgument("trajectory has no return point");
    out.origin = ev[origin].n;
    out.window = static_cast<long>(std::floor(bn.to_double() / 4));
    const Interval t_r = enclose(ev[origin].state.t);
    double worst = 0;
    for (const auto& e : ev) {
        if (std::labs(e.n - out.origin) > out.window) continue;
        const Interval tp = enclose(e.state.t) - t_r;
        const Interval u = V0 * tp / X_min;
        const Interval pred = Interval(1) + u * u / Interval(2);
        const Interval dev = abs(abs(enclose(e.state.X)) / X_min - pred) / pred;
        worst = std::max(worst, dev.hi_d());
        ++out.samples;
    }
    out.residual = worst;
    return out;
}

/// Observed and predicted extremes of one trajectory.
template <class F>
struct GeometryReport {
    F X_min_observed;        // min |X| over events
    Interval X_min_predicted;  // |x0| b^-N
    F X_min_exact_sq;        // squared closest approach of the unfolded line
    F v_max_observed;        // max |v| over events
    Interval v_max_predicted;  // b^N V0
    HyperbolaResidual<F> hyperbola;
    EllipseResidual<F> ellipse;
};

template <class F>
GeometryReport<F> analyze_geometry(const Trajectory<F>& traj) {
    const auto& sys = traj.system;
    if (traj.events.empty()) throw InvalidArgument("trajectory has no collisions");
    GeometryReport<F> r;
    r.X_min_observed = detail::field_abs(traj.events.front().state.X);
    r.v_max_observed = detail::field_abs(sys.v0);
    for (const auto& ev : traj.events) {
        r.X_min_observed = field_min(r.X_min_observed, detail::field_abs(ev.state.X));
        r.v_max_observed = field_max(r.v_max_observed, detail::field_abs(ev.state.v));
    }
    const long prec = FieldTraits<F>::exact ? 128 : enclose(sys.M).prec();
    PrecisionScope scope(prec);
    const Interval bn = sqrt(enclose(sys.M) / enclose(sys.m));
    r.X_min_predicted = abs(enclose(sys.x0)) / bn;
    r.v_max_predicted = bn * enclose(sys.V0);
    r.X_min_exact_sq = closest_approach(sys).X_min_sq;
    r.hyperbola = hyperbola_residual(traj);
    r.ellipse = ellipse_residual(traj);
    return r;
}

}  // namespace galperin
