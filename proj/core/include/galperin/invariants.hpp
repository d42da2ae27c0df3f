#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "galperin/dynamics.hpp"
#include "galperin/errors.hpp"
#include "galperin/field.hpp"
#include "galperin/interval.hpp"
#include "galperin/rational.hpp"

namespace galperin {

enum class ActionSource { FromInitial, FromBWEvent, FromBBEvent };

/// Adiabatic action I = (m/pi) * X v.
struct ActionValue {
    Interval I;
    ActionSource source = ActionSource::FromInitial;
};

/// X v at a ball-wall event.
template <class F>
F action_bw(const CollisionEvent<F>& ev) {
    if (ev.kind != CollisionKind::BallWall) throw InvalidArgument("action_bw needs a ball-wall event");
    return ev.state.X * ev.state.v;
}

/// X (V - v) at a ball-ball event.
template <class F>
F action_bb(const CollisionEvent<F>& ev) {
    if (ev.kind != CollisionKind::BallBall) throw InvalidArgument("action_bb needs a ball-ball event");
    return ev.state.X * (ev.state.V - ev.state.v);
}

/// I = |x0| V0 m / pi.
ActionValue action_from_initial(const Rational& x0, const Rational& V0, const Rational& m, long prec);

/// I from the value of X v (or X (V - v)) of an event.
ActionValue action_from_event(const Interval& product, const Rational& m, ActionSource source,
                              long prec);

/// L^2 = m M (X v - x V)^2.
template <class F>
F angular_momentum_sq(const KinematicState<F>& s, const F& M, const F& m) {
    const F d = s.X * s.v - s.x * s.V;
    return m * M * d * d;
}

template <class F>
F kinetic_energy(const KinematicState<F>& s, const F& M, const F& m) {
    return (M * s.V * s.V + m * s.v * s.v) / from_rational<F>(2);
}

template <class F>
F momentum(const KinematicState<F>& s, const F& M, const F& m) {
    return M * s.V + m * s.v;
}

/// m/M = tan^2(pi/q) for which a third integral exists.
struct SuperintegrableRatio {
    int q = 0;
    std::optional<Rational> exact;  // set for q in {3, 4, 6}
    Interval value;
};

SuperintegrableRatio superintegrable_mass_ratio(int q, long prec = kDefaultWorkingPrecision);

/// tan^2(pi/q) as a rational for q in {3, 4, 6}.
std::optional<Rational> exact_tan_sq(int q);

/// Re (V + i tan(pi/q) v)^q by its real binomial expansion; only even
/// powers of tan(pi/q) occur, so the rational version is exact for
/// q in {3, 4, 6}.
Rational chevalley_J(int q, const Rational& V, const Rational& v);
Interval chevalley_J(int q, const Interval& V, const Interval& v);

/// Final velocities of a superintegrable system started with V_in >= v_in > 0.
/// Even q inverts both; odd q uses the dihedral rotation by pi/q.
std::pair<Rational, Rational> outgoing_map(int q, const Rational& V_in, const Rational& v_in);
std::pair<Interval, Interval> outgoing_map(int q, const Interval& V_in, const Interval& v_in);

/// Values of one quantity at the events of a trajectory.
template <class F>
struct InvariantSeries {
    std::vector<F> values;
    /// max |value_i - value_0|.
    F drift;
    /// All values equal (rational) or all intervals share a point.
    bool consistent = true;
};

template <class F>
struct InvariantReport {
    InvariantSeries<F> energy;
    InvariantSeries<F> angular_momentum_sq;
    InvariantSeries<F> action_bw;
    InvariantSeries<F> action_bb;
    /// Momentum after each ball-ball event minus momentum before it.
    InvariantSeries<F> bb_momentum_change;
    std::optional<InvariantSeries<F>> chevalley;
    /// action_bw and action_bb agree.
    bool actions_agree = true;
};

namespace detail {

inline bool values_consistent(const std::vector<Rational>& v) {
    for (const auto& x : v)
        if (!(x == v.front())) return false;
    return true;
}

inline bool values_consistent(const std::vector<Interval>& v) {
    if (v.empty()) return true;
    Interval lo = v.front(), hi = v.front();
    for (const auto& x : v) {
        if (mpfr_greater_p(x.lo(), lo.lo())) lo = x;
        if (mpfr_less_p(x.hi(), hi.hi())) hi = x;
    }
    return mpfr_lessequal_p(lo.lo(), hi.hi()) != 0;
}

inline bool values_agree(const Rational& a, const Rational& b) { return a == b; }
inline bool values_agree(const Interval& a, const Interval& b) { return a.overlaps(b); }

template <class F>
InvariantSeries<F> make_series(std::vector<F> values) {
    InvariantSeries<F> s;
    s.drift = from_rational<F>(0);
    for (const auto& x : values) {
        if constexpr (FieldTraits<F>::exact) {
            const F d = x - values.front();
            s.drift = field_max(s.drift, d.sign() < 0 ? -d : d);
        } else {
            s.drift = field_max(s.drift, abs(x - values.front()));
        }
    }
    s.consistent = values_consistent(values);
    s.values = std::move(values);
    return s;
}

}  // namespace detail

/// Evaluates the conserved quantities at every event. When q is given the
/// masses must satisfy m/M = tan^2(pi/q) and J_q is audited as well.
template <class F>
InvariantReport<F> audit_invariants(const Trajectory<F>& traj, std::optional<int> q = std::nullopt) {
    const auto& sys = traj.system;
    std::vector<F> energy, l2, abw, abb, dp, jq;
    const KinematicState<F> s0 = initial_state(sys);
    energy.push_back(kinetic_energy(s0, sys.M, sys.m));
    l2.push_back(angular_momentum_sq(s0, sys.M, sys.m));
    if (q) {
        if (*q < 3) throw InvalidArgument("q must be at least 3");
        if constexpr (FieldTraits<F>::exact) {
            auto t2 = exact_tan_sq(*q);
            if (!t2 || !(sys.m / sys.M == *t2))
                throw InvalidArgument("masses do not match the superintegrable ratio");
        }
        jq.push_back(chevalley_J(*q, s0.V, s0.v));
    }
    F prev_p = momentum(s0, sys.M, sys.m);
    for (const auto& ev : traj.events) {
        energy.push_back(kinetic_energy(ev.state, sys.M, sys.m));
        l2.push_back(angular_momentum_sq(ev.state, sys.M, sys.m));
        const F p = momentum(ev.state, sys.M, sys.m);
        if (ev.kind == CollisionKind::BallWall) {
            abw.push_back(action_bw(ev));
        } else {
            abb.push_back(action_bb(ev));
            dp.push_back(p - prev_p);
        }
        prev_p = p;
        if (q) jq.push_back(chevalley_J(*q, ev.state.V, ev.state.v));
    }
    InvariantReport<F> r;
    r.energy = detail::make_series(std::move(energy));
    r.angular_momentum_sq = detail::make_series(std::move(l2));
    r.action_bw = detail::make_series(std::move(abw));
    r.action_bb = detail::make_series(std::move(abb));
    r.bb_momentum_change = detail::make_series(std::move(dp));
    if (q) r.chevalley = detail::make_series(std::move(jq));
    if (!r.action_bw.values.empty() && !r.action_bb.values.empty())
        r.actions_agree = detail::values_agree(r.action_bw.values.front(), r.action_bb.values.front());
    return r;
}

/// ((x_(2k-1) + x_(2k+1))/2) v_2k over the ball-wall events that have ball-ball
/// neighbours on both sides; x at a ball-ball event is the contact position.
/// This averaged quantity is not an invariant.
template <class F>
std::vector<F> averaged_position_product(const Trajectory<F>& traj) {
    std::vector<F> out;
    const auto& ev = traj.events;
    for (std::size_t i = 1; i + 1 < ev.size(); ++i) {
        if (ev[i].kind != CollisionKind::BallWall) continue;
        if (ev[i - 1].kind != CollisionKind::BallBall || ev[i + 1].kind != CollisionKind::BallBall)
            continue;
        out.push_back((ev[i - 1].state.x + ev[i + 1].state.x) / from_rational<F>(2) *
                      ev[i].state.v);
    }
    return out;
}

}  // namespace galperin
