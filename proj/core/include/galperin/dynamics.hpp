#pragma once

#include <climits>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "galperin/errors.hpp"
#include "galperin/field.hpp"
#include "galperin/interval.hpp"
#include "galperin/precision.hpp"
#include "galperin/rational.hpp"
#include "galperin/real.hpp"

namespace galperin {

enum class CollisionKind { BallBall, BallWall };
enum class Termination { OutgoingState, DegenerateStop, StepLimit };

inline const char* to_string(CollisionKind k) { return k == CollisionKind::BallBall ? "BB" : "BW"; }

inline const char* to_string(Termination t) {
    switch (t) {
        case Termination::OutgoingState: return "OutgoingState";
        case Termination::DegenerateStop: return "DegenerateStop";
        case Termination::StepLimit: return "StepLimit";
    }
    return "?";
}

/// One experiment: base b, mantissa N and the initial conditions.
/// The heavy mass is M = b^(2N) m unless heavy_mass is set.
struct BilliardSpec {
    Real base = Real(10);
    Rational mantissa = Rational(1);
    Rational m = 1;
    Rational X0 = -2;
    Rational x0 = -1;
    Rational V0 = 1;
    Rational v0 = 0;
    std::optional<Rational> heavy_mass;

    void validate() const;
    /// True when M = b^(2N) m is rational, so the run can be exact.
    bool rational_masses() const;
};

/// Masses and initial conditions carried in the working field.
template <class F>
struct System {
    F M, m, X0, x0, V0, v0;
};

template <class F>
struct KinematicState {
    F t, X, x, V, v;
    long n = 0;
};

template <class F>
struct CollisionEvent {
    long n = 0;
    CollisionKind kind = CollisionKind::BallBall;
    KinematicState<F> state;
    F dt;
};

template <class F>
struct Trajectory {
    System<F> system;
    std::vector<CollisionEvent<F>> events;
    Termination termination = Termination::OutgoingState;
    KinematicState<F> final_state;
    long precision_bits = 0;
};

template <class F>
struct RunSummary {
    long events = 0;
    Termination termination = Termination::OutgoingState;
    KinematicState<F> final_state;
    long precision_bits = 0;
};

enum class NextStatus { Collision, OutgoingState, DegenerateStop };

template <class F>
struct NextCollision {
    NextStatus status = NextStatus::Collision;
    CollisionKind kind = CollisionKind::BallBall;
    F dt;
};

inline void BilliardSpec::validate() const {
    if (!(X0 < x0)) throw InvalidArgument("initial positions must satisfy X0 < x0");
    if (!(x0 < Rational(0))) throw InvalidArgument("initial positions must satisfy x0 < 0");
    if (!(V0 > Rational(0))) throw InvalidArgument("initial heavy velocity must be positive");
    if (!(m > Rational(0))) throw InvalidArgument("light mass must be positive");
    if (heavy_mass) {
        if (!(*heavy_mass > Rational(0))) throw InvalidArgument("heavy mass must be positive");
        return;
    }
    if (mantissa.sign() < 0) throw InvalidArgument("mantissa must be non-negative");
    if (base.kind() == Real::Kind::Rational) {
        if (!(*base.rational() > Rational(1))) throw InvalidArgument("base must exceed 1");
    } else if (base.kind() == Real::Kind::Golden) {
        if ((*base.golden() - Golden(1)).sign() <= 0) throw InvalidArgument("base must exceed 1");
    }
}

inline bool BilliardSpec::rational_masses() const {
    if (heavy_mass) return true;
    return exact_power(base, mantissa * Rational(2)).has_value();
}

template <class F>
System<F> make_system(const BilliardSpec& spec) {
    spec.validate();
    System<F> s;
    if constexpr (FieldTraits<F>::exact) {
        if (spec.heavy_mass) {
            s.M = *spec.heavy_mass;
        } else {
            auto ratio = exact_power(spec.base, spec.mantissa * Rational(2));
            if (!ratio)
                throw InvalidArgument("b^(2N) is not rational for base " + spec.base.label() +
                                      "; use interval mode");
            s.M = *ratio * spec.m;
        }
    } else {
        if (spec.heavy_mass) {
            s.M = Interval(*spec.heavy_mass);
        } else {
            s.M = power(spec.base, spec.mantissa * Rational(2), working_precision()) *
                  Interval(spec.m);
        }
    }
    s.m = from_rational<F>(spec.m);
    s.X0 = from_rational<F>(spec.X0);
    s.x0 = from_rational<F>(spec.x0);
    s.V0 = from_rational<F>(spec.V0);
    s.v0 = from_rational<F>(spec.v0);
    return s;
}

template <class F>
KinematicState<F> initial_state(const System<F>& sys) {
    return KinematicState<F>{from_rational<F>(0), sys.X0, sys.x0, sys.V0, sys.v0, 0};
}

/// Elastic ball-ball collision; positions and time are unchanged.
template <class F>
KinematicState<F> collide_ball_ball(const KinematicState<F>& s, const F& M, const F& m) {
    if (!same_value(s.X, s.x) && certainly_differ(s.X, s.x))
        throw NotCollisionInstant("ball-ball collision requested with X != x");
    KinematicState<F> out = s;
    const F total = M + m;
    out.V = ((M - m) * s.V + (m + m) * s.v) / total;
    out.v = ((M + M) * s.V + (m - M) * s.v) / total;
    return out;
}

/// Reflection of the light ball at the wall.
template <class F>
KinematicState<F> collide_ball_wall(const KinematicState<F>& s) {
    if (s.x.sign() != 0) throw NotCollisionInstant("ball-wall collision requested with x != 0");
    if (s.v.sign() <= 0) throw NotCollisionInstant("ball-wall collision requires v > 0");
    KinematicState<F> out = s;
    out.v = -s.v;
    return out;
}

/// Kind and delay of the next collision, or the reason none will occur.
template <class F>
NextCollision<F> next_collision(const KinematicState<F>& s) {
    NextCollision<F> r;
    const int sv = s.v.sign();
    if (sv == 0 && s.V.sign() <= 0) {
        r.status = NextStatus::DegenerateStop;
        return r;
    }
    const F rel = s.V - s.v;
    const int srel = rel.sign();
    if (sv <= 0 && srel <= 0) {
        r.status = NextStatus::OutgoingState;
        return r;
    }
    const bool contact = same_value(s.x, s.X);
    const bool bb = srel > 0;
    const bool bw = sv > 0;
    if (bb && contact)
        throw NotCollisionInstant("balls are in contact and still approaching");
    if (bb && bw) {
        const F gap = s.x - s.X;
        // BB first iff gap/rel < -x/v, i.e. gap*v + x*rel < 0.
        const int c = (gap * s.v + s.x * rel).sign();
        if (c == 0) throw TripleCollision("ball-ball and ball-wall contacts coincide");
        if (c < 0) {
            r.kind = CollisionKind::BallBall;
            r.dt = gap / rel;
        } else {
            r.kind = CollisionKind::BallWall;
            r.dt = -s.x / s.v;
        }
    } else if (bb) {
        r.kind = CollisionKind::BallBall;
        r.dt = (s.x - s.X) / rel;
    } else {
        r.kind = CollisionKind::BallWall;
        r.dt = -s.x / s.v;
    }
    if (r.dt.sign() <= 0) throw NotCollisionInstant("non-positive time to next collision");
    return r;
}

/// 10 * ceil(pi * b^N) + 10 with b^N = sqrt(M/m).
inline long default_step_limit(double mass_ratio) {
    const double bn = std::sqrt(mass_ratio);
    const double est = 10.0 * std::ceil(3.141592653589793 * bn) + 10.0;
    if (!(est < 9.0e18)) return LONG_MAX;
    return static_cast<long>(est);
}

template <class F>
long default_step_limit(const System<F>& sys) {
    return default_step_limit(to_double(sys.M) / to_double(sys.m));
}

/// Event-driven run. on_event(n, kind, state_after, dt) is called once per
/// collision; nothing is stored, so arbitrarily long runs are possible.
template <class F, class Observer>
RunSummary<F> simulate_stream(const System<F>& sys, long step_limit, Observer&& on_event) {
    if (step_limit < 0) step_limit = default_step_limit(sys);
    const F total = sys.M + sys.m;
    const F a = (sys.M - sys.m) / total;
    const F c = (sys.m + sys.m) / total;
    const F d = (sys.M + sys.M) / total;
    const F e = (sys.m - sys.M) / total;

    KinematicState<F> s = initial_state(sys);
    RunSummary<F> out;
    out.precision_bits = FieldTraits<F>::exact ? 0 : working_precision();
    long n = 0;
    for (;;) {
        NextCollision<F> nc = next_collision(s);
        if (nc.status != NextStatus::Collision) {
            out.termination = nc.status == NextStatus::OutgoingState ? Termination::OutgoingState
                                                                     : Termination::DegenerateStop;
            break;
        }
        if (n >= step_limit) {
            out.termination = Termination::StepLimit;
            break;
        }
        s.t += nc.dt;
        s.X += s.V * nc.dt;
        if (nc.kind == CollisionKind::BallBall) {
            s.x = s.X;
            F V = a * s.V + c * s.v;
            F v = d * s.V + e * s.v;
            s.V = std::move(V);
            s.v = std::move(v);
        } else {
            s.x = from_rational<F>(0);
            s.v = -s.v;
        }
        s.n = ++n;
        on_event(n, nc.kind, static_cast<const KinematicState<F>&>(s), static_cast<const F&>(nc.dt));
    }
    out.events = n;
    out.final_state = std::move(s);
    return out;
}

template <class F>
Trajectory<F> simulate(const System<F>& sys, long step_limit = -1) {
    Trajectory<F> traj;
    traj.system = sys;
    auto summary = simulate_stream(sys, step_limit,
                                   [&](long n, CollisionKind k, const KinematicState<F>& s,
                                       const F& dt) { traj.events.push_back({n, k, s, dt}); });
    traj.termination = summary.termination;
    traj.final_state = std::move(summary.final_state);
    traj.precision_bits = summary.precision_bits;
    return traj;
}

/// Interval run with precision doubling on ambiguous predicates. The
/// observer is told about each restart through on_restart(bits).
template <class Observer, class Restart>
RunSummary<Interval> simulate_certified(const BilliardSpec& spec, const PrecisionPolicy& policy,
                                        long step_limit, Observer&& on_event,
                                        Restart&& on_restart) {
    bool first = true;
    return with_escalation(policy, [&](long bits) {
        if (!first) on_restart(bits);
        first = false;
        System<Interval> sys = make_system<Interval>(spec);
        return simulate_stream(sys, step_limit, on_event);
    });
}

inline PrecisionPolicy default_policy(const BilliardSpec& spec, long cap = kDefaultPrecisionCap) {
    PrecisionPolicy p;
    p.start_bits = initial_precision(spec.base, spec.mantissa);
    p.cap_bits = cap;
    return p;
}

/// Mass-scaled coordinates (Y, y, W, w) = (sqrt M X, sqrt m x, sqrt M V, sqrt m v).
template <class F>
struct BilliardCoords {
    F Y, y, W, w;
};

template <class F>
BilliardCoords<F> to_billiard_coords(const KinematicState<F>& s, const F& M, const F& m) {
    const F sM = field_sqrt(M), sm = field_sqrt(m);
    return {sM * s.X, sm * s.x, sM * s.V, sm * s.v};
}

/// Unfolded polar position of a collision event: the k-th mirror crossing
/// sits at angle k*theta with theta = arctan(sqrt(m/M)); the radius is
/// sqrt(Y^2 + y^2) at BB events and |Y| at BW events.
struct UnfoldedPoint {
    Interval radius;
    Interval angle;
};

template <class F>
UnfoldedPoint unfold_point(const CollisionEvent<F>& ev, const System<F>& sys) {
    const Interval M = enclose(sys.M), m = enclose(sys.m);
    const Interval X = enclose(ev.state.X);
    const Interval theta = atan(sqrt(m / M));
    Interval r = ev.kind == CollisionKind::BallBall ? sqrt(M + m) * abs(X) : sqrt(M) * abs(X);
    return {r, theta * Interval(ev.n)};
}

/// Exact Cartesian image (u, w) = r (cos n theta, sin n theta) of an event of
/// a trajectory whose first collision is ball-ball. Needs sqrt(M) and
/// sqrt(m) in the field.
template <class F>
std::pair<F, F> unfold_cartesian(const CollisionEvent<F>& ev, const System<F>& sys) {
    const F sM = field_sqrt(sys.M), sm = field_sqrt(sys.m);
    const F t = sm / sM;
    const F one = from_rational<F>(1);
    // z^n with z = 1 + i t.
    F re = one, im = from_rational<F>(0);
    F br = one, bi = t;
    for (long k = ev.n; k > 0; k >>= 1) {
        if (k & 1) {
            F nr = re * br - im * bi;
            F ni = re * bi + im * br;
            re = std::move(nr);
            im = std::move(ni);
        }
        F sr = br * br - bi * bi;
        F si = (br + br) * bi;
        br = std::move(sr);
        bi = std::move(si);
    }
    // r / |z|^n with |z|^2 = (M + m)/M.
    const F total = sys.M + sys.m;
    const F absX = ev.state.X.sign() < 0 ? -ev.state.X : ev.state.X;
    F scale = absX;
    const long n = ev.n;
    if (ev.kind == CollisionKind::BallBall) {
        // sqrt(M+m)|X| / ((M+m)/M)^(n/2), n odd.
        if (n % 2 == 0) throw InvalidArgument("ball-ball event at even index in a BB-first run");
        scale = scale * field_pow(sM, n) / field_pow(total, (n - 1) / 2);
    } else {
        if (n % 2 != 0) throw InvalidArgument("ball-wall event at odd index in a BB-first run");
        scale = scale * sM * field_pow(sys.M / total, n / 2);
    }
    return {scale * re, scale * im};
}

/// Finite-size balls: maps rod centres (X, x) with radii (R, r) to the point
/// system (X + R + 2r, x + r), in which contacts happen at X' = x' and x' = 0.
template <class F>
std::pair<F, F> hard_rod_map(const F& X, const F& x, const F& R, const F& r) {
    if (R.sign() < 0 || r.sign() < 0) throw InvalidArgument("rod sizes must be non-negative");
    const F ax = -x, aX = -X;
    if ((ax - r).sign() <= 0) throw InvalidArgument("light rod overlaps the wall");
    if ((aX - ax - r - R).sign() <= 0) throw InvalidArgument("rods overlap");
    return {X + R + r + r, x + r};
}

/// Event-driven run of finite-size balls with radii R (heavy) and r (light).
/// Positions are the ball centres; contacts happen at x - X = R + r and
/// x = -r.
template <class F>
Trajectory<F> simulate_rods(const System<F>& sys, const F& R, const F& r, long step_limit = -1) {
    hard_rod_map(sys.X0, sys.x0, R, r);  // validates the initial configuration
    if (step_limit < 0) step_limit = default_step_limit(sys);
    Trajectory<F> traj;
    traj.system = sys;
    KinematicState<F> s = initial_state(sys);
    const F contact = R + r;
    const F wall = -r;
    long n = 0;
    for (;;) {
        const int sv = s.v.sign();
        const F rel = s.V - s.v;
        const int srel = rel.sign();
        if (sv == 0 && s.V.sign() <= 0) {
            traj.termination = Termination::DegenerateStop;
            break;
        }
        if (sv <= 0 && srel <= 0) {
            traj.termination = Termination::OutgoingState;
            break;
        }
        if (n >= step_limit) {
            traj.termination = Termination::StepLimit;
            break;
        }
        const F gap = s.x - s.X - contact;
        const F wall_gap = wall - s.x;
        CollisionKind kind;
        F dt;
        if (srel > 0 && sv > 0) {
            const int c = (gap * s.v - wall_gap * rel).sign();
            if (c == 0) throw TripleCollision("rod contacts coincide");
            kind = c < 0 ? CollisionKind::BallBall : CollisionKind::BallWall;
        } else {
            kind = srel > 0 ? CollisionKind::BallBall : CollisionKind::BallWall;
        }
        dt = kind == CollisionKind::BallBall ? gap / rel : wall_gap / s.v;
        s.t += dt;
        s.X += s.V * dt;
        if (kind == CollisionKind::BallBall) {
            s.x = s.X + contact;
            KinematicState<F> tmp = s;
            tmp.x = tmp.X;
            tmp = collide_ball_ball(tmp, sys.M, sys.m);
            s.V = tmp.V;
            s.v = tmp.v;
        } else {
            s.x = wall;
            s.v = -s.v;
        }
        s.n = ++n;
        traj.events.push_back({n, kind, s, dt});
    }
    traj.final_state = s;
    return traj;
}

}  // namespace galperin
