#pragma once

#include <gmpxx.h>

#include <cmath>
#include <utility>

#include "galperin/dynamics.hpp"
#include "galperin/field.hpp"
#include "galperin/interval.hpp"
#include "galperin/precision.hpp"
#include "galperin/real.hpp"

namespace galperin {

/// varphi = arctan(b^-N) and phi = 2 varphi.
struct PivotAngle {
    Interval varphi;
    Interval phi;
};

PivotAngle pivot_angle(const Real& b, const Rational& N, long prec);

/// int[pi / arctan(b^-N)], certified. Throws SubmultipleDegeneracy when the
/// quotient is an integer (or indistinguishable from one at the cap) and
/// PrecisionExhausted when the cap is reached otherwise.
mpz_class count_collisions_exact(const Real& b, const Rational& N,
                                 long cap_bits = kDefaultPrecisionCap);

/// int[pi b^N], certified.
mpz_class count_collisions_approx(const Real& b, const Rational& N,
                                  long cap_bits = kDefaultPrecisionCap);

struct CollisionCount {
    mpz_class exact;
    mpz_class approx;
    /// exact - approx.
    long epsilon = 0;
    /// Set when exact is the formula value at a submultiple angle.
    bool degenerate = false;
    bool degenerate_certified = false;
};

/// Both counts and their difference; degeneracy is reported, not thrown.
CollisionCount collision_count(const Real& b, const Rational& N,
                               long cap_bits = kDefaultPrecisionCap);

/// (-1)^(n+1) 2 arctan(b^-N) int[(n+1)/2].
Interval phase_angle(long n, const Real& b, const Rational& N, long prec);

enum class TerminalParity { EndsBallBall, EndsBallWall };

TerminalParity terminal_parity(const Real& b, const Rational& N,
                               long cap_bits = kDefaultPrecisionCap);

namespace detail {

template <class F>
struct Complex {
    F re, im;
};

template <class F>
Complex<F> cmul(const Complex<F>& a, const Complex<F>& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

template <class F>
Complex<F> cpow(Complex<F> base, long e) {
    Complex<F> result{from_rational<F>(1), from_rational<F>(0)};
    while (e > 0) {
        if (e & 1) result = cmul(result, base);
        e >>= 1;
        if (e > 0) base = cmul(base, base);
    }
    return result;
}

/// tan(varphi) = sqrt(m/M) for the closed form; exact in rational mode when
/// m/M is a square.
template <class F>
F pivot_tangent(const System<F>& sys) {
    return field_sqrt(sys.m / sys.M);
}

template <class F>
void require_closed_form(const System<F>& sys) {
    if (sys.v0.sign() != 0) throw InvalidArgument("closed form requires a light ball at rest");
}

}  // namespace detail

/// Incremental closed-form solution: yields the state and time of
/// collisions 1, 2, ... with O(1) field operations per step.
template <class F>
class ClosedFormSequence {
public:
    explicit ClosedFormSequence(const System<F>& sys)
        : sys_(sys), t_(detail::pivot_tangent(sys)) {
        detail::require_closed_form(sys);
        const F one = from_rational<F>(1);
        z2_ = {one - t_ * t_, t_ + t_};
        d1_ = one + t_ * t_;
        w_ = {one, from_rational<F>(0)};
        D_ = one;
        time_ = (sys.x0 - sys.X0) / sys.V0;
    }

    long index() const noexcept { return n_; }

    /// Advances to the next collision and returns its state.
    const KinematicState<F>& next() {
        ++n_;
        if (n_ > 1) time_ += tau_prev_;
        if (n_ % 2 == 1) {
            w_ = detail::cmul(w_, z2_);
            D_ = D_ * d1_;
        }
        // cos phi_n = c/D, sin phi_n = (-1)^(n+1) s/D with (c + i s) = z^(2j).
        const F cosv = w_.re / D_;
        F sinv = w_.im / D_;
        if (n_ % 2 == 0) sinv = -sinv;
        state_.n = n_;
        state_.t = time_;
        state_.V = sys_.V0 * cosv;
        state_.v = sys_.V0 * sinv / t_;
        const F Bs = sinv / t_;
        if (n_ % 2 == 0) {
            state_.X = -sys_.x0 / Bs;
            state_.x = from_rational<F>(0);
            // tau_n = t_{n+1} - t_n for even n = 2k.
            tau_prev_ = -sys_.x0 / (sys_.V0 * Bs * (Bs - cosv));
        } else {
            state_.X = sys_.x0 / (Bs - cosv);
            state_.x = state_.X;
            // tau_n for odd n = 2k-1 uses phi_2k = -phi_(2k-1).
            const F Bs2 = -Bs;
            tau_prev_ = -sys_.x0 / (sys_.V0 * Bs2 * (Bs2 + cosv));
        }
        return state_;
    }

    const KinematicState<F>& state() const noexcept { return state_; }

private:
    System<F> sys_;
    F t_;
    detail::Complex<F> z2_;
    F d1_;
    detail::Complex<F> w_;
    F D_;
    F time_;
    F tau_prev_;
    long n_ = 0;
    KinematicState<F> state_;
};

/// State right after collision n (1 <= n <= number of collisions).
template <class F>
KinematicState<F> state_at(long n, const System<F>& sys) {
    detail::require_closed_form(sys);
    if (n < 1) throw InvalidArgument("collision index must be at least 1");
    const F t = detail::pivot_tangent(sys);
    const F one = from_rational<F>(1);
    const long j = (n + 1) / 2;
    const detail::Complex<F> w = detail::cpow(detail::Complex<F>{one, t}, 2 * j);
    const F D = field_pow(one + t * t, j);
    // Collision n exists iff n * varphi < pi, i.e. Im z^n > 0 for the first
    // wrap; the double estimate rules out later wraps.
    const double est = std::atan(to_double(t));
    if (!(static_cast<double>(n) * est < 3.141592653589793 + 4 * est))
        throw InvalidArgument("collision index beyond the last collision");
    const detail::Complex<F> zn = detail::cpow(detail::Complex<F>{one, t}, n);
    if (zn.im.sign() <= 0) throw InvalidArgument("collision index beyond the last collision");

    const F cosv = w.re / D;
    F sinv = w.im / D;
    if (n % 2 == 0) sinv = -sinv;
    KinematicState<F> s;
    s.n = n;
    s.V = sys.V0 * cosv;
    s.v = sys.V0 * sinv / t;
    const F Bs = sinv / t;
    if (n % 2 == 0) {
        s.X = -sys.x0 / Bs;
        s.x = from_rational<F>(0);
    } else {
        s.X = sys.x0 / (Bs - cosv);
        s.x = s.X;
    }
    s.t = from_rational<F>(0);
    return s;
}

/// tau_l = t_(l+1) - t_l for l >= 1.
template <class F>
F tau(long l, const System<F>& sys) {
    detail::require_closed_form(sys);
    if (l < 1) throw InvalidArgument("interval index must be at least 1");
    const F t = detail::pivot_tangent(sys);
    const F one = from_rational<F>(1);
    const long k = (l + 1) / 2;
    const detail::Complex<F> w = detail::cpow(detail::Complex<F>{one, t}, 2 * k);
    const F D = field_pow(one + t * t, k);
    // phi_2k = -2k varphi.
    const F cosv = w.re / D;
    const F Bs = -(w.im / D) / t;
    if (l % 2 == 1) return -sys.x0 / (sys.V0 * Bs * (Bs + cosv));
    return -sys.x0 / (sys.V0 * Bs * (Bs - cosv));
}

/// t_n = t_1 + sum of tau_l over l < n, with t_1 = (x0 - X0)/V0.
template <class F>
F time_of(long n, const System<F>& sys) {
    if (n < 1) throw InvalidArgument("collision index must be at least 1");
    ClosedFormSequence<F> seq(sys);
    for (long i = 0; i < n; ++i) seq.next();
    return seq.state().t;
}

/// 1/tau_n ~ b^(2N) sin^2(n / b^N) / t0 with t0 = |x0/V0|.
Interval approx_inverse_tau(long n, const System<Interval>& sys);

/// t(n') ~ t* + t0 b^-N tan(n' / b^N), where n' counts collisions from the
/// return point and t* = |X0|/V0 is the closest approach of the unfolded
/// line (t* = t0 when X0 = x0).
Interval approx_time_after_return(double nprime, const System<Interval>& sys);

}  // namespace galperin
