#include "galperin/closed_form.hpp"

#include <string>

#include "galperin/errors.hpp"

namespace galperin {

namespace {

void check_count_args(const Real& b, const Rational& N) {
    if (N.sign() < 0) throw InvalidArgument("mantissa must be non-negative");
    if (b.kind() == Real::Kind::Rational && !(*b.rational() > Rational(1)))
        throw InvalidArgument("base must exceed 1");
    if (b.kind() == Real::Kind::Golden && (*b.golden() - Golden(1)).sign() <= 0)
        throw InvalidArgument("base must exceed 1");
}

// Distance from q to the nearest integer is below 2^-(bits/2).
bool near_integer(const Interval& q, long bits) {
    PrecisionScope scope(q.prec());
    mpfr_t mid, r, d;
    mpfr_inits2(q.prec() + 2, mid, r, d, static_cast<mpfr_ptr>(nullptr));
    mpfr_add(mid, q.lo(), q.hi(), MPFR_RNDN);
    mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
    mpfr_rint(r, mid, MPFR_RNDN);
    mpfr_sub(d, mid, r, MPFR_RNDN);
    mpfr_abs(d, d, MPFR_RNDN);
    const bool close = mpfr_cmp_si_2exp(d, 1, -(bits / 2)) < 0;
    mpfr_clears(mid, r, d, static_cast<mpfr_ptr>(nullptr));
    return close;
}

mpz_class nearest_integer(const Interval& q) {
    mpfr_t mid;
    mpfr_init2(mid, q.prec() + 2);
    mpfr_add(mid, q.lo(), q.hi(), MPFR_RNDN);
    mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), mid, MPFR_RNDN);
    mpfr_clear(mid);
    return z;
}

}  // namespace

PivotAngle pivot_angle(const Real& b, const Rational& N, long prec) {
    check_count_args(b, N);
    PrecisionScope scope(prec);
    const Interval varphi = atan(Interval(1) / power(b, N, prec));
    return {varphi, varphi * Interval(2)};
}

mpz_class count_collisions_exact(const Real& b, const Rational& N, long cap_bits) {
    check_count_args(b, N);
    if (N.is_zero())
        throw SubmultipleDegeneracy("pi / arctan(1) = 4 is an integer", mpz_class(4), true);
    long bits = initial_precision(b, N);
    if (bits > cap_bits) bits = cap_bits;
    for (;;) {
        PrecisionScope scope(bits);
        const Interval q = Interval::pi(bits) / atan(Interval(1) / power(b, N, bits));
        try {
            return q.floor();
        } catch (const AmbiguousPredicate&) {
            if (bits >= cap_bits) {
                if (near_integer(q, cap_bits))
                    throw SubmultipleDegeneracy(
                        "pi / arctan(b^-N) is within 2^-" + std::to_string(cap_bits / 2) +
                            " of an integer",
                        nearest_integer(q), false);
                throw PrecisionExhausted("collision count undecided at the precision cap",
                                         cap_bits);
            }
            bits = bits * 2 > cap_bits ? cap_bits : bits * 2;
        }
    }
}

mpz_class count_collisions_approx(const Real& b, const Rational& N, long cap_bits) {
    check_count_args(b, N);
    PrecisionPolicy policy{initial_precision(b, N), cap_bits};
    return with_escalation(policy, [&](long bits) {
        return (Interval::pi(bits) * power(b, N, bits)).floor();
    });
}

CollisionCount collision_count(const Real& b, const Rational& N, long cap_bits) {
    CollisionCount out;
    try {
        out.exact = count_collisions_exact(b, N, cap_bits);
    } catch (const SubmultipleDegeneracy& d) {
        out.exact = d.formula_value();
        out.degenerate = true;
        out.degenerate_certified = d.certified();
    }
    out.approx = count_collisions_approx(b, N, cap_bits);
    const mpz_class diff = out.exact - out.approx;
    out.epsilon = diff.get_si();
    return out;
}

Interval phase_angle(long n, const Real& b, const Rational& N, long prec) {
    if (n < 0) throw InvalidArgument("collision index must be non-negative");
    PrecisionScope scope(prec);
    const PivotAngle pa = pivot_angle(b, N, prec);
    Interval a = pa.phi * Interval((n + 1) / 2);
    return n % 2 == 1 ? a : -a;
}

TerminalParity terminal_parity(const Real& b, const Rational& N, long cap_bits) {
    const mpz_class n = count_collisions_exact(b, N, cap_bits);
    return mpz_odd_p(n.get_mpz_t()) ? TerminalParity::EndsBallBall : TerminalParity::EndsBallWall;
}

Interval approx_inverse_tau(long n, const System<Interval>& sys) {
    if (n < 1) throw InvalidArgument("collision index must be at least 1");
    const Interval bn = sqrt(sys.M / sys.m);
    const Interval t0 = abs(sys.x0 / sys.V0);
    const Interval s = sin(Interval(n) / bn);
    return bn * bn * s * s / t0;
}

Interval approx_time_after_return(double nprime, const System<Interval>& sys) {
    const Interval bn = sqrt(sys.M / sys.m);
    const Interval t0 = abs(sys.x0 / sys.V0);
    const Interval tstar = abs(sys.X0 / sys.V0);
    const Interval np{Rational(mpq_class(nprime))};
    return tstar + t0 / bn * tan(np / bn);
}

}  // namespace galperin
