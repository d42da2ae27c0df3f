#include "galperin/invariants.hpp"

#include <gmpxx.h>

namespace galperin {

namespace {

void check_q(int q) {
    if (q < 3) throw InvalidArgument("q must be at least 3");
}

Interval pi_over(int q) {
    return Interval::pi(working_precision()) / Interval(static_cast<long>(q));
}

mpz_class binomial(int n, int k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

template <class F>
F j_polynomial(int q, const F& tau_sq, const F& V, const F& v) {
    F sum = from_rational<F>(0);
    F tau_pow = from_rational<F>(1);
    for (int j = 0; j <= q; j += 2) {
        F term = from_rational<F>(Rational(binomial(q, j))) * tau_pow * field_pow(V, q - j) *
                 field_pow(v, j);
        if ((j / 2) % 2 == 1) term = -term;
        sum += term;
        tau_pow = tau_pow * tau_sq;
    }
    return sum;
}

template <class F>
void check_incident(const F& V, const F& v) {
    if (v.sign() <= 0 || (V - v).sign() < 0)
        throw InvalidArgument("incident velocities must satisfy V_in >= v_in > 0");
}

}  // namespace

ActionValue action_from_initial(const Rational& x0, const Rational& V0, const Rational& m, long prec) {
    PrecisionScope scope(prec);
    const Interval p(abs(x0) * V0 * m, prec);
    return {p / Interval::pi(prec), ActionSource::FromInitial};
}

ActionValue action_from_event(const Interval& product, const Rational& m, ActionSource source,
                              long prec) {
    PrecisionScope scope(prec);
    return {abs(product) * Interval(m, prec) / Interval::pi(prec), source};
}

std::optional<Rational> exact_tan_sq(int q) {
    switch (q) {
        case 3: return Rational(3);
        case 4: return Rational(1);
        case 6: return Rational(1, 3);
        default: return std::nullopt;
    }
}

SuperintegrableRatio superintegrable_mass_ratio(int q, long prec) {
    check_q(q);
    PrecisionScope scope(prec);
    SuperintegrableRatio r;
    r.q = q;
    r.exact = exact_tan_sq(q);
    r.value = r.exact ? Interval(*r.exact, prec) : sqr(tan(pi_over(q)));
    return r;
}

Rational chevalley_J(int q, const Rational& V, const Rational& v) {
    check_q(q);
    auto t2 = exact_tan_sq(q);
    if (!t2) throw InvalidArgument("J is exact only for q in {3, 4, 6}; use intervals");
    return j_polynomial(q, *t2, V, v);
}

Interval chevalley_J(int q, const Interval& V, const Interval& v) {
    check_q(q);
    auto t2 = exact_tan_sq(q);
    const Interval tau_sq = t2 ? Interval(*t2) : sqr(tan(pi_over(q)));
    return j_polynomial(q, tau_sq, V, v);
}

std::pair<Rational, Rational> outgoing_map(int q, const Rational& V_in, const Rational& v_in) {
    check_q(q);
    check_incident(V_in, v_in);
    if (q % 2 == 0) return {-V_in, -v_in};
    if (q != 3) throw InvalidArgument("odd q other than 3 has no rational outgoing map");
    // cos(pi/3) = 1/2, tan(pi/3) sin(pi/3) = 3/2.
    const Rational half(1, 2);
    return {-half * V_in - Rational(3, 2) * v_in, -half * (V_in - v_in)};
}

std::pair<Interval, Interval> outgoing_map(int q, const Interval& V_in, const Interval& v_in) {
    check_q(q);
    check_incident(V_in, v_in);
    if (q % 2 == 0) return {-V_in, -v_in};
    const Interval a = pi_over(q);
    const Interval c = cos(a);
    return {-c * V_in - tan(a) * sin(a) * v_in, -c * (V_in - v_in)};
}

}  // namespace galperin
