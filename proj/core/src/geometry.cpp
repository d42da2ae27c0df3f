#include "galperin/geometry.hpp"

#include "galperin/closed_form.hpp"

namespace galperin {

Extremes predicted_extremes(const BilliardSpec& spec, long prec) {
    spec.validate();
    PrecisionScope scope(prec);
    const Interval m(spec.m, prec);
    const Interval M = spec.heavy_mass ? Interval(*spec.heavy_mass, prec)
                                       : power(spec.base, spec.mantissa * Rational(2), prec) * m;
    const Interval bn = sqrt(M / m);
    const Interval V0(spec.V0, prec);
    Extremes e;
    e.v_max = bn * V0;
    e.P_max = M * V0;
    e.p_max = e.P_max / bn;
    e.X_min = Interval(spec.x0, prec) / bn;
    return e;
}

ReturnIndex return_index(const Real& b, const Rational& N, long cap_bits) {
    if (N.sign() < 0) throw InvalidArgument("mantissa must be non-negative");
    ReturnIndex r;
    if (N.is_zero()) {
        // varphi = pi/4: the first ball-ball collision stops the heavy ball.
        r.pair = 1;
    } else {
        // pi / (4 varphi) is never an integer for b^N > 1.
        PrecisionPolicy policy{initial_precision(b, N), cap_bits};
        const mpz_class f = with_escalation(policy, [&](long bits) {
            const PivotAngle pa = pivot_angle(b, N, bits);
            return (Interval::pi(bits) / (pa.varphi * Interval(4))).floor();
        });
        const mpz_class k = f + 1;
        if (!k.fits_slong_p()) throw InvalidArgument("return index does not fit in a long");
        r.pair = k.get_si();
    }
    r.event = 2 * r.pair - 1;
    return r;
}

}  // namespace galperin
