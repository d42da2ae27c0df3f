#include "galperin/interval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "galperin/errors.hpp"

namespace galperin {

namespace {

mpfr_prec_t clamp_prec(long p) {
    if (p < MPFR_PREC_MIN) return MPFR_PREC_MIN;
    if (p > MPFR_PREC_MAX) return MPFR_PREC_MAX;
    return static_cast<mpfr_prec_t>(p);
}

long join_prec(const Interval& a, const Interval& b) { return std::max(a.prec(), b.prec()); }

std::string take_string(char* s) {
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

// Extremum test for sin(x + shift) on [lo, hi]: does some point
// target + 2k*pi lie (possibly) inside the interval?
bool hits_phase(mpfr_srcptr lo, mpfr_srcptr hi, const Interval& target, const Interval& two_pi) {
    double lo_d = mpfr_get_d(lo, MPFR_RNDD);
    double hi_d = mpfr_get_d(hi, MPFR_RNDU);
    double tp = two_pi.to_double();
    double t0 = target.to_double();
    long kmin = static_cast<long>(std::floor((lo_d - t0) / tp)) - 1;
    long kmax = static_cast<long>(std::ceil((hi_d - t0) / tp)) + 1;
    for (long k = kmin; k <= kmax; ++k) {
        Interval p = target + Interval(k) * two_pi;
        if (mpfr_lessequal_p(p.lo(), hi) && mpfr_greaterequal_p(p.hi(), lo)) return true;
    }
    return false;
}

}  // namespace

Interval::Interval(long prec, int) {
    mpfr_init2(lo_, clamp_prec(prec));
    mpfr_init2(hi_, clamp_prec(prec));
}

Interval::Interval() : Interval(working_precision(), 0) {
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(long v) : Interval(working_precision(), 0) {
    mpfr_set_si(lo_, v, MPFR_RNDD);
    mpfr_set_si(hi_, v, MPFR_RNDU);
}

Interval::Interval(const mpz_class& z) : Interval(working_precision(), 0) {
    mpfr_set_z(lo_, z.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(hi_, z.get_mpz_t(), MPFR_RNDU);
}

Interval::Interval(const Rational& q) : Interval(q, working_precision()) {}

Interval::Interval(const Rational& q, long prec) : Interval(prec, 0) {
    mpfr_set_q(lo_, q.get().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, q.get().get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Interval& o) : Interval(o.prec(), 0) {
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept {
    mpfr_init2(lo_, MPFR_PREC_MIN);
    mpfr_init2(hi_, MPFR_PREC_MIN);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
    if (this == &o) return *this;
    if (prec() != o.prec()) {
        mpfr_set_prec(lo_, o.prec());
        mpfr_set_prec(hi_, o.prec());
    }
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
    return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::hull(const Rational& lo, const Rational& hi) {
    if (hi < lo) throw InvalidArgument("hull with lo > hi");
    Interval r(working_precision(), 0);
    mpfr_set_q(r.lo_, lo.get().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, hi.get().get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
    Interval r(join_prec(a, b), 0);
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::from_mid_rad(const std::string& mid, const std::string& rad, long prec) {
    Interval r(prec, 0);
    mpfr_t m, d;
    mpfr_init2(m, clamp_prec(prec));
    mpfr_init2(d, clamp_prec(prec));
    bool ok = mpfr_set_str(d, rad.c_str(), 10, MPFR_RNDU) == 0 && mpfr_sgn(d) >= 0;
    ok = ok && mpfr_set_str(m, mid.c_str(), 10, MPFR_RNDD) == 0;
    if (ok) mpfr_sub(r.lo_, m, d, MPFR_RNDD);
    ok = ok && mpfr_set_str(m, mid.c_str(), 10, MPFR_RNDU) == 0;
    if (ok) mpfr_add(r.hi_, m, d, MPFR_RNDU);
    mpfr_clear(m);
    mpfr_clear(d);
    if (!ok) throw InvalidArgument("malformed interval '" + mid + " +- " + rad + "'");
    return r;
}

Interval Interval::pi(long prec) {
    Interval r(prec, 0);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::e(long prec) {
    Interval r(prec, 0);
    mpfr_set_ui(r.lo_, 1, MPFR_RNDN);
    mpfr_set_ui(r.hi_, 1, MPFR_RNDN);
    mpfr_exp(r.lo_, r.lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, r.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::phi(long prec) {
    Interval r(prec, 0);
    mpfr_sqrt_ui(r.lo_, 5, MPFR_RNDD);
    mpfr_sqrt_ui(r.hi_, 5, MPFR_RNDU);
    mpfr_add_ui(r.lo_, r.lo_, 1, MPFR_RNDD);
    mpfr_add_ui(r.hi_, r.hi_, 1, MPFR_RNDU);
    mpfr_div_2ui(r.lo_, r.lo_, 1, MPFR_RNDD);
    mpfr_div_2ui(r.hi_, r.hi_, 1, MPFR_RNDU);
    return r;
}

double Interval::to_double() const {
    mpfr_t m;
    mpfr_init2(m, mpfr_get_prec(lo_) + 8);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    double d = mpfr_get_d(m, MPFR_RNDN);
    mpfr_clear(m);
    return d;
}

double Interval::width() const {
    mpfr_t w;
    mpfr_init2(w, 64);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

bool Interval::contains(const Rational& q) const {
    return mpfr_cmp_q(lo_, q.get().get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get().get_mpq_t()) >= 0;
}

bool Interval::contains(const Interval& o) const {
    return mpfr_lessequal_p(lo_, o.lo_) && mpfr_greaterequal_p(hi_, o.hi_);
}

int Interval::sign() const {
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    if (mpfr_zero_p(lo_) && mpfr_zero_p(hi_)) return 0;
    throw AmbiguousPredicate("sign of an interval straddling zero at " + std::to_string(prec()) +
                             " bits");
}

mpz_class Interval::floor() const {
    mpz_class a, b;
    mpfr_get_z(a.get_mpz_t(), lo_, MPFR_RNDD);
    mpfr_get_z(b.get_mpz_t(), hi_, MPFR_RNDD);
    if (a != b)
        throw AmbiguousPredicate("floor undecided at " + std::to_string(prec()) + " bits");
    return a;
}

std::string Interval::mid_str() const {
    mpfr_t m;
    mpfr_init2(m, mpfr_get_prec(lo_) + 64);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    int digits = static_cast<int>(std::ceil(static_cast<double>(prec()) * 0.30103)) + 3;
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*RNe", digits, m);
    mpfr_clear(m);
    return take_string(s);
}

std::string Interval::rad_str() const {
    std::string mid = mid_str();
    mpfr_t m, d1, d2;
    mpfr_init2(m, mpfr_get_prec(lo_) + 64);
    mpfr_init2(d1, 64);
    mpfr_init2(d2, 64);
    mpfr_set_str(m, mid.c_str(), 10, MPFR_RNDN);
    // Exact enough: the radius is rounded up twice below.
    mpfr_sub(d1, hi_, m, MPFR_RNDU);
    mpfr_sub(d2, m, lo_, MPFR_RNDU);
    mpfr_max(d1, d1, d2, MPFR_RNDU);
    if (mpfr_sgn(d1) < 0) mpfr_set_zero(d1, 1);
    // Cover the rounding made when mid was parsed back at prec + 64 bits.
    mpfr_t ulp;
    mpfr_init2(ulp, 64);
    if (!mpfr_zero_p(m)) {
        mpfr_set_ui_2exp(ulp, 1, mpfr_get_exp(m) - static_cast<mpfr_exp_t>(mpfr_get_prec(m)) + 1,
                         MPFR_RNDU);
        mpfr_add(d1, d1, ulp, MPFR_RNDU);
    }
    char* s = nullptr;
    mpfr_asprintf(&s, "%.6RUe", d1);
    mpfr_clear(m);
    mpfr_clear(d1);
    mpfr_clear(d2);
    mpfr_clear(ulp);
    return take_string(s);
}

std::string Interval::str(int digits) const {
    mpfr_t m;
    mpfr_init2(m, mpfr_get_prec(lo_) + 8);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*RNg", digits, m);
    mpfr_clear(m);
    return take_string(s);
}

Interval Interval::operator-() const {
    Interval r(prec(), 0);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Interval operator+(const Interval& a, const Interval& b) {
    Interval r(join_prec(a, b), 0);
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& a, const Interval& b) {
    Interval r(join_prec(a, b), 0);
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}

Interval operator*(const Interval& a, const Interval& b) {
    Interval r(join_prec(a, b), 0);
    const bool a_pos = mpfr_sgn(a.lo_) >= 0, a_neg = mpfr_sgn(a.hi_) <= 0;
    const bool b_pos = mpfr_sgn(b.lo_) >= 0, b_neg = mpfr_sgn(b.hi_) <= 0;
    auto set = [&](mpfr_srcptr l1, mpfr_srcptr l2, mpfr_srcptr h1, mpfr_srcptr h2) {
        mpfr_mul(r.lo_, l1, l2, MPFR_RNDD);
        mpfr_mul(r.hi_, h1, h2, MPFR_RNDU);
    };
    if (a_pos) {
        if (b_pos) set(a.lo_, b.lo_, a.hi_, b.hi_);
        else if (b_neg) set(a.hi_, b.lo_, a.lo_, b.hi_);
        else set(a.hi_, b.lo_, a.hi_, b.hi_);
    } else if (a_neg) {
        if (b_pos) set(a.lo_, b.hi_, a.hi_, b.lo_);
        else if (b_neg) set(a.hi_, b.hi_, a.lo_, b.lo_);
        else set(a.lo_, b.hi_, a.lo_, b.lo_);
    } else {
        if (b_pos) set(a.lo_, b.hi_, a.hi_, b.hi_);
        else if (b_neg) set(a.hi_, b.lo_, a.lo_, b.lo_);
        else {
            mpfr_t t;
            mpfr_init2(t, mpfr_get_prec(r.lo_));
            mpfr_mul(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
            mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDD);
            mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
            mpfr_mul(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
            mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDU);
            mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
            mpfr_clear(t);
        }
    }
    return r;
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.is_zero()) throw InvalidArgument("interval division by zero");
    const bool b_pos = mpfr_sgn(b.lo_) > 0, b_neg = mpfr_sgn(b.hi_) < 0;
    if (!b_pos && !b_neg)
        throw AmbiguousPredicate("interval divisor straddles zero at " +
                                 std::to_string(b.prec()) + " bits");
    Interval r(join_prec(a, b), 0);
    const bool a_pos = mpfr_sgn(a.lo_) >= 0, a_neg = mpfr_sgn(a.hi_) <= 0;
    auto set = [&](mpfr_srcptr l1, mpfr_srcptr l2, mpfr_srcptr h1, mpfr_srcptr h2) {
        mpfr_div(r.lo_, l1, l2, MPFR_RNDD);
        mpfr_div(r.hi_, h1, h2, MPFR_RNDU);
    };
    if (b_pos) {
        if (a_pos) set(a.lo_, b.hi_, a.hi_, b.lo_);
        else if (a_neg) set(a.lo_, b.lo_, a.hi_, b.hi_);
        else set(a.lo_, b.lo_, a.hi_, b.lo_);
    } else {
        if (a_pos) set(a.hi_, b.hi_, a.lo_, b.lo_);
        else if (a_neg) set(a.hi_, b.lo_, a.lo_, b.hi_);
        else set(a.hi_, b.hi_, a.lo_, b.hi_);
    }
    return r;
}

Interval& Interval::operator+=(const Interval& o) {
    if (prec() >= o.prec()) {
        mpfr_add(lo_, lo_, o.lo_, MPFR_RNDD);
        mpfr_add(hi_, hi_, o.hi_, MPFR_RNDU);
        return *this;
    }
    return *this = *this + o;
}

Interval& Interval::operator-=(const Interval& o) {
    if (prec() >= o.prec() && this != &o) {
        mpfr_sub(lo_, lo_, o.hi_, MPFR_RNDD);
        mpfr_sub(hi_, hi_, o.lo_, MPFR_RNDU);
        return *this;
    }
    return *this = *this - o;
}

Interval& Interval::operator*=(const Interval& o) { return *this = *this * o; }
Interval& Interval::operator/=(const Interval& o) { return *this = *this / o; }

Interval sqr(const Interval& a) {
    Interval r(a.prec(), 0);
    if (mpfr_sgn(a.lo_) >= 0) {
        mpfr_sqr(r.lo_, a.lo_, MPFR_RNDD);
        mpfr_sqr(r.hi_, a.hi_, MPFR_RNDU);
    } else if (mpfr_sgn(a.hi_) <= 0) {
        mpfr_sqr(r.lo_, a.hi_, MPFR_RNDD);
        mpfr_sqr(r.hi_, a.lo_, MPFR_RNDU);
    } else {
        mpfr_set_zero(r.lo_, 1);
        mpfr_t t;
        mpfr_init2(t, mpfr_get_prec(r.hi_));
        mpfr_sqr(r.hi_, a.lo_, MPFR_RNDU);
        mpfr_sqr(t, a.hi_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_clear(t);
    }
    return r;
}

Interval sqrt(const Interval& a) {
    if (mpfr_sgn(a.hi_) < 0) throw InvalidArgument("square root of a negative interval");
    Interval r(a.prec(), 0);
    if (mpfr_sgn(a.lo_) <= 0) mpfr_set_zero(r.lo_, 1);
    else mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Interval abs(const Interval& a) {
    if (mpfr_sgn(a.lo_) >= 0) return a;
    if (mpfr_sgn(a.hi_) <= 0) return -a;
    Interval r(a.prec(), 0);
    mpfr_set_zero(r.lo_, 1);
    mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Interval max(const Interval& a, const Interval& b) {
    Interval r(join_prec(a, b), 0);
    mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval min(const Interval& a, const Interval& b) {
    Interval r(join_prec(a, b), 0);
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval atan(const Interval& a) {
    Interval r(a.prec(), 0);
    mpfr_atan(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_atan(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Interval exp(const Interval& a) {
    Interval r(a.prec(), 0);
    mpfr_exp(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Interval log(const Interval& a) {
    if (mpfr_sgn(a.lo_) <= 0) {
        if (mpfr_sgn(a.hi_) <= 0) throw InvalidArgument("logarithm of a non-positive interval");
        throw AmbiguousPredicate("logarithm argument not certified positive");
    }
    Interval r(a.prec(), 0);
    mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Interval sin(const Interval& a) {
    const long p = a.prec();
    Interval r(p, 0);
    Interval two_pi = Interval::pi(p) * Interval(2);
    if (a.width() >= 6.0) {
        mpfr_set_si(r.lo_, -1, MPFR_RNDD);
        mpfr_set_si(r.hi_, 1, MPFR_RNDU);
        return r;
    }
    mpfr_t t;
    mpfr_init2(t, static_cast<mpfr_prec_t>(p));
    mpfr_sin(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_sin(t, a.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_sin(r.hi_, a.lo_, MPFR_RNDU);
    mpfr_sin(t, a.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    Interval half_pi = Interval::pi(p) / Interval(2);
    if (hits_phase(a.lo_, a.hi_, half_pi, two_pi)) mpfr_set_si(r.hi_, 1, MPFR_RNDU);
    if (hits_phase(a.lo_, a.hi_, -half_pi, two_pi)) mpfr_set_si(r.lo_, -1, MPFR_RNDD);
    return r;
}

Interval cos(const Interval& a) {
    const long p = a.prec();
    Interval r(p, 0);
    Interval two_pi = Interval::pi(p) * Interval(2);
    if (a.width() >= 6.0) {
        mpfr_set_si(r.lo_, -1, MPFR_RNDD);
        mpfr_set_si(r.hi_, 1, MPFR_RNDU);
        return r;
    }
    mpfr_t t;
    mpfr_init2(t, static_cast<mpfr_prec_t>(p));
    mpfr_cos(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_cos(t, a.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_cos(r.hi_, a.lo_, MPFR_RNDU);
    mpfr_cos(t, a.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    Interval zero(0L);
    if (hits_phase(a.lo_, a.hi_, zero, two_pi)) mpfr_set_si(r.hi_, 1, MPFR_RNDU);
    if (hits_phase(a.lo_, a.hi_, Interval::pi(p), two_pi)) mpfr_set_si(r.lo_, -1, MPFR_RNDD);
    return r;
}

Interval tan(const Interval& a) {
    if (!cos(a).certainly_positive())
        throw AmbiguousPredicate("tangent argument not inside (-pi/2, pi/2)");
    Interval r(a.prec(), 0);
    mpfr_tan(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_tan(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Interval pow(const Interval& a, long e) {
    if (e < 0) return Interval(1) / pow(a, -e);
    Interval result(1);
    Interval base = a;
    bool first = true;
    while (e > 0) {
        if (e & 1) {
            result = first ? base : result * base;
            first = false;
        }
        e >>= 1;
        if (e > 0) base = sqr(base);
    }
    return result;
}

Interval pow(const Interval& a, const Rational& q) {
    if (q.is_integer() && mpz_fits_slong_p(q.num().get_mpz_t())) return pow(a, q.num().get_si());
    if (!a.certainly_positive()) throw InvalidArgument("fractional power of a non-positive interval");
    return exp(Interval(q, a.prec()) * log(a));
}

}  // namespace galperin
