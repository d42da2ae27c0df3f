#include "galperin/golden.hpp"

#include "galperin/errors.hpp"

namespace galperin {

Golden Golden::phi_pow(long e) {
    // phi^-1 = phi - 1.
    Golden base = e >= 0 ? phi() : Golden(-1, 1);
    unsigned long k = e >= 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    Golden result(1);
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return result;
}

int Golden::sign() const {
    // a + b*phi = (p + q*sqrt5)/2 with p = 2a + b, q = b.
    Rational p = a_ * Rational(2) + b_;
    const int sp = p.sign(), sq = b_.sign();
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // Opposite signs: the larger of p^2 and 5 q^2 wins (they never tie).
    return p * p > Rational(5) * b_ * b_ ? sp : sq;
}

mpz_class Golden::floor() const {
    if (is_rational()) return a_.floor();
    for (long prec = 64;; prec *= 2) {
        Interval x = enclose(prec);
        mpz_class lo, hi;
        mpfr_get_z(lo.get_mpz_t(), x.lo(), MPFR_RNDD);
        mpfr_get_z(hi.get_mpz_t(), x.hi(), MPFR_RNDD);
        if (lo == hi) return lo;
        if (hi == lo + 1) {
            // Decide exactly against the integer candidate hi.
            return (*this - Golden(Rational(hi))).sign() >= 0 ? hi : lo;
        }
    }
}

Interval Golden::enclose(long prec) const {
    return Interval(a_, prec) + Interval(b_, prec) * Interval::phi(prec);
}

double Golden::to_double() const { return enclose(64).to_double(); }

std::string Golden::str() const {
    if (is_rational()) return a_.str();
    return a_.str() + (b_.sign() < 0 ? " - " : " + ") + abs(b_).str() + "*phi";
}

Golden& Golden::operator+=(const Golden& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

Golden& Golden::operator-=(const Golden& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

Golden& Golden::operator*=(const Golden& o) {
    // phi^2 = phi + 1.
    Rational bd = b_ * o.b_;
    Rational na = a_ * o.a_ + bd;
    Rational nb = a_ * o.b_ + b_ * o.a_ + bd;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

Golden& Golden::operator/=(const Golden& o) {
    Rational n = o.norm();
    if (n.is_zero()) throw InvalidArgument("division by zero in Q(phi)");
    *this *= o.conjugate();
    a_ /= n;
    b_ /= n;
    return *this;
}

}  // namespace galperin
