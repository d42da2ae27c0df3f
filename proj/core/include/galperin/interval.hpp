#pragma once

#include <mpfr.h>

#include <string>

#include <gmpxx.h>

#include "galperin/precision.hpp"
#include "galperin/rational.hpp"

namespace galperin {

/// Closed interval [lo, hi] with MPFR endpoints and outward rounding.
///
/// Results carry the larger of the operand precisions. Values built from
/// integers, rationals and constants use the thread's working precision.
class Interval {
public:
    Interval();
    Interval(long v);  // NOLINT: implicit by design
    Interval(int v) : Interval(static_cast<long>(v)) {}  // NOLINT
    Interval(const Rational& q);  // NOLINT
    Interval(const mpz_class& z);  // NOLINT
    Interval(const Rational& q, long prec);

    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(const Interval& o);
    Interval& operator=(Interval&& o) noexcept;
    ~Interval();

    static Interval from_rational(const Rational& q) { return Interval(q); }
    /// [lo, hi] from two rationals, rounded outward.
    static Interval hull(const Rational& lo, const Rational& hi);
    static Interval hull(const Interval& a, const Interval& b);
    /// Encloses mid +- rad given as decimal strings.
    static Interval from_mid_rad(const std::string& mid, const std::string& rad, long prec);
    static Interval pi(long prec);
    static Interval e(long prec);
    static Interval phi(long prec);

    long prec() const noexcept { return static_cast<long>(mpfr_get_prec(lo_)); }
    mpfr_srcptr lo() const noexcept { return lo_; }
    mpfr_srcptr hi() const noexcept { return hi_; }
    double lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }
    double to_double() const;

    /// Upper bound on hi - lo.
    double width() const;
    bool is_point() const noexcept { return mpfr_equal_p(lo_, hi_) != 0; }
    bool contains_zero() const noexcept {
        return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
    }
    bool contains(const Rational& q) const;
    bool contains(const Interval& o) const;
    bool identical(const Interval& o) const noexcept {
        return mpfr_equal_p(lo_, o.lo_) && mpfr_equal_p(hi_, o.hi_);
    }
    bool overlaps(const Interval& o) const noexcept {
        return mpfr_lessequal_p(lo_, o.hi_) && mpfr_lessequal_p(o.lo_, hi_);
    }

    /// -1, 0 or 1; 0 only for the point interval [0, 0].
    /// Throws AmbiguousPredicate when the interval straddles zero.
    int sign() const;
    bool is_zero() const noexcept { return mpfr_zero_p(lo_) && mpfr_zero_p(hi_); }
    bool certainly_positive() const noexcept { return mpfr_sgn(lo_) > 0; }
    bool certainly_negative() const noexcept { return mpfr_sgn(hi_) < 0; }
    /// Common floor of both endpoints; throws AmbiguousPredicate otherwise.
    mpz_class floor() const;

    /// Decimal midpoint with enough digits to identify it at this precision.
    std::string mid_str() const;
    /// Decimal radius, rounded up so that [mid - rad, mid + rad] encloses
    /// the interval after parsing mid_str() back.
    std::string rad_str() const;
    /// Midpoint as a short decimal for display.
    std::string str(int digits = 17) const;

    Interval operator-() const;
    Interval& operator+=(const Interval& o);
    Interval& operator-=(const Interval& o);
    Interval& operator*=(const Interval& o);
    Interval& operator/=(const Interval& o);

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    friend Interval operator/(const Interval& a, const Interval& b);

    friend Interval sqr(const Interval& a);
    friend Interval sqrt(const Interval& a);
    friend Interval abs(const Interval& a);
    friend Interval atan(const Interval& a);
    friend Interval exp(const Interval& a);
    friend Interval log(const Interval& a);
    friend Interval sin(const Interval& a);
    friend Interval cos(const Interval& a);
    friend Interval tan(const Interval& a);
    friend Interval max(const Interval& a, const Interval& b);
    friend Interval min(const Interval& a, const Interval& b);

private:
    explicit Interval(long prec, int);  // uninitialised endpoints

    mpfr_t lo_;
    mpfr_t hi_;
};

Interval sqr(const Interval& a);
Interval sqrt(const Interval& a);
Interval abs(const Interval& a);
Interval atan(const Interval& a);
Interval exp(const Interval& a);
Interval log(const Interval& a);
Interval sin(const Interval& a);
Interval cos(const Interval& a);
Interval tan(const Interval& a);
Interval max(const Interval& a, const Interval& b);
Interval min(const Interval& a, const Interval& b);

inline int sign(const Interval& a) { return a.sign(); }
Interval pow(const Interval& a, long e);
/// a^q for a > 0.
Interval pow(const Interval& a, const Rational& q);

}  // namespace galperin
