#pragma once

#include <string>

#include <gmpxx.h>

#include "galperin/interval.hpp"
#include "galperin/rational.hpp"

namespace galperin {

/// Exact element a + b*phi of Q(phi), phi = (1 + sqrt 5)/2.
class Golden {
public:
    Golden() = default;
    Golden(const Rational& a) : a_(a) {}  // NOLINT
    Golden(long a) : a_(a) {}  // NOLINT
    Golden(const Rational& a, const Rational& b) : a_(a), b_(b) {}

    static Golden phi() { return Golden(0, 1); }
    /// phi^e for any integer e.
    static Golden phi_pow(long e);

    const Rational& a() const noexcept { return a_; }
    const Rational& b() const noexcept { return b_; }
    bool is_rational() const noexcept { return b_.is_zero(); }

    int sign() const;
    bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }
    /// Exact floor.
    mpz_class floor() const;
    Interval enclose(long prec) const;
    double to_double() const;
    std::string str() const;

    Golden conjugate() const { return Golden(a_ + b_, -b_); }
    /// a^2 + ab - b^2, the field norm.
    Rational norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }

    Golden operator-() const { return Golden(-a_, -b_); }
    Golden& operator+=(const Golden& o);
    Golden& operator-=(const Golden& o);
    Golden& operator*=(const Golden& o);
    Golden& operator/=(const Golden& o);
    friend Golden operator+(Golden x, const Golden& y) { x += y; return x; }
    friend Golden operator-(Golden x, const Golden& y) { x -= y; return x; }
    friend Golden operator*(Golden x, const Golden& y) { x *= y; return x; }
    friend Golden operator/(Golden x, const Golden& y) { x /= y; return x; }
    friend bool operator==(const Golden& x, const Golden& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator<(const Golden& x, const Golden& y) { return (x - y).sign() < 0; }
    friend bool operator<=(const Golden& x, const Golden& y) { return (x - y).sign() <= 0; }

private:
    Rational a_;
    Rational b_;
};

}  // namespace galperin
