#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace galperin {

/// Exact arbitrary-size rational, always kept in canonical form.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}  // NOLINT: implicit by design
    Rational(int v) : q_(static_cast<long>(v)) {}  // NOLINT
    Rational(const mpz_class& v) : q_(v) {}  // NOLINT
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpq_class& v) : q_(v) { q_.canonicalize(); }

    /// Accepts "p", "p/q" and plain decimals such as "-3.7823797".
    static Rational parse(std::string_view text);

    const mpq_class& get() const noexcept { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    int sign() const noexcept { return sgn(q_); }
    bool is_zero() const noexcept { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    mpz_class floor() const;
    mpz_class ceil() const;
    double to_double() const { return q_.get_d(); }

    /// Canonical "p/q", or "p" when the denominator is one.
    std::string str() const;

    Rational pow(long e) const;
    /// Exact square root when numerator and denominator are perfect squares.
    std::optional<Rational> exact_sqrt() const;

    bool identical(const Rational& o) const { return q_ == o.q_; }
    static Rational from_rational(const Rational& q) { return q; }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_;
};

inline int sign(const Rational& a) { return a.sign(); }
inline Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }
inline Rational sqr(const Rational& a) { return a * a; }

}  // namespace galperin
