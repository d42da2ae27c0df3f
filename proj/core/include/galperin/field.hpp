#pragma once

#include <string>

#include "galperin/errors.hpp"
#include "galperin/interval.hpp"
#include "galperin/rational.hpp"

namespace galperin {

/// Field abstraction used by the dynamics templates. Rational is exact;
/// Interval is certified and raises AmbiguousPredicate on undecidable signs.
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
    static constexpr bool exact = true;
    static constexpr const char* name = "rational";
    static Rational from(const Rational& q) { return q; }
    static Rational sqrt(const Rational& q) {
        auto r = q.exact_sqrt();
        if (!r) throw InvalidArgument("no exact square root of " + q.str());
        return *r;
    }
    static bool has_sqrt(const Rational& q) { return q.exact_sqrt().has_value(); }
    static Interval enclose(const Rational& q) { return Interval(q); }
    static double to_double(const Rational& q) { return q.to_double(); }
};

template <>
struct FieldTraits<Interval> {
    static constexpr bool exact = false;
    static constexpr const char* name = "interval";
    static Interval from(const Rational& q) { return Interval(q); }
    static Interval sqrt(const Interval& a) { return galperin::sqrt(a); }
    static bool has_sqrt(const Interval&) { return true; }
    static Interval enclose(const Interval& a) { return a; }
    static double to_double(const Interval& a) { return a.to_double(); }
};

template <class F>
F from_rational(const Rational& q) {
    return FieldTraits<F>::from(q);
}

template <class F>
F field_sqrt(const F& a) {
    return FieldTraits<F>::sqrt(a);
}

template <class F>
Interval enclose(const F& a) {
    return FieldTraits<F>::enclose(a);
}

template <class F>
double to_double(const F& a) {
    return FieldTraits<F>::to_double(a);
}

/// True when both values are the same object-level value: equal rationals,
/// or intervals with identical endpoints.
template <class F>
bool same_value(const F& a, const F& b) {
    return a.identical(b);
}

/// True when the two values certainly differ; for intervals, when they are
/// disjoint.
inline bool certainly_differ(const Rational& a, const Rational& b) { return !(a == b); }
inline bool certainly_differ(const Interval& a, const Interval& b) { return !a.overlaps(b); }

/// a^e for e >= 0 by repeated squaring.
template <class F>
F field_pow(const F& a, long e) {
    F result = from_rational<F>(1);
    F base = a;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

inline Rational field_max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Interval field_max(const Interval& a, const Interval& b) { return max(a, b); }
inline Rational field_min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Interval field_min(const Interval& a, const Interval& b) { return min(a, b); }

}  // namespace galperin
