#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "galperin/golden.hpp"
#include "galperin/interval.hpp"
#include "galperin/rational.hpp"

namespace galperin {

/// A real number known exactly: a rational, an element of Q(phi), pi or e.
/// Used for bases and for values to expand; enclose() gives certified
/// intervals at any precision.
class Real {
public:
    enum class Kind { Rational, Golden, Pi, E };

    Real() = default;
    Real(const Rational& q) : kind_(Kind::Rational), q_(q) {}  // NOLINT
    Real(long v) : Real(Rational(v)) {}  // NOLINT
    Real(int v) : Real(Rational(static_cast<long>(v))) {}  // NOLINT
    Real(const Golden& g);  // NOLINT

    static Real pi() { return Real(Kind::Pi); }
    static Real e() { return Real(Kind::E); }
    static Real phi() { return Real(Golden::phi()); }

    /// "pi", "e", "phi", "p/q" or a decimal. Decimals that look like a
    /// truncated or rounded named constant are rejected unless literal is set.
    static Real parse(std::string_view text, bool literal = false);

    Kind kind() const noexcept { return kind_; }
    std::optional<Rational> rational() const;
    /// Set for rationals and elements of Q(phi).
    std::optional<Golden> golden() const;

    Interval enclose(long prec) const;
    double to_double() const { return enclose(64).to_double(); }
    std::string label() const;

    int sign() const;
    bool is_integer() const;
    /// Certified ceiling.
    mpz_class ceil() const;
    /// Certified floor.
    mpz_class floor() const;

private:
    explicit Real(Kind k) : kind_(k) {}

    Kind kind_ = Kind::Rational;
    Rational q_;
    Golden g_;
};

/// Name of the constant that q approximates to its written number of
/// decimals, if any ("pi", "e" or "phi").
std::optional<std::string> resembles_named_constant(std::string_view decimal_text);

/// b^N as an exact rational when it is one (rational b, N with matching roots).
std::optional<Rational> exact_power(const Real& b, const Rational& N);
/// b^N in Q(phi) for b in Q(phi) and integer N.
std::optional<Golden> exact_golden_power(const Real& b, const Rational& N);
/// Certified enclosure of b^N.
Interval power(const Real& b, const Rational& N, long prec);

/// 64 + 4 N log2(b) bits, the starting precision for interval runs.
long initial_precision(const Real& b, const Rational& N);

}  // namespace galperin
