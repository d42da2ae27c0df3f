#include "galperin/real.hpp"

#include <cctype>
#include <cmath>

#include "galperin/errors.hpp"

namespace galperin {

Real::Real(const Golden& g) {
    if (g.is_rational()) {
        kind_ = Kind::Rational;
        q_ = g.a();
    } else {
        kind_ = Kind::Golden;
        g_ = g;
    }
}

Real Real::parse(std::string_view text, bool literal) {
    std::string s(text);
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "pi") return pi();
    if (s == "e") return e();
    if (s == "phi" || s == "golden") return phi();
    if (!literal) {
        if (auto name = resembles_named_constant(s))
            throw InvalidArgument("'" + std::string(text) + "' looks like an approximation of " +
                                  *name + "; pass '" + *name +
                                  "' for the exact constant or request a literal decimal");
    }
    return Real(Rational::parse(s));
}

std::optional<Rational> Real::rational() const {
    if (kind_ == Kind::Rational) return q_;
    return std::nullopt;
}

std::optional<Golden> Real::golden() const {
    if (kind_ == Kind::Rational) return Golden(q_);
    if (kind_ == Kind::Golden) return g_;
    return std::nullopt;
}

Interval Real::enclose(long prec) const {
    switch (kind_) {
        case Kind::Rational: return Interval(q_, prec);
        case Kind::Golden: return g_.enclose(prec);
        case Kind::Pi: return Interval::pi(prec);
        case Kind::E: return Interval::e(prec);
    }
    throw Error("unreachable");
}

std::string Real::label() const {
    switch (kind_) {
        case Kind::Rational: return q_.str();
        case Kind::Golden: return g_ == Golden::phi() ? "phi" : g_.str();
        case Kind::Pi: return "pi";
        case Kind::E: return "e";
    }
    return "?";
}

int Real::sign() const {
    switch (kind_) {
        case Kind::Rational: return q_.sign();
        case Kind::Golden: return g_.sign();
        default: return 1;
    }
}

bool Real::is_integer() const { return kind_ == Kind::Rational && q_.is_integer(); }

mpz_class Real::floor() const {
    switch (kind_) {
        case Kind::Rational: return q_.floor();
        case Kind::Golden: return g_.floor();
        default: return enclose(64).floor();
    }
}

mpz_class Real::ceil() const {
    switch (kind_) {
        case Kind::Rational: return q_.ceil();
        case Kind::Golden: return -((-g_).floor());
        default: return enclose(64).floor() + 1;
    }
}

std::optional<std::string> resembles_named_constant(std::string_view decimal_text) {
    auto dot = decimal_text.find('.');
    if (dot == std::string_view::npos) return std::nullopt;
    const auto decimals = decimal_text.size() - dot - 1;
    if (decimals < 3) return std::nullopt;
    Rational d;
    try {
        d = Rational::parse(decimal_text);
    } catch (const InvalidArgument&) {
        return std::nullopt;
    }
    const long prec = 64 + static_cast<long>(decimals) * 4;
    const Interval tol(Rational(1) / Rational(10).pow(static_cast<long>(decimals)), prec);
    const Interval di(d, prec);
    const std::pair<const char*, Interval> named[] = {
        {"pi", Interval::pi(prec)}, {"e", Interval::e(prec)}, {"phi", Interval::phi(prec)}};
    for (const auto& [name, value] : named) {
        Interval diff = abs(di - value);
        if (mpfr_lessequal_p(diff.hi(), tol.lo())) return std::string(name);
    }
    return std::nullopt;
}

std::optional<Rational> exact_power(const Real& b, const Rational& N) {
    auto q = b.rational();
    if (!q) return std::nullopt;
    if (N.is_integer()) {
        if (!mpz_fits_slong_p(N.num().get_mpz_t())) return std::nullopt;
        return q->pow(N.num().get_si());
    }
    if (q->sign() <= 0) return std::nullopt;
    const mpz_class den = N.den();
    if (!mpz_fits_ulong_p(den.get_mpz_t()) || !mpz_fits_slong_p(N.num().get_mpz_t()))
        return std::nullopt;
    const unsigned long k = den.get_ui();
    mpz_class rn, rd;
    if (!mpz_root(rn.get_mpz_t(), q->num().get_mpz_t(), k)) return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), q->den().get_mpz_t(), k)) return std::nullopt;
    return Rational(rn, rd).pow(N.num().get_si());
}

std::optional<Golden> exact_golden_power(const Real& b, const Rational& N) {
    auto g = b.golden();
    if (!g || !N.is_integer() || !mpz_fits_slong_p(N.num().get_mpz_t())) return std::nullopt;
    long e = N.num().get_si();
    if (*g == Golden::phi()) return Golden::phi_pow(e);
    Golden base = e >= 0 ? *g : Golden(1) / *g;
    unsigned long k = e >= 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    Golden result(1);
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return result;
}

Interval power(const Real& b, const Rational& N, long prec) {
    if (auto r = exact_power(b, N)) return Interval(*r, prec);
    if (auto g = exact_golden_power(b, N)) return g->enclose(prec);
    Interval base = b.enclose(prec);
    if (N.is_integer() && mpz_fits_slong_p(N.num().get_mpz_t())) return pow(base, N.num().get_si());
    return pow(base, N);
}

long initial_precision(const Real& b, const Rational& N) {
    double lb = std::log2(b.to_double());
    double n = N.to_double();
    double extra = 4.0 * n * (lb > 0 ? lb : 0);
    if (!(extra < 1e9)) extra = 1e9;
    return 64 + static_cast<long>(std::ceil(extra));
}

}  // namespace galperin
