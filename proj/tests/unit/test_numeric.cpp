#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mpfr.h>

#include "galperin/field.hpp"
#include "galperin/golden.hpp"
#include "galperin/interval.hpp"
#include "galperin/precision.hpp"
#include "galperin/rational.hpp"
#include "galperin/real.hpp"
#include "support/oracles.hpp"

using namespace galperin;

TEST_CASE("rational parsing and printing") {
    CHECK(Rational::parse("6/4").str() == "3/2");
    CHECK(Rational::parse("-3.7823797") == Rational(mpz_class(-37823797), mpz_class(10000000)));
    CHECK(Rational::parse("12").is_integer());
    CHECK(Rational::parse("0.25") == Rational(mpz_class(1), mpz_class(4)));
    CHECK_THROWS_AS(Rational::parse(""), InvalidArgument);
    CHECK_THROWS_AS(Rational::parse("1/0"), InvalidArgument);
    CHECK_THROWS_AS(Rational::parse("1.2.3"), InvalidArgument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), InvalidArgument);
}

TEST_CASE("rational floor, ceil, powers and square roots") {
    CHECK(Rational::parse("-7/2").floor() == -4);
    CHECK(Rational::parse("-7/2").ceil() == -3);
    CHECK(Rational(2).pow(-3) == Rational::parse("1/8"));
    CHECK(Rational::parse("9/16").exact_sqrt() == Rational::parse("3/4"));
    CHECK_FALSE(Rational(2).exact_sqrt().has_value());
}

TEST_CASE("interval arithmetic encloses exact rational results") {
    oracle::Gen gen(11);
    PrecisionScope scope(64);
    for (int i = 0; i < 500; ++i) {
        const Rational a(gen.rational(-100000, 100000, 9973));
        Rational b(gen.rational(-100000, 100000, 9973));
        if (b.is_zero()) b = 1;
        const Interval A(a), B(b);
        CHECK((A + B).contains(a + b));
        CHECK((A - B).contains(a - b));
        CHECK((A * B).contains(a * b));
        CHECK((A / B).contains(a / b));
        CHECK(sqr(A).contains(a * a));
    }
}

TEST_CASE("interval transcendental functions enclose high-precision values") {
    PrecisionScope scope(96);
    const Interval pi = Interval::pi(96);
    const auto bounds = oracle::pi_bounds(40);
    CHECK(pi.overlaps(Interval::hull(Rational(bounds.first), Rational(bounds.second))));
    CHECK(pi.width() < 1e-25);
    const Interval t = atan(Interval(Rational::parse("1/10")));
    const auto ab = oracle::atan_bounds(mpq_class(1, 10), 30);
    CHECK(t.overlaps(Interval::hull(Rational(ab.first), Rational(ab.second))));
    CHECK((sin(pi / Interval(6)) - Interval(Rational::parse("1/2"))).width() < 1e-25);
    CHECK((sqr(sqrt(Interval(2))) - Interval(2)).contains_zero());
}

TEST_CASE("interval predicates raise on ambiguity") {
    const Interval straddle = Interval::hull(Rational(-1), Rational(1));
    CHECK_THROWS_AS(straddle.sign(), AmbiguousPredicate);
    CHECK(Interval(0L).sign() == 0);
    CHECK(Interval(Rational::parse("5/2")).floor() == 2);
    CHECK_THROWS_AS(Interval::hull(Rational::parse("19/10"), Rational::parse("21/10")).floor(),
                    AmbiguousPredicate);
}

TEST_CASE("interval decimal round trip encloses the original") {
    PrecisionScope scope(128);
    const Interval x = Interval::pi(128) / Interval(7);
    const Interval back = Interval::from_mid_rad(x.mid_str(), x.rad_str(), 128);
    CHECK(back.contains(x));
}

TEST_CASE("precision escalation doubles and stops at the cap") {
    std::vector<long> seen;
    const long got = with_escalation(PrecisionPolicy{16, 256}, [&](long bits) {
        seen.push_back(bits);
        if (bits < 100) throw AmbiguousPredicate("more");
        return bits;
    });
    CHECK(got == 128);
    CHECK(seen == std::vector<long>{16, 32, 64, 128});
    CHECK_THROWS_AS(with_escalation(PrecisionPolicy{16, 64},
                                    [](long) -> long { throw AmbiguousPredicate("never"); }),
                    PrecisionExhausted);
}

TEST_CASE("golden field arithmetic agrees with interval enclosures") {
    oracle::Gen gen(5);
    const long prec = 200;
    PrecisionScope scope(prec);
    for (int i = 0; i < 300; ++i) {
        const Golden x(Rational(gen.rational(-500, 500, 40)), Rational(gen.rational(-500, 500, 40)));
        Golden y(Rational(gen.rational(-500, 500, 40)), Rational(gen.rational(-500, 500, 40)));
        if (y.is_zero()) y = Golden(1);
        CHECK((x * y).enclose(prec).overlaps(x.enclose(prec) * y.enclose(prec)));
        CHECK((x / y).enclose(prec).overlaps(x.enclose(prec) / y.enclose(prec)));
        CHECK((x + y).enclose(prec).overlaps(x.enclose(prec) + y.enclose(prec)));
        const Interval xi = x.enclose(prec);
        if (!xi.contains_zero()) CHECK(x.sign() == xi.sign());
    }
}

TEST_CASE("golden identities") {
    const Golden phi = Golden::phi();
    CHECK(phi * phi == phi + Golden(1));
    CHECK(Golden::phi_pow(-1) == phi - Golden(1));
    CHECK(Golden::phi_pow(5) == Golden(3, 5));
    CHECK(Golden::phi_pow(5).floor() == 11);
    CHECK(Golden::phi_pow(2).norm() == Rational(1));
    CHECK_THROWS_AS(Golden(1) / Golden(), InvalidArgument);
}

TEST_CASE("real parsing of bases") {
    CHECK(Real::parse("pi").kind() == Real::Kind::Pi);
    CHECK(Real::parse("e").kind() == Real::Kind::E);
    CHECK(Real::parse("phi").kind() == Real::Kind::Golden);
    CHECK(Real::parse("3/2").rational() == Rational::parse("3/2"));
    CHECK(Real::parse("3.7823797").kind() == Real::Kind::Rational);
    CHECK_THROWS_AS(Real::parse("3.14159"), InvalidArgument);
    CHECK_THROWS_AS(Real::parse("2.718"), InvalidArgument);
    CHECK_THROWS_AS(Real::parse("1.618"), InvalidArgument);
    CHECK(Real::parse("3.14159", true).kind() == Real::Kind::Rational);
    CHECK(resembles_named_constant("3.1416") == std::string("pi"));
    CHECK_FALSE(resembles_named_constant("3.2").has_value());
}

TEST_CASE("exact powers and enclosures of b^N") {
    CHECK(exact_power(Real(10), Rational(3)) == Rational(1000));
    CHECK(exact_power(Real(4), Rational::parse("1/2")) == Rational(2));
    CHECK_FALSE(exact_power(Real(2), Rational::parse("1/2")).has_value());
    CHECK_FALSE(exact_power(Real::pi(), Rational(1)).has_value());
    CHECK(exact_golden_power(Real::phi(), Rational(3)) == Golden::phi_pow(3));
    const Interval p = power(Real::e(), Rational(2), 128);
    CHECK(p.overlaps(sqr(Interval::e(128))));
    CHECK(Real::pi().floor() == 3);
    CHECK(Real::pi().ceil() == 4);
    CHECK(Real(7).is_integer());
}
