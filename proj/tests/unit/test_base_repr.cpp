#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mpfr.h>

#include "galperin/base_repr.hpp"
#include "support/oracles.hpp"

using namespace galperin;

namespace {

std::string digits_of(const DigitExpansion& d) {
    std::string s;
    for (int x : d.digits) s += static_cast<char>(x < 10 ? '0' + x : 'A' + (x - 10));
    return s;
}

}  // namespace

TEST_CASE("integer base expansions agree with repeated division") {
    oracle::Gen gen(9);
    for (int i = 0; i < 300; ++i) {
        const long b = gen.integer(2, 16);
        const mpz_class n(gen.integer(0, 1000000000));
        const auto d = expand(Real(Rational(n)), Real(b), 0);
        CHECK(d.str() == oracle::to_base(n, static_cast<unsigned long>(b)));
        CHECK(d.exactness == Exactness::Finite);
    }
}

TEST_CASE("fractional digits in integer bases truncate") {
    CHECK(expand(Real(Rational::parse("1/3")), Real(10), 4).str() == "0.3333");
    CHECK(expand(Real(Rational::parse("1/3")), Real(10), 4).exactness == Exactness::Truncated);
    CHECK(expand(Real(Rational::parse("2/3")), Real(10), 3).str() == "0.666");
    CHECK(expand(Real(Rational(314)), Real(10), 0).shifted(2).str() == "3.14");
    CHECK(expand(Real(Rational(25)), Real(2), 0).shifted(3).str() == "11.001");
    CHECK(expand(Real(Rational(254)), Real(3), 0).str() == "100102");
}

TEST_CASE("non-integer base examples") {
    CHECK(expand(Real(Rational(63)), Real::e(), 0).str() == "10101.");
    CHECK(expand(Real(Rational(8)), Real::phi(), 0).str() == "10001.");
    CHECK(expand(Real(Rational(8)), Real::phi(), 4).str() == "10001.0001");
    CHECK(expand(Real(Rational(1)), Real::pi(), 0).str() == "1.");
    CHECK(expand(Real(Rational(4)), Real::phi(), 2).str() == "101.01");
    CHECK(expand(Real(Rational(4)), Real::phi(), 2).exactness == Exactness::Finite);
}

TEST_CASE("non-integer expansions agree with a floating greedy oracle") {
    oracle::Gen gen(10);
    const mpfr_prec_t prec = 2000;
    mpfr_t x, b;
    mpfr_inits2(prec, x, b, static_cast<mpfr_ptr>(nullptr));
    for (int i = 0; i < 200; ++i) {
        const Rational xq(gen.rational(0, 100000, 97));
        const int which = static_cast<int>(gen.integer(0, 2));
        const Real base = which == 0 ? Real::pi() : which == 1 ? Real::e() : Real::phi();
        if (which == 0)
            mpfr_const_pi(b, MPFR_RNDN);
        else if (which == 1) {
            mpfr_set_ui(b, 1, MPFR_RNDN);
            mpfr_exp(b, b, MPFR_RNDN);
        } else {
            mpfr_sqrt_ui(b, 5, MPFR_RNDN);
            mpfr_add_ui(b, b, 1, MPFR_RNDN);
            mpfr_div_ui(b, b, 2, MPFR_RNDN);
        }
        mpfr_set_q(x, xq.get().get_mpq_t(), MPFR_RNDN);
        const long frac = gen.integer(0, 10);
        const auto d = expand(Real(xq), base, frac);
        const auto g = oracle::float_greedy(x, b, frac, prec);
        CHECK(d.radix_offset == g.lead);
        CHECK(d.digits == g.digits);
    }
    mpfr_clears(x, b, static_cast<mpfr_ptr>(nullptr));
}

TEST_CASE("reconstruction and digit range for rational bases") {
    oracle::Gen gen(12);
    for (int i = 0; i < 300; ++i) {
        const Rational b(gen.rational(11, 300, 17));
        if (!(b > Rational(1))) continue;
        const Rational x(gen.rational(0, 50000, 131));
        const long frac = gen.integer(0, 8);
        const auto d = expand(Real(x), Real(b), frac);
        Rational p = b.pow(d.radix_offset), sum = 0;
        for (int digit : d.digits) {
            CHECK(digit >= 0);
            CHECK(mpz_class(digit) < Real(b).ceil());
            sum += Rational(static_cast<long>(digit)) * p;
            p /= b;
        }
        const Rational r = x - sum;
        CHECK(r.sign() >= 0);
        CHECK(r < b.pow(d.lowest_power()));
    }
}

TEST_CASE("printed digit rows") {
    const auto r = pi_digits(Real(10), 4);
    CHECK(r.count == 31415);
    CHECK(r.digits.str() == "3.1415");
    CHECK(r.epsilon == 0);
    CHECK(pi_digits(Real(3), 4).digits.str() == "10.0102");
    CHECK(pi_digits(Real::e(), 3).integer_form.str() == "10101.");
    CHECK(pi_digits(Real::pi(), 5).digits.str() == "3.01102");
    const auto pi1 = pi_digits(Real::pi(), 1);
    CHECK(pi1.count == 10);
    CHECK(pi1.integer_form.str() == "100.");
    CHECK(pi1.epsilon == 1);
    CHECK_THROWS_AS(pi_digits(Real(10), 0), SubmultipleDegeneracy);
    const auto row0 = pi_digits_row(Real(2), 0);
    CHECK(row0.degenerate);
    CHECK(row0.integer_form.str() == "100");
}

TEST_CASE("systematic error and its unit") {
    CHECK(systematic_error(Real(6), 1) == 1);
    CHECK(systematic_error(Real(10), 5) == 0);
    CHECK(error_unit(0) == "1");
    CHECK(error_unit(3) == "0.001");
    CHECK(systematic_error_value(Real(10), 2, 1, 64).to_double() == doctest::Approx(0.01));
}

TEST_CASE("golden dual forms") {
    const auto forms = golden_dual_forms(Real(Golden(Rational(21)) / Golden::phi_pow(4)), 4);
    CHECK(forms.first.str() == "100.0100");
    CHECK(forms.second.str() == "11.0100");
    CHECK_THROWS_AS(golden_dual_forms(Real(Rational(2)), 2), InvalidArgument);
    CHECK(digits_of(forms.first).substr(3) == digits_of(forms.second).substr(2));
}

TEST_CASE("floor ambiguity at a tiny precision cap") {
    // pi in base pi is 10 exactly; the first digit below the radix sits on a boundary.
    CHECK_THROWS_AS(expand(Real::pi(), Real::pi(), 2, 128), FloorAmbiguity);
}

TEST_CASE("invalid expansion arguments") {
    CHECK_THROWS_AS(expand(Real(Rational(-1)), Real(10), 2), InvalidArgument);
    CHECK_THROWS_AS(expand(Real(Rational(1)), Real(1), 2), InvalidArgument);
    CHECK_THROWS_AS(expand(Real(Rational(1)), Real(10), -1), InvalidArgument);
}

TEST_CASE("error map grid") {
    const auto bases = linspace(Rational(6), Rational(14), 9);
    const auto ns = linspace(Rational(1), Rational(2), 2);
    const auto map = error_map(bases, ns, 2);
    REQUIRE(map.cells.size() == 18);
    CHECK(map.at(0, 0).epsilon == 1);   // b = 6
    CHECK(map.at(0, 1).epsilon == 1);   // b = 7
    CHECK(map.at(0, 4).epsilon == 0);   // b = 10
    CHECK(map.at(0, 8).epsilon == 1);   // b = 14
    CHECK(map.at(1, 4).epsilon == 0);
    for (const auto& c : map.cells) {
        CHECK(c.epsilon >= 0);
        CHECK(c.epsilon <= 1);
        CHECK(c.epsilon == systematic_error(Real(c.b), c.N));
    }
    CHECK(map.ambiguous.empty());
    CHECK(linspace(Rational(0), Rational(1), 5)[1] == Rational::parse("1/4"));
    CHECK_THROWS_AS(linspace(Rational(0), Rational(1), 1), InvalidArgument);
}

TEST_CASE("error map marks the N = 0 column as degenerate") {
    const auto map = error_map({Rational(2), Rational(3)}, {Rational(0)}, 1);
    for (const auto& c : map.cells) CHECK(c.epsilon == 1);
}
