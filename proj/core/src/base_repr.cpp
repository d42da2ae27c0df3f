#include "galperin/base_repr.hpp"

#include <algorithm>
#include <cmath>

#include "galperin/closed_form.hpp"
#include "galperin/errors.hpp"
#include "galperin/golden.hpp"

namespace galperin {

namespace {

char digit_char(int d) {
    if (d < 10) return static_cast<char>('0' + d);
    return static_cast<char>('A' + (d - 10));
}

bool exact_zero(const Rational& r) { return r.is_zero(); }
bool exact_zero(const Golden& g) { return g.is_zero(); }
bool exact_zero(const Interval& a) { return a.is_zero(); }

int to_digit(const mpz_class& d) {
    if (!d.fits_sint_p()) throw Error("digit out of range");
    return static_cast<int>(d.get_si());
}

// Remainder, current power b^i and the running position of a greedy run.
template <class T>
struct GreedyState {
    T r;
    T p;
    long i = 0;
};

// Largest n >= 0 with b^n <= x, and b^n.
template <class T>
std::pair<long, T> leading_power(const T& x, const T& b, long& pos) {
    long n = 0;
    T p(1L);
    for (;;) {
        pos = n + 1;
        const T next = p * b;
        if ((x - next).sign() < 0) break;
        p = next;
        ++n;
    }
    return {n, p};
}

// Emits digits for powers st.i down to -frac; capped greedy clamps each
// digit to max_digit.
template <class T>
void emit(GreedyState<T>& st, const T& b, long frac, int max_digit, bool capped,
          std::vector<int>& out, long& pos) {
    for (; st.i >= -frac; --st.i) {
        pos = st.i;
        int d = to_digit((st.r / st.p).floor());
        if (d > max_digit) {
            if (!capped) throw Error("greedy digit exceeds the digit range");
            d = max_digit;
        }
        if (d < 0) throw Error("negative digit in greedy expansion");
        if (d > 0) st.r -= T(static_cast<long>(d)) * st.p;
        out.push_back(d);
        st.p = st.p / b;
    }
}

template <class T>
DigitExpansion greedy(const Real& base, const T& x, const T& b, long frac, int max_digit,
                      long& pos) {
    if (x.sign() < 0) throw InvalidArgument("cannot expand a negative number");
    DigitExpansion e;
    e.base = base;
    auto [n, p] = leading_power(x, b, pos);
    e.radix_offset = n;
    GreedyState<T> st{x, p, n};
    emit(st, b, frac, max_digit, false, e.digits, pos);
    e.exactness = exact_zero(st.r) ? Exactness::Finite : Exactness::Truncated;
    return e;
}

template <class T>
std::pair<DigitExpansion, DigitExpansion> dual(const Real& base, const T& x, const T& b, long frac,
                                               long& pos) {
    DigitExpansion one = greedy(base, x, b, frac, 1, pos);
    const long n = one.radix_offset;
    if (n < 2) throw InvalidArgument("dual forms need x >= phi^2");
    DigitExpansion two;
    two.base = base;
    two.radix_offset = n - 1;
    two.digits = {1, 1};
    T p_hi(1L);
    for (long k = 0; k < n - 2; ++k) p_hi = p_hi * b;  // phi^(n-2)
    GreedyState<T> st{x - p_hi * b - p_hi, p_hi / b, n - 3};
    emit(st, b, frac, 1, true, two.digits, pos);
    two.exactness = exact_zero(st.r) ? Exactness::Finite : Exactness::Truncated;
    return {std::move(one), std::move(two)};
}

int max_digit_for(const Real& b) {
    const mpz_class c = b.ceil();
    return to_digit(c - 1);
}

long interval_start_bits(const Real& x, const Real& b, long frac) {
    const double lb = std::max(1.0, std::log2(b.to_double()));
    const double lx = std::max(1.0, std::log2(std::max(1.0, x.to_double())));
    const double span = lx / lb + static_cast<double>(frac) + 2;
    return 64 + static_cast<long>(std::ceil(2 * span * (lb + 1)));
}

template <class Fn>
auto with_floor_escalation(long start, long cap, long& pos, Fn&& fn) -> decltype(fn(0L)) {
    try {
        return with_escalation(PrecisionPolicy{start, cap}, fn);
    } catch (const PrecisionExhausted&) {
        throw FloorAmbiguity("digit at power " + std::to_string(pos) +
                                 " lies on a boundary at the precision cap",
                             pos);
    }
}

void check_base(const Real& b) {
    if (b.kind() == Real::Kind::Rational && !(*b.rational() > Rational(1)))
        throw InvalidArgument("base must exceed 1");
    if (b.kind() == Real::Kind::Golden && (*b.golden() - Golden(1)).sign() <= 0)
        throw InvalidArgument("base must exceed 1");
}

}  // namespace

std::string DigitExpansion::str() const {
    std::string ip, fp;
    long power = radix_offset;
    for (int d : digits) {
        if (power >= 0)
            ip += digit_char(d);
        else
            fp += digit_char(d);
        --power;
    }
    if (radix_offset < 0) fp = std::string(static_cast<std::size_t>(-radix_offset - 1), '0') + fp;
    if (ip.empty()) ip = "0";
    const long low = lowest_power();
    if (low > 0) ip += std::string(static_cast<std::size_t>(low), '0');
    if (!fp.empty()) return ip + "." + fp;
    return base.is_integer() ? ip : ip + ".";
}

DigitExpansion DigitExpansion::shifted(long k) const {
    DigitExpansion e = *this;
    e.radix_offset -= k;
    return e;
}

Interval DigitExpansion::value(long prec) const {
    PrecisionScope scope(prec);
    const Interval b = base.enclose(prec);
    Interval sum(0L);
    Interval p = pow(b, radix_offset);
    for (int d : digits) {
        sum += Interval(static_cast<long>(d)) * p;
        p = p / b;
    }
    return sum;
}

DigitExpansion expand_noninteger_base(const Real& x, const Real& b, long frac_digits,
                                      long cap_bits) {
    check_base(b);
    if (frac_digits < 0) throw InvalidArgument("fractional digit count must be non-negative");
    if (x.sign() < 0) throw InvalidArgument("cannot expand a negative number");
    const int max_digit = max_digit_for(b);
    long pos = 0;
    if (x.rational() && b.rational())
        return greedy(b, *x.rational(), *b.rational(), frac_digits, max_digit, pos);
    if (x.golden() && b.golden())
        return greedy(b, *x.golden(), *b.golden(), frac_digits, max_digit, pos);
    return with_floor_escalation(interval_start_bits(x, b, frac_digits), cap_bits, pos,
                                 [&](long bits) {
                                     return greedy(b, x.enclose(bits), b.enclose(bits),
                                                   frac_digits, max_digit, pos);
                                 });
}

DigitExpansion expand_integer_base(const Real& x, long b, long frac_digits, long cap_bits) {
    if (b < 2) throw InvalidArgument("integer base must be at least 2");
    return expand_noninteger_base(x, Real(b), frac_digits, cap_bits);
}

DigitExpansion expand(const Real& x, const Real& b, long frac_digits, long cap_bits) {
    if (b.is_integer()) {
        const mpz_class z = b.rational()->num();
        if (!z.fits_slong_p()) throw InvalidArgument("integer base too large");
        return expand_integer_base(x, z.get_si(), frac_digits, cap_bits);
    }
    return expand_noninteger_base(x, b, frac_digits, cap_bits);
}

namespace {

PiDigits digits_from_count(const Real& b, long N, const CollisionCount& c, long cap_bits) {
    PiDigits out;
    out.count = c.exact;
    out.epsilon = c.epsilon;
    out.degenerate = c.degenerate;
    out.integer_form = expand(Real(Rational(c.exact)), b, 0, cap_bits);
    out.digits = out.integer_form.shifted(N);
    return out;
}

}  // namespace

PiDigits pi_digits(const Real& b, long N, long cap_bits) {
    if (N < 0) throw InvalidArgument("mantissa must be non-negative");
    CollisionCount c;
    c.exact = count_collisions_exact(b, Rational(N), cap_bits);
    c.approx = count_collisions_approx(b, Rational(N), cap_bits);
    c.epsilon = mpz_class(c.exact - c.approx).get_si();
    return digits_from_count(b, N, c, cap_bits);
}

PiDigits pi_digits_row(const Real& b, long N, long cap_bits) {
    if (N < 0) throw InvalidArgument("mantissa must be non-negative");
    return digits_from_count(b, N, collision_count(b, Rational(N), cap_bits), cap_bits);
}

long systematic_error(const Real& b, const Rational& N, long cap_bits) {
    return collision_count(b, N, cap_bits).epsilon;
}

std::string error_unit(long N) {
    if (N < 0) throw InvalidArgument("mantissa must be non-negative");
    if (N == 0) return "1";
    return "0." + std::string(static_cast<std::size_t>(N - 1), '0') + "1";
}

Interval systematic_error_value(const Real& b, long N, long epsilon, long prec) {
    PrecisionScope scope(prec);
    return Interval(epsilon) / power(b, Rational(N), prec);
}

std::pair<DigitExpansion, DigitExpansion> golden_dual_forms(const Real& x, long frac_digits,
                                                            long cap_bits) {
    if (frac_digits < 0) throw InvalidArgument("fractional digit count must be non-negative");
    const Real phi = Real::phi();
    long pos = 0;
    if (x.golden()) return dual(phi, *x.golden(), Golden::phi(), frac_digits, pos);
    return with_floor_escalation(interval_start_bits(x, phi, frac_digits), cap_bits, pos,
                                 [&](long bits) {
                                     return dual(phi, x.enclose(bits), Interval::phi(bits),
                                                 frac_digits, pos);
                                 });
}

std::vector<Rational> linspace(const Rational& lo, const Rational& hi, std::size_t points) {
    if (points == 0) throw InvalidArgument("a range needs at least one point");
    if (points == 1) {
        if (!(lo == hi)) throw InvalidArgument("a single-point range needs lo == hi");
        return {lo};
    }
    std::vector<Rational> out;
    out.reserve(points);
    const Rational step = (hi - lo) / Rational(static_cast<long>(points - 1));
    for (std::size_t k = 0; k < points; ++k) out.push_back(lo + step * Rational(static_cast<long>(k)));
    return out;
}

}  // namespace galperin
