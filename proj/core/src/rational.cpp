#include "galperin/rational.hpp"

#include <cctype>

#include "galperin/errors.hpp"

namespace galperin {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw InvalidArgument("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InvalidArgument("division by zero");
    q_ /= o.q_;
    return *this;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw InvalidArgument("empty number: '" + std::string(text) + "'");

    Rational out;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto p = s.substr(0, slash), q = s.substr(slash + 1);
        if (!all_digits(p) || !all_digits(q))
            throw InvalidArgument("malformed rational: '" + std::string(text) + "'");
        out = Rational(mpz_class(std::string(p), 10), mpz_class(std::string(q), 10));
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
            (!fp.empty() && !all_digits(fp)))
            throw InvalidArgument("malformed decimal: '" + std::string(text) + "'");
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
        mpz_class digits(std::string(ip.empty() ? "0" : ip) + std::string(fp), 10);
        out = Rational(digits, scale);
    } else {
        if (!all_digits(s)) throw InvalidArgument("malformed number: '" + std::string(text) + "'");
        out = Rational(mpz_class(std::string(s), 10));
    }
    return negative ? -out : out;
}

mpz_class Rational::floor() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

mpz_class Rational::ceil() const {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::pow(long e) const {
    if (e < 0) {
        if (is_zero()) throw InvalidArgument("zero to a negative power");
        return Rational(1) / pow(-e);
    }
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

std::optional<Rational> Rational::exact_sqrt() const {
    if (sign() < 0) return std::nullopt;
    const mpz_class& n = q_.get_num();
    const mpz_class& d = q_.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rational(rn, rd);
}

}  // namespace galperin
