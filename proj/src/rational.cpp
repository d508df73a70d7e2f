#include "hypeuler/rational.hpp"

#include <cctype>

#include "hypeuler/errors.hpp"

namespace hypeuler {

std::string to_string(const Integer& n)
{
    return n.get_str(10);
}

Integer parse_integer(std::string_view text)
{
    std::string s(text);
    if (s.empty()) {
        throw DomainError("empty integer literal");
    }
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) {
        throw DomainError("malformed integer literal '" + s + "'");
    }
    for (std::size_t i = start; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            throw DomainError("malformed integer literal '" + s + "'");
        }
    }
    if (s[0] == '+') {
        s.erase(0, 1);
    }
    return Integer(s, 10);
}

Integer pow(const Integer& base, unsigned long exponent)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Rational::Rational(const Integer& num, const Integer& den)
{
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    Integer den = parse_integer(text.substr(slash + 1));
    if (den <= 0) {
        throw DomainError("rational literal needs a positive denominator: '" + std::string(text) + "'");
    }
    return Rational(parse_integer(text.substr(0, slash)), den);
}

Rational Rational::abs() const
{
    return Rational(mpq_class(::abs(value_)));
}

Rational Rational::pow(long exponent) const
{
    if (exponent < 0) {
        if (is_zero()) {
            throw DomainError("zero raised to a negative power");
        }
        return Rational(1) / pow(-exponent);
    }
    const auto e = static_cast<unsigned long>(exponent);
    return Rational(hypeuler::pow(num(), e), hypeuler::pow(den(), e));
}

std::string Rational::str() const
{
    return to_string(num()) + "/" + to_string(den());
}

std::string Rational::pretty() const
{
    return is_integer() ? to_string(num()) : str();
}

Integer Rational::floor() const
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

Integer Rational::ceil() const
{
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

long Rational::two_adic_valuation() const
{
    if (is_zero()) {
        throw DomainError("2-adic valuation of zero");
    }
    const long vn = static_cast<long>(mpz_scan1(value_.get_num_mpz_t(), 0));
    const long vd = static_cast<long>(mpz_scan1(value_.get_den_mpz_t(), 0));
    return vn - vd;
}

Rational& Rational::operator+=(const Rational& o)
{
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) {
        throw DomainError("division by zero");
    }
    value_ /= o.value_;
    return *this;
}

Rational operator-(const Rational& a)
{
    return Rational(mpq_class(-a.value_));
}

Rational power_of_two(long k)
{
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(k < 0 ? -k : k));
    return k < 0 ? Rational(Integer(1), p) : Rational(p);
}

}  // namespace hypeuler
