#include "hypeuler/polynomial.hpp"

#include <algorithm>

#include "hypeuler/errors.hpp"

namespace hypeuler {

RatPolynomial::RatPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

RatPolynomial RatPolynomial::constant(const Rational& c)
{
    return RatPolynomial({c});
}

RatPolynomial RatPolynomial::monomial(const Rational& c, unsigned degree)
{
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return RatPolynomial(std::move(v));
}

RatPolynomial RatPolynomial::power_minus_one(unsigned k)
{
    return monomial(Rational(1), k) - constant(Rational(1));
}

RatPolynomial RatPolynomial::power_plus_one(unsigned k)
{
    return monomial(Rational(1), k) + constant(Rational(1));
}

void RatPolynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

bool RatPolynomial::has_integer_coeffs() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_integer(); });
}

Rational RatPolynomial::eval(const Rational& x) const
{
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

RatPolynomial RatPolynomial::taylor_shift(const Rational& c) const
{
    // Repeated synthetic division by (x - c) collects p(x + c) lowest degree first.
    std::vector<Rational> a = coeffs_;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = n - 1; j > i; --j) {
            a[j - 1] += c * a[j];
        }
    }
    return RatPolynomial(std::move(a));
}

RatPolynomial& RatPolynomial::operator+=(const RatPolynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size(), Rational(0));
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    trim();
    return *this;
}

RatPolynomial& RatPolynomial::operator-=(const RatPolynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size(), Rational(0));
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] -= o.coeffs_[i];
    }
    trim();
    return *this;
}

RatPolynomial& RatPolynomial::operator*=(const RatPolynomial& o)
{
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            r[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    coeffs_ = std::move(r);
    trim();
    return *this;
}

std::string RatPolynomial::str(const std::string& var) const
{
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) {
            continue;
        }
        const bool negative = c.sign() < 0;
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational mag = c.abs();
        const bool unit = mag == Rational(1);
        if (!unit || i == 0) {
            out += mag.pretty();
        }
        if (i > 0) {
            out += var;
            if (i > 1) {
                out += "^" + std::to_string(i);
            }
        }
    }
    return out;
}

PolyDivision poly_divmod(const RatPolynomial& num, const RatPolynomial& den)
{
    if (den.is_zero()) {
        throw DomainError("polynomial division by zero");
    }
    std::vector<Rational> rem = num.coeffs();
    const int dd = den.degree();
    if (num.degree() < dd) {
        return {RatPolynomial(), num};
    }
    std::vector<Rational> quot(static_cast<std::size_t>(num.degree() - dd + 1), Rational(0));
    for (int i = num.degree(); i >= dd; --i) {
        const Rational c = rem[static_cast<std::size_t>(i)] / den.leading();
        quot[static_cast<std::size_t>(i - dd)] = c;
        if (c.is_zero()) {
            continue;
        }
        for (int j = 0; j <= dd; ++j) {
            rem[static_cast<std::size_t>(i - dd + j)] -= c * den.coeffs()[static_cast<std::size_t>(j)];
        }
    }
    return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

RatPolynomial poly_exact_divide(const RatPolynomial& num, const RatPolynomial& den)
{
    PolyDivision qr = poly_divmod(num, den);
    if (!qr.remainder.is_zero()) {
        throw NonExactDivisionError("(" + num.str() + ") / (" + den.str() + ") leaves remainder "
                                    + qr.remainder.str());
    }
    return std::move(qr.quotient);
}

}  // namespace hypeuler
