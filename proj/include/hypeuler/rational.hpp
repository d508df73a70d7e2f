#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hypeuler {

using Integer = mpz_class;

std::string to_string(const Integer& n);
Integer parse_integer(std::string_view text);
Integer pow(const Integer& base, unsigned long exponent);

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Equality is structural on the reduced form.
class Rational {
public:
    Rational() = default;
    Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den);

    /// Accepts "n", "n/d" and leading sign on n. Throws DomainError.
    static Rational parse(std::string_view text);

    Integer num() const { return value_.get_num(); }
    Integer den() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    Rational abs() const;
    Rational pow(long exponent) const;

    /// "num/den" with den printed even when it is 1.
    std::string str() const;
    /// "num" when integral, otherwise "num/den".
    std::string pretty() const;

    /// Floor and ceiling as integers.
    Integer floor() const;
    Integer ceil() const;

    /// Signed 2-adic valuation; throws on zero.
    long two_adic_valuation() const;

    double to_double() const { return value_.get_d(); }

    const mpq_class& raw() const { return value_; }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a);

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_;
};

/// 2^k for any signed k.
Rational power_of_two(long k);

}  // namespace hypeuler
