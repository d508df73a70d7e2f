#pragma once

#include <string>

#include "hypeuler/rational.hpp"

namespace hypeuler {

/// Closed interval [lo, hi] with rational endpoints. Every operation returns
/// an enclosure of all results obtainable from points of the operands.
/// Operations that would otherwise grow denominators without bound take a
/// `bits` argument and round outward to dyadic endpoints.
class RationalInterval {
public:
    RationalInterval() = default;
    RationalInterval(Rational lo, Rational hi);
    static RationalInterval point(const Rational& x) { return RationalInterval(x, x); }

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }

    Rational width() const { return hi_ - lo_; }
    Rational midpoint() const { return (lo_ + hi_) / Rational(2); }
    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
    bool is_positive() const { return lo_.sign() > 0; }

    /// Width divided by the smallest magnitude in the interval; requires
    /// the interval to exclude zero.
    Rational relative_width() const;

    /// Outward rounding of both endpoints to about `bits` significant bits.
    RationalInterval tightened(long bits) const;

    RationalInterval pow(unsigned long exponent) const;
    RationalInterval reciprocal() const;

    /// Enclosure of the nonnegative k-th root; requires lo >= 0. The
    /// endpoints are dyadic with denominator dividing den * 2^bits.
    RationalInterval root(unsigned long k, long bits) const;
    RationalInterval sqrt(long bits) const { return root(2, bits); }

    RationalInterval& operator+=(const RationalInterval& o);
    RationalInterval& operator-=(const RationalInterval& o);
    RationalInterval& operator*=(const RationalInterval& o);
    RationalInterval& operator/=(const RationalInterval& o);

    friend RationalInterval operator+(RationalInterval a, const RationalInterval& b) { return a += b; }
    friend RationalInterval operator-(RationalInterval a, const RationalInterval& b) { return a -= b; }
    friend RationalInterval operator*(RationalInterval a, const RationalInterval& b) { return a *= b; }
    friend RationalInterval operator/(RationalInterval a, const RationalInterval& b) { return a /= b; }
    friend RationalInterval operator-(const RationalInterval& a) { return RationalInterval(-a.hi_, -a.lo_); }

    friend bool operator==(const RationalInterval&, const RationalInterval&) = default;

    std::string str() const { return "[" + lo_.str() + ", " + hi_.str() + "]"; }

private:
    Rational lo_;
    Rational hi_;
};

/// Largest dyadic m/2^k <= x (direction < 0) or smallest >= x (direction > 0),
/// with k chosen to keep about `bits` significant bits of x.
Rational round_dyadic(const Rational& x, long bits, int direction);

/// Enclosure of pi of width below 2^-bits (Machin's formula with the
/// alternating-series remainder bound). Cached per precision.
RationalInterval pi_enclosure(long bits);

/// Default pi width target, strictly below 10^-40.
inline constexpr long kDefaultPiBits = 136;

/// Integer floor of the k-th root of a nonnegative integer.
Integer integer_root_floor(const Integer& n, unsigned long k);

}  // namespace hypeuler
