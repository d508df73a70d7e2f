#pragma once

#include <string>
#include <vector>

#include "hypeuler/polynomial.hpp"
#include "hypeuler/rational.hpp"

namespace hypeuler {

inline constexpr unsigned kMaxCyclotomicOrder = 16;

/// The m-th cyclotomic polynomial, monic with integer coefficients.
const RatPolynomial& cyclotomic_polynomial(unsigned m);

unsigned euler_phi(unsigned m);

/// Element of Q(zeta_m) in the power basis 1, zeta, ..., zeta^(phi(m)-1),
/// reduced modulo the m-th cyclotomic polynomial. The representation is
/// canonical, so equal elements compare equal. Supports 1 <= m <= 16.
class CyclotomicNumber {
public:
    CyclotomicNumber(unsigned order, const Rational& value);
    static CyclotomicNumber zeta_power(unsigned order, long exponent);
    /// sum_e weights[e] * zeta^e for e in [0, weights.size()).
    static CyclotomicNumber from_exponent_weights(unsigned order, const std::vector<Rational>& weights);

    unsigned order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_rational() const;
    /// Throws ConsistencyError when a non-constant coefficient is nonzero.
    Rational to_rational() const;

    /// Image under zeta -> zeta^k, gcd(k, order) = 1.
    CyclotomicNumber galois_conjugate(long k) const;
    /// Same element viewed in Q(zeta_target); order must divide target.
    CyclotomicNumber lift(unsigned target) const;

    CyclotomicNumber& operator+=(const CyclotomicNumber& o);
    CyclotomicNumber& operator*=(const Rational& c);
    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& c) { return a *= c; }
    friend bool operator==(const CyclotomicNumber&, const CyclotomicNumber&) = default;

    std::string str() const;

private:
    CyclotomicNumber(unsigned order, const RatPolynomial& unreduced);

    unsigned order_ = 1;
    std::vector<Rational> coeffs_;
};

/// Product in Q(zeta_m); IncompatibleOrderError when a.order() != b.order().
CyclotomicNumber cyclotomic_mul(const CyclotomicNumber& a, const CyclotomicNumber& b);

}  // namespace hypeuler
