#pragma once

#include <string>
#include <vector>

#include "hypeuler/rational.hpp"

namespace hypeuler {

/// Polynomial in one variable over Q, coefficients lowest degree first with
/// no trailing zero. The zero polynomial has no coefficients.
class RatPolynomial {
public:
    RatPolynomial() = default;
    explicit RatPolynomial(std::vector<Rational> coeffs);

    static RatPolynomial constant(const Rational& c);
    static RatPolynomial monomial(const Rational& c, unsigned degree);
    /// q^k - 1, the building block of finite group orders.
    static RatPolynomial power_minus_one(unsigned k);
    static RatPolynomial power_plus_one(unsigned k);

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    const Rational& leading() const { return coeffs_.back(); }

    bool has_integer_coeffs() const;
    Rational eval(const Rational& x) const;
    /// p(x + c).
    RatPolynomial taylor_shift(const Rational& c) const;

    RatPolynomial& operator+=(const RatPolynomial& o);
    RatPolynomial& operator-=(const RatPolynomial& o);
    RatPolynomial& operator*=(const RatPolynomial& o);

    friend RatPolynomial operator+(RatPolynomial a, const RatPolynomial& b) { return a += b; }
    friend RatPolynomial operator-(RatPolynomial a, const RatPolynomial& b) { return a -= b; }
    friend RatPolynomial operator*(RatPolynomial a, const RatPolynomial& b) { return a *= b; }
    friend bool operator==(const RatPolynomial&, const RatPolynomial&) = default;

    std::string str(const std::string& var = "q") const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

struct PolyDivision {
    RatPolynomial quotient;
    RatPolynomial remainder;
};

/// Euclidean division in Q[x]; throws DomainError on a zero divisor.
PolyDivision poly_divmod(const RatPolynomial& num, const RatPolynomial& den);

/// Quotient num/den when den divides num exactly; NonExactDivisionError otherwise.
RatPolynomial poly_exact_divide(const RatPolynomial& num, const RatPolynomial& den);

}  // namespace hypeuler
