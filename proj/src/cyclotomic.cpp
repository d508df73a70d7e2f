#include "hypeuler/cyclotomic.hpp"

#include <array>
#include <mutex>
#include <numeric>
#include <optional>

#include "hypeuler/errors.hpp"

namespace hypeuler {

namespace {

void check_order(unsigned m)
{
    if (m == 0 || m > kMaxCyclotomicOrder) {
        throw DomainError("unsupported cyclotomic order " + std::to_string(m));
    }
}

long mod_floor(long a, long m)
{
    const long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

unsigned euler_phi(unsigned m)
{
    unsigned count = 0;
    for (unsigned a = 1; a <= m; ++a) {
        if (std::gcd(a, m) == 1) {
            ++count;
        }
    }
    return count;
}

const RatPolynomial& cyclotomic_polynomial(unsigned m)
{
    check_order(m);
    static std::mutex mutex;
    static std::array<std::optional<RatPolynomial>, kMaxCyclotomicOrder + 1> cache;

    std::lock_guard lock(mutex);
    // x^m - 1 = prod_{d | m} Phi_d(x), built up from the smallest orders.
    for (unsigned n = 1; n <= m; ++n) {
        if (cache[n]) {
            continue;
        }
        RatPolynomial p = RatPolynomial::power_minus_one(n);
        for (unsigned d = 1; d < n; ++d) {
            if (n % d == 0) {
                p = poly_exact_divide(p, *cache[d]);
            }
        }
        cache[n] = std::move(p);
    }
    return *cache[m];
}

CyclotomicNumber::CyclotomicNumber(unsigned order, const Rational& value)
    : order_(order), coeffs_(euler_phi(order), Rational(0))
{
    check_order(order);
    coeffs_[0] = value;
}

CyclotomicNumber::CyclotomicNumber(unsigned order, const RatPolynomial& unreduced)
    : order_(order), coeffs_(euler_phi(order), Rational(0))
{
    const RatPolynomial r = poly_divmod(unreduced, cyclotomic_polynomial(order)).remainder;
    for (std::size_t i = 0; i < r.coeffs().size(); ++i) {
        coeffs_[i] = r.coeffs()[i];
    }
}

CyclotomicNumber CyclotomicNumber::zeta_power(unsigned order, long exponent)
{
    check_order(order);
    const auto e = static_cast<unsigned>(mod_floor(exponent, order));
    return CyclotomicNumber(order, RatPolynomial::monomial(Rational(1), e));
}

CyclotomicNumber CyclotomicNumber::from_exponent_weights(unsigned order, const std::vector<Rational>& weights)
{
    check_order(order);
    std::vector<Rational> folded(order, Rational(0));
    for (std::size_t e = 0; e < weights.size(); ++e) {
        folded[e % order] += weights[e];
    }
    return CyclotomicNumber(order, RatPolynomial(std::move(folded)));
}

bool CyclotomicNumber::is_rational() const
{
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) {
            return false;
        }
    }
    return true;
}

Rational CyclotomicNumber::to_rational() const
{
    if (!is_rational()) {
        throw ConsistencyError("cyclotomic number " + str() + " is not rational");
    }
    return coeffs_[0];
}

CyclotomicNumber CyclotomicNumber::galois_conjugate(long k) const
{
    if (std::gcd(mod_floor(k, order_), static_cast<long>(order_)) != 1) {
        throw DomainError("Galois conjugation by a non-unit exponent");
    }
    std::vector<Rational> weights(order_, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        weights[static_cast<std::size_t>(mod_floor(static_cast<long>(i) * k, order_))] += coeffs_[i];
    }
    return from_exponent_weights(order_, weights);
}

CyclotomicNumber CyclotomicNumber::lift(unsigned target) const
{
    check_order(target);
    if (target % order_ != 0) {
        throw IncompatibleOrderError("cannot lift order " + std::to_string(order_) + " to "
                                     + std::to_string(target));
    }
    const unsigned step = target / order_;
    std::vector<Rational> weights(target, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        weights[(i * step) % target] += coeffs_[i];
    }
    return from_exponent_weights(target, weights);
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o)
{
    if (o.order_ != order_) {
        throw IncompatibleOrderError("adding cyclotomic numbers of orders " + std::to_string(order_)
                                     + " and " + std::to_string(o.order_));
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& c)
{
    for (auto& x : coeffs_) {
        x *= c;
    }
    return *this;
}

std::string CyclotomicNumber::str() const
{
    std::string var = "z" + std::to_string(order_);
    std::string out = RatPolynomial(coeffs_).str(var);
    return out + " in Q(" + var + ")";
}

CyclotomicNumber cyclotomic_mul(const CyclotomicNumber& a, const CyclotomicNumber& b)
{
    if (a.order() != b.order()) {
        throw IncompatibleOrderError("multiplying cyclotomic numbers of orders " + std::to_string(a.order())
                                     + " and " + std::to_string(b.order()));
    }
    const RatPolynomial product = RatPolynomial(a.coeffs()) * RatPolynomial(b.coeffs());
    std::vector<Rational> weights = product.coeffs();
    return CyclotomicNumber::from_exponent_weights(a.order(), weights);
}

}  // namespace hypeuler
