#include "hypeuler/volume.hpp"

#include "hypeuler/errors.hpp"
#include "hypeuler/primes.hpp"

namespace hypeuler {

namespace {

Integer factorial(unsigned n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

RationalInterval two_pi(long bits)
{
    return RationalInterval::point(Rational(2)) * pi_enclosure(bits);
}

std::vector<Rational> lambda_values(const ArithmeticDatum& datum)
{
    std::vector<Rational> out;
    for (const auto& lf : datum.local_factors) {
        out.push_back(lf.value);
    }
    return out;
}

}  // namespace

CConstant c_of_r(int r, long bits)
{
    if (r < 1) {
        throw DomainError("C(r) needs r >= 1");
    }
    CConstant c;
    c.factorial_product = 1;
    for (int j = 1; j <= r; ++j) {
        c.factorial_product *= factorial(static_cast<unsigned>(2 * j - 1));
    }
    c.two_pi_power = r * (r + 1);
    const long guard = bits + 32 + 4 * c.two_pi_power;
    const RationalInterval denom = two_pi(guard).pow(static_cast<unsigned long>(c.two_pi_power)).tightened(guard);
    c.enclosure = (RationalInterval::point(Rational(c.factorial_product)) / denom).tightened(bits + 16);
    return c;
}

LocalFactor make_local_factor(const LambdaType& type, int r, const Integer& q)
{
    return {type, q, lambda_value(type, r, q)};
}

void check_datum(const ArithmeticDatum& datum)
{
    if (datum.r < 2) {
        throw DomainError("rank r must be at least 2");
    }
    if (!datum.field.totally_real) {
        throw DomainError(datum.field.label + " is not totally real");
    }
    if (datum.field.degree < 2) {
        throw DomainError("cocompact lattices need k != Q");
    }
    for (const auto& lf : datum.local_factors) {
        if (lf.value.sign() <= 0) {
            throw DomainError("local factor must be positive");
        }
    }
}

Rational chi_from_special_values(int r, int degree, std::span<const Rational> zeta_values,
                                 std::span<const Rational> lambdas)
{
    if (zeta_values.size() != static_cast<std::size_t>(r)) {
        throw DomainError("need exactly r special values");
    }
    Rational chi = power_of_two(1 - static_cast<long>(r) * degree);
    for (const auto& z : zeta_values) {
        chi *= z.abs();
    }
    for (const auto& l : lambdas) {
        chi *= l;
    }
    return chi;
}

Rational chi_principal_exact(const ArithmeticDatum& datum)
{
    check_datum(datum);
    std::vector<Rational> zs;
    for (const auto& v : zeta_k_special_values(datum.field, static_cast<unsigned>(datum.r))) {
        zs.push_back(v.value);
    }
    const auto ls = lambda_values(datum);
    return chi_from_special_values(datum.r, datum.field.degree, zs, ls);
}

RationalInterval chi_principal_numeric(const ArithmeticDatum& datum, long bits)
{
    check_datum(datum);
    const long guard = bits + 32;
    const int r = datum.r;
    const int d = datum.field.degree;
    const Rational disc(datum.field.disc);
    // |D|^(r^2 + r/2) = |D|^(r^2) * sqrt(|D|)^r
    RationalInterval value = RationalInterval::point(Rational(2) * disc.pow(static_cast<long>(r) * r));
    value *= RationalInterval::point(disc).sqrt(guard).pow(static_cast<unsigned long>(r));
    value *= c_of_r(r, guard).enclosure.pow(static_cast<unsigned long>(d));
    value = value.tightened(guard);
    for (int j = 1; j <= r; ++j) {
        value = (value * zeta_k_numeric(datum.field, static_cast<unsigned>(2 * j), guard)).tightened(guard);
    }
    for (const auto& lf : datum.local_factors) {
        value *= RationalInterval::point(lf.value);
    }
    return value.tightened(bits);
}

RationalInterval zeta_even_from_special(const NumberFieldRecord& field, unsigned j, const Rational& special,
                                        long bits)
{
    const long guard = bits + 32;
    const int d = field.degree;
    const RationalInterval factor = two_pi(guard + 8 * static_cast<long>(j)).pow(2 * j)
                                    / RationalInterval::point(Rational(Integer(2 * factorial(2 * j - 1))));
    RationalInterval value = RationalInterval::point(special.abs()) * factor.pow(static_cast<unsigned long>(d));
    // D^(1/2 - 2j) = sqrt(D) / D^(2j)
    const Rational disc(field.disc);
    value *= RationalInterval::point(disc).sqrt(guard);
    value /= RationalInterval::point(disc.pow(2 * static_cast<long>(j)));
    return value.tightened(bits);
}

Integer index_divisor(const ArithmeticDatum& datum)
{
    return Integer(datum.field.class_number) * pow(Integer(2), static_cast<unsigned long>(datum.field.degree))
           * pow(Integer(4), datum.local_factors.size());
}

EulerChar euler_characteristic(const ArithmeticDatum& datum)
{
    EulerChar e;
    e.chi_lambda = chi_principal_exact(datum);
    if (e.chi_lambda.is_zero()) {
        throw ConsistencyError("vanishing Euler characteristic for " + datum.field.label);
    }
    e.index_divisor = index_divisor(datum);
    e.chi_gamma_lower = e.chi_lambda / Rational(e.index_divisor);
    Rational numerator_part(1);
    for (const auto& v : zeta_k_special_values(datum.field, static_cast<unsigned>(datum.r))) {
        numerator_part *= v.value.abs();
    }
    for (const auto& lf : datum.local_factors) {
        numerator_part *= lf.value;
    }
    e.two_exponent = (numerator_part / e.chi_gamma_lower).two_adic_valuation();
    return e;
}

Obstruction reciprocal_integer_obstruction(const ArithmeticDatum& datum)
{
    check_datum(datum);
    if (datum.field.class_number != 1) {
        throw DomainError(datum.field.label + " has class number " + std::to_string(datum.field.class_number)
                          + "; the rational form of chi(Gamma) needs h_k = 1");
    }
    Obstruction ob;
    ob.zeta_values = zeta_k_special_values(datum.field, static_cast<unsigned>(datum.r));
    ob.product = Rational(1);
    for (const auto& v : ob.zeta_values) {
        ob.product *= v.value.abs();
    }
    ob.witness = smallest_odd_prime_factor(odd_part_of_numerator(ob.product));
    return ob;
}

}  // namespace hypeuler
