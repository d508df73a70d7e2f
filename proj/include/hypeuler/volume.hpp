#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hypeuler/field_table.hpp"
#include "hypeuler/interval.hpp"
#include "hypeuler/lambda.hpp"
#include "hypeuler/zeta.hpp"

namespace hypeuler {

/// C(r) = prod_{j=1}^{r} (2j-1)! / (2 pi)^(2j) = factorial_product / (2 pi)^two_pi_power.
struct CConstant {
    Integer factorial_product;
    int two_pi_power = 0;
    RationalInterval enclosure;
};

CConstant c_of_r(int r, long bits);

/// Non-hyperspecial place: its maximal type and residue field size.
struct LocalFactor {
    LambdaType type;
    Integer q;
    Rational value;
};

LocalFactor make_local_factor(const LambdaType& type, int r, const Integer& q);

/// (k, r, T): a principal arithmetic subgroup of Spin(2r, 1) through the
/// data its Euler characteristic depends on.
struct ArithmeticDatum {
    NumberFieldRecord field;
    int r = 0;
    std::vector<LocalFactor> local_factors;
};

/// DomainError unless r >= 2, k is totally real and k != Q.
void check_datum(const ArithmeticDatum& datum);

/// |chi(Lambda)| = 2^(1 - r d) prod lambda_v prod_{j<=r} |zeta_k(1-2j)|.
/// Takes no discriminant: |D_k|^(r^2 + r/2) cancels against the functional
/// equation.
Rational chi_from_special_values(int r, int degree, std::span<const Rational> zeta_values,
                                 std::span<const Rational> lambdas);

Rational chi_principal_exact(const ArithmeticDatum& datum);

/// Enclosure of 2 |D_k|^(r^2 + r/2) C(r)^d prod zeta_k(2j) prod lambda_v.
RationalInterval chi_principal_numeric(const ArithmeticDatum& datum, long bits);

/// zeta_k(2j) implied by the exact zeta_k(1-2j) through the functional
/// equation: |zeta_k(1-2j)| ((2 pi)^(2j) / (2 (2j-1)!))^d D^(1/2 - 2j).
RationalInterval zeta_even_from_special(const NumberFieldRecord& field, unsigned j, const Rational& special,
                                        long bits);

/// h_k 2^d 4^#T, a multiple of [Gamma : Lambda].
Integer index_divisor(const ArithmeticDatum& datum);

struct EulerChar {
    Rational chi_lambda;
    Integer index_divisor;
    Rational chi_gamma_lower;  // chi_lambda / index_divisor
    long two_exponent = 0;     // a with chi_gamma_lower = 2^-a prod lambda prod |zeta|
};

EulerChar euler_characteristic(const ArithmeticDatum& datum);

struct Obstruction {
    std::vector<ZetaSpecialValue> zeta_values;
    Rational product;              // prod_{j<=r} |zeta_k(1-2j)|
    std::optional<Integer> witness;  // smallest prime > 2 in the numerator

    bool obstructed() const { return witness.has_value(); }
};

/// Requires h_k = 1 (DomainError otherwise). A witness p means every
/// maximal Gamma over k has |chi(Gamma)| with p in its numerator.
Obstruction reciprocal_integer_obstruction(const ArithmeticDatum& datum);

}  // namespace hypeuler
